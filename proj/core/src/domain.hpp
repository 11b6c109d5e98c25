// Copyright 2026 The qseries Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Coefficient-domain policies behind Series. Internal to the library.

#ifndef QSERIES_SRC_DOMAIN_HPP
#define QSERIES_SRC_DOMAIN_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qseries/errors.hpp"
#include "qseries/ring.hpp"
#include "qseries/series.hpp"

namespace qseries::detail {

struct IntegerDomain {
  using value_type = mpz_class;
  using storage_type = Series::IntegerCoeffs;

  static bool is_zero(const value_type& v) { return sgn(v) == 0; }
  value_type zero() const { return 0; }
  value_type from_long(long v) const { return v; }
  value_type from_integer(const mpz_class& v) const { return v; }
  value_type from_scalar(Scalar s) const {
    s.canonicalize();
    if (s.get_den() != 1) {
      throw IntegralityError("coefficient " + s.get_str() + " is not an integer");
    }
    return s.get_num();
  }
  Scalar to_scalar(const value_type& v) const { return Scalar(v); }
  void add(value_type& a, const value_type& b) const { a += b; }
  void sub(value_type& a, const value_type& b) const { a -= b; }
  void addmul(value_type& acc, const value_type& a, const value_type& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  void submul(value_type& acc, const value_type& a, const value_type& b) const {
    mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_unit(const value_type& a) const { return abs(a) == 1; }
  value_type inverse(const value_type& a) const { return a; }
};

struct RationalDomain {
  using value_type = mpq_class;
  using storage_type = Series::RationalCoeffs;

  static bool is_zero(const value_type& v) { return sgn(v) == 0; }
  value_type zero() const { return 0; }
  value_type from_long(long v) const { return v; }
  value_type from_integer(const mpz_class& v) const { return mpq_class(v); }
  value_type from_scalar(Scalar s) const {
    s.canonicalize();
    return s;
  }
  Scalar to_scalar(const value_type& v) const { return v; }
  void add(value_type& a, const value_type& b) const { a += b; }
  void sub(value_type& a, const value_type& b) const { a -= b; }
  void addmul(value_type& acc, const value_type& a, const value_type& b) const { acc += a * b; }
  void submul(value_type& acc, const value_type& a, const value_type& b) const { acc -= a * b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_unit(const value_type& a) const { return sgn(a) != 0; }
  value_type inverse(const value_type& a) const { return 1 / a; }
};

// Residues in [0, m) with m < 2^32, so a product of two residues plus one
// more residue fits in 64 bits.
struct WordModDomain {
  using value_type = std::uint64_t;
  using storage_type = Series::WordCoeffs;

  std::uint64_t m;

  static bool is_zero(value_type v) { return v == 0; }
  value_type zero() const { return 0; }
  value_type from_long(long v) const {
    const long r = v % static_cast<long>(m);
    return static_cast<value_type>(r < 0 ? r + static_cast<long>(m) : r);
  }
  value_type from_integer(const mpz_class& v) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m);
    return r.get_ui();
  }
  value_type from_scalar(Scalar s) const {
    s.canonicalize();
    const value_type den = from_integer(s.get_den());
    if (!is_unit(den)) {
      throw IntegralityError("denominator of " + s.get_str() + " is not invertible mod " +
                             std::to_string(m));
    }
    return mul(from_integer(s.get_num()), inverse(den));
  }
  Scalar to_scalar(value_type v) const { return Scalar(static_cast<unsigned long>(v)); }
  void add(value_type& a, value_type b) const {
    a += b;
    if (a >= m) a -= m;
  }
  void sub(value_type& a, value_type b) const { a = a >= b ? a - b : a + m - b; }
  void addmul(value_type& acc, value_type a, value_type b) const { acc = (acc + a * b) % m; }
  void submul(value_type& acc, value_type a, value_type b) const { sub(acc, (a * b) % m); }
  value_type mul(value_type a, value_type b) const { return (a * b) % m; }
  value_type neg(value_type a) const { return a == 0 ? 0 : m - a; }
  bool is_unit(value_type a) const { return std::gcd(a, m) == 1; }
  value_type inverse(value_type a) const {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
      const std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<value_type>(t);
  }
};

struct BigModDomain {
  using value_type = mpz_class;
  using storage_type = Series::IntegerCoeffs;

  mpz_class m;

  static bool is_zero(const value_type& v) { return sgn(v) == 0; }
  value_type zero() const { return 0; }
  value_type from_long(long v) const { return from_integer(mpz_class(v)); }
  value_type from_integer(const mpz_class& v) const {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
  }
  value_type from_scalar(Scalar s) const {
    s.canonicalize();
    const value_type den = from_integer(s.get_den());
    if (!is_unit(den)) {
      throw IntegralityError("denominator of " + s.get_str() + " is not invertible mod " +
                             m.get_str());
    }
    return mul(from_integer(s.get_num()), inverse(den));
  }
  Scalar to_scalar(const value_type& v) const { return Scalar(v); }
  void add(value_type& a, const value_type& b) const {
    a += b;
    if (a >= m) a -= m;
  }
  void sub(value_type& a, const value_type& b) const {
    a -= b;
    if (sgn(a) < 0) a += m;
  }
  void addmul(value_type& acc, const value_type& a, const value_type& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  void submul(value_type& acc, const value_type& a, const value_type& b) const {
    mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  value_type mul(const value_type& a, const value_type& b) const { return from_integer(a * b); }
  value_type neg(const value_type& a) const { return sgn(a) == 0 ? a : mpz_class(m - a); }
  bool is_unit(const value_type& a) const {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return g == 1;
  }
  value_type inverse(const value_type& a) const {
    mpz_class r;
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
  }
};

// Calls fn(domain) with the policy object matching `ring`.
template <class Fn>
decltype(auto) with_domain(const Ring& ring, Fn&& fn) {
  switch (ring.kind()) {
    case RingKind::kInteger:
      return fn(IntegerDomain{});
    case RingKind::kRational:
      return fn(RationalDomain{});
    case RingKind::kModular:
      break;
  }
  if (ring.word_sized()) return fn(WordModDomain{ring.modulus().get_ui()});
  return fn(BigModDomain{ring.modulus()});
}

template <class D>
const typename D::storage_type& coeffs_of(const D&, const Series& f) {
  return std::get<typename D::storage_type>(f.storage());
}

}  // namespace qseries::detail

#endif  // QSERIES_SRC_DOMAIN_HPP
