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

#ifndef QSERIES_SERIES_HPP
#define QSERIES_SERIES_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "qseries/monomial.hpp"
#include "qseries/ring.hpp"

namespace qseries {

// Precision value meaning "every coefficient is known": finite polynomials,
// literals and monomials. Precision arithmetic saturates at this value.
inline constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;

// Ring elements cross the public API as rationals. Integer and modular
// coefficients come back with denominator 1 (modular ones as the canonical
// residue in [0, m)).
using Scalar = mpq_class;

std::int64_t saturating_add(std::int64_t a, std::int64_t b);

// Truncated Laurent series  sum_{n < prec} c_n q^n  over a Ring.
//
// Coefficients are stored densely from the valuation upwards. After every
// operation the storage is normalized: no leading or trailing zeros, nothing
// stored at or beyond prec. A zero series stores nothing and reports its
// precision as its valuation.
//
// Values are immutable once built; all operations are free functions that
// return new series.
class Series {
 public:
  using IntegerCoeffs = std::vector<mpz_class>;   // kInteger and wide kModular
  using RationalCoeffs = std::vector<mpq_class>;  // kRational
  using WordCoeffs = std::vector<std::uint64_t>;  // kModular with m < 2^32
  using Storage = std::variant<IntegerCoeffs, RationalCoeffs, WordCoeffs>;

  // The zero series, known to `prec`.
  explicit Series(Ring ring = Ring::integer(), std::int64_t prec = kExact);

  static Series constant(const Ring& ring, const Scalar& c);
  static Series one(const Ring& ring) { return constant(ring, 1); }
  static Series monomial(const Ring& ring, const Scalar& c, std::int64_t exponent);
  static Series from_coefficients(const Ring& ring, std::int64_t valuation,
                                  std::span<const Scalar> coeffs, std::int64_t prec);
  static Series from_integers(const Ring& ring, std::int64_t valuation,
                              std::span<const long> coeffs, std::int64_t prec);
  // Storage must hold the alternative matching `ring`; it is normalized here.
  static Series from_storage(const Ring& ring, std::int64_t valuation, Storage coeffs,
                             std::int64_t prec);

  const Ring& ring() const { return ring_; }
  std::int64_t valuation() const { return valuation_; }
  std::int64_t prec() const { return prec_; }
  bool is_exact() const { return prec_ >= kExact; }
  bool is_zero() const { return stored_terms() == 0; }
  std::size_t stored_terms() const;
  const Storage& storage() const { return coeffs_; }

  // Coefficient of q^n. Zero outside the stored block; throws PrecisionError
  // for n >= prec.
  Scalar coeff(std::int64_t n) const;
  // Coefficients of q^from .. q^(to-1).
  std::vector<Scalar> coefficients(std::int64_t from, std::int64_t to) const;

  // "1 - 3*q + 5*q^3 + O(q^10)"
  std::string to_string(std::size_t max_terms = 16) const;

 private:
  Series(Ring ring, std::int64_t valuation, Storage coeffs, std::int64_t prec);

  Ring ring_;
  std::int64_t valuation_;
  Storage coeffs_;
  std::int64_t prec_;
};

Series add(const Series& f, const Series& g);
Series sub(const Series& f, const Series& g);
Series neg(const Series& f);
Series scale(const Series& f, const Scalar& c);

// Cauchy product. Precision: min(f.prec + g.val, g.prec + f.val). The outer
// loop runs over the sparser operand, so multiplying by a short polynomial
// costs O(nnz * length).
Series mul(const Series& f, const Series& g);

// Multiplicative inverse. The lowest coefficient of f must be a unit.
// Result precision is f.prec - 2*f.val, capped by `cap`; an exact input
// requires a cap.
Series invert(const Series& f, std::optional<std::int64_t> cap = std::nullopt);

// f^k by repeated squaring; negative k inverts first (same cap rules).
Series pow(const Series& f, std::int64_t k, std::optional<std::int64_t> cap = std::nullopt);

// q -> sign*q^k, k >= 1. Precision scales by k.
Series subst(const Series& f, int sign, std::int64_t k);

// Multiply by q^v.
Series shift(const Series& f, std::int64_t v);

// Drop everything at or beyond `prec` (no-op if already coarser).
Series truncate(const Series& f, std::int64_t prec);

// f * (1 - m) in O(length).
Series mul_binomial(const Series& f, Monomial m);
// f / (1 - m) in O(length); requires m.exp >= 1. Exact inputs need a cap.
Series div_binomial(const Series& f, Monomial m, std::optional<std::int64_t> cap = std::nullopt);

// Canonical homomorphism into `target`. Allowed: int -> any, rat -> any
// (denominators must be 1 or invertible mod m), mod:m -> mod:d with d | m.
Series to_ring(const Series& f, const Ring& target);

// Lowest exponent below min(n, f.prec, g.prec) where f and g differ.
std::optional<std::int64_t> first_difference(const Series& f, const Series& g, std::int64_t n);
// True iff f and g agree on every exponent below min(n, f.prec, g.prec).
bool eq_to_order(const Series& f, const Series& g, std::int64_t n);

inline Series operator+(const Series& f, const Series& g) { return add(f, g); }
inline Series operator-(const Series& f, const Series& g) { return sub(f, g); }
inline Series operator-(const Series& f) { return neg(f); }
inline Series operator*(const Series& f, const Series& g) { return mul(f, g); }

}  // namespace qseries

#endif  // QSERIES_SERIES_HPP
