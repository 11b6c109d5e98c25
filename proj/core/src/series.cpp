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

#include "qseries/series.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>

#include "domain.hpp"
#include "qseries/errors.hpp"

namespace qseries {

using detail::coeffs_of;
using detail::with_domain;

std::int64_t saturating_add(std::int64_t a, std::int64_t b) {
  if (a >= kExact || b >= kExact) return kExact;
  const std::int64_t s = a + b;
  return std::clamp(s, -kExact, kExact);
}

namespace {

std::int64_t saturating_mul(std::int64_t a, std::int64_t k) {
  if (a >= kExact) return kExact;
  if (a != 0 && (a > kExact / k || a < -kExact / k)) return a > 0 ? kExact : -kExact;
  return a * k;
}

void check_same_ring(const Series& f, const Series& g, const char* op) {
  if (!(f.ring() == g.ring())) {
    throw RingMismatchError(std::string(op) + ": ring mismatch (" + f.ring().descriptor() +
                            " vs " + g.ring().descriptor() + ")");
  }
}

template <class D>
void normalize(const D&, std::int64_t& valuation, typename D::storage_type& c, std::int64_t prec) {
  if (prec < kExact) {
    const std::int64_t limit = prec - valuation;
    if (limit <= 0) {
      c.clear();
    } else if (static_cast<std::int64_t>(c.size()) > limit) {
      c.resize(static_cast<std::size_t>(limit));
    }
  }
  while (!c.empty() && D::is_zero(c.back())) c.pop_back();
  std::size_t lead = 0;
  while (lead < c.size() && D::is_zero(c[lead])) ++lead;
  if (lead > 0) {
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lead));
    valuation += static_cast<std::int64_t>(lead);
  }
  if (c.empty()) valuation = prec;
}

// End exponent (exclusive) of the stored block.
std::int64_t stored_end(const Series& f) {
  return f.valuation() + static_cast<std::int64_t>(f.stored_terms());
}

template <class D>
Series make(const D&, const Ring& ring, std::int64_t valuation, typename D::storage_type c,
            std::int64_t prec) {
  return Series::from_storage(ring, valuation, Series::Storage(std::move(c)), prec);
}

template <class D>
Series add_impl(const D& d, const Series& f, const Series& g, bool subtract) {
  const std::int64_t prec = std::min(f.prec(), g.prec());
  if (f.is_zero() && g.is_zero()) return Series(f.ring(), prec);
  std::int64_t val = prec;
  std::int64_t end = std::numeric_limits<std::int64_t>::min();
  for (const Series* s : {&f, &g}) {
    if (s->is_zero()) continue;
    val = std::min(val, s->valuation());
    end = std::max(end, stored_end(*s));
  }
  end = std::min(end, prec);
  if (end <= val) return Series(f.ring(), prec);
  typename D::storage_type r(static_cast<std::size_t>(end - val), d.zero());
  const auto& fc = coeffs_of(d, f);
  for (std::size_t i = 0; i < fc.size(); ++i) {
    const std::int64_t at = f.valuation() + static_cast<std::int64_t>(i) - val;
    if (at >= static_cast<std::int64_t>(r.size())) break;
    d.add(r[static_cast<std::size_t>(at)], fc[i]);
  }
  const auto& gc = coeffs_of(d, g);
  for (std::size_t i = 0; i < gc.size(); ++i) {
    const std::int64_t at = g.valuation() + static_cast<std::int64_t>(i) - val;
    if (at >= static_cast<std::int64_t>(r.size())) break;
    if (subtract) {
      d.sub(r[static_cast<std::size_t>(at)], gc[i]);
    } else {
      d.add(r[static_cast<std::size_t>(at)], gc[i]);
    }
  }
  return make(d, f.ring(), val, std::move(r), prec);
}

template <class D>
std::size_t count_nonzero(const D&, const typename D::storage_type& c) {
  return static_cast<std::size_t>(
      std::count_if(c.begin(), c.end(), [](const auto& v) { return !D::is_zero(v); }));
}

template <class D>
Series mul_impl(const D& d, const Series& f, const Series& g) {
  const std::int64_t prec = std::min(saturating_add(f.prec(), g.valuation()),
                                     saturating_add(g.prec(), f.valuation()));
  if (f.is_zero() || g.is_zero()) return Series(f.ring(), prec);
  const std::int64_t val = f.valuation() + g.valuation();
  const auto* a = &coeffs_of(d, f);
  const auto* b = &coeffs_of(d, g);
  if (count_nonzero(d, *b) < count_nonzero(d, *a)) std::swap(a, b);
  std::int64_t len = static_cast<std::int64_t>(a->size() + b->size()) - 1;
  if (prec < kExact) len = std::min(len, prec - val);
  if (len <= 0) return Series(f.ring(), prec);
  typename D::storage_type r(static_cast<std::size_t>(len), d.zero());
  const std::size_t n = static_cast<std::size_t>(len);
  for (std::size_t i = 0; i < a->size() && i < n; ++i) {
    const auto& ai = (*a)[i];
    if (D::is_zero(ai)) continue;
    const std::size_t jmax = std::min(b->size(), n - i);
    for (std::size_t j = 0; j < jmax; ++j) d.addmul(r[i + j], ai, (*b)[j]);
  }
  return make(d, f.ring(), val, std::move(r), prec);
}

template <class D>
Series invert_impl(const D& d, const Series& f, std::optional<std::int64_t> cap) {
  if (f.is_zero()) throw NonUnitError("cannot invert a series that is zero to its precision");
  const auto& c = coeffs_of(d, f);
  if (!d.is_unit(c.front())) {
    throw NonUnitError("lowest coefficient " + d.to_scalar(c.front()).get_str() +
                       " of the divisor is not a unit in " + f.ring().descriptor());
  }
  const std::int64_t v = f.valuation();
  std::int64_t prec;
  if (f.is_exact()) {
    if (!cap) throw PrecisionError("inverting an exact series needs a precision cap");
    prec = *cap;
  } else {
    prec = f.prec() - 2 * v;
    if (cap) prec = std::min(prec, *cap);
  }
  const std::int64_t len = prec + v;
  if (len <= 0) return Series(f.ring(), prec);
  const auto uinv = d.inverse(c.front());
  std::vector<std::size_t> support;
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (!D::is_zero(c[k])) support.push_back(k);
  }
  typename D::storage_type r(static_cast<std::size_t>(len), d.zero());
  r[0] = uinv;
  typename D::value_type acc = d.zero();
  for (std::size_t n = 1; n < r.size(); ++n) {
    acc = d.zero();
    for (std::size_t k : support) {
      if (k > n) break;
      d.addmul(acc, c[k], r[n - k]);
    }
    r[n] = d.neg(d.mul(uinv, acc));
  }
  return make(d, f.ring(), -v, std::move(r), prec);
}

template <class D>
Series subst_impl(const D& d, const Series& f, int sign, std::int64_t k) {
  const std::int64_t prec = saturating_mul(f.prec(), k);
  if (f.is_zero()) return Series(f.ring(), prec);
  const auto& c = coeffs_of(d, f);
  typename D::storage_type r((c.size() - 1) * static_cast<std::size_t>(k) + 1, d.zero());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::int64_t e = f.valuation() + static_cast<std::int64_t>(i);
    const bool flip = sign < 0 && (e % 2 != 0);
    r[i * static_cast<std::size_t>(k)] = flip ? d.neg(c[i]) : c[i];
  }
  return make(d, f.ring(), f.valuation() * k, std::move(r), prec);
}

template <class D>
Series binomial_impl(const D& d, const Series& f, Monomial m, bool divide,
                     std::optional<std::int64_t> cap) {
  const std::size_t e = static_cast<std::size_t>(m.exp);
  std::int64_t prec = f.prec();
  if (divide) {
    if (f.is_exact() && !cap) throw PrecisionError("dividing an exact series needs a precision cap");
    if (cap) prec = std::min(prec, *cap);
  }
  if (f.is_zero()) return Series(f.ring(), prec);
  const auto& c = coeffs_of(d, f);
  std::int64_t len;
  if (divide) {
    len = prec - f.valuation();
  } else {
    len = static_cast<std::int64_t>(c.size() + e);
    if (prec < kExact) len = std::min(len, prec - f.valuation());
  }
  if (len <= 0) return Series(f.ring(), prec);
  typename D::storage_type r(static_cast<std::size_t>(len), d.zero());
  std::copy_n(c.begin(), std::min(c.size(), r.size()), r.begin());
  if (divide) {
    // r / (1 - s q^e):  r[i] += s * r[i - e], ascending.
    for (std::size_t i = e; i < r.size(); ++i) {
      if (m.sign > 0) {
        d.add(r[i], r[i - e]);
      } else {
        d.sub(r[i], r[i - e]);
      }
    }
  } else {
    for (std::size_t i = r.size(); i-- > e;) {
      if (m.sign > 0) {
        d.sub(r[i], r[i - e]);
      } else {
        d.add(r[i], r[i - e]);
      }
    }
  }
  return make(d, f.ring(), f.valuation(), std::move(r), prec);
}

}  // namespace

Series::Series(Ring ring, std::int64_t prec)
    : ring_(std::move(ring)),
      valuation_(prec),
      coeffs_(with_domain(ring_, [](auto d) { return Storage(typename decltype(d)::storage_type{}); })),
      prec_(prec) {}

Series::Series(Ring ring, std::int64_t valuation, Storage coeffs, std::int64_t prec)
    : ring_(std::move(ring)), valuation_(valuation), coeffs_(std::move(coeffs)), prec_(prec) {}

Series Series::from_storage(const Ring& ring, std::int64_t valuation, Storage coeffs,
                            std::int64_t prec) {
  return with_domain(ring, [&](auto d) {
    using D = decltype(d);
    auto* c = std::get_if<typename D::storage_type>(&coeffs);
    if (c == nullptr) {
      throw RingMismatchError("coefficient storage does not match ring " + ring.descriptor());
    }
    normalize(d, valuation, *c, prec);
    return Series(ring, valuation, std::move(coeffs), prec);
  });
}

Series Series::constant(const Ring& ring, const Scalar& c) { return monomial(ring, c, 0); }

Series Series::monomial(const Ring& ring, const Scalar& c, std::int64_t exponent) {
  return with_domain(ring, [&](auto d) {
    typename decltype(d)::storage_type v{d.from_scalar(c)};
    return from_storage(ring, exponent, Storage(std::move(v)), kExact);
  });
}

Series Series::from_coefficients(const Ring& ring, std::int64_t valuation,
                                 std::span<const Scalar> coeffs, std::int64_t prec) {
  return with_domain(ring, [&](auto d) {
    typename decltype(d)::storage_type v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) v.push_back(d.from_scalar(c));
    return from_storage(ring, valuation, Storage(std::move(v)), prec);
  });
}

Series Series::from_integers(const Ring& ring, std::int64_t valuation, std::span<const long> coeffs,
                             std::int64_t prec) {
  return with_domain(ring, [&](auto d) {
    typename decltype(d)::storage_type v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.push_back(d.from_long(c));
    return from_storage(ring, valuation, Storage(std::move(v)), prec);
  });
}

std::size_t Series::stored_terms() const {
  return std::visit([](const auto& c) { return c.size(); }, coeffs_);
}

Scalar Series::coeff(std::int64_t n) const {
  if (n >= prec_) {
    throw PrecisionError("coefficient of q^" + std::to_string(n) + " requested but precision is " +
                         std::to_string(prec_));
  }
  if (n < valuation_ || n >= valuation_ + static_cast<std::int64_t>(stored_terms())) return 0;
  return with_domain(ring_, [&](auto d) {
    return d.to_scalar(coeffs_of(d, *this)[static_cast<std::size_t>(n - valuation_)]);
  });
}

std::vector<Scalar> Series::coefficients(std::int64_t from, std::int64_t to) const {
  std::vector<Scalar> out;
  for (std::int64_t n = from; n < to; ++n) out.push_back(coeff(n));
  return out;
}

std::string Series::to_string(std::size_t max_terms) const {
  std::ostringstream os;
  std::size_t shown = 0;
  bool first = true;
  const std::int64_t end = valuation_ + static_cast<std::int64_t>(stored_terms());
  std::int64_t n = valuation_;
  for (; n < end && shown < max_terms; ++n) {
    Scalar c = coeff(n);
    if (sgn(c) == 0) continue;
    ++shown;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    c = abs(c);
    const bool unit = c == 1;
    if (!unit || n == 0) os << c.get_str();
    if (n != 0) {
      if (!unit) os << "*";
      os << "q";
      if (n != 1) os << "^" << n;
    }
    first = false;
  }
  if (first) os << "0";
  if (n < end) os << " + ...";
  if (!is_exact()) os << " + O(q^" << prec_ << ")";
  return os.str();
}

Series add(const Series& f, const Series& g) {
  check_same_ring(f, g, "add");
  return with_domain(f.ring(), [&](auto d) { return add_impl(d, f, g, false); });
}

Series sub(const Series& f, const Series& g) {
  check_same_ring(f, g, "sub");
  return with_domain(f.ring(), [&](auto d) { return add_impl(d, f, g, true); });
}

Series neg(const Series& f) {
  return with_domain(f.ring(), [&](auto d) {
    auto c = coeffs_of(d, f);
    for (auto& v : c) v = d.neg(v);
    return make(d, f.ring(), f.valuation(), std::move(c), f.prec());
  });
}

Series scale(const Series& f, const Scalar& c) {
  return mul(f, Series::constant(f.ring(), c));
}

Series mul(const Series& f, const Series& g) {
  check_same_ring(f, g, "mul");
  return with_domain(f.ring(), [&](auto d) { return mul_impl(d, f, g); });
}

Series invert(const Series& f, std::optional<std::int64_t> cap) {
  return with_domain(f.ring(), [&](auto d) { return invert_impl(d, f, cap); });
}

Series pow(const Series& f, std::int64_t k, std::optional<std::int64_t> cap) {
  if (k == 0) return Series::one(f.ring());
  Series base = k < 0 ? invert(f, cap) : f;
  std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  const bool can_trim = cap && base.valuation() >= 0;
  auto trim = [&](Series s) { return can_trim ? truncate(s, *cap) : s; };
  Series result = Series::one(f.ring());
  bool have = false;
  while (true) {
    if (e & 1U) {
      result = have ? trim(mul(result, base)) : base;
      have = true;
    }
    e >>= 1U;
    if (e == 0) break;
    base = trim(mul(base, base));
  }
  return cap ? truncate(result, *cap) : result;
}

Series subst(const Series& f, int sign, std::int64_t k) {
  if (k < 1) throw ArgumentError("subst: dilation must be positive, got " + std::to_string(k));
  if (sign != 1 && sign != -1) throw ArgumentError("subst: sign must be +1 or -1");
  return with_domain(f.ring(), [&](auto d) { return subst_impl(d, f, sign, k); });
}

Series shift(const Series& f, std::int64_t v) {
  return Series::from_storage(f.ring(), saturating_add(f.valuation(), v), f.storage(),
                              saturating_add(f.prec(), v));
}

Series truncate(const Series& f, std::int64_t prec) {
  if (prec >= f.prec()) return f;
  return Series::from_storage(f.ring(), f.valuation(), f.storage(), prec);
}

Series mul_binomial(const Series& f, Monomial m) {
  if (m.exp < 0) throw ArgumentError("mul_binomial: negative exponent");
  if (m.exp == 0) return scale(f, 1 - m.sign);
  return with_domain(f.ring(), [&](auto d) { return binomial_impl(d, f, m, false, std::nullopt); });
}

Series div_binomial(const Series& f, Monomial m, std::optional<std::int64_t> cap) {
  if (m.exp < 1) throw ArgumentError("div_binomial: factor 1 - " + m.to_string() + " has no unit constant term");
  return with_domain(f.ring(), [&](auto d) { return binomial_impl(d, f, m, true, cap); });
}

Series to_ring(const Series& f, const Ring& target) {
  const Ring& source = f.ring();
  if (source == target) return f;
  if (source.is_modular()) {
    if (!target.is_modular() || !mpz_divisible_p(source.modulus().get_mpz_t(), target.modulus().get_mpz_t())) {
      throw RingMismatchError("no canonical map from " + source.descriptor() + " to " +
                              target.descriptor());
    }
  }
  return with_domain(source, [&](auto src) {
    return with_domain(target, [&](auto dst) {
      const auto& c = coeffs_of(src, f);
      typename decltype(dst)::storage_type out;
      out.reserve(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) {
        try {
          out.push_back(dst.from_scalar(src.to_scalar(c[i])));
        } catch (const IntegralityError& e) {
          throw IntegralityError("to_ring(" + target.descriptor() + "): q^" +
                                 std::to_string(f.valuation() + static_cast<std::int64_t>(i)) + ": " +
                                 e.what());
        }
      }
      return Series::from_storage(target, f.valuation(), Series::Storage(std::move(out)), f.prec());
    });
  });
}

std::optional<std::int64_t> first_difference(const Series& f, const Series& g, std::int64_t n) {
  check_same_ring(f, g, "compare");
  std::int64_t limit = std::min({n, f.prec(), g.prec()});
  std::int64_t start = std::min(f.valuation(), g.valuation());
  std::int64_t end = std::max(f.is_zero() ? start : stored_end(f), g.is_zero() ? start : stored_end(g));
  limit = std::min(limit, end);
  return with_domain(f.ring(), [&](auto d) -> std::optional<std::int64_t> {
    using V = typename decltype(d)::value_type;
    const auto& fc = coeffs_of(d, f);
    const auto& gc = coeffs_of(d, g);
    const V zero = d.zero();
    auto at = [&](const Series& s, const auto& c, std::int64_t e) -> const V& {
      const std::int64_t i = e - s.valuation();
      if (i < 0 || i >= static_cast<std::int64_t>(c.size())) return zero;
      return c[static_cast<std::size_t>(i)];
    };
    for (std::int64_t e = start; e < limit; ++e) {
      if (at(f, fc, e) != at(g, gc, e)) return e;
    }
    return std::nullopt;
  });
}

bool eq_to_order(const Series& f, const Series& g, std::int64_t n) {
  return !first_difference(f, g, n).has_value();
}

}  // namespace qseries
