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

#include "qseries/theta.hpp"

#include <map>
#include <string>

#include "qseries/errors.hpp"
#include "qseries/qproducts.hpp"

namespace qseries {

namespace {

// Sparse accumulator for sums whose terms are c*q^e with small integer c.
class TermSum {
 public:
  explicit TermSum(std::int64_t prec) : prec_(prec) {}

  void add(std::int64_t exponent, long c) {
    if (exponent < prec_) terms_[exponent] += c;
  }

  // Built over the integers, then mapped into `ring`.
  Series build(const Ring& ring) const {
    if (terms_.empty() || prec_ <= 0) return Series(ring, prec_);
    const std::int64_t lo = terms_.begin()->first;
    std::vector<long> dense(static_cast<std::size_t>(prec_ - lo), 0);
    for (const auto& [e, c] : terms_) dense[static_cast<std::size_t>(e - lo)] = c;
    return to_ring(Series::from_integers(Ring::integer(), lo, dense, prec_), ring);
  }

 private:
  std::int64_t prec_;
  std::map<std::int64_t, long> terms_;
};

long sign_power(int sign, std::int64_t e) { return (sign < 0 && (e % 2 != 0)) ? -1 : 1; }

void check_theta_args(Monomial a, Monomial b, const char* op) {
  if (a.exp < 0 || b.exp < 0 || a.exp + b.exp < 1) {
    throw ArgumentError(std::string(op) + "(" + a.to_string() + ", " + b.to_string() +
                        "): needs nonnegative exponents with positive sum");
  }
}

}  // namespace

Series f_sum(Monomial a, Monomial b, std::int64_t prec, const Ring& ring) {
  check_theta_args(a, b, "f_sum");
  TermSum sum(prec);
  // Term k: a^{T(k)} b^{T(k-1)} with T(k) = k(k+1)/2. Both exponent
  // coefficients are nonnegative, so the exponent is monotone on each side
  // of k = 0 and each direction stops at the first term past prec.
  auto term = [&](std::int64_t k) {
    const std::int64_t ta = k * (k + 1) / 2;
    const std::int64_t tb = k * (k - 1) / 2;
    return std::pair{ta * a.exp + tb * b.exp, sign_power(a.sign, ta) * sign_power(b.sign, tb)};
  };
  for (std::int64_t k = 0;; ++k) {
    const auto [e, c] = term(k);
    if (e >= prec) break;
    sum.add(e, c);
  }
  for (std::int64_t k = -1;; --k) {
    const auto [e, c] = term(k);
    if (e >= prec) break;
    sum.add(e, c);
  }
  return sum.build(ring);
}

Series f_prod(Monomial a, Monomial b, std::int64_t prec, const Ring& ring) {
  check_theta_args(a, b, "f_prod");
  if (a.exp == 0 || b.exp == 0) {
    throw ArgumentError("f_prod(" + a.to_string() + ", " + b.to_string() +
                        "): a zero exponent makes a product factor non-unit");
  }
  const Monomial ab = a * b;
  Series r = pochhammer_inf(-a, ab, prec, Ring::integer());
  r = mul(r, pochhammer_inf(-b, ab, prec, Ring::integer()));
  r = mul(r, pochhammer_inf(ab, ab, prec, Ring::integer()));
  return to_ring(r, ring);
}

Series phi_sum(std::int64_t prec, const Ring& ring) { return f_sum(Monomial::q(1), Monomial::q(1), prec, ring); }

Series phi_prod(std::int64_t prec, const Ring& ring) {
  return to_ring(eta_quotient(EtaQuotient{{2, 5}, {1, -2}, {4, -2}}, prec), ring);
}

Series psi_sum(std::int64_t prec, const Ring& ring) { return f_sum(Monomial::q(1), Monomial::q(3), prec, ring); }

Series psi_prod(std::int64_t prec, const Ring& ring) {
  return to_ring(eta_quotient(EtaQuotient{{2, 2}, {1, -1}}, prec), ring);
}

Series jacobi_cube(std::int64_t prec, const Ring& ring) {
  TermSum sum(prec);
  for (std::int64_t k = 0; k * (k + 1) / 2 < prec; ++k) {
    sum.add(k * (k + 1) / 2, (k % 2 == 0 ? 1 : -1) * (2 * k + 1));
  }
  return sum.build(ring);
}

Series cube_analog(std::int64_t prec, const Ring& ring) {
  TermSum sum(prec);
  for (std::int64_t n = 0; 3 * n * n + 2 * n < prec; ++n) sum.add(3 * n * n + 2 * n, 3 * n + 1);
  for (std::int64_t n = -1; 3 * n * n + 2 * n < prec; --n) sum.add(3 * n * n + 2 * n, 3 * n + 1);
  return sum.build(ring);
}

Lemma21Result lemma21_check(Monomial a, Monomial b, Monomial c, Monomial d, std::int64_t prec) {
  if (!(a * b == c * d)) {
    throw ArgumentError("lemma21_check: ab = " + (a * b).to_string() + " differs from cd = " +
                        (c * d).to_string());
  }
  auto f = [prec](Monomial x, Monomial y) { return f_sum(x, y, prec); };
  const Series left = mul(f(a, b), f(c, d));
  const Series right = mul(f(-a, -b), f(-c, -d));

  Lemma21Result result;
  const Series sum_rhs = scale(mul(f(a * c, b * d), f(a * d, b * c)), 2);
  result.sum_identity = eq_to_order(add(left, right), sum_rhs, prec);

  const Monomial u1 = b / c, v1 = a * c * c * d;
  const Monomial u2 = b / d, v2 = a * c * d * d;
  const Series diff_rhs =
      scale(shift(mul(f(u1, v1), f(u2, v2)), a.exp), 2 * a.sign);
  result.diff_identity = eq_to_order(sub(left, right), diff_rhs, prec);
  return result;
}

}  // namespace qseries
