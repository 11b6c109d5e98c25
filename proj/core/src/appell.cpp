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

#include "qseries/appell.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "qseries/errors.hpp"
#include "qseries/qproducts.hpp"

namespace qseries {

namespace {

Monomial plus_q(std::int64_t e) { return Monomial::minus_q(e); }  // 1 - (-q^e) = 1 + q^e

}  // namespace

Series phi_mock(std::int64_t prec, const Ring& ring) {
  Series total(ring, prec);
  if (prec <= 1) return total;
  // term_0 = q / (1 - q)^2
  Series term = shift(truncate(Series::one(ring), prec - 1), 1);
  term = div_binomial(div_binomial(term, Monomial::q(1)), Monomial::q(1));
  for (std::int64_t n = 0;; ++n) {
    total = add(total, term);
    if (n + 2 >= prec) break;  // term_{n+1} has valuation n+2
    term = mul_binomial(term, plus_q(2 * n + 1));
    term = mul_binomial(term, plus_q(2 * n + 2));
    term = truncate(shift(term, 1), prec);
    term = div_binomial(term, Monomial::q(2 * n + 3));
    term = div_binomial(term, Monomial::q(2 * n + 3));
  }
  return total;
}

Series rho(std::int64_t prec, const Ring& ring) {
  Series total(ring, prec);
  if (prec <= 0) return total;
  Series term = div_binomial(truncate(Series::one(ring), prec), Monomial::q(1));
  for (std::int64_t n = 0;; ++n) {
    total = add(total, term);
    if ((n + 1) * (n + 2) / 2 >= prec) break;
    term = mul_binomial(term, plus_q(n + 1));
    term = truncate(shift(term, n + 1), prec);
    term = div_binomial(term, Monomial::q(2 * n + 3));
  }
  return total;
}

Series mu(std::int64_t prec, const Ring& ring) {
  Series total(ring, prec);
  if (prec <= 1) return total;
  Series term = div_binomial(shift(truncate(Series::one(ring), prec - 1), 1), plus_q(1));
  for (std::int64_t n = 0;; ++n) {
    total = add(total, term);
    if ((n + 2) * (n + 2) >= prec) break;
    term = neg(mul_binomial(term, Monomial::q(2 * n + 1)));
    term = truncate(shift(term, 2 * n + 3), prec);
    term = div_binomial(term, plus_q(2 * n + 2));
    term = div_binomial(term, plus_q(2 * n + 3));
  }
  return total;
}

Series lambda_fn(std::int64_t prec, const Ring& ring) {
  Series total(ring, prec);
  if (prec <= 0) return total;
  Series term = truncate(Series::one(ring), prec);
  for (std::int64_t n = 0;; ++n) {
    total = add(total, term);
    if (n + 1 >= prec) break;
    term = neg(mul_binomial(term, Monomial::q(2 * n + 1)));
    term = truncate(shift(term, 1), prec);
    term = div_binomial(term, plus_q(n + 1));
  }
  return total;
}

namespace {

// Adds c * q^start / (1 - q^step) into dense[], truncated to dense.size().
void add_geometric(std::vector<mpq_class>& dense, std::int64_t start, std::int64_t step, int c) {
  for (std::int64_t e = start; e < static_cast<std::int64_t>(dense.size()); e += step) {
    dense[static_cast<std::size_t>(e)] += c;
  }
}

}  // namespace

Series a_jp(std::int64_t j, std::int64_t p, std::int64_t prec, const Ring& ring) {
  if (p < 2 || j < 1 || j > p - 1 || std::gcd(j, p) != 1) {
    throw ArgumentError("a_jp: need p >= 2, 1 <= j <= p-1 and gcd(j, p) = 1; got j=" +
                        std::to_string(j) + ", p=" + std::to_string(p));
  }
  const Ring rat = Ring::rational();
  if (prec <= 0) return Series(ring, prec);
  std::vector<mpq_class> inner(static_cast<std::size_t>(prec));

  // n >= 0:  (-1)^n q^{e_n} / (1 - q^{pn+j}),  e_n = pn(n+1)/2 + jn + j.
  // n < 0:   1/(1 - q^{-m}) = -q^m/(1 - q^m) with m = -(pn+j) > 0, giving
  //          (-1)^{n+1} q^{pn(n-1)/2 + jn} / (1 - q^m).
  // Valuations grow quadratically in |n|; each direction stops at prec.
  std::int64_t last = -1;
  for (std::int64_t n = 0;; ++n) {
    const std::int64_t e = p * n * (n + 1) / 2 + j * n + j;
    if (n > 2 && e <= last) throw ArgumentError("a_jp: non-monotone truncation bound");
    last = e;
    if (e >= prec) break;
    add_geometric(inner, e, p * n + j, n % 2 == 0 ? 1 : -1);
  }
  last = -1;
  for (std::int64_t n = -1;; --n) {
    const std::int64_t e = p * n * (n - 1) / 2 + j * n;
    if (n < -2 && e <= last) throw ArgumentError("a_jp: non-monotone truncation bound");
    last = e;
    if (e >= prec) break;
    add_geometric(inner, e, -(p * n + j), n % 2 == 0 ? -1 : 1);
  }
  Series s = Series::from_coefficients(rat, 0, inner, prec);
  for (std::int64_t start : {j, p - j, p}) {
    for (std::int64_t e = start; e < prec; e += p) s = div_binomial(s, Monomial::q(e));
  }
  try {
    return to_ring(s, ring);
  } catch (const IntegralityError& e) {
    throw IntegralityError(std::string("a_jp: integrality gate failed: ") + e.what());
  }
}

Series A_inner_sum(std::int64_t prec) {
  const Ring rat = Ring::rational();
  if (prec <= 0) return Series(rat, prec);
  std::vector<mpq_class> dense(static_cast<std::size_t>(prec));
  dense[0] = mpq_class(1, 2);
  // 2 q^{5m(m+1)/2} / (1 + q^{5m}) = 2 sum_t (-1)^t q^{5m(m+1)/2 + 5mt}
  for (std::int64_t m = 1; 5 * m * (m + 1) / 2 < prec; ++m) {
    int sign = 2;
    for (std::int64_t e = 5 * m * (m + 1) / 2; e < prec; e += 5 * m) {
      dense[static_cast<std::size_t>(e)] += sign;
      sign = -sign;
    }
  }
  return Series::from_coefficients(rat, 0, dense, prec);
}

Series A_series(std::int64_t prec, const Ring& ring) {
  const Ring rat = Ring::rational();
  const Series prefix = eta_quotient(EtaQuotient{{5, 1}, {10, -2}}, prec, rat);
  return to_ring(mul(prefix, A_inner_sum(prec)), ring);
}

}  // namespace qseries
