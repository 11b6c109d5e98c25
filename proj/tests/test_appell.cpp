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

#include <gtest/gtest.h>

#include "qseries/appell.hpp"
#include "qseries/dissect.hpp"
#include "qseries/errors.hpp"
#include "qseries/qproducts.hpp"
#include "qseries/theta.hpp"
#include "support/oracles.hpp"

namespace qseries {
namespace {

void expect_same(const Series& a, const Series& b, std::int64_t n) {
  ASSERT_GE(std::min(a.prec(), b.prec()), n);
  const auto diff = first_difference(a, b, n);
  EXPECT_FALSE(diff.has_value()) << "first difference at q^" << diff.value_or(0);
}

bool divides(long m, const Scalar& c) {
  return c.get_den() == 1 && mpz_divisible_ui_p(c.get_num().get_mpz_t(), static_cast<unsigned long>(m)) != 0;
}

Series from_poly(const oracle::Poly& p, const Ring& ring = Ring::rational()) {
  return Series::from_coefficients(ring, 0, p, static_cast<std::int64_t>(p.size()));
}

TEST(PhiMock, MatchesTermByTermSummation) {
  const int n = 60;
  const Series a = phi_mock(n);
  const oracle::Poly expected = oracle::phi_mock(n);
  for (int i = 0; i < n; ++i) EXPECT_EQ(a.coeff(i), expected[i]) << i;
  EXPECT_EQ(a.coeff(0), 0);
  EXPECT_EQ(a.coeff(1), 1);
  EXPECT_EQ(a.coeff(2), 3);
}

TEST(PhiMock, SmallCongruences) {
  const Series a = phi_mock(40);
  EXPECT_TRUE(divides(5, a.coeff(9)));
  EXPECT_TRUE(divides(25, a.coeff(19)));
  EXPECT_TRUE(divides(5, a.coeff(29)));
}

TEST(PhiMock, ModularAgreesWithInteger) {
  const Series exact = phi_mock(300);
  expect_same(phi_mock(300, Ring::modular(125)), to_ring(exact, Ring::modular(125)), 300);
}

TEST(PhiMock, OddPart) {
  const int n = 200;
  expect_same(extract(phi_mock(2 * n), 2, 1), eta_quotient({{2, 8}, {1, -7}}, n), n);
}

TEST(SixthOrder, RhoIdentity) {
  const int n = 100;
  const Series phi3 = subst(phi_mock(n / 3 + 2), 1, 3);
  const Series prod = pow(euler(2, n), 2) * pochhammer_inf(Monomial::minus_q(3), 3, n) *
                      pow(pochhammer_inf_inverse(Monomial::q(1), Monomial::q(2), n), 2) * invert(euler(3, n));
  expect_same(rho(n), scale(shift(phi3, -1), 2) + prod, n);
}

TEST(SixthOrder, LeadingTerms) {
  const Series m = mu(20);
  EXPECT_EQ(m.coeff(0), 0);
  EXPECT_EQ(m.coeff(1), 1);  // from q/(1+q)
  const Series l = lambda_fn(20);
  EXPECT_EQ(l.coeff(0), 1);
  EXPECT_EQ(rho(20).coeff(0), 1);
}

TEST(SixthOrder, MuAndLambdaAgreeWithTermSums) {
  const int n = 40;
  oracle::Poly mu_sum = oracle::zero(n);
  oracle::Poly lambda_sum = oracle::zero(n);
  for (int k = 0; k < n; ++k) {
    // (q; q^2)_k and (-q; q)_{2k+1}, (-q; q)_k
    oracle::Poly odd = oracle::one(n);
    for (int i = 0; i < k && 2 * i + 1 < n; ++i) {
      oracle::Poly b = oracle::one(n);
      b[2 * i + 1] = -1;
      odd = oracle::mul(odd, b);
    }
    auto minus_q_poch = [&](int len) {
      oracle::Poly p = oracle::one(n);
      for (int i = 1; i <= len && i < n; ++i) {
        oracle::Poly b = oracle::one(n);
        b[i] = 1;
        p = oracle::mul(p, b);
      }
      return p;
    };
    const int sign = k % 2 == 0 ? 1 : -1;
    if ((k + 1) * (k + 1) < n) {
      oracle::Poly t = oracle::mul(odd, oracle::inverse(minus_q_poch(2 * k + 1)));
      oracle::Poly shifted = oracle::zero(n);
      for (int i = 0; i + (k + 1) * (k + 1) < n; ++i) shifted[i + (k + 1) * (k + 1)] = t[i];
      mu_sum = oracle::add(mu_sum, oracle::scaled(shifted, sign));
    }
    if (k < n) {
      oracle::Poly t = oracle::mul(odd, oracle::inverse(minus_q_poch(k)));
      oracle::Poly shifted = oracle::zero(n);
      for (int i = 0; i + k < n; ++i) shifted[i + k] = t[i];
      lambda_sum = oracle::add(lambda_sum, oracle::scaled(shifted, sign));
    }
  }
  expect_same(mu(n), to_ring(from_poly(mu_sum), Ring::integer()), n);
  expect_same(lambda_fn(n), to_ring(from_poly(lambda_sum), Ring::integer()), n);
}

TEST(Ajp, MatchesBilateralOracle) {
  for (auto [j, p] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 6}, {1, 10}, {3, 10}, {2, 5}}) {
    const int n = 80;
    const oracle::Poly expected = oracle::ajp(j, p, n);
    const Series s = a_jp(j, p, n);
    for (int i = 0; i < n; ++i) EXPECT_EQ(s.coeff(i), expected[i]) << "a_{" << j << "," << p << "}(" << i << ")";
  }
}

TEST(Ajp, TwiceAIsA12) {
  const int n = 400;
  expect_same(a_jp(1, 2, n), scale(phi_mock(n), 2), n);
}

TEST(Ajp, ToIntegerFromRationalAccumulation) {
  const Series r = a_jp(1, 2, 100, Ring::rational());
  EXPECT_NO_THROW(to_ring(r, Ring::integer()));
}

TEST(Ajp, Family) {
  const int n = 80;
  for (auto [j, p] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}, {1, 3}, {1, 6}, {1, 10}, {3, 10}}) {
    const std::int64_t start = (p - j) * j;
    const Series a = a_jp(j, p, p * n + start + 1);
    const Series den = pow(pochhammer_inf(Monomial::q(j), p, n) * pochhammer_inf(Monomial::q(p - j), p, n), 2);
    const Series rhs = scale(pow(euler(p, n), 4) * pow(euler(1, n), -3) * invert(den), p);
    for (std::int64_t i = 0; i < n; ++i) {
      EXPECT_EQ(a.coeff(p * i + start), rhs.coeff(i)) << "(j,p)=(" << j << "," << p << ") q^" << i;
    }
  }
}

TEST(Ajp, SixNPlusThree) {
  const int n = 80;
  expect_same(extract(a_jp(1, 6, 6 * n), 6, 3), scale(eta_quotient({{2, 3}, {3, 5}, {1, -6}, {6, -1}}, n), 3), n);
}

TEST(Ajp, ParityAndModFiveCongruences) {
  for (auto [j, p] : std::vector<std::pair<int, int>>{{1, 6}, {1, 10}, {3, 10}}) {
    const Series a = a_jp(j, p, 300);
    for (int n = 0; n < 300; n += 2) EXPECT_TRUE(divides(2, a.coeff(n))) << j << "," << p << " n=" << n;
  }
  const Series a13 = a_jp(1, 3, 300);
  for (int n = 0; 5 * n + 4 < 300; ++n) {
    EXPECT_TRUE(divides(5, a13.coeff(5 * n + 3))) << n;
    EXPECT_TRUE(divides(5, a13.coeff(5 * n + 4))) << n;
  }
}

TEST(Ajp, RejectsBadArguments) {
  EXPECT_THROW(a_jp(2, 4, 10), ArgumentError);
  EXPECT_THROW(a_jp(0, 3, 10), ArgumentError);
  EXPECT_THROW(a_jp(1, 1, 10), ArgumentError);
}

TEST(ASeries, InnerSumConstantIsHalf) {
  const Series inner = A_inner_sum(30);
  EXPECT_EQ(inner.coeff(0), Scalar(1, 2));
  EXPECT_EQ(inner.ring(), Ring::rational());
}

TEST(ASeries, RewrittenNegativeTermsPairWithPositive) {
  // q^{5m(m-1)/2}/(1+q^{-5m}) = q^{5m(m+1)/2}/(1+q^{5m})
  const int order = 60;
  for (int m = 1; m <= 5; ++m) {
    oracle::Poly den_pos = oracle::one(order);
    if (5 * m < order) den_pos[5 * m] = 1;
    oracle::Poly pos = oracle::zero(order);
    if (5 * m * (m + 1) / 2 < order) pos[5 * m * (m + 1) / 2] = 1;
    pos = oracle::mul(pos, oracle::inverse(den_pos));
    oracle::Poly neg = oracle::zero(order);
    if (5 * m * (m - 1) / 2 + 5 * m < order) neg[5 * m * (m - 1) / 2 + 5 * m] = 1;
    neg = oracle::mul(neg, oracle::inverse(den_pos));
    for (int i = 0; i < order; ++i) EXPECT_EQ(pos[i], neg[i]) << "m=" << m << " q^" << i;
  }
  const oracle::Poly direct = [&] {
    oracle::Poly s = oracle::zero(order);
    s[0] = mpq_class(1, 2);
    for (int m = 1; 5 * m * (m + 1) / 2 < order; ++m) {
      oracle::Poly den = oracle::one(order);
      if (5 * m < order) den[5 * m] = 1;
      oracle::Poly t = oracle::zero(order);
      t[5 * m * (m + 1) / 2] = 2;
      s = oracle::add(s, oracle::mul(t, oracle::inverse(den)));
    }
    return s;
  }();
  expect_same(A_inner_sum(order), from_poly(direct), order);
}

TEST(ASeries, AjpTenIdentities) {
  const int n = 120;
  const Ring rat = Ring::rational();
  const Series a2 = subst(A_series(n / 2 + 1), 1, 2);
  const Series e10 = pow(euler(10, n, rat), 5) * pow(euler(20, n, rat), -4);
  auto quotient = [&](int s, int t) {
    const Series num = f_prod(Monomial::q(s), Monomial::q(t), n, rat);
    const Series den = f_prod(Monomial::minus_q(s), Monomial::minus_q(t), n, rat);
    return pow(num * invert(den), 2) * e10;
  };
  expect_same(scale(a_jp(1, 10, n, rat), 4), quotient(1, 9) - scale(a2, 2), n);
  expect_same(scale(a_jp(3, 10, n, rat), 4), quotient(3, 7) - scale(a2, 2), n);
}

}  // namespace
}  // namespace qseries
