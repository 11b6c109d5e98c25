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

Series q_to(std::int64_t k, const Scalar& c = 1) { return Series::monomial(Ring::integer(), c, k); }

TEST(Theta, PhiAndPsiCoefficients) {
  const int n = 300;
  const Series phi = f_sum(Monomial::q(1), Monomial::q(1), n);
  const Series psi = f_sum(Monomial::q(1), Monomial::q(3), n);
  for (int i = 0; i < n; ++i) {
    EXPECT_EQ(phi.coeff(i), i == 0 ? 1 : (oracle::is_square(i) ? 2 : 0)) << i;
    EXPECT_EQ(psi.coeff(i), oracle::is_triangular(i) ? 1 : 0) << i;
  }
  expect_same(phi, phi_sum(n), n);
  expect_same(psi, psi_sum(n), n);
  expect_same(phi_prod(n), phi_sum(n), n);
  expect_same(psi_prod(n), psi_sum(n), n);
}

TEST(Theta, PentagonalCase) {
  expect_same(f_sum(Monomial::minus_q(1), Monomial::minus_q(2), 100), euler(1, 100), 100);
}

TEST(Theta, SumMatchesDirectOracle) {
  const int n = 120;
  const oracle::Poly expected = oracle::theta(-1, 3, 1, 7, n);
  const Series s = f_sum(Monomial::minus_q(3), Monomial::q(7), n);
  for (int i = 0; i < n; ++i) EXPECT_EQ(s.coeff(i), expected[i]) << i;
}

TEST(Theta, ProductIdentities) {
  const int n = 120;
  expect_same(f_prod(Monomial::minus_q(1), Monomial::minus_q(9), n) * f_prod(Monomial::minus_q(3), Monomial::minus_q(7), n),
              eta_quotient({{1, 1}, {10, 3}, {2, -1}, {5, -1}}, n), n);
  expect_same(f_prod(Monomial::minus_q(1), Monomial::minus_q(4), n) * f_prod(Monomial::minus_q(2), Monomial::minus_q(3), n),
              euler(1, n) * euler(5, n), n);
}

TEST(Theta, ProductRejectsZeroExponent) {
  EXPECT_THROW(f_prod(Monomial::q(0), Monomial::q(3), 10), ArgumentError);
}

TEST(Theta, PhiQuinticDifference) {
  const int n = 150;
  const Series phi = phi_sum(n);
  const Series lhs = phi * subst(phi_sum(n / 5 + 1), -1, 5) - subst(phi, -1, 1) * subst(phi_sum(n / 5 + 1), 1, 5);
  expect_same(lhs, scale(q_to(1) * euler(4, n) * euler(20, n), 4), n);
}

TEST(Theta, PhiQuinticSum) {
  const int n = 150;
  const Series phi = phi_sum(n);
  const Series phi5 = phi_sum(n / 5 + 1);
  const Series lhs = phi * subst(phi5, -1, 5) + subst(phi, -1, 1) * subst(phi5, 1, 5);
  const Series rhs = scale(subst(phi_sum(n / 4 + 1), 1, 4) * subst(phi_sum(n / 20 + 1), 1, 20), 2) -
                     scale(q_to(6) * subst(psi_sum(n / 8 + 1), 1, 8) * subst(psi_sum(n / 40 + 1), 1, 40), 8);
  expect_same(lhs, rhs, n);
}

TEST(Theta, PhiTimesPhiMinus) {
  const int n = 150;
  const Series phi = phi_sum(n);
  const Series lhs = phi * subst(phi, -1, 1);
  expect_same(lhs, pow(subst(phi_sum(n / 2 + 1), -1, 2), 2), n);
  expect_same(lhs, eta_quotient({{2, 4}, {4, -2}}, n), n);
}

TEST(Theta, JacobiCubeAndAnalog) {
  const int n = 200;
  const Series cube = jacobi_cube(n);
  EXPECT_EQ(cube.coeff(0), 1);
  EXPECT_EQ(cube.coeff(1), -3);
  EXPECT_EQ(cube.coeff(3), 5);
  expect_same(cube, pow(euler(1, n), 3), n);
  expect_same(cube_analog(n), eta_quotient({{1, 2}, {4, 2}, {2, -1}}, n), n);
}

TEST(Theta, SumDifferenceQuadruples) {
  EXPECT_TRUE(lemma21_check(Monomial::q(1), Monomial::q(9), Monomial::minus_q(3), Monomial::minus_q(7), 120).holds());
  EXPECT_TRUE(lemma21_check(Monomial::q(1), Monomial::q(1), Monomial::q(1), Monomial::q(1), 120).holds());
  EXPECT_THROW(lemma21_check(Monomial::q(1), Monomial::q(2), Monomial::q(1), Monomial::q(1), 50), ArgumentError);
}

TEST(Theta, SumDifferenceAdmissible) {
  // ab = cd with every derived argument a positive power of q.
  const std::vector<std::array<int, 4>> quads = {{1, 9, 3, 7}, {1, 5, 2, 4}, {2, 10, 3, 9}, {1, 11, 5, 7},
                                                 {1, 7, 2, 6}, {2, 8, 4, 6}, {1, 13, 4, 10}, {3, 11, 5, 9},
                                                 {1, 9, 4, 6}, {2, 12, 5, 9}};
  for (const auto& [a, b, c, d] : quads) {
    for (int sc : {1, -1}) {
      const auto r = lemma21_check(Monomial::q(a), Monomial::q(b), Monomial(sc, c), Monomial(sc, d), 100);
      EXPECT_TRUE(r.holds()) << a << "," << b << "," << c << "," << d << " sign " << sc;
    }
  }
}

TEST(Theta, SumDifferenceEtaForm) {
  const int n = 120;
  const Series lhs = f_sum(Monomial::q(1), Monomial::q(9), n) * f_sum(Monomial::minus_q(3), Monomial::minus_q(7), n);
  const Series rhs = euler(4, n) * euler(20, n) + q_to(1) * eta_quotient({{2, 1}, {20, 3}, {4, -1}, {10, -1}}, n);
  expect_same(lhs, rhs, n);
  expect_same(lhs, f_sum(Monomial::minus_q(4), Monomial::minus_q(16), n) * f_sum(Monomial::minus_q(8), Monomial::minus_q(12), n) +
                       q_to(1) * f_sum(Monomial::minus_q(6), Monomial::minus_q(14), n) *
                           f_sum(Monomial::minus_q(2), Monomial::minus_q(18), n),
              n);
}

}  // namespace
}  // namespace qseries
