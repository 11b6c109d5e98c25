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

#ifndef QSERIES_THETA_HPP
#define QSERIES_THETA_HPP

#include <cstdint>

#include "qseries/monomial.hpp"
#include "qseries/ring.hpp"
#include "qseries/series.hpp"

namespace qseries {

// Ramanujan's f(a, b) = sum_{k in Z} a^{k(k+1)/2} b^{k(k-1)/2} as the
// bilateral sum. Requires a.exp + b.exp >= 1 and both exponents >= 0.
Series f_sum(Monomial a, Monomial b, std::int64_t prec, const Ring& ring = Ring::integer());

// f(a, b) through the triple product (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf.
// Arguments with a zero exponent are rejected.
Series f_prod(Monomial a, Monomial b, std::int64_t prec, const Ring& ring = Ring::integer());

// phi(q) = f(q, q) = sum q^{j^2};  product form E2^5/(E1^2 E4^2).
Series phi_sum(std::int64_t prec, const Ring& ring = Ring::integer());
Series phi_prod(std::int64_t prec, const Ring& ring = Ring::integer());

// psi(q) = f(q, q^3) = sum_{j>=0} q^{j(j+1)/2};  product form E2^2/E1.
Series psi_sum(std::int64_t prec, const Ring& ring = Ring::integer());
Series psi_prod(std::int64_t prec, const Ring& ring = Ring::integer());

// sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}, which equals E1^3.
Series jacobi_cube(std::int64_t prec, const Ring& ring = Ring::integer());

// sum_{n in Z} (3n+1) q^{3n^2+2n}, which equals E1^2 E4^2 / E2.
Series cube_analog(std::int64_t prec, const Ring& ring = Ring::integer());

struct Lemma21Result {
  bool sum_identity = false;   // f(a,b)f(c,d) + f(-a,-b)f(-c,-d) = 2 f(ac,bd) f(ad,bc)
  bool diff_identity = false;  // f(a,b)f(c,d) - f(-a,-b)f(-c,-d) = 2a f(b/c, ac^2 d) f(b/d, acd^2)
  bool holds() const { return sum_identity && diff_identity; }
};

// Checks both product-splitting identities for ab = cd to prec using f_sum
// on every side. Throws ArgumentError when ab != cd or an argument leaves
// the admissible range.
Lemma21Result lemma21_check(Monomial a, Monomial b, Monomial c, Monomial d, std::int64_t prec);

}  // namespace qseries

#endif  // QSERIES_THETA_HPP
