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

#ifndef QSERIES_MONOMIAL_HPP
#define QSERIES_MONOMIAL_HPP

#include <cstdint>
#include <string>

namespace qseries {

// A signed q-power sign*q^exp with sign in {+1, -1}. Used as the argument of
// theta functions and q-Pochhammer symbols.
struct Monomial {
  int sign = 1;
  std::int64_t exp = 0;

  constexpr Monomial() = default;
  constexpr Monomial(int s, std::int64_t e) : sign(s < 0 ? -1 : 1), exp(e) {}

  static constexpr Monomial q(std::int64_t e = 1) { return Monomial(1, e); }
  static constexpr Monomial minus_q(std::int64_t e = 1) { return Monomial(-1, e); }

  constexpr Monomial operator-() const { return Monomial(-sign, exp); }

  // sign^k * q^(k*exp); k may be negative.
  constexpr Monomial pow(std::int64_t k) const {
    return Monomial((sign < 0 && (k % 2 != 0)) ? -1 : 1, exp * k);
  }

  friend constexpr Monomial operator*(Monomial a, Monomial b) {
    return Monomial(a.sign * b.sign, a.exp + b.exp);
  }
  friend constexpr Monomial operator/(Monomial a, Monomial b) {
    return Monomial(a.sign * b.sign, a.exp - b.exp);
  }
  friend constexpr bool operator==(Monomial a, Monomial b) = default;

  // "q", "-q^3", "q^0".
  std::string to_string() const {
    std::string s = sign < 0 ? "-q" : "q";
    if (exp != 1) s += "^" + std::to_string(exp);
    return s;
  }
};

}  // namespace qseries

#endif  // QSERIES_MONOMIAL_HPP
