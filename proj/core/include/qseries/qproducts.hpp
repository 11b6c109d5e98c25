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

#ifndef QSERIES_QPRODUCTS_HPP
#define QSERIES_QPRODUCTS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qseries/monomial.hpp"
#include "qseries/ring.hpp"
#include "qseries/series.hpp"

namespace qseries {

// (a; b)_n = prod_{k<n} (1 - a*b^k), truncated to prec.
Series pochhammer_finite(Monomial a, Monomial base, std::int64_t n, std::int64_t prec,
                         const Ring& ring = Ring::integer());
inline Series pochhammer_finite(Monomial a, std::int64_t base, std::int64_t n, std::int64_t prec,
                                const Ring& ring = Ring::integer()) {
  return pochhammer_finite(a, Monomial::q(base), n, prec, ring);
}

// (a; b)_inf to prec. Requires a.exp >= 1 and b.exp >= 1; only factors whose
// exponent is below prec are multiplied in.
Series pochhammer_inf(Monomial a, Monomial base, std::int64_t prec,
                      const Ring& ring = Ring::integer());
inline Series pochhammer_inf(Monomial a, std::int64_t base, std::int64_t prec,
                             const Ring& ring = Ring::integer()) {
  return pochhammer_inf(a, Monomial::q(base), prec, ring);
}

// 1 / (a; b)_inf, built factor by factor with O(prec) divisions.
Series pochhammer_inf_inverse(Monomial a, Monomial base, std::int64_t prec,
                              const Ring& ring = Ring::integer());

// E_j = (q^j; q^j)_inf.
Series euler(std::int64_t j, std::int64_t prec, const Ring& ring = Ring::integer());

// prod E_j^{d_j}. Repeated dilations merge; zero exponents vanish.
class EtaQuotient {
 public:
  EtaQuotient() = default;
  EtaQuotient(std::initializer_list<std::pair<std::int64_t, std::int64_t>> factors);

  EtaQuotient& times(std::int64_t dilation, std::int64_t exponent);

  // Sorted by dilation, exponents nonzero.
  const std::vector<std::pair<std::int64_t, std::int64_t>>& factors() const { return factors_; }

  // "E2^5/(E1^2*E4^2)"
  std::string to_string() const;

  friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

 private:
  std::vector<std::pair<std::int64_t, std::int64_t>> factors_;
};

Series eta_quotient(const EtaQuotient& eq, std::int64_t prec, const Ring& ring = Ring::integer());

// T(q) = (q^2;q^5)(q^3;q^5) / ((q;q^5)(q^4;q^5)), the reciprocal of the
// Rogers-Ramanujan continued fraction with its q^(1/5) removed.
Series rr_T(std::int64_t prec, const Ring& ring = Ring::integer());

// K = E2*E5^5 / (E1*E10^5).
Series rr_K(std::int64_t prec, const Ring& ring = Ring::integer());

}  // namespace qseries

#endif  // QSERIES_QPRODUCTS_HPP
