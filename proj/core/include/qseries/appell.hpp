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

#ifndef QSERIES_APPELL_HPP
#define QSERIES_APPELL_HPP

#include <cstdint>

#include "qseries/ring.hpp"
#include "qseries/series.hpp"

namespace qseries {

// phi(q) = sum_{n>=0} (-q;q)_{2n} q^{n+1} / (q;q^2)_{n+1}^2, the Appell-Lerch
// sum whose coefficients are a(n). Computed natively in `ring` with the
// term ratio (1+q^{2n+1})(1+q^{2n+2}) q / (1-q^{2n+3})^2, so the whole sum
// costs O(prec^2) ring operations.
Series phi_mock(std::int64_t prec, const Ring& ring = Ring::integer());

// Sixth-order mock theta functions.
//   rho(q)    = sum (-q;q)_n q^{n(n+1)/2} / (q;q^2)_{n+1}
//   mu(q)     = sum (-1)^n (q;q^2)_n q^{(n+1)^2} / (-q;q)_{2n+1}
//   lambda(q) = sum (-1)^n (q;q^2)_n q^n / (-q;q)_n
Series rho(std::int64_t prec, const Ring& ring = Ring::integer());
Series mu(std::int64_t prec, const Ring& ring = Ring::integer());
Series lambda_fn(std::int64_t prec, const Ring& ring = Ring::integer());

// Generating function of a_{j,p}(n):
//   1/(q^j, q^{p-j}, q^p; q^p)_inf * sum_{n in Z} (-1)^n q^{pn(n+1)/2+jn+j} / (1 - q^{pn+j}).
// Needs 1 <= j <= p-1 and gcd(j, p) = 1. Accumulated over the rationals and
// mapped into `ring`; a non-integral coefficient raises IntegralityError.
Series a_jp(std::int64_t j, std::int64_t p, std::int64_t prec, const Ring& ring = Ring::integer());

// The bilateral sum sum_{n in Z} q^{5n(n+1)/2} / (1 + q^{5n}), symmetrized as
// 1/2 + 2 sum_{m>=1} q^{5m(m+1)/2} / (1 + q^{5m}). Always rational.
Series A_inner_sum(std::int64_t prec);

// A(q) = (E5 / E10^2) * A_inner_sum. Has half-integral coefficients, so only
// the rational ring and modular rings of odd modulus can hold it.
Series A_series(std::int64_t prec, const Ring& ring = Ring::rational());

}  // namespace qseries

#endif  // QSERIES_APPELL_HPP
