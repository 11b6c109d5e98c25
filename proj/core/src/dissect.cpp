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

#include "qseries/dissect.hpp"

#include <string>

#include "domain.hpp"
#include "qseries/errors.hpp"

namespace qseries {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t mod_floor(std::int64_t a, std::int64_t m) { return a - m * floor_div(a, m); }

}  // namespace

Series extract(const Series& f, std::int64_t m, std::int64_t r) {
  if (m < 2 || r < 0 || r >= m) {
    throw ArgumentError("extract: need m >= 2 and 0 <= r < m; got m=" + std::to_string(m) +
                        ", r=" + std::to_string(r));
  }
  const std::int64_t prec = f.is_exact() ? kExact : ceil_div(f.prec() - r, m);
  if (f.is_zero()) return Series(f.ring(), prec);
  return detail::with_domain(f.ring(), [&](auto d) {
    const auto& c = detail::coeffs_of(d, f);
    const std::int64_t v = f.valuation();
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::int64_t e = v + static_cast<std::int64_t>(i);
      if (e >= 0) break;
      if (mod_floor(e, m) != r && !decltype(d)::is_zero(c[i])) {
        throw ArgumentError("extract: Laurent input has a nonzero q^" + std::to_string(e) +
                            " term outside residue class " + std::to_string(r) + " mod " +
                            std::to_string(m));
      }
    }
    // First exponent >= v in the class.
    const std::int64_t first = v + mod_floor(r - v, m);
    typename decltype(d)::storage_type out;
    for (std::int64_t e = first; e - v < static_cast<std::int64_t>(c.size()); e += m) {
      out.push_back(c[static_cast<std::size_t>(e - v)]);
    }
    return Series::from_storage(f.ring(), floor_div(first - r, m), Series::Storage(std::move(out)),
                                prec);
  });
}

std::vector<Series> dissect(const Series& f, std::int64_t m) {
  std::vector<Series> parts;
  for (std::int64_t r = 0; r < m; ++r) parts.push_back(extract(f, m, r));
  return parts;
}

Series reconstruct(std::span<const Series> parts) {
  if (parts.size() < 2) throw ArgumentError("reconstruct: need at least two parts");
  const auto m = static_cast<std::int64_t>(parts.size());
  Series total(parts.front().ring(), kExact);
  for (std::int64_t r = 0; r < m; ++r) {
    total = add(total, shift(subst(parts[static_cast<std::size_t>(r)], 1, m), r));
  }
  return total;
}

}  // namespace qseries
