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

#ifndef QSERIES_DISSECT_HPP
#define QSERIES_DISSECT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

// Keeps the terms q^{mn+r}, divides by q^r and replaces q^m by q: the
// coefficient of q^n in the result is the coefficient of q^{mn+r} in f.
// Result precision is ceil((f.prec - r) / m). A Laurent input must not carry
// nonzero negative-exponent terms outside the residue class r.
Series extract(const Series& f, std::int64_t m, std::int64_t r);

// All m components of the m-dissection, parts[r] = extract(f, m, r).
std::vector<Series> dissect(const Series& f, std::int64_t m);

// sum_r q^r parts[r](q^m), where m = parts.size() >= 2.
Series reconstruct(std::span<const Series> parts);

}  // namespace qseries

#endif  // QSERIES_DISSECT_HPP
