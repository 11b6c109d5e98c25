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

#ifndef QSERIES_COEFF_TABLE_HPP
#define QSERIES_COEFF_TABLE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qseries/errors.hpp"
#include "qseries/ring.hpp"
#include "qseries/series.hpp"

namespace qseries {

inline constexpr int kCacheFormatVersion = 1;

// values[n] is the coefficient of q^n for n < values.size().
struct CoeffTable {
  std::string label;
  Ring ring;
  std::vector<Scalar> values;

  std::int64_t count() const { return static_cast<std::int64_t>(values.size()); }
};

// Reads c(0..count-1) off a power series. Throws PrecisionError if count
// exceeds the trusted window and ArgumentError on nonzero negative powers.
CoeffTable make_table(std::string label, const Series& s, std::int64_t count);

class CacheFormatError : public Error {
 public:
  using Error::Error;
};

// Line-oriented text format:
//
//   qseries-coeffs <format-version>
//   label <text>
//   ring <descriptor>
//   count <n>
//   <c(0)>
//   ...
//
// Coefficients are decimal integers (or p/q over the rationals). Writes go to
// a sibling temporary file that is renamed into place.
void write_cache(const CoeffTable& table, const std::filesystem::path& path);

// Rejects unknown versions and, when given, a label or ring that does not
// match the header.
CoeffTable read_cache(const std::filesystem::path& path,
                      const std::optional<std::string>& expected_label = std::nullopt,
                      const std::optional<Ring>& expected_ring = std::nullopt);

}  // namespace qseries

#endif  // QSERIES_COEFF_TABLE_HPP
