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

#ifndef QSERIES_DSL_REPORT_HPP
#define QSERIES_DSL_REPORT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/dsl/statement.hpp"

namespace qseries::dsl {

enum class Verdict { kPass, kFail, kInsufficientPrecision };

std::string_view verdict_name(Verdict v);  // "pass", "fail", "insufficient-precision"

struct Report {
  std::string label;
  Verdict verdict = Verdict::kPass;
  std::int64_t order = 0;
  std::string ring;
  std::string detail;
  std::int64_t millis = 0;
  std::vector<Progression> progressions;  // scans only
};

// Fixed-width table, one row per report, with a trailing summary line.
std::string format_table(std::span<const Report> reports);

// A JSON array of {label, verdict, order, ring, detail, millis} objects.
std::string format_json(std::span<const Report> reports);

bool all_pass(std::span<const Report> reports);

}  // namespace qseries::dsl

#endif  // QSERIES_DSL_REPORT_HPP
