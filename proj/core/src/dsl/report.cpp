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

#include "qseries/dsl/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qseries::dsl {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kInsufficientPrecision:
      return "insufficient-precision";
  }
  return "fail";
}

std::string format_table(std::span<const Report> reports) {
  std::size_t label_w = 5;
  std::size_t ring_w = 4;
  for (const Report& r : reports) {
    label_w = std::max(label_w, r.label.size());
    ring_w = std::max(ring_w, r.ring.size());
  }
  std::ostringstream out;
  auto row = [&](std::string_view label, std::string_view verdict, std::string_view order,
                 std::string_view ring, std::string_view millis, std::string_view detail) {
    out << std::string(label) << std::string(label_w - label.size() + 2, ' ');
    out << std::string(verdict) << std::string(24 - verdict.size(), ' ');
    out << std::string(8 - std::min<std::size_t>(8, order.size()), ' ') << order << "  ";
    out << std::string(ring) << std::string(ring_w - ring.size() + 2, ' ');
    out << std::string(8 - std::min<std::size_t>(8, millis.size()), ' ') << millis << "  ";
    out << detail << '\n';
  };
  row("label", "verdict", "order", "ring", "ms", "detail");
  std::size_t passed = 0;
  for (const Report& r : reports) {
    row(r.label, verdict_name(r.verdict), std::to_string(r.order), r.ring, std::to_string(r.millis),
        r.detail);
    if (r.verdict == Verdict::kPass) ++passed;
  }
  out << passed << " of " << reports.size() << " statements passed\n";
  return out.str();
}

std::string format_json(std::span<const Report> reports) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const Report& r : reports) {
    nlohmann::ordered_json j;
    j["label"] = r.label;
    j["verdict"] = std::string(verdict_name(r.verdict));
    j["order"] = r.order;
    j["ring"] = r.ring;
    j["detail"] = r.detail;
    j["millis"] = r.millis;
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

bool all_pass(std::span<const Report> reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const Report& r) { return r.verdict == Verdict::kPass; });
}

}  // namespace qseries::dsl
