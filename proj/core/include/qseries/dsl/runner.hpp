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

#ifndef QSERIES_DSL_RUNNER_HPP
#define QSERIES_DSL_RUNNER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qseries/dsl/report.hpp"
#include "qseries/dsl/statement.hpp"
#include "qseries/ring.hpp"
#include "qseries/series.hpp"

namespace qseries::dsl {

inline constexpr std::int64_t kDefaultOrder = 120;

struct RunOptions {
  // Ring for statements that do not name one. Identities default to the
  // integers; congruences and scans default to the modular ring.
  std::optional<Ring> ring;
  // Overrides every statement's own order when set.
  std::optional<std::int64_t> order;
  // Order for identities that name none.
  std::int64_t default_order = kDefaultOrder;
  unsigned jobs = 1;
};

Report run_statement(const Statement& s, const RunOptions& options = {});

// Reports come back in statement order regardless of `jobs`.
std::vector<Report> run(std::span<const Statement> statements, const RunOptions& options = {});

// Minimal progressions (A, B, M) along which every trusted coefficient of f
// below `order` vanishes mod M, with at least `min_witnesses` witnesses each.
std::vector<Progression> scan_progressions(const Series& f, std::int64_t max_a,
                                           std::span<const std::int64_t> moduli,
                                           std::int64_t min_witnesses, std::int64_t order);

// c is an integer or a rational whose denominator is prime to m, and m | c.
bool divisible(const Scalar& c, std::int64_t m);

}  // namespace qseries::dsl

#endif  // QSERIES_DSL_RUNNER_HPP
