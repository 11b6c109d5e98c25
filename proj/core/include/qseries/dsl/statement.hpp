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

#ifndef QSERIES_DSL_STATEMENT_HPP
#define QSERIES_DSL_STATEMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qseries/dsl/ast.hpp"
#include "qseries/ring.hpp"

namespace qseries::dsl {

// Coefficients at A*n + B vanish modulo M.
struct Progression {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t modulus = 2;

  friend bool operator==(const Progression&, const Progression&) = default;
  friend auto operator<=>(const Progression&, const Progression&) = default;
};

std::string to_string(const Progression& p);  // "(10,9,5)"

enum class StatementKind { kVerify, kCongruence, kScan };

struct Statement {
  std::string label;
  StatementKind kind = StatementKind::kVerify;
  int line = 0;

  ExprPtr lhs;  // the expression for kCongruence and kScan
  ExprPtr rhs;  // kVerify only

  // kCongruence
  Progression progression;
  std::int64_t witnesses = 10;

  // kScan
  std::int64_t max_a = 10;
  std::vector<std::int64_t> moduli;
  std::int64_t min_witnesses = 20;
  std::optional<std::vector<Progression>> expect;

  std::optional<std::int64_t> order;
  std::optional<Ring> ring;
};

// Renders a statement in .qid syntax.
std::string to_string(const Statement& s);

}  // namespace qseries::dsl

#endif  // QSERIES_DSL_STATEMENT_HPP
