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

#ifndef QSERIES_DSL_PARSER_HPP
#define QSERIES_DSL_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qseries/dsl/ast.hpp"
#include "qseries/dsl/statement.hpp"
#include "qseries/errors.hpp"

namespace qseries::dsl {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Parses a single expression; the whole input must be consumed.
ExprPtr parse_expression(std::string_view text);

// Parses a .qid document: labeled statements, '#' line comments, free
// layout (a statement may span lines).
//
//   [p5n4]  verify extract(p_partition, 5, 4) == 5*E[5]^5/E[1]^6
//   [a10n9] congruence phiMock at 10n+9 mod 5 witnesses 40
//   [s5]    scan phiMock maxA 10 moduli 5 minWitnesses 25 expect (10,9,5)
//
// Options after a statement: order N, ring int|rat|mod:M.
std::vector<Statement> parse_program(std::string_view text);

}  // namespace qseries::dsl

#endif  // QSERIES_DSL_PARSER_HPP
