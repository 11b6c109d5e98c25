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

#include "qseries/dsl/statement.hpp"

#include <sstream>

namespace qseries::dsl {

std::string to_string(const Progression& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.modulus) + ")";
}

std::string to_string(const Statement& s) {
  std::ostringstream os;
  os << "[" << s.label << "] ";
  switch (s.kind) {
    case StatementKind::kVerify:
      os << "verify " << to_string(*s.lhs) << " == " << to_string(*s.rhs);
      break;
    case StatementKind::kCongruence:
      os << "congruence " << to_string(*s.lhs) << " at " << s.progression.a << "n+" << s.progression.b
         << " mod " << s.progression.modulus << " witnesses " << s.witnesses;
      break;
    case StatementKind::kScan:
      os << "scan " << to_string(*s.lhs) << " maxA " << s.max_a << " moduli ";
      for (std::size_t i = 0; i < s.moduli.size(); ++i) os << (i ? "," : "") << s.moduli[i];
      os << " minWitnesses " << s.min_witnesses;
      if (s.expect) {
        os << " expect ";
        if (s.expect->empty()) os << "none";
        for (std::size_t i = 0; i < s.expect->size(); ++i) os << (i ? ", " : "") << to_string((*s.expect)[i]);
      }
      break;
  }
  if (s.order) os << " order " << *s.order;
  if (s.ring) os << " ring " << s.ring->descriptor();
  return os.str();
}

}  // namespace qseries::dsl
