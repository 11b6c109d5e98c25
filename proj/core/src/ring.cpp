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

#include "qseries/ring.hpp"

#include <string>

#include "qseries/errors.hpp"

namespace qseries {

Ring Ring::modular(const mpz_class& modulus) {
  if (modulus < 2) {
    throw ArgumentError("modulus must be at least 2, got " + modulus.get_str());
  }
  return Ring(RingKind::kModular, modulus);
}

Ring Ring::parse(std::string_view text) {
  if (text == "int" || text == "integer") return integer();
  if (text == "rat" || text == "rational") return rational();
  if (text.starts_with("mod:")) {
    const std::string digits(text.substr(4));
    mpz_class m;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        m.set_str(digits, 10) != 0) {
      throw ArgumentError("bad modulus in ring descriptor '" + std::string(text) + "'");
    }
    return modular(m);
  }
  throw ArgumentError("unknown ring descriptor '" + std::string(text) +
                      "' (expected int, rat or mod:<m>)");
}

std::string Ring::descriptor() const {
  switch (kind_) {
    case RingKind::kInteger:
      return "int";
    case RingKind::kRational:
      return "rat";
    case RingKind::kModular:
      return "mod:" + modulus_.get_str();
  }
  return "?";
}

}  // namespace qseries
