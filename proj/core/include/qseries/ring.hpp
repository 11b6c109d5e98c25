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

#ifndef QSERIES_RING_HPP
#define QSERIES_RING_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qseries {

enum class RingKind { kInteger, kRational, kModular };

// Coefficient domain selector: exact integers, exact rationals or the
// integers modulo m (m >= 2). Modular arithmetic is canonical-residue.
class Ring {
 public:
  Ring() = default;

  static Ring integer() { return Ring(RingKind::kInteger, 0); }
  static Ring rational() { return Ring(RingKind::kRational, 0); }
  static Ring modular(const mpz_class& modulus);
  static Ring modular(std::int64_t modulus) { return modular(mpz_class(static_cast<long>(modulus))); }

  // Accepts "int", "rat" or "mod:<m>".
  static Ring parse(std::string_view text);

  RingKind kind() const { return kind_; }
  bool is_integer() const { return kind_ == RingKind::kInteger; }
  bool is_rational() const { return kind_ == RingKind::kRational; }
  bool is_modular() const { return kind_ == RingKind::kModular; }

  // Only meaningful for modular rings.
  const mpz_class& modulus() const { return modulus_; }

  // Modular rings with m < 2^32 store residues in machine words.
  bool word_sized() const { return kind_ == RingKind::kModular && modulus_ < kWordLimit; }

  std::string descriptor() const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  Ring(RingKind kind, const mpz_class& modulus) : kind_(kind), modulus_(modulus) {}

  static inline const mpz_class kWordLimit = mpz_class(1) << 32;

  RingKind kind_ = RingKind::kInteger;
  mpz_class modulus_ = 0;
};

}  // namespace qseries

#endif  // QSERIES_RING_HPP
