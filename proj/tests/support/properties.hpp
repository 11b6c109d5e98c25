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

#ifndef QSERIES_TESTS_PROPERTIES_HPP
#define QSERIES_TESTS_PROPERTIES_HPP

// Seeded randomized property checks. Each returns the first counterexample
// it finds (ok = false) or a summary of how many cases it ran.

#include <cstdint>
#include <string>
#include <vector>

namespace props {

struct Result {
  std::string name;
  bool ok = true;
  std::string message;
};

Result ring_axioms(std::uint32_t seed, int triples = 200, std::int64_t order = 64);
Result invert_roundtrip(std::uint32_t seed, int cases = 50);
Result subst_homomorphism(std::uint32_t seed, int cases = 50);
Result to_ring_commutation(std::uint32_t seed, int cases = 40);
Result precision_honesty(std::uint32_t seed, int cases = 20);
Result pochhammer_step(std::uint32_t seed, int cases = 40);
Result pochhammer_inf_vs_finite(std::uint32_t seed, int cases = 20);
Result fprod_equals_fsum(std::uint32_t seed, int pairs = 20, std::int64_t order = 150);
Result fsum_symmetry(std::uint32_t seed, int pairs = 20);
Result reconstruct_extract(std::uint32_t seed, int cases = 30);
Result extract_dilated_factor(std::uint32_t seed, int cases = 30);
Result extract_shift(std::uint32_t seed, int cases = 30);
Result ajp12_is_twice_phi(std::int64_t count = 400);
Result parse_print_roundtrip(std::uint32_t seed, int cases = 300);
Result eval_precision_monotone(std::uint32_t seed, int cases = 20);

std::vector<Result> all(std::uint32_t seed);

}  // namespace props

#endif  // QSERIES_TESTS_PROPERTIES_HPP
