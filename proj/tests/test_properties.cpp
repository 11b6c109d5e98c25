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

#include <gtest/gtest.h>

#include "support/properties.hpp"

namespace props {
namespace {

constexpr std::uint32_t kSeed = 20260316;

void expect_ok(const Result& r) { EXPECT_TRUE(r.ok) << r.name << ": " << r.message; }

TEST(Properties, RingAxioms) { expect_ok(ring_axioms(kSeed)); }
TEST(Properties, InvertRoundTrip) { expect_ok(invert_roundtrip(kSeed)); }
TEST(Properties, SubstHomomorphism) { expect_ok(subst_homomorphism(kSeed)); }
TEST(Properties, ToRingCommutes) { expect_ok(to_ring_commutation(kSeed)); }
TEST(Properties, PrecisionHonesty) { expect_ok(precision_honesty(kSeed)); }
TEST(Properties, PochhammerStep) { expect_ok(pochhammer_step(kSeed)); }
TEST(Properties, PochhammerInfiniteLimit) { expect_ok(pochhammer_inf_vs_finite(kSeed)); }
TEST(Properties, TripleProduct) { expect_ok(fprod_equals_fsum(kSeed)); }
TEST(Properties, ThetaSymmetry) { expect_ok(fsum_symmetry(kSeed)); }
TEST(Properties, ReconstructExtract) { expect_ok(reconstruct_extract(kSeed)); }
TEST(Properties, ExtractDilatedFactor) { expect_ok(extract_dilated_factor(kSeed)); }
TEST(Properties, ExtractShift) { expect_ok(extract_shift(kSeed)); }
TEST(Properties, Ajp12IsTwiceMock) { expect_ok(ajp12_is_twice_phi()); }
TEST(Properties, ParsePrintRoundTrip) { expect_ok(parse_print_roundtrip(kSeed)); }
TEST(Properties, EvalPrecisionMonotone) { expect_ok(eval_precision_monotone(kSeed)); }

TEST(Properties, OtherSeeds) {
  for (std::uint32_t seed : {1u, 2u, 3u}) {
    expect_ok(ring_axioms(seed, 40, 32));
    expect_ok(reconstruct_extract(seed, 10));
    expect_ok(parse_print_roundtrip(seed, 100));
  }
}

}  // namespace
}  // namespace props
