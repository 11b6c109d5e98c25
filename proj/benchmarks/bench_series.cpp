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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qseries/appell.hpp"
#include "qseries/dissect.hpp"
#include "qseries/dsl/evaluator.hpp"
#include "qseries/dsl/parser.hpp"
#include "qseries/qproducts.hpp"

namespace {

using namespace qseries;

Series random_series(const Ring& ring, std::int64_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  std::vector<long> c(static_cast<std::size_t>(n));
  for (auto& x : c) x = dist(rng);
  c[0] = 1;
  return Series::from_integers(ring, 0, c, n);
}

Ring ring_arg(std::int64_t code) {
  switch (code) {
    case 0:
      return Ring::integer();
    case 1:
      return Ring::rational();
    default:
      return Ring::modular(code);
  }
}

void BM_DenseMul(benchmark::State& state) {
  const Ring ring = ring_arg(state.range(1));
  const Series f = random_series(ring, state.range(0), 1);
  const Series g = random_series(ring, state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DenseMul)->ArgsProduct({{250, 500, 1000, 2000}, {0}})->Complexity(benchmark::oNSquared);
BENCHMARK(BM_DenseMul)->ArgsProduct({{250, 500, 1000, 2000}, {125}})->Complexity(benchmark::oNSquared);

void BM_Invert(benchmark::State& state) {
  const Ring ring = ring_arg(state.range(1));
  const Series f = random_series(ring, state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(invert(f));
}
BENCHMARK(BM_Invert)->ArgsProduct({{500, 2000}, {0, 125}});

void BM_EulerProduct(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(euler(1, state.range(0)));
}
BENCHMARK(BM_EulerProduct)->Arg(1000)->Arg(5000);

void BM_EtaQuotient(benchmark::State& state) {
  const EtaQuotient eq{{2, 8}, {5, 15}, {1, -22}};
  for (auto _ : state) benchmark::DoNotOptimize(eta_quotient(eq, state.range(0)));
}
BENCHMARK(BM_EtaQuotient)->Arg(300)->Arg(1000);

void BM_PhiMock(benchmark::State& state) {
  const Ring ring = ring_arg(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(phi_mock(state.range(0), ring));
}
BENCHMARK(BM_PhiMock)->Args({1000, 0})->Args({5000, 125})->Unit(benchmark::kMillisecond);

void BM_Ajp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(a_jp(3, 10, state.range(0)));
}
BENCHMARK(BM_Ajp)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Extract(benchmark::State& state) {
  const Series f = random_series(Ring::integer(), state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(dissect(f, 10));
}
BENCHMARK(BM_Extract)->Arg(5000);

void BM_EvalOddPartIdentity(benchmark::State& state) {
  const dsl::ExprPtr e = dsl::parse_expression(
      "5*(46*E[5]*E[10]^2/E[2]^2 + 460*q*E[10]^5/(E[1]^3*E[2]) + 1125*q^2*E[10]^8/(E[1]^6*E[5])"
      " + 1875*q*E[2]^8*E[5]^9/E[1]^16 + 15625*q^2*E[2]^8*E[5]^15/E[1]^22)");
  for (auto _ : state) benchmark::DoNotOptimize(dsl::evaluate(*e, state.range(0), Ring::integer()));
}
BENCHMARK(BM_EvalOddPartIdentity)->Arg(120)->Arg(300)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
