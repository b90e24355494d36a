// Copyright 2026 The Fourier Characterization Authors.
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

#include "fourier/conv_classifier.hpp"
#include "fourier/intertwiner.hpp"
#include "fourier/random.hpp"
#include "fourier/twisted.hpp"

namespace fourier {
namespace {

void BM_Dft(benchmark::State& state) {
  const Group g = Group::cyclic(state.range(0));
  const Signal a = Rng(1).signal(g);
  for (auto _ : state) benchmark::DoNotOptimize(dft(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dft)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_ConvAxiomCheck(benchmark::State& state) {
  const Operator t = dft_operator(Group::cyclic(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_conv_homomorphism(t, BasisMode{}));
}
BENCHMARK(BM_ConvAxiomCheck)->DenseRange(4, 16, 4);

void BM_ClassifyConv(benchmark::State& state) {
  const Operator t = dft_operator(Group::cyclic(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_conv(t));
}
BENCHMARK(BM_ClassifyConv)->DenseRange(4, 16, 4);

void BM_ClassifyIntertwiner(benchmark::State& state) {
  const Operator t = construct_intertwiner(Group::cyclic(state.range(0)), 3, 1, 2, {0.5, 0.25});
  for (auto _ : state) benchmark::DoNotOptimize(classify_intertwiner(t));
}
BENCHMARK(BM_ClassifyIntertwiner)->RangeMultiplier(2)->Range(4, 64);

void BM_TwistedConvolve(benchmark::State& state) {
  const twisted::PlaneGrid grid(6.0, static_cast<std::size_t>(state.range(0)));
  const auto f = twisted::gaussian(grid);
  for (auto _ : state) benchmark::DoNotOptimize(twisted::twisted_convolve(f, f));
}
BENCHMARK(BM_TwistedConvolve)->RangeMultiplier(2)->Range(16, 64)->Unit(benchmark::kMillisecond);

void BM_RhoHomomorphism(benchmark::State& state) {
  const twisted::PlaneGrid grid(8.0, static_cast<std::size_t>(state.range(0)));
  const auto f = twisted::gaussian(grid);
  for (auto _ : state) benchmark::DoNotOptimize(twisted::verify_rho_homomorphism(f, f));
}
BENCHMARK(BM_RhoHomomorphism)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace fourier

BENCHMARK_MAIN();
