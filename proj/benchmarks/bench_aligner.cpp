// benchmarks/bench_aligner.cpp

// Copyright 2026  The tqa Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "tqa/aligner.hpp"

namespace {

// A hypothesis that agrees with the reference on about 80% of the words,
// roughly what a careful manual transcript looks like against gold.
std::pair<std::vector<std::string>, std::vector<std::string>> make_pair(std::size_t n) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> word(0, 499);
  std::uniform_int_distribution<int> edit(0, 9);
  std::vector<std::string> ref, hyp;
  for (std::size_t i = 0; i < n; ++i) {
    ref.push_back("w" + std::to_string(word(rng)));
    switch (edit(rng)) {
      case 0: break;  // deletion
      case 1: hyp.push_back("w" + std::to_string(word(rng))); break;
      case 2:
        hyp.push_back(ref.back());
        hyp.push_back("w" + std::to_string(word(rng)));
        break;
      default: hyp.push_back(ref.back());
    }
  }
  return {ref, hyp};
}

void BM_NeedlemanWunsch(benchmark::State& state) {
  const auto [ref, hyp] = make_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto a = tqa::needleman_wunsch(ref, hyp);
    benchmark::DoNotOptimize(a.score);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NeedlemanWunsch)
    ->Arg(500)
    ->Arg(1000)
    ->Arg(2000)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNSquared);

}  // namespace

BENCHMARK_MAIN();
