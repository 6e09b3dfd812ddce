// benchmarks/bench_text.cpp

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

#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "tqa/jefferson.hpp"
#include "tqa/normalizer.hpp"

namespace {

const std::vector<std::string> kTus = {
    "sì (.) non era pesantissima",
    "[uni]ca cosa, ho esagerato un po' con l'olio forse però",
    "°fuori° (.) nell'im[pasto ce ne ho messo il] giusto però in padella",
    "xxxx ha detto metti: quello là: l'olio da friggere così vengono meglio",
    "andiamo lì prendiamo il gelato e ci sediamo: in piazz[a: santo s]tefano >°quindi forse "
    "quello [sì°]<",
    "mangiare un gelato seduti sul gradino di piazza santo stefano ((ride))",
};

const std::vector<std::string> kNoisy = {
    "(.)  perchè\tho 21 anni  #  (.)",
    "ma  nell'impasto ?\nno fuori ,",
    "[ sì sì ] pò di più  @@ ",
};

void BM_Normalize(benchmark::State& state) {
  const tqa::NormalizationConfig cfg;
  for (auto _ : state) {
    for (const auto& s : kNoisy) benchmark::DoNotOptimize(tqa::normalize_text(s, cfg));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kNoisy.size()));
}
BENCHMARK(BM_Normalize);

void BM_Tokenize(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& s : kTus) benchmark::DoNotOptimize(tqa::scan_tu(s));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kTus.size()));
}
BENCHMARK(BM_Tokenize);

}  // namespace
