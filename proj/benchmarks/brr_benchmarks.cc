// Copyright 2026 The BRR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "brr/bench.h"
#include "brr/binary_codes.h"
#include "brr/embeddings.h"
#include "brr/mechanisms.h"
#include "brr/nn_index.h"
#include "brr/noise.h"
#include "brr/privacy_ratio.h"
#include "brr/rng.h"

namespace brr {
namespace {

BinaryCodeMatrix RandomCodes(size_t rows, uint32_t bits, uint64_t seed) {
  RngStream rng(seed, 0);
  std::vector<BinaryCode> codes;
  codes.reserve(rows);
  for (size_t i = 0; i < rows; ++i) {
    BinaryCode code(bits);
    for (uint64_t& w : code.words()) w = rng.Next();
    code.words().back() &= LastWordMask(bits);
    codes.push_back(std::move(code));
  }
  return *BinaryCodeMatrix::FromCodes(codes);
}

void BM_RrPerturb(benchmark::State& state) {
  const uint32_t bits = static_cast<uint32_t>(state.range(0));
  const RandomizedResponse rr = *RandomizedResponse::Create(1.0);
  BinaryCode code(bits);
  RngStream rng(1, 0);
  for (auto _ : state) {
    rr.PerturbInPlace(code.words(), bits, rng);
    benchmark::DoNotOptimize(code.words().data());
  }
}
BENCHMARK(BM_RrPerturb)->Arg(64)->Arg(256)->Arg(1024);

void BM_HammingNearest(benchmark::State& state) {
  const size_t rows = static_cast<size_t>(state.range(0));
  const bool multi = state.range(1) != 0;
  const BinaryCodeMatrix codes = RandomCodes(rows, 256, 2);
  auto index = HammingIndex::Build(
      codes, multi ? Acceleration::MultiIndex(4) : Acceleration::LinearScan());
  const RandomizedResponse rr = *RandomizedResponse::Create(4.0);
  RngStream rng(2, 1);
  uint32_t id = 0;
  BinaryCode query(256);
  for (auto _ : state) {
    const CodeView row = codes.row(id++ % rows);
    std::copy(row.words.begin(), row.words.end(), query.words().begin());
    rr.PerturbInPlace(query.words(), 256, rng);
    benchmark::DoNotOptimize(index->NearestUnchecked(query.words().data()));
  }
  state.SetLabel(multi ? "multi-index" : "linear");
}
BENCHMARK(BM_HammingNearest)
    ->Args({1000, 0})
    ->Args({1000, 1})
    ->Args({50000, 0})
    ->Args({50000, 1});

void BM_EuclidNearest(benchmark::State& state) {
  const size_t rows = static_cast<size_t>(state.range(0));
  const TextEmbeddings data = SyntheticEmbeddings(rows, 300, 3);
  auto index = EuclidIndex::Build(data.vectors);
  uint32_t id = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        index->NearestUnchecked(data.vectors.row(id++ % rows)));
  }
}
BENCHMARK(BM_EuclidNearest)->Arg(1000)->Arg(50000);

void BM_MadlibNoise(benchmark::State& state) {
  std::vector<double> z(static_cast<size_t>(state.range(0)));
  RngStream rng(4, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SampleMadlibNoise(z, 1.0, rng));
  }
}
BENCHMARK(BM_MadlibNoise)->Arg(50)->Arg(300);

void BM_PrivatizeWord(benchmark::State& state) {
  const bool use_brr = state.range(0) != 0;
  const size_t vocab = 10000;
  const TextEmbeddings data = SyntheticEmbeddings(vocab, 300, 5);
  auto codes = BinarizeHyperplane(data.vectors, 256, 5);
  auto brr = BrrMechanism::Create(data.vocabulary, *codes);
  auto madlib = MadlibMechanism::Create(data.vocabulary, data.vectors);
  const WordMechanism& mech =
      use_brr ? static_cast<const WordMechanism&>(*brr) : *madlib;
  uint64_t k = 0;
  for (auto _ : state) {
    RngStream rng(5, k);
    benchmark::DoNotOptimize(
        mech.PrivatizeId(static_cast<uint32_t>(k++ % vocab), 1.0, rng));
  }
  state.SetLabel(use_brr ? "brr" : "madlib");
}
BENCHMARK(BM_PrivatizeWord)->Arg(1)->Arg(0);

void BM_AggregateHamming(benchmark::State& state) {
  const BinaryCodeMatrix codes =
      RandomCodes(static_cast<size_t>(state.range(0)), 256, 6);
  AggregateOptions options;
  options.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(AggregateDistancesHamming(codes, options));
  }
  const double pairs = double(state.range(0)) * (state.range(0) - 1) / 2;
  state.counters["pairs/s"] =
      benchmark::Counter(pairs, benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_AggregateHamming)->Arg(1000)->Arg(4000);

}  // namespace
}  // namespace brr

BENCHMARK_MAIN();
