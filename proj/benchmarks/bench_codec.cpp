/*
Copyright 2026 The lfg Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "lfg/block_coder.hpp"
#include "lfg/codec.hpp"
#include "lfg/metrics.hpp"
#include "lfg/motion.hpp"
#include "lfg/synth.hpp"
#include "lfg/transform.hpp"

namespace {

using namespace lfg;

void BM_MotionSearch(benchmark::State& state) {
  const auto frames = synth_sequence({ContentClass::kMixed, 1, 64, 64, 13});
  const int range = static_cast<int>(state.range(0));
  const auto anchor = block::make_anchor(frames[0], range);
  const block::Picture cur{frames[1].y, frames[1].u, frames[1].v};
  const block::Pixels src = block::extract(cur, 16, 16);
  const MotionSearcher searcher(range);
  const auto lambda = rdo::FixedLambda::from(54.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(searcher.search(std::span<const std::uint8_t, 256>(src.y), 16, 16, anchor.y, {}, lambda));
  }
}
BENCHMARK(BM_MotionSearch)->Arg(4)->Arg(16);

void BM_QuantizeReconstruct(benchmark::State& state) {
  std::mt19937 rng(3);
  block::Pixels src, pred;
  for (auto& v : src.y) v = static_cast<std::uint8_t>(rng());
  for (auto& v : pred.y) v = static_cast<std::uint8_t>(rng());
  for (auto _ : state) {
    const auto levels = block::quantize_residual(src, pred, 32);
    benchmark::DoNotOptimize(block::reconstruct(pred, levels, 32));
  }
}
BENCHMARK(BM_QuantizeReconstruct);

void BM_EncodeSequence(benchmark::State& state) {
  const auto frames = synth_sequence({ContentClass::kMixed, 2, 64, 64, 13});
  EncoderConfig cfg;
  cfg.qp = static_cast<int>(state.range(0));
  cfg.adaptive = true;
  for (auto _ : state) benchmark::DoNotOptimize(encode_sequence(frames, cfg).bitstream.total_bits);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(frames.size()));
}
BENCHMARK(BM_EncodeSequence)->Arg(22)->Arg(37)->Unit(benchmark::kMillisecond);

void BM_DecodeSequence(benchmark::State& state) {
  const auto frames = synth_sequence({ContentClass::kMixed, 2, 64, 64, 13});
  const auto stream = encode_sequence(frames, EncoderConfig{}).bitstream;
  for (auto _ : state) benchmark::DoNotOptimize(decode_sequence(stream));
}
BENCHMARK(BM_DecodeSequence)->Unit(benchmark::kMillisecond);

void BM_BdRate(benchmark::State& state) {
  const metrics::RDCurve a({{120, 30.1}, {260, 33.4}, {530, 36.2}, {1100, 38.9}});
  const metrics::RDCurve b({{100, 29.0}, {240, 33.1}, {600, 36.9}, {1000, 38.2}});
  for (auto _ : state) benchmark::DoNotOptimize(metrics::bd_rate(a, b));
}
BENCHMARK(BM_BdRate);

}  // namespace

BENCHMARK_MAIN();
