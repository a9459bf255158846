// Copyright 2026 The featpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "featpriv/harness.h"
#include "featpriv/pipeline.h"
#include "featpriv/privacy.h"
#include "featpriv/randmat.h"

namespace featpriv {
namespace {

void BM_SampleEncoder(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(SampleEncoder(r, d, 0.01, ++seed));
  }
}
BENCHMARK(BM_SampleEncoder)->Args({10, 50})->Args({50, 200});

void BM_SpectralNorm(benchmark::State& state) {
  const EncoderMatrix w = SampleEncoder(static_cast<int>(state.range(0)),
                                        static_cast<int>(state.range(1)), 0.01, 1);
  for (auto _ : state) benchmark::DoNotOptimize(SpectralNorm(w.entries));
}
BENCHMARK(BM_SpectralNorm)->Args({10, 50})->Args({50, 200});

void BM_Pseudoinverse(benchmark::State& state) {
  const EncoderMatrix w = SampleEncoder(static_cast<int>(state.range(0)),
                                        static_cast<int>(state.range(1)), 0.01, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Pseudoinverse(w.entries));
}
BENCHMARK(BM_Pseudoinverse)->Args({10, 50})->Args({50, 200});

void BM_Calibrate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(Calibrate({1.0, 1e-5}, 10, 50, 0.01, 2.0));
  }
}
BENCHMARK(BM_Calibrate);

void BM_RunPipeline(benchmark::State& state) {
  const EncoderMatrix w = SampleEncoder(10, 50, 0.01, 1);
  const Matrix dec = Pseudoinverse(w.entries);
  PipelineParams p;
  p.sigma2 = Calibrate({1.0, 1e-5}, 10, 50, 0.01, 2.0).sigma2;
  p.channel = ChannelRealization::FromAlpha(1.0, 1.0, 1.0);
  const Vector f = Vector::Constant(50, 0.2);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunPipeline(f, 2.0, w, dec, p, ++seed));
  }
}
BENCHMARK(BM_RunPipeline);

void BM_RunTrials(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.trials = static_cast<int>(state.range(0));
  cfg.threads = 1;
  const Experiment exp = PrepareExperiment(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(RunTrials(exp));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunTrials)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace featpriv

BENCHMARK_MAIN();
