// Copyright 2026 The AQED Authors
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

// Serial reference kernels against their OpenMP counterparts. Set
// OMP_NUM_THREADS to control the parallel side.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "aqed/circuit.hpp"
#include "aqed/kernels.hpp"
#include "aqed/signal.hpp"
#include "aqed/spectral.hpp"

namespace {

using namespace aqed;

CVector random_vector(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CVector v(n);
  for (auto& x : v) x = {u(rng), u(rng)};
  return v;
}

template <auto Kernel>
void BM_ApplyGate(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  CVector amps = random_vector(std::size_t{1} << m, 1);
  const GateMatrix h = hadamard_n(1, true);
  const std::vector<int> targets{m / 2};
  for (auto _ : state) {
    Kernel(amps, m, h, targets);
    benchmark::DoNotOptimize(amps.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}
BENCHMARK(BM_ApplyGate<kernels::serial::apply_gate>)->Name("apply_gate/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_ApplyGate<kernels::omp::apply_gate>)->Name("apply_gate/omp")->DenseRange(12, 20, 4);

template <auto Kernel>
void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CVector a = random_vector(n, 2), b = random_vector(n, 3);
  CVector out(n);
  for (auto _ : state) {
    Kernel(a, b, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Multiply<kernels::serial::multiply>)->Name("multiply/serial")->Range(4096, 1 << 20);
BENCHMARK(BM_Multiply<kernels::omp::multiply>)->Name("multiply/omp")->Range(4096, 1 << 20);

template <auto Kernel>
void BM_Synthesize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::size_t samples = 4096;
  const CVector coeffs = random_vector(std::size_t{1} << n, 4);
  std::vector<std::int64_t> harmonics;
  for (std::uint64_t x = 0; x < coeffs.size(); ++x) harmonics.push_back(BasisIndex(x, n).harmonic());
  const CVector tw = kernels::midpoint_twiddles(samples);
  CVector out(samples);
  for (auto _ : state) {
    Kernel(coeffs, harmonics, tw, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_Synthesize<kernels::serial::synthesize>)->Name("synthesize/serial")->DenseRange(2, 6, 2);
BENCHMARK(BM_Synthesize<kernels::omp::synthesize>)->Name("synthesize/omp")->DenseRange(2, 6, 2);

template <bool Parallel>
void BM_MeasureSpectral(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SpectralState s = encode_spectral(random_vector(std::size_t{1} << n, 5), SignalConfig{});
  for (auto _ : state) {
    CVector v = Parallel ? measure_spectral(s) : measure_spectral_serial(s);
    benchmark::DoNotOptimize(v.data());
  }
}
BENCHMARK(BM_MeasureSpectral<false>)->Name("measure_spectral/serial")->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeasureSpectral<true>)->Name("measure_spectral/omp")->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
