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

#include "fft.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "aqed/kernels.hpp"

namespace aqed::detail {
namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

const PlanPair& plans_for(std::size_t n) {
  static std::map<std::size_t, PlanPair> cache;
  std::lock_guard lock(plan_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  CVector scratch(n);
  auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
  const int len = static_cast<int>(n);
  PlanPair pair;
  pair.forward = fftw_plan_dft_1d(len, p, p, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  pair.backward = fftw_plan_dft_1d(len, p, p, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  return cache.emplace(n, pair).first->second;
}

}  // namespace

void fft_forward(CVector& data) {
  const PlanPair& p = plans_for(data.size());
  auto* d = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p.forward, d, d);
}

void fft_backward(CVector& data) {
  const PlanPair& p = plans_for(data.size());
  auto* d = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p.backward, d, d);
}

const CVector& twiddles_for(std::size_t samples) {
  static std::map<std::size_t, std::unique_ptr<CVector>> cache;
  static std::mutex m;
  std::lock_guard lock(m);
  auto& slot = cache[samples];
  if (!slot) slot = std::make_unique<CVector>(kernels::midpoint_twiddles(samples));
  return *slot;
}

}  // namespace aqed::detail
