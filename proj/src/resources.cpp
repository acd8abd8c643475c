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

#include "aqed/resources.hpp"

#include <algorithm>

#include "aqed/common.hpp"

namespace aqed {
namespace {

long long size_of(int n) {
  if (n < 1 || n > 30) throw InvalidArgument("resource model needs 1 <= n <= 30");
  return 1LL << n;
}

}  // namespace

std::string_view encoding_name(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::frequency_recursive: return "frequency-recursive";
    case EncodingKind::frequency_parallel: return "frequency-parallel";
    case EncodingKind::spatial: return "spatial";
  }
  return "?";
}

std::optional<EncodingKind> parse_encoding_name(std::string_view name) {
  for (EncodingKind k : kAllEncodings) {
    if (encoding_name(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view stage_name(Stage stage) {
  switch (stage) {
    case Stage::projection: return "projection";
    case Stage::gate: return "gate";
    case Stage::recombination: return "recombination";
    case Stage::measurement: return "measurement";
  }
  return "?";
}

long long ResourceReport::stage_opamp_sum() const {
  long long s = 0;
  for (const auto& row : stages) s += row.opamps;
  return s;
}

FlopCount flop_counts(EncodingKind kind, int n) {
  const long long N = size_of(n);
  switch (kind) {
    case EncodingKind::frequency_recursive:
      return {2 * N * N + 20 * N - 16, 2 * N * N + 10 * N - 10};
    case EncodingKind::frequency_parallel:
      return {2 * N * N + 12 * N, 2 * N * N + 6 * N - 2};
    case EncodingKind::spatial:
      return {2 * N * N, 2 * N * N - 2 * N};
  }
  throw InvalidArgument("unknown encoding");
}

long long opamp_counts(EncodingKind kind, int n) {
  const long long N = size_of(n);
  switch (kind) {
    case EncodingKind::frequency_recursive: return 20 * N - 16;
    case EncodingKind::frequency_parallel: return 12 * N;
    case EncodingKind::spatial: return 4 * N;
  }
  throw InvalidArgument("unknown encoding");
}

ResourceReport stage_breakdown(EncodingKind kind, int n) {
  const long long N = size_of(n);
  ResourceReport r;
  r.kind = kind;
  r.n = n;
  r.N = N;

  const StageRow gate{Stage::gate, 2 * N * N, 2 * N * (N - 1), 4 * N};
  const StageRow recombination{Stage::recombination, 4 * N, 2 * N + 2 * (N - 1), 2 * N};
  switch (kind) {
    case EncodingKind::frequency_recursive: {
      const long long m = N - 1;
      r.stages = {{Stage::projection, 8 * m, 4 * m, 8 * m},
                  gate,
                  recombination,
                  {Stage::measurement, 8 * m, 4 * m, 8 * m}};
      break;
    }
    case EncodingKind::frequency_parallel:
      r.stages = {{Stage::projection, 4 * N, 2 * N, 4 * N},
                  gate,
                  recombination,
                  {Stage::measurement, 4 * N, 2 * N, 4 * N}};
      break;
    case EncodingKind::spatial:
      r.stages = {{Stage::projection, 0, 0, 0},
                  gate,
                  {Stage::recombination, 0, 0, 0},
                  {Stage::measurement, 0, 0, 0}};
      break;
  }

  const FlopCount totals = flop_counts(kind, n);
  r.total_multiplications = totals.multiplications;
  r.total_additions = totals.additions;
  r.total_opamps = opamp_counts(kind, n);
  return r;
}

long long quantum_volume(int n, const DepthFn& depth) {
  if (n < 1 || n > 62) throw InvalidArgument("quantum_volume needs 1 <= n <= 62");
  int best_m = 1;
  long long best = -1;
  for (int m = 1; m <= n; ++m) {
    const long long d = depth ? depth(m) : kUnboundedDepth;
    const long long score = std::min<long long>(m, d);
    if (score > best) {
      best = score;
      best_m = m;
    }
  }
  return 1LL << best_m;
}

}  // namespace aqed
