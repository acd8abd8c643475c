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

#pragma once

// Closed-form cost model: floating-point multiplications and additions and
// opamp counts for one gate operation, split by stage, for each encoding.
// N = 2^n throughout.

#include <array>
#include <functional>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

namespace aqed {

enum class EncodingKind { frequency_recursive, frequency_parallel, spatial };

inline constexpr std::array<EncodingKind, 3> kAllEncodings = {
    EncodingKind::frequency_recursive, EncodingKind::frequency_parallel, EncodingKind::spatial};

std::string_view encoding_name(EncodingKind kind);
std::optional<EncodingKind> parse_encoding_name(std::string_view name);

enum class Stage { projection, gate, recombination, measurement };

inline constexpr std::array<Stage, 4> kAllStages = {Stage::projection, Stage::gate,
                                                    Stage::recombination, Stage::measurement};

std::string_view stage_name(Stage stage);

struct FlopCount {
  long long multiplications = 0;
  long long additions = 0;
  friend bool operator==(const FlopCount&, const FlopCount&) = default;
};

struct StageRow {
  Stage stage;
  long long multiplications = 0;
  long long additions = 0;
  long long opamps = 0;
};

struct ResourceReport {
  EncodingKind kind;
  int n = 0;
  long long N = 0;
  std::vector<StageRow> stages;
  long long total_multiplications = 0;
  long long total_additions = 0;
  /// Opamp total as tabulated. For the frequency encodings it excludes the
  /// recombination row's 2N opamps, so it is NOT the sum of the stage rows.
  long long total_opamps = 0;

  long long stage_opamp_sum() const;
};

/// Totals: frequency-recursive (2N^2+20N-16, 2N^2+10N-10),
/// frequency-parallel (2N^2+12N, 2N^2+6N-2), spatial (2N^2, 2N^2-2N).
FlopCount flop_counts(EncodingKind kind, int n);

/// frequency-recursive 20N-16, frequency-parallel 12N, spatial 4N.
long long opamp_counts(EncodingKind kind, int n);

ResourceReport stage_breakdown(EncodingKind kind, int n);

/// Achievable circuit depth when using m qubits.
using DepthFn = std::function<long long(int m)>;

inline constexpr long long kUnboundedDepth = std::numeric_limits<long long>::max();

/// 2^{argmax_{m<=n} min(m, depth(m))}, ties resolved to the smallest m.
long long quantum_volume(int n, const DepthFn& depth);

}  // namespace aqed
