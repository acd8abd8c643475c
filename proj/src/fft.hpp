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

// FFTW plan cache. Plans are created once per length under a lock and then
// executed with the new-array interface, which is safe to call concurrently.

#include <fftw3.h>

#include <cstddef>

#include "aqed/common.hpp"

namespace aqed::detail {

/// In-place forward DFT: X[m] = sum_k x[k] e^{-j 2 pi m k / n}.
void fft_forward(CVector& data);

/// In-place unnormalized inverse DFT: x[k] = sum_m X[m] e^{+j 2 pi m k / n}.
void fft_backward(CVector& data);

/// Shared e^{j pi q / K} table for the midpoint sample grid.
const CVector& twiddles_for(std::size_t samples);

}  // namespace aqed::detail
