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

// Data-parallel inner loops. Every kernel exists twice: a plain serial
// version kept as the reference for tests and benchmarks, and an OpenMP
// version the engines call. Both must produce identical results up to
// floating-point reassociation (the gate and multiply kernels are bitwise
// identical because each output element is computed by one thread in the
// same order).

#include <span>

#include "aqed/common.hpp"
#include "aqed/gate.hpp"

namespace aqed::kernels {

/// Twiddle table tw[q] = e^{j pi q / K}, q in [0, 2K), used to evaluate
/// e^{j h w0 t_k} = tw[(h (2k+1)) mod 2K] on the midpoint grid.
CVector midpoint_twiddles(std::size_t samples);

namespace serial {

/// out_k = a_k * b_k using four real products and two additions.
void multiply(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out);

/// out_k = sum_x coeffs[x] * e^{j harmonics[x] w0 t_k}.
void synthesize(std::span<const Complex> coeffs, std::span<const std::int64_t> harmonics,
                std::span<const Complex> twiddles, std::span<Complex> out);

/// Applies `gate` to the listed qubits of an m-qubit amplitude vector in
/// place. Qubit 0 is the most significant index bit; targets[0] maps to the
/// most significant bit of the gate's own index.
void apply_gate(std::span<Complex> amps, int m, const GateMatrix& gate,
                std::span<const int> targets);

/// out = M v for a dense dim x dim matrix.
void matvec(const GateMatrix& m, std::span<const Complex> v, std::span<Complex> out);

}  // namespace serial

namespace omp {

void multiply(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out);
void synthesize(std::span<const Complex> coeffs, std::span<const std::int64_t> harmonics,
                std::span<const Complex> twiddles, std::span<Complex> out);
void apply_gate(std::span<Complex> amps, int m, const GateMatrix& gate,
                std::span<const int> targets);
void matvec(const GateMatrix& m, std::span<const Complex> v, std::span<Complex> out);

}  // namespace omp

/// Number of OpenMP threads the parallel kernels will use.
int max_threads();

}  // namespace aqed::kernels
