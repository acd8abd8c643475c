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

#include <initializer_list>

#include "aqed/common.hpp"

namespace aqed {

/// Dense square complex matrix of power-of-two dimension, stored row-major.
///
/// `normalization` is the factor that makes the matrix unitary. It is 1 for
/// every library gate except the unnormalized Hadamard family, whose entries
/// are all +-1 and whose factor is 2^{-k/2}.
class GateMatrix {
 public:
  GateMatrix() = default;
  GateMatrix(std::size_t dim, CVector entries, double normalization = 1.0);
  GateMatrix(std::size_t dim, std::initializer_list<Complex> entries, double normalization = 1.0)
      : GateMatrix(dim, CVector(entries), normalization) {}

  static GateMatrix identity(std::size_t dim);
  static GateMatrix zeros(std::size_t dim);

  std::size_t dim() const { return dim_; }
  int qubits() const { return log2_exact(dim_); }
  const CVector& entries() const { return entries_; }

  Complex operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }

  double normalization() const { return normalization_; }
  bool scaled() const { return normalization_ != 1.0; }

  /// The matrix times its normalization factor.
  GateMatrix normalized() const;
  GateMatrix adjoint() const;

  /// ||G^dagger G - I||_max after normalization.
  double unitarity_error() const;

  CVector apply(const CVector& v) const;

  friend GateMatrix operator*(const GateMatrix& a, const GateMatrix& b);
  friend GateMatrix operator+(const GateMatrix& a, const GateMatrix& b);

 private:
  std::size_t dim_ = 0;
  CVector entries_;
  double normalization_ = 1.0;
};

/// Kronecker product; the left operand occupies the most significant index bits.
GateMatrix kron(const GateMatrix& a, const GateMatrix& b);

double max_abs_diff(const GateMatrix& a, const GateMatrix& b);

}  // namespace aqed
