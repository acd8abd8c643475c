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

#include "aqed/gate.hpp"

#include <algorithm>
#include <cmath>

namespace aqed {

GateMatrix::GateMatrix(std::size_t dim, CVector entries, double normalization)
    : dim_(dim), entries_(std::move(entries)), normalization_(normalization) {
  if (!is_power_of_two(dim_)) {
    throw InvalidArgument("gate dimension " + std::to_string(dim_) + " is not a power of two");
  }
  if (entries_.size() != dim_ * dim_) {
    throw InvalidArgument("gate needs " + std::to_string(dim_ * dim_) + " entries, got " +
                          std::to_string(entries_.size()));
  }
}

GateMatrix GateMatrix::identity(std::size_t dim) {
  GateMatrix g = zeros(dim);
  for (std::size_t i = 0; i < dim; ++i) g(i, i) = 1.0;
  return g;
}

GateMatrix GateMatrix::zeros(std::size_t dim) { return GateMatrix(dim, CVector(dim * dim)); }

GateMatrix GateMatrix::normalized() const {
  CVector e = entries_;
  for (auto& v : e) v *= normalization_;
  return GateMatrix(dim_, std::move(e));
}

GateMatrix GateMatrix::adjoint() const {
  GateMatrix a = zeros(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) a(c, r) = std::conj((*this)(r, c));
  a.normalization_ = normalization_;
  return a;
}

double GateMatrix::unitarity_error() const {
  GateMatrix u = normalized();
  GateMatrix p = u.adjoint() * u;
  return max_abs_diff(p, identity(dim_));
}

CVector GateMatrix::apply(const CVector& v) const {
  if (v.size() != dim_) throw InvalidArgument("gate/vector dimension mismatch");
  CVector out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

GateMatrix operator*(const GateMatrix& a, const GateMatrix& b) {
  if (a.dim_ != b.dim_) throw InvalidArgument("gate dimension mismatch in product");
  GateMatrix p = GateMatrix::zeros(a.dim_);
  for (std::size_t r = 0; r < a.dim_; ++r)
    for (std::size_t k = 0; k < a.dim_; ++k) {
      Complex ark = a(r, k);
      if (ark == 0.0) continue;
      for (std::size_t c = 0; c < a.dim_; ++c) p(r, c) += ark * b(k, c);
    }
  p.normalization_ = a.normalization_ * b.normalization_;
  return p;
}

GateMatrix operator+(const GateMatrix& a, const GateMatrix& b) {
  if (a.dim_ != b.dim_) throw InvalidArgument("gate dimension mismatch in sum");
  CVector e(a.entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries_[i] + b.entries_[i];
  return GateMatrix(a.dim_, std::move(e));
}

GateMatrix kron(const GateMatrix& a, const GateMatrix& b) {
  const std::size_t d = a.dim() * b.dim();
  GateMatrix k = GateMatrix::zeros(d);
  for (std::size_t ar = 0; ar < a.dim(); ++ar)
    for (std::size_t ac = 0; ac < a.dim(); ++ac) {
      Complex av = a(ar, ac);
      if (av == 0.0) continue;
      for (std::size_t br = 0; br < b.dim(); ++br)
        for (std::size_t bc = 0; bc < b.dim(); ++bc)
          k(ar * b.dim() + br, ac * b.dim() + bc) = av * b(br, bc);
    }
  return GateMatrix(d, k.entries(), a.normalization() * b.normalization());
}

double max_abs_diff(const GateMatrix& a, const GateMatrix& b) {
  return max_abs_diff(a.entries(), b.entries());
}

}  // namespace aqed
