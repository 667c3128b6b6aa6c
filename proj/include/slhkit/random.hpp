// Copyright 2026 The slhkit Authors
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

#include <random>

#include "slhkit/blockspace.hpp"

namespace slh::random {

using Engine = std::mt19937_64;

/// Entries with independent standard normal real and imaginary parts.
inline Matrix gaussian(Engine& rng, Index rows, Index cols, double scale = 1.0) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Matrix m(rows, cols);
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r) m(r, c) = scale * Scalar(nd(rng), nd(rng));
  return m;
}

/// Haar-distributed unitary: QR of a Gaussian matrix with the phases of R
/// divided out.
inline Matrix unitary(Engine& rng, Index n) {
  const Matrix z = gaussian(rng, n, n);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index i = 0; i < n; ++i) {
    const Scalar d = r(i, i);
    if (std::abs(d) > 0.0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

inline Matrix hermitian(Engine& rng, Index n, double scale = 1.0) {
  const Matrix z = gaussian(rng, n, n, scale);
  return 0.5 * (z + z.adjoint());
}

/// Gaussian matrix rescaled to Frobenius norm `norm`.
inline Matrix with_norm(Engine& rng, Index rows, Index cols, double norm) {
  Matrix z = gaussian(rng, rows, cols);
  const double n = z.norm();
  return n > 0.0 ? Matrix(z * (norm / n)) : z;
}

/// Vector with norm drawn uniformly in [0, cap].
inline Vector capped_vector(Engine& rng, Index n, double cap) {
  std::uniform_real_distribution<double> ud(0.0, cap);
  Vector v = gaussian(rng, n, 1).col(0);
  return v * (ud(rng) / v.norm());
}

}  // namespace slh::random
