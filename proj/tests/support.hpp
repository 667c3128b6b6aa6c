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

#include <cmath>
#include <complex>
#include <numbers>

#include "slhkit/blockspace.hpp"
#include "slhkit/qsde_algebra.hpp"
#include "slhkit/random.hpp"

namespace slh::testing {

using namespace std::complex_literals;

/// Plain truncated Taylor series, the independent oracle for mat_exp.
inline Matrix taylor_exp(const Matrix& a, int terms = 40) {
  Matrix sum = Matrix::Identity(a.rows(), a.cols());
  Matrix term = sum;
  for (int n = 1; n <= terms; ++n) {
    term = term * a / static_cast<double>(n);
    sum += term;
  }
  return sum;
}

inline SpaceDims random_dims(random::Engine& rng, int max_h, int max_k) {
  std::uniform_int_distribution<int> h(1, max_h), k(1, max_k);
  return SpaceDims{h(rng), k(rng)};
}

/// Coefficient matrix with N = I + B, ||B|| <= 0.5, so N is invertible.
inline qsde::CoeffMatrix random_gl(random::Engine& rng, SpaceDims d) {
  const Index h = d.n_h, n = d.noise();
  const Matrix n_block = Matrix::Identity(n, n) + random::with_norm(rng, n, n, 0.5);
  return qsde::CoeffMatrix::from_blocks(random::gaussian(rng, h, h), random::gaussian(rng, h, n),
                                        random::gaussian(rng, n, h), n_block);
}

inline qsde::SLHTriple random_slh(random::Engine& rng, SpaceDims d, double scale = 1.0) {
  return {random::unitary(rng, d.noise()), random::gaussian(rng, d.noise(), d.n_h, scale),
          random::hermitian(rng, d.n_h, scale)};
}

/// Lie algebra element with ||full||_F = norm.
inline qsde::LieAlgElem random_lie(random::Engine& rng, SpaceDims d, double norm) {
  return qsde::LieAlgElem::from_full(d, random::with_norm(rng, d.total(), d.total(), norm));
}

inline Matrix scalar_matrix(Scalar z) { return Matrix::Constant(1, 1, z); }

}  // namespace slh::testing
