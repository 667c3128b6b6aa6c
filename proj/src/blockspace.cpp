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

#include "slhkit/blockspace.hpp"

#include <cmath>

namespace slh {

Matrix principal_log(const Matrix& a) {
  detail::require_square(a, "principal_log");
  const Index n = a.rows();
  if (n == 0) return Matrix(0, 0);

  Eigen::ComplexEigenSolver<Matrix> es(a);
  if (es.info() != Eigen::Success) throw DomainError("principal_log: eigendecomposition failed");

  const Vector& lambda = es.eigenvalues();
  const double scale = std::max(1.0, a.norm());
  for (Index i = 0; i < n; ++i) {
    const Scalar z = lambda(i);
    const bool on_cut = z.real() <= 0.0 && std::abs(z.imag()) <= 1e-14 * scale;
    if (std::abs(z) <= 1e-300 || on_cut)
      throw DomainError("principal_log: log undefined (eigenvalue on the closed negative real axis)");
  }

  const Matrix& vecs = es.eigenvectors();
  Eigen::JacobiSVD<Matrix> svd(vecs);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  if (smin <= 0.0 || sv(0) / smin > kLogConditionLimit)
    throw DomainError("principal_log: ill-conditioned eigenvector basis");

  Vector log_lambda(n);
  for (Index i = 0; i < n; ++i) log_lambda(i) = std::log(lambda(i));
  return vecs * log_lambda.asDiagonal() * vecs.inverse();
}

Matrix ampliate_vector(Index n_h, const Vector& k_vec) {
  return Eigen::kroneckerProduct(Matrix::Identity(n_h, n_h), Matrix(k_vec)).eval();
}

}  // namespace slh
