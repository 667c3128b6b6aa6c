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

#include <complex>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "slhkit/error.hpp"

namespace slh {

using Scalar = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

template <typename T>
using DenseOf = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

/// Dimensions of the initial space h and the multiplicity space K.
///
/// The composite h (+) (h (x) K) is laid out with the h block first; inside
/// h (x) K the index of |i> (x) |k> is i * n_k + k (h-major). Every module in
/// the library relies on this ordering.
struct SpaceDims {
  Index n_h = 1;
  Index n_k = 1;

  Index noise() const { return n_h * n_k; }
  Index total() const { return n_h * (1 + n_k); }

  void validate() const {
    if (n_h < 1 || n_k < 1) throw DimensionError("SpaceDims: n_h and n_k must be >= 1");
  }

  friend bool operator==(const SpaceDims&, const SpaceDims&) = default;
};

/// A square operator on h (+) (h (x) K) with named blocks
/// [[K, M], [L, B]].
class BlockOp {
 public:
  BlockOp(SpaceDims dims, Matrix full) : dims_(dims), full_(std::move(full)) {
    dims_.validate();
    if (full_.rows() != dims_.total() || full_.cols() != dims_.total())
      throw DimensionError("BlockOp: full matrix does not match dims");
  }

  static BlockOp assemble(SpaceDims dims, const Matrix& k, const Matrix& m, const Matrix& l,
                          const Matrix& b) {
    dims.validate();
    const Index h = dims.n_h, n = dims.noise();
    if (k.rows() != h || k.cols() != h || m.rows() != h || m.cols() != n || l.rows() != n ||
        l.cols() != h || b.rows() != n || b.cols() != n)
      throw DimensionError("BlockOp::assemble: block shapes inconsistent with dims");
    Matrix full(dims.total(), dims.total());
    full << k, m, l, b;
    return BlockOp(dims, std::move(full));
  }

  const SpaceDims& dims() const { return dims_; }
  const Matrix& full() const { return full_; }

  auto K() const { return full_.topLeftCorner(dims_.n_h, dims_.n_h); }
  auto M() const { return full_.topRightCorner(dims_.n_h, dims_.noise()); }
  auto L() const { return full_.bottomLeftCorner(dims_.noise(), dims_.n_h); }
  auto B() const { return full_.bottomRightCorner(dims_.noise(), dims_.noise()); }

  BlockOp adjoint() const { return BlockOp(dims_, full_.adjoint()); }

 private:
  SpaceDims dims_;
  Matrix full_;
};

/// The Hudson-Evans delta [[0, 0], [0, I]].
inline Matrix delta_hat(SpaceDims dims) {
  dims.validate();
  Matrix d = Matrix::Zero(dims.total(), dims.total());
  d.bottomRightCorner(dims.noise(), dims.noise()).setIdentity();
  return d;
}

namespace detail {
template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* who) {
  if (a.rows() != a.cols()) throw DimensionError(std::string(who) + ": matrix is not square");
}
}  // namespace detail

/// Matrix exponential (Pade scaling and squaring).
template <typename Derived>
DenseOf<typename Derived::Scalar> mat_exp(const Eigen::MatrixBase<Derived>& a) {
  detail::require_square(a, "mat_exp");
  using Result = DenseOf<typename Derived::Scalar>;
  if (a.rows() == 0) return Result(0, 0);
  Result in = a.eval();
  Result out = in.exp();
  return out;
}

template <typename T>
struct PhiPair {
  DenseOf<T> e1;
  DenseOf<T> e2;
};

/// The decapitated exponentials e1(A) = (e^A - 1)/A and e2(A) = (e^A - 1 - A)/A^2.
///
/// Read off the exponential of [[A, I, 0], [0, 0, I], [0, 0, 0]]: the (0,1)
/// block is e1(A), the (0,2) block e2(A). Well defined for singular A.
template <typename Derived>
PhiPair<typename Derived::Scalar> phi_pair(const Eigen::MatrixBase<Derived>& a) {
  detail::require_square(a, "phi");
  using T = typename Derived::Scalar;
  const Index n = a.rows();
  if (n == 0) return {DenseOf<T>(0, 0), DenseOf<T>(0, 0)};
  DenseOf<T> aug = DenseOf<T>::Zero(3 * n, 3 * n);
  aug.topLeftCorner(n, n) = a;
  aug.block(0, n, n, n).setIdentity();
  aug.block(n, 2 * n, n, n).setIdentity();
  const DenseOf<T> e = mat_exp(aug);
  return {e.block(0, n, n, n), e.block(0, 2 * n, n, n)};
}

template <typename Derived>
DenseOf<typename Derived::Scalar> phi1(const Eigen::MatrixBase<Derived>& a) {
  return phi_pair(a).e1;
}

template <typename Derived>
DenseOf<typename Derived::Scalar> phi2(const Eigen::MatrixBase<Derived>& a) {
  return phi_pair(a).e2;
}

/// Largest ratio of singular values allowed for the eigenvector basis in
/// principal_log.
inline constexpr double kLogConditionLimit = 1e8;

/// Principal matrix logarithm through an eigendecomposition.
///
/// Throws DomainError when an eigenvalue sits on the closed negative real
/// axis or when the eigenvector basis is ill conditioned (near defective).
Matrix principal_log(const Matrix& a);

/// I_n (x) column, i.e. the h-major ampliation of a vector of K.
Matrix ampliate_vector(Index n_h, const Vector& k_vec);

/// Frobenius distance, the default residual measure across the library.
template <typename A, typename B>
double residual(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return (a - b).norm();
}

}  // namespace slh
