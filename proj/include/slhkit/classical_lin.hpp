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

#include <array>
#include <string_view>
#include <vector>

#include "slhkit/blockspace.hpp"

namespace slh::classical {

/// Linear state-based input/output model
///
///   dx/dt = K x + M u,   y = L x + N u
///
/// with model matrix [[K, M], [L, N]]. Static models (nx = 0) are allowed.
struct Model {
  Matrix K, M, L, N;

  Index nx() const { return K.rows(); }
  Index nu() const { return N.cols(); }
  Index ny() const { return N.rows(); }
  bool square() const { return nu() == ny(); }

  /// Throws DimensionError unless the block shapes agree.
  void validate() const;

  Matrix model_matrix() const;
  static Model from_model_matrix(const Matrix& v, Index nx, Index nu);

  /// The series-product identity (K, M, L, N) = (0, 0, 0, I).
  static Model identity(Index nx, Index n_ports);
};

/// V2 * V1: the output of V1 drives the input of V2, both share the state.
Model series(const Model& v2, const Model& v1);

/// V1 (+) V2: same state, summed drift, stacked ports.
Model concat(const Model& v1, const Model& v2);

/// V1 feeding V2 with distinct states x = [x1; x2].
Model cascade(const Model& v1, const Model& v2);

/// Inverse under the series product. Requires square N invertible.
Model series_inverse(const Model& v);

/// Upper block-triangular representation [[I, M, K], [0, N, L], [0, 0, I]].
Matrix rho(const Model& v);

/// Generators of the single-mode Heisenberg Lie algebra in the 3x3
/// representation of rho.
enum class Generator { a, adag, n, t };

inline constexpr std::array<Generator, 4> kGenerators = {Generator::a, Generator::adag,
                                                         Generator::n, Generator::t};

Matrix generator_matrix(Generator g);
std::string_view generator_name(Generator g);
Matrix generator_bracket(Generator g1, Generator g2);

/// N + L (sI - K)^{-1} M. Throws DomainError when s is a pole.
Matrix transfer_function(const Model& v, Scalar s);

/// Output samples y(t_k) for an input held constant on [t_k, t_{k+1}).
///
/// `inputs` has one column per grid point (nu rows). The column at the last
/// grid point only enters the last output sample.
struct Response {
  std::vector<double> t;
  Matrix y;  // ny x t.size()
};

/// Fixed-step RK4 with at most `max_step` per substep.
Response time_response(const Model& v, const Vector& x0, const Matrix& inputs,
                       const std::vector<double>& t_grid, double max_step = 1e-3);

/// Closed-form response: x(t+h) = e^{Kh} x(t) + h e1(Kh) M u on each interval.
Response exact_response(const Model& v, const Vector& x0, const Matrix& inputs,
                        const std::vector<double>& t_grid);

}  // namespace slh::classical
