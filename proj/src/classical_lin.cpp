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

#include "slhkit/classical_lin.hpp"

#include <cmath>

namespace slh::classical {

void Model::validate() const {
  const Index x = K.rows();
  if (K.cols() != x) throw DimensionError("classical model: K must be square");
  if (M.rows() != x || L.cols() != x) throw DimensionError("classical model: M/L state size mismatch");
  if (M.cols() != N.cols()) throw DimensionError("classical model: M and N input width differ");
  if (L.rows() != N.rows()) throw DimensionError("classical model: L and N output height differ");
}

Matrix Model::model_matrix() const {
  validate();
  Matrix v(nx() + ny(), nx() + nu());
  v << K, M, L, N;
  return v;
}

Model Model::from_model_matrix(const Matrix& v, Index nx, Index nu) {
  if (nx < 0 || nu < 0 || nx > v.rows() || nx + nu != v.cols())
    throw DimensionError("classical model: model matrix does not split as requested");
  const Index ny = v.rows() - nx;
  return Model{v.topLeftCorner(nx, nx), v.topRightCorner(nx, nu), v.bottomLeftCorner(ny, nx),
               v.bottomRightCorner(ny, nu)};
}

Model Model::identity(Index nx, Index n_ports) {
  return Model{Matrix::Zero(nx, nx), Matrix::Zero(nx, n_ports), Matrix::Zero(n_ports, nx),
               Matrix::Identity(n_ports, n_ports)};
}

Model series(const Model& v2, const Model& v1) {
  v1.validate();
  v2.validate();
  if (v1.nx() != v2.nx()) throw DimensionError("series: models must share the state space");
  if (v1.ny() != v2.nu()) throw DimensionError("series: output of V1 does not match input of V2");
  return Model{v1.K + v2.M * v1.L + v2.K, v1.M + v2.M * v1.N, v2.L + v2.N * v1.L, v2.N * v1.N};
}

Model concat(const Model& v1, const Model& v2) {
  v1.validate();
  v2.validate();
  if (v1.nx() != v2.nx()) throw DimensionError("concat: models must share the state space");
  const Index nx = v1.nx();
  Model out;
  out.K = v1.K + v2.K;
  out.M.resize(nx, v1.nu() + v2.nu());
  out.M << v1.M, v2.M;
  out.L.resize(v1.ny() + v2.ny(), nx);
  out.L << v1.L, v2.L;
  out.N = Matrix::Zero(v1.ny() + v2.ny(), v1.nu() + v2.nu());
  out.N.topLeftCorner(v1.ny(), v1.nu()) = v1.N;
  out.N.bottomRightCorner(v2.ny(), v2.nu()) = v2.N;
  return out;
}

Model cascade(const Model& v1, const Model& v2) {
  v1.validate();
  v2.validate();
  if (v1.ny() != v2.nu()) throw DimensionError("cascade: output of V1 does not match input of V2");
  const Index n1 = v1.nx(), n2 = v2.nx(), nx = n1 + n2;

  Model a1{Matrix::Zero(nx, nx), Matrix::Zero(nx, v1.nu()), Matrix::Zero(v1.ny(), nx), v1.N};
  a1.K.topLeftCorner(n1, n1) = v1.K;
  a1.M.topRows(n1) = v1.M;
  a1.L.leftCols(n1) = v1.L;

  Model a2{Matrix::Zero(nx, nx), Matrix::Zero(nx, v2.nu()), Matrix::Zero(v2.ny(), nx), v2.N};
  a2.K.bottomRightCorner(n2, n2) = v2.K;
  a2.M.bottomRows(n2) = v2.M;
  a2.L.rightCols(n2) = v2.L;

  return series(a2, a1);
}

Model series_inverse(const Model& v) {
  v.validate();
  if (!v.square()) throw DimensionError("series_inverse: N must be square");
  Eigen::FullPivLU<Matrix> lu(v.N);
  if (!lu.isInvertible()) throw DomainError("series_inverse: N is singular");
  const Matrix n_inv = lu.inverse();
  return Model{-v.K + v.M * n_inv * v.L, -v.M * n_inv, -n_inv * v.L, n_inv};
}

Matrix rho(const Model& v) {
  v.validate();
  if (!v.square()) throw DimensionError("rho: model must have nu == ny");
  const Index x = v.nx(), p = v.nu();
  Matrix r = Matrix::Zero(2 * x + p, 2 * x + p);
  r.topLeftCorner(x, x).setIdentity();
  r.block(0, x, x, p) = v.M;
  r.block(0, x + p, x, x) = v.K;
  r.block(x, x, p, p) = v.N;
  r.block(x, x + p, p, x) = v.L;
  r.bottomRightCorner(x, x).setIdentity();
  return r;
}

Matrix generator_matrix(Generator g) {
  Matrix m = Matrix::Zero(3, 3);
  switch (g) {
    case Generator::a: m(0, 1) = 1.0; break;
    case Generator::adag: m(1, 2) = 1.0; break;
    case Generator::n: m(1, 1) = 1.0; break;
    case Generator::t: m(0, 2) = 1.0; break;
  }
  return m;
}

std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::a: return "a";
    case Generator::adag: return "adag";
    case Generator::n: return "n";
    case Generator::t: return "t";
  }
  return "?";
}

Matrix generator_bracket(Generator g1, Generator g2) {
  const Matrix x = generator_matrix(g1), y = generator_matrix(g2);
  return x * y - y * x;
}

Matrix transfer_function(const Model& v, Scalar s) {
  v.validate();
  if (v.nx() == 0) return v.N;
  const Matrix resolvent = s * Matrix::Identity(v.nx(), v.nx()) - v.K;
  Eigen::PartialPivLU<Matrix> lu(resolvent);
  if (!(lu.rcond() > 1e-13)) throw DomainError("transfer_function: s is a pole of the model");
  const Matrix x = lu.solve(v.M);
  if ((resolvent * x - v.M).norm() > 1e-8 * (1.0 + v.M.norm()))
    throw DomainError("transfer_function: s is a pole of the model");
  return v.N + v.L * x;
}

namespace {

void check_grid(const Model& v, const Vector& x0, const Matrix& inputs,
                const std::vector<double>& t_grid) {
  v.validate();
  if (t_grid.empty()) throw DomainError("time_response: empty time grid");
  for (std::size_t k = 1; k < t_grid.size(); ++k)
    if (!(t_grid[k] > t_grid[k - 1])) throw DomainError("time_response: grid must be strictly increasing");
  if (x0.size() != v.nx()) throw DimensionError("time_response: x0 has wrong size");
  if (inputs.rows() != v.nu() || inputs.cols() != static_cast<Index>(t_grid.size()))
    throw DimensionError("time_response: inputs must be nu x grid size");
}

}  // namespace

Response time_response(const Model& v, const Vector& x0, const Matrix& inputs,
                       const std::vector<double>& t_grid, double max_step) {
  check_grid(v, x0, inputs, t_grid);
  if (!(max_step > 0.0)) throw DomainError("time_response: max_step must be positive");
  const Index n = static_cast<Index>(t_grid.size());
  Response r{t_grid, Matrix(v.ny(), n)};
  Vector x = x0;
  for (Index k = 0; k < n; ++k) {
    r.y.col(k) = v.L * x + v.N * inputs.col(k);
    if (k + 1 == n) break;
    const double span = t_grid[k + 1] - t_grid[k];
    const auto steps = static_cast<Index>(std::ceil(span / max_step));
    const double h = span / static_cast<double>(steps);
    const Vector drive = v.M * inputs.col(k);
    auto f = [&](const Vector& s) -> Vector { return v.K * s + drive; };
    for (Index j = 0; j < steps; ++j) {
      const Vector k1 = f(x);
      const Vector k2 = f(x + 0.5 * h * k1);
      const Vector k3 = f(x + 0.5 * h * k2);
      const Vector k4 = f(x + h * k3);
      x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
  return r;
}

Response exact_response(const Model& v, const Vector& x0, const Matrix& inputs,
                        const std::vector<double>& t_grid) {
  check_grid(v, x0, inputs, t_grid);
  const Index n = static_cast<Index>(t_grid.size());
  Response r{t_grid, Matrix(v.ny(), n)};
  Vector x = x0;
  for (Index k = 0; k < n; ++k) {
    r.y.col(k) = v.L * x + v.N * inputs.col(k);
    if (k + 1 == n) break;
    const double h = t_grid[k + 1] - t_grid[k];
    const Matrix kh = h * v.K;
    const PhiPair<Scalar> phi = phi_pair(kh);
    x = mat_exp(kh) * x + h * phi.e1 * (v.M * inputs.col(k));
  }
  return r;
}

}  // namespace slh::classical
