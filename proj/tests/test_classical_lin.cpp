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

#include <cmath>
#include <optional>

#include "doctest.h"
#include "slhkit/classical_lin.hpp"
#include "support.hpp"

using namespace slh;
using namespace slh::classical;
using slh::testing::scalar_matrix;

namespace {

Model scalar_model(Scalar k, Scalar m, Scalar l, Scalar n) {
  return {scalar_matrix(k), scalar_matrix(m), scalar_matrix(l), scalar_matrix(n)};
}

Model random_model(random::Engine& rng, Index nx, Index nu, Index ny) {
  Model v{random::gaussian(rng, nx, nx), random::gaussian(rng, nx, nu), random::gaussian(rng, ny, nx),
          random::gaussian(rng, ny, nu)};
  if (nu == ny) v.N += 2.0 * Matrix::Identity(nu, nu);
  return v;
}

double model_residual(const Model& a, const Model& b) {
  return residual(a.model_matrix(), b.model_matrix());
}

}  // namespace

TEST_CASE("series of scalar models") {
  const Model v1 = scalar_model(-1, 1, 1, 1), v2 = scalar_model(-2, 1, 2, 1);
  const Model s = series(v2, v1);
  CHECK(s.K(0, 0) == Scalar(-2));
  CHECK(s.M(0, 0) == Scalar(2));
  CHECK(s.L(0, 0) == Scalar(3));
  CHECK(s.N(0, 0) == Scalar(1));
}

TEST_CASE("series group axioms on random models") {
  random::Engine rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const Index nx = 1 + trial % 3, nu = 1 + (trial / 3) % 3;
    const Model a = random_model(rng, nx, nu, nu), b = random_model(rng, nx, nu, nu),
                c = random_model(rng, nx, nu, nu);
    CHECK(model_residual(series(a, series(b, c)), series(series(a, b), c)) < 1e-12 * (1.0 + a.model_matrix().norm() * b.model_matrix().norm() * c.model_matrix().norm()));
    const Model id = Model::identity(nx, nu);
    CHECK(series(id, a).model_matrix() == a.model_matrix());
    CHECK(series(a, id).model_matrix() == a.model_matrix());
    const Model inv = series_inverse(a);
    CHECK(model_residual(series(a, inv), id) < 1e-10);
    CHECK(model_residual(series(inv, a), id) < 1e-10);
  }
}

TEST_CASE("series dimension checks") {
  random::Engine rng(22);
  CHECK_THROWS_AS(series(random_model(rng, 2, 1, 1), random_model(rng, 3, 1, 1)), DimensionError);
  CHECK_THROWS_AS(series(random_model(rng, 2, 2, 1), random_model(rng, 2, 1, 1)), DimensionError);
  // Singular N is allowed for series.
  const Model z = scalar_model(1, 1, 1, 0);
  CHECK_NOTHROW(series(z, z));
}

TEST_CASE("concat assembles blocks") {
  const Model c = concat(scalar_model(1, 1, 1, 1), scalar_model(2, 3, 4, 5));
  CHECK(c.K(0, 0) == Scalar(3));
  CHECK(c.M.rows() == 1);
  CHECK(c.M.cols() == 2);
  CHECK(c.M(0, 0) == Scalar(1));
  CHECK(c.M(0, 1) == Scalar(3));
  CHECK(c.L(0, 0) == Scalar(1));
  CHECK(c.L(1, 0) == Scalar(4));
  Matrix n(2, 2);
  n << 1, 0, 0, 5;
  CHECK(c.N == n);

  random::Engine rng(23);
  const Model v = random_model(rng, 2, 2, 2);
  const Model null{Matrix::Zero(2, 2), Matrix::Zero(2, 0), Matrix::Zero(0, 2), Matrix::Zero(0, 0)};
  CHECK(concat(v, null).model_matrix() == v.model_matrix());
  CHECK_THROWS_AS(concat(v, random_model(rng, 3, 1, 1)), DimensionError);
}

TEST_CASE("concat then feeding output 1 into input 2 equals series") {
  // Scalar superposition: ports (u1, u2) -> (y1, y2). Closing the loop u2 = y1
  // with u1 external and y2 observed must give series(v2, v1).
  const Model v1 = scalar_model(-1.0, 0.5, 2.0, 3.0), v2 = scalar_model(-2.0, 1.5, -1.0, 0.25);
  const Model c = concat(v1, v2);
  // xdot = K x + M1 u1 + M2 u2, y1 = L1 x + N1 u1, y2 = L2 x + N2 u2, u2 = y1.
  const Scalar k = c.K(0, 0) + c.M(0, 1) * c.L(0, 0);
  const Scalar m = c.M(0, 0) + c.M(0, 1) * c.N(0, 0);
  const Scalar l = c.L(1, 0) + c.N(1, 1) * c.L(0, 0);
  const Scalar n = c.N(1, 1) * c.N(0, 0);
  const Model s = series(v2, v1);
  CHECK(std::abs(s.K(0, 0) - k) < 1e-15);
  CHECK(std::abs(s.M(0, 0) - m) < 1e-15);
  CHECK(std::abs(s.L(0, 0) - l) < 1e-15);
  CHECK(std::abs(s.N(0, 0) - n) < 1e-15);
}

TEST_CASE("cascade block structure") {
  const Model c = cascade(scalar_model(-1, 1, 1, 1), scalar_model(-2, 1, 2, 1));
  Matrix k(2, 2), m(2, 1), l(1, 2);
  k << -1, 0, 1, -2;
  m << 1, 1;
  l << 1, 2;
  CHECK(c.K == k);
  CHECK(c.M == m);
  CHECK(c.L == l);
  CHECK(c.N(0, 0) == Scalar(1));

  // Non-trivial N1 separates M2 N1 from M2 L1.
  const Model d = cascade(scalar_model(-1, 1, 5, 3), scalar_model(-2, 7, 2, 1));
  CHECK(d.M(1, 0) == Scalar(21));

  // Static second stage.
  random::Engine rng(24);
  const Model v1 = random_model(rng, 2, 1, 2);
  const Model gain{Matrix::Zero(0, 0), Matrix::Zero(0, 2), Matrix::Zero(1, 0), random::gaussian(rng, 1, 2)};
  const Model g = cascade(v1, gain);
  CHECK(residual(g.L, Matrix(gain.N * v1.L)) < 1e-15);
  CHECK(residual(g.N, Matrix(gain.N * v1.N)) < 1e-15);
}

TEST_CASE("cascade transfer function factorizes") {
  random::Engine rng(25);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 20; ++trial) {
    const Model v1 = random_model(rng, 2, 1, 2), v2 = random_model(rng, 3, 2, 1);
    const Scalar s(nd(rng), nd(rng));
    const Matrix lhs = transfer_function(cascade(v1, v2), s);
    const Matrix rhs = transfer_function(v2, s) * transfer_function(v1, s);
    CHECK(residual(lhs, rhs) < 1e-10 * (1.0 + rhs.norm()));
  }
}

TEST_CASE("series_inverse examples and errors") {
  const Model inv = series_inverse(scalar_model(1, 2, 3, 2));
  CHECK(std::abs(inv.K(0, 0) - 2.0) < 1e-15);
  CHECK(std::abs(inv.M(0, 0) + 1.0) < 1e-15);
  CHECK(std::abs(inv.L(0, 0) + 1.5) < 1e-15);
  CHECK(std::abs(inv.N(0, 0) - 0.5) < 1e-15);

  const Model id = Model::identity(2, 2);
  CHECK(series_inverse(id).model_matrix() == id.model_matrix());

  random::Engine rng(26);
  const Model v = random_model(rng, 3, 2, 2);
  CHECK(model_residual(series_inverse(series_inverse(v)), v) < 1e-12 * (1.0 + v.model_matrix().norm()));

  CHECK_THROWS_AS(series_inverse(scalar_model(1, 1, 1, 0)), DomainError);
  CHECK_THROWS_AS(series_inverse(random_model(rng, 2, 1, 2)), DimensionError);
}

TEST_CASE("rho is a homomorphism") {
  CHECK(rho(Model::identity(2, 3)) == Matrix::Identity(7, 7));
  random::Engine rng(27);
  for (int trial = 0; trial < 200; ++trial) {
    const Index nx = 1 + trial % 3, nu = 1 + trial % 2;
    const Model a = random_model(rng, nx, nu, nu), b = random_model(rng, nx, nu, nu);
    CHECK(residual(Matrix(rho(a) * rho(b)), rho(series(a, b))) < 1e-12 * (1.0 + rho(a).norm() * rho(b).norm()));
  }
  CHECK_THROWS_AS(rho(random_model(rng, 1, 1, 2)), DimensionError);
}

TEST_CASE("single-mode generator product table") {
  using G = Generator;
  // table[row][col] = row * col, columns ordered a, n, adag, t.
  const std::array<G, 4> order{G::a, G::n, G::adag, G::t};
  const std::array<std::array<std::optional<G>, 4>, 4> table{{
      {std::nullopt, G::a, G::t, std::nullopt},
      {std::nullopt, G::n, G::adag, std::nullopt},
      {std::nullopt, std::nullopt, std::nullopt, std::nullopt},
      {std::nullopt, std::nullopt, std::nullopt, std::nullopt},
  }};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const Matrix prod = generator_matrix(order[i]) * generator_matrix(order[j]);
      const Matrix want = table[i][j] ? generator_matrix(*table[i][j]) : Matrix::Zero(3, 3);
      CHECK(prod == want);
    }
  }
}

TEST_CASE("single-mode generator brackets") {
  using G = Generator;
  CHECK(generator_bracket(G::a, G::adag) == generator_matrix(G::t));
  CHECK(generator_bracket(G::a, G::n) == generator_matrix(G::a));
  CHECK(generator_bracket(G::n, G::adag) == generator_matrix(G::adag));
  CHECK(generator_bracket(G::a, G::t) == Matrix::Zero(3, 3));
  int nonzero = 0;
  for (G x : kGenerators)
    for (G y : kGenerators)
      if (!generator_bracket(x, y).isZero(0.0)) ++nonzero;
  CHECK(nonzero == 6);  // three brackets and their negatives
  CHECK(generator_name(G::adag) == "adag");
}

TEST_CASE("transfer function") {
  const Model v = scalar_model(-1, 1, 1, 0);
  CHECK(std::abs(transfer_function(v, 0.0)(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(transfer_function(v, 1.0)(0, 0) - 0.5) < 1e-15);
  CHECK_THROWS_AS(transfer_function(v, -1.0), DomainError);

  const Model gain{Matrix::Zero(0, 0), Matrix::Zero(0, 1), Matrix::Zero(2, 0), Matrix::Ones(2, 1)};
  CHECK(transfer_function(gain, Scalar(3.0, 4.0)) == Matrix::Ones(2, 1));
}

TEST_CASE("time response") {
  const std::vector<double> grid{0.0, 0.25, 0.5, 0.75, 1.0};
  const Model v = scalar_model(-1, 1, 1, 0);

  const auto zero = time_response(v, Vector::Zero(1), Matrix::Zero(1, 5), grid);
  CHECK(zero.y.isZero(0.0));

  const auto step = time_response(v, Vector::Zero(1), Matrix::Ones(1, 5), grid);
  CHECK(std::abs(step.y(0, 4) - (1.0 - std::exp(-1.0))) < 1e-6);
  CHECK(std::abs(step.y(0, 4) - 0.6321206) < 1e-6);

  random::Engine rng(28);
  const Model w = random_model(rng, 3, 2, 2);
  Model stable = w;
  stable.K -= 3.0 * Matrix::Identity(3, 3);
  const Vector x0 = random::gaussian(rng, 3, 1).col(0);
  const auto free = time_response(stable, x0, Matrix::Zero(2, 5), grid);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Vector want = stable.L * mat_exp(Matrix(stable.K * grid[k])) * x0;
    CHECK((free.y.col(static_cast<Index>(k)) - want).norm() < 1e-8);
  }

  const Matrix inputs = random::gaussian(rng, 2, 5);
  const auto rk4 = time_response(stable, x0, inputs, grid);
  const auto exact = exact_response(stable, x0, inputs, grid);
  CHECK(residual(rk4.y, exact.y) < 1e-6);

  CHECK_THROWS_AS(time_response(v, Vector::Zero(1), Matrix::Zero(1, 0), {}), DomainError);
  CHECK_THROWS_AS(time_response(v, Vector::Zero(1), Matrix::Zero(1, 2), {0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(time_response(v, Vector::Zero(2), Matrix::Zero(1, 2), {0.0, 1.0}), DimensionError);
}
