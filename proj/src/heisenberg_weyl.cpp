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

#include "slhkit/heisenberg_weyl.hpp"

#include <algorithm>
#include <cmath>

namespace slh::weyl {

namespace {

void require_same_modes(const Matrix& t, const Vector& phi, const char* who) {
  if (t.rows() != t.cols() || t.rows() != phi.size())
    throw DimensionError(std::string(who) + ": T and phi sizes disagree");
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

}  // namespace

EuclideanElem EuclideanElem::identity(Index n_k) {
  return {Matrix::Identity(n_k, n_k), Vector::Zero(n_k)};
}

HeisenbergElem HeisenbergElem::identity(Index n_k) {
  return {Matrix::Identity(n_k, n_k), Vector::Zero(n_k), 0.0};
}

EuclideanElem eu_compose(const EuclideanElem& g2, const EuclideanElem& g1) {
  require_same_modes(g2.T, g2.phi, "eu_compose");
  require_same_modes(g1.T, g1.phi, "eu_compose");
  if (g1.phi.size() != g2.phi.size()) throw DimensionError("eu_compose: mode counts differ");
  return {g2.T * g1.T, g2.phi + g2.T * g1.phi};
}

HeisenbergElem heis_compose(const HeisenbergElem& g2, const HeisenbergElem& g1) {
  const EuclideanElem e = eu_compose(g2.euclidean(), g1.euclidean());
  const double phase = g2.phi.dot(g2.T * g1.phi).imag();
  return {e.T, e.phi, g1.theta + g2.theta + phase};
}

HeisenbergElem heis_inverse(const HeisenbergElem& g) {
  require_same_modes(g.T, g.phi, "heis_inverse");
  const Matrix t_inv = g.T.adjoint();
  return {t_inv, -(t_inv * g.phi), -g.theta};
}

Scalar weyl_multiplier(const EuclideanElem& g2, const EuclideanElem& g1) {
  const double im = g2.phi.dot(g2.T * g1.phi).imag();
  return std::exp(Scalar(0.0, -im));
}

Scalar exp_vec_inner(const Vector& f, const Vector& g) {
  if (f.size() != g.size()) throw DimensionError("exp_vec_inner: size mismatch");
  return std::exp(f.dot(g));
}

Scalar weyl_matrix_element(const Vector& g, const Matrix& T, const Vector& phi, const Vector& f) {
  require_same_modes(T, phi, "weyl_matrix_element");
  if (f.size() != phi.size() || g.size() != phi.size())
    throw DimensionError("weyl_matrix_element: test vector size mismatch");
  const Vector tf = T * f;
  return std::exp(-0.5 * phi.squaredNorm() - phi.dot(tf) + g.dot(tf + phi));
}

Scalar modified_weyl_matrix_element(const Vector& g, const HeisenbergElem& w, const Vector& f) {
  return std::exp(Scalar(0.0, -w.theta)) * weyl_matrix_element(g, w.T, w.phi, f);
}

TruncatedFock::TruncatedFock(Index n_modes, int cutoff) : n_modes_(n_modes), cutoff_(cutoff) {
  if (n_modes < 1) throw DimensionError("TruncatedFock: need at least one mode");
  if (cutoff < 1) throw DomainError("TruncatedFock: cutoff must be >= 1");
  std::vector<int> occ(static_cast<std::size_t>(n_modes), 0);
  // Lexicographic enumeration of tuples with bounded total.
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos == occ.size()) {
      basis_.push_back(occ);
      return;
    }
    for (int m = 0; m <= remaining; ++m) {
      occ[pos] = m;
      self(self, pos + 1, remaining - m);
    }
    occ[pos] = 0;
  };
  rec(rec, 0, cutoff);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<Index>(i));
}

Index TruncatedFock::index_of(const std::vector<int>& occupation) const {
  auto it = index_.find(occupation);
  return it == index_.end() ? -1 : it->second;
}

Matrix TruncatedFock::creation(Index mode) const {
  if (mode < 0 || mode >= n_modes_) throw DimensionError("TruncatedFock::creation: bad mode");
  Matrix a = Matrix::Zero(size(), size());
  for (Index col = 0; col < size(); ++col) {
    std::vector<int> occ = basis_[static_cast<std::size_t>(col)];
    const int m = occ[static_cast<std::size_t>(mode)];
    ++occ[static_cast<std::size_t>(mode)];
    const Index row = index_of(occ);
    if (row >= 0) a(row, col) = std::sqrt(static_cast<double>(m + 1));
  }
  return a;
}

Matrix TruncatedFock::displacement_generator(const Vector& phi) const {
  if (phi.size() != n_modes_) throw DimensionError("displacement_generator: phi size mismatch");
  Matrix gen = Matrix::Zero(size(), size());
  for (Index j = 0; j < n_modes_; ++j) {
    const Matrix c = creation(j);
    gen += phi(j) * c - std::conj(phi(j)) * c.adjoint();
  }
  return gen;
}

Vector TruncatedFock::exponential_vector(const Vector& f) const {
  if (f.size() != n_modes_) throw DimensionError("exponential_vector: size mismatch");
  Vector e(size());
  for (Index i = 0; i < size(); ++i) {
    Scalar c = 1.0;
    const auto& occ = basis_[static_cast<std::size_t>(i)];
    for (Index j = 0; j < n_modes_; ++j) {
      const int m = occ[static_cast<std::size_t>(j)];
      Scalar power = 1.0;
      for (int r = 0; r < m; ++r) power *= f(j);
      c *= power * std::exp(-0.5 * log_factorial(m));
    }
    e(i) = c;
  }
  return e;
}

Matrix TruncatedFock::second_quantization(const Matrix& T) const {
  if (T.rows() != n_modes_ || T.cols() != n_modes_)
    throw DimensionError("second_quantization: T has wrong size");
  using Poly = std::map<std::vector<int>, Scalar>;
  Matrix gamma = Matrix::Zero(size(), size());
  for (Index col = 0; col < size(); ++col) {
    const auto& occ = basis_[static_cast<std::size_t>(col)];
    // |m> = prod_j (a_j^dag)^{m_j} / sqrt(m_j!) |0>, with a_j^dag -> sum_i T_ij a_i^dag.
    Poly poly{{std::vector<int>(static_cast<std::size_t>(n_modes_), 0), Scalar(1.0)}};
    double log_norm = 0.0;
    for (Index j = 0; j < n_modes_; ++j) {
      const int m = occ[static_cast<std::size_t>(j)];
      log_norm += log_factorial(m);
      for (int rep = 0; rep < m; ++rep) {
        Poly next;
        for (const auto& [mono, coeff] : poly) {
          for (Index i = 0; i < n_modes_; ++i) {
            if (T(i, j) == Scalar(0.0)) continue;
            auto raised = mono;
            ++raised[static_cast<std::size_t>(i)];
            next[raised] += coeff * T(i, j);
          }
        }
        poly = std::move(next);
      }
    }
    for (const auto& [mono, coeff] : poly) {
      double log_fact = 0.0;
      for (int k : mono) log_fact += log_factorial(k);
      const Index row = index_of(mono);
      if (row >= 0) gamma(row, col) += coeff * std::exp(0.5 * log_fact - 0.5 * log_norm);
    }
  }
  return gamma;
}

Matrix weyl_truncated(const Matrix& T, const Vector& phi, const TruncatedFock& space) {
  require_same_modes(T, phi, "weyl_truncated");
  return mat_exp(space.displacement_generator(phi)) * space.second_quantization(T);
}

CcrResiduals weyl_ccr_check(const HeisenbergElem& g2, const HeisenbergElem& g1,
                            const std::vector<TestPair>& tests, const TruncatedFock* space) {
  const EuclideanElem e2 = g2.euclidean(), e1 = g1.euclidean();
  const EuclideanElem e21 = eu_compose(e2, e1);
  const HeisenbergElem h21 = heis_compose(g2, g1);
  const Scalar mult = weyl_multiplier(e2, e1);

  CcrResiduals out;
  for (const auto& [f, g] : tests) {
    // W1 e(f) = c1 e(T1 f + phi1), then pair W2 of that with e(g).
    const Vector tf = e1.T * f;
    const Scalar c1 = std::exp(-0.5 * e1.phi.squaredNorm() - e1.phi.dot(tf));
    const Scalar lhs = c1 * weyl_matrix_element(g, e2.T, e2.phi, tf + e1.phi);
    const Scalar rhs = mult * weyl_matrix_element(g, e21.T, e21.phi, f);
    out.analytic = std::max(out.analytic, std::abs(lhs - rhs));

    const Scalar mod_lhs = std::exp(Scalar(0.0, -(g1.theta + g2.theta))) * lhs;
    const Scalar mod_rhs = modified_weyl_matrix_element(g, h21, f);
    out.modified = std::max(out.modified, std::abs(mod_lhs - mod_rhs));
  }

  if (space != nullptr) {
    const Matrix prod = weyl_truncated(e2.T, e2.phi, *space) * weyl_truncated(e1.T, e1.phi, *space);
    const Matrix rhs = mult * weyl_truncated(e21.T, e21.phi, *space);
    out.truncated = 0.0;
    for (const auto& [f, g] : tests) {
      const Vector ef = space->exponential_vector(f), eg = space->exponential_vector(g);
      const Scalar l = eg.dot(prod * ef), r = eg.dot(rhs * ef);
      out.truncated = std::max(out.truncated, std::abs(l - r));
    }
  }
  return out;
}

}  // namespace slh::weyl
