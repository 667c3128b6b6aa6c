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

#include <map>
#include <vector>

#include "slhkit/blockspace.hpp"

namespace slh::weyl {

/// Element (T, phi) of the Euclidean group of K: a unitary and a translation.
struct EuclideanElem {
  Matrix T;
  Vector phi;

  static EuclideanElem identity(Index n_k);
};

/// Element (T, phi, theta) of the extended Heisenberg group over K.
struct HeisenbergElem {
  Matrix T;
  Vector phi;
  double theta = 0.0;

  static HeisenbergElem identity(Index n_k);
  EuclideanElem euclidean() const { return {T, phi}; }
};

/// (T2, phi2) o (T1, phi1) = (T2 T1, phi2 + T2 phi1).
EuclideanElem eu_compose(const EuclideanElem& g2, const EuclideanElem& g1);

/// Heisenberg law; the phase picks up Im<phi2, T2 phi1>.
HeisenbergElem heis_compose(const HeisenbergElem& g2, const HeisenbergElem& g1);
HeisenbergElem heis_inverse(const HeisenbergElem& g);

/// The Weyl multiplier exp{-i Im<phi2, T2 phi1>}.
Scalar weyl_multiplier(const EuclideanElem& g2, const EuclideanElem& g1);

/// <e(f), e(g)> = exp<f, g> for unnormalised exponential vectors.
Scalar exp_vec_inner(const Vector& f, const Vector& g);

/// <e(g), W(T, phi) e(f)> in closed form.
Scalar weyl_matrix_element(const Vector& g, const Matrix& T, const Vector& phi, const Vector& f);

/// <e(g), W(T, phi, theta) e(f)> for the modified (phase-absorbing) operators.
Scalar modified_weyl_matrix_element(const Vector& g, const HeisenbergElem& w, const Vector& f);

/// Bosonic Fock space over C^{n_modes} cut at total occupation `cutoff`.
/// Basis: occupation tuples with sum <= cutoff in lexicographic order.
class TruncatedFock {
 public:
  TruncatedFock(Index n_modes, int cutoff);

  Index n_modes() const { return n_modes_; }
  int cutoff() const { return cutoff_; }
  Index size() const { return static_cast<Index>(basis_.size()); }
  const std::vector<std::vector<int>>& basis() const { return basis_; }

  /// Position of an occupation tuple, or -1 when outside the truncation.
  Index index_of(const std::vector<int>& occupation) const;

  /// Creation operator a_j^dag; transitions leaving the truncation are dropped.
  Matrix creation(Index mode) const;
  Matrix annihilation(Index mode) const { return creation(mode).adjoint(); }

  /// a^dag(phi) - a(phi).
  Matrix displacement_generator(const Vector& phi) const;

  /// Truncated exponential vector: components prod_j f_j^{m_j} / sqrt(m_j!).
  Vector exponential_vector(const Vector& f) const;

  /// Second quantisation Gamma(T), acting as T^{(x) n} on each n-particle sector.
  Matrix second_quantization(const Matrix& T) const;

 private:
  Index n_modes_;
  int cutoff_;
  std::vector<std::vector<int>> basis_;
  std::map<std::vector<int>, Index> index_;
};

/// W(T, phi) = exp(a^dag(phi) - a(phi)) Gamma(T) on the truncated space.
Matrix weyl_truncated(const Matrix& T, const Vector& phi, const TruncatedFock& space);

/// A pair of exponential-vector arguments (f, g) for matrix elements <e(g), X e(f)>.
struct TestPair {
  Vector f;
  Vector g;
};

struct CcrResiduals {
  double analytic = 0.0;   ///< closed-form matrix elements, max |LHS - RHS|
  double modified = 0.0;   ///< W(g2)W(g1) = W(g2 <| g1) for the phase-extended operators
  double truncated = -1.0; ///< finite matrices; negative when not evaluated
};

/// Checks W(T2, phi2) W(T1, phi1) = exp{-i Im<phi2, T2 phi1>} W((T2, phi2) o (T1, phi1))
/// on <e(g), . e(f)> for every test pair. When `space` is non-null the
/// truncated matrices are also compared.
CcrResiduals weyl_ccr_check(const HeisenbergElem& g2, const HeisenbergElem& g1,
                            const std::vector<TestPair>& tests,
                            const TruncatedFock* space = nullptr);

}  // namespace slh::weyl
