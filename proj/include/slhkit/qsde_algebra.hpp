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

#include <optional>

#include "slhkit/blockspace.hpp"
#include "slhkit/heisenberg_weyl.hpp"

namespace slh::qsde {

/// Coefficient matrix G = [[K, M], [L, N - I]] of a quantum stochastic
/// evolution on h (x) (C (+) K). Stored as the full G; N() adds the identity
/// back.
class CoeffMatrix {
 public:
  CoeffMatrix(SpaceDims dims, Matrix g);

  /// Dims are inferred: n_h = rows(K), n_k = rows(N) / n_h.
  static CoeffMatrix from_blocks(const Matrix& k, const Matrix& m, const Matrix& l,
                                 const Matrix& n);
  static CoeffMatrix zero(SpaceDims dims);

  const SpaceDims& dims() const { return op_.dims(); }
  const Matrix& G() const { return op_.full(); }
  const BlockOp& block_op() const { return op_; }

  auto K() const { return op_.K(); }
  auto M() const { return op_.M(); }
  auto L() const { return op_.L(); }
  Matrix N() const { return op_.B() + Matrix::Identity(dims().noise(), dims().noise()); }

  /// V = delta_hat + G = [[K, M], [L, N]].
  Matrix model_matrix() const { return G() + delta_hat(dims()); }

  CoeffMatrix adjoint() const { return CoeffMatrix(dims(), G().adjoint()); }

 private:
  BlockOp op_;
};

/// Label (alpha, beta) of the fundamental process dLambda^{alpha beta};
/// 0 is the time/vacuum index, 1..n_k the noise channels.
struct ItoSymbol {
  int alpha = 0;
  int beta = 0;
  friend bool operator==(const ItoSymbol&, const ItoSymbol&) = default;
};

/// dLambda^{ab} dLambda^{mn} = delta_hat_{bm} dLambda^{an}; nullopt for zero.
std::optional<ItoSymbol> ito_product(ItoSymbol x, ItoSymbol y, int n_k);

/// G2 <| G1 = G1 + G2 + G2 delta_hat G1.
CoeffMatrix series(const CoeffMatrix& g2, const CoeffMatrix& g1);

/// Embeds G1 (multiplicity K1) into K1 (+) K2.
CoeffMatrix ampliate_first(const CoeffMatrix& g1, Index n_k2);
/// Embeds G2 (multiplicity K2) into K1 (+) K2.
CoeffMatrix ampliate_second(const CoeffMatrix& g2, Index n_k1);

/// G1 (+) G2 on K1 (+) K2, built as ampliate_second(G2) <| ampliate_first(G1).
CoeffMatrix concat(const CoeffMatrix& g1, const CoeffMatrix& g2);

/// Series-product inverse. Throws DomainError when N is singular.
CoeffMatrix gl_inverse(const CoeffMatrix& g);

struct UnitarityCheck {
  bool unitary = false;
  double isometry = 0.0;    ///< ||G + G^dag + G^dag delta_hat G||_F
  double coisometry = 0.0;  ///< ||G + G^dag + G delta_hat G^dag||_F
};

UnitarityCheck is_unitary_generator(const CoeffMatrix& g, double tol = 1e-10);

/// Hudson-Parthasarathy coefficients: S unitary on h (x) K, L : h -> h (x) K,
/// H self-adjoint on h.
struct SLHTriple {
  Matrix S, L, H;

  SpaceDims dims() const;
  /// Throws DimensionError/DomainError on shape, unitarity or self-adjointness failures.
  void validate(double tol = 1e-10) const;

  static SLHTriple identity(SpaceDims dims);
};

/// G_(S,L,H) = [[-1/2 L^dag L - i H, -L^dag S], [L, S - I]].
CoeffMatrix slh_to_coeff(const SLHTriple& slh, double tol = 1e-10);
/// Recovers (S, L, H) with H = (i/2)(K - K^dag); checks M = -L^dag S and
/// Re K = -1/2 L^dag L.
SLHTriple coeff_to_slh(const CoeffMatrix& g, double tol = 1e-10);

/// (S2, L2, H2) <| (S1, L1, H1).
SLHTriple slh_series(const SLHTriple& b, const SLHTriple& a);
SLHTriple slh_inverse(const SLHTriple& a);

/// (T, phi, theta) -> (T, phi, theta) with n_h = 1.
SLHTriple heisenberg_embed(const weyl::HeisenbergElem& g);

/// [[I, M, K], [0, N, L], [0, 0, I]] on h (x) (C (+) K (+) C).
Matrix belavkin_rep(const CoeffMatrix& g);
/// Reads K, M, L, N back out of a Belavkin matrix.
CoeffMatrix from_belavkin(SpaceDims dims, const Matrix& v);

/// Element [[kappa, mu], [lambda, nu]] of the Lie algebra gl_<|(h, K).
struct LieAlgElem {
  Matrix kappa, mu, lambda, nu;

  SpaceDims dims() const;
  Matrix full() const;
  static LieAlgElem from_full(SpaceDims dims, const Matrix& h);
  static LieAlgElem zero(SpaceDims dims);
};

/// [[0, mu, kappa], [0, nu, lambda], [0, 0, 0]].
Matrix lie_rep(const LieAlgElem& h);
LieAlgElem lie_from_rep(SpaceDims dims, const Matrix& rep);

/// Closed form with the decapitated exponentials.
CoeffMatrix hat_exp(const LieAlgElem& h);
/// Defining series sum_{n>=1} H (delta_hat H)^{n-1} / n!.
CoeffMatrix hat_exp_series(const LieAlgElem& h);
/// exp of the Belavkin representation, read back.
CoeffMatrix hat_exp_belavkin(const LieAlgElem& h);

/// Principal-branch inverse of hat_exp.
LieAlgElem hat_log(const CoeffMatrix& g);

/// Commutator of the Belavkin representations.
LieAlgElem lie_bracket(const LieAlgElem& h2, const LieAlgElem& h1);

/// HP parameters of hat_exp(-i eta, -lambda^dag, lambda, -i sigma).
SLHTriple lie_to_slh(const Matrix& eta, const Matrix& lambda, const Matrix& sigma,
                     double tol = 1e-10);

/// (X - X^dag) / (2i).
Matrix im_part(const Matrix& x);

}  // namespace slh::qsde
