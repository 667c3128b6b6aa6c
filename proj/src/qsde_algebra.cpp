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

#include "slhkit/qsde_algebra.hpp"

namespace slh::qsde {

namespace {

const Scalar kI(0.0, 1.0);

void require_same_dims(const SpaceDims& a, const SpaceDims& b, const char* who) {
  if (!(a == b)) throw DimensionError(std::string(who) + ": operands have different dims");
}

/// Selection matrix I_h (x) [block of K1 (+) K2].
Matrix channel_embedding(Index n_h, Index n_k, Index offset, Index n_total) {
  Matrix sel = Matrix::Zero(n_total, n_k);
  sel.block(offset, 0, n_k, n_k).setIdentity();
  return Eigen::kroneckerProduct(Matrix::Identity(n_h, n_h), sel).eval();
}

CoeffMatrix ampliate(const CoeffMatrix& g, Index offset, Index n_total) {
  const SpaceDims d = g.dims();
  const Matrix p = channel_embedding(d.n_h, d.n_k, offset, n_total);
  const SpaceDims out{d.n_h, n_total};
  return CoeffMatrix(out, BlockOp::assemble(out, g.K(), g.M() * p.transpose(), p * g.L(),
                                            p * g.block_op().B() * p.transpose())
                              .full());
}

}  // namespace

CoeffMatrix::CoeffMatrix(SpaceDims dims, Matrix g) : op_(dims, std::move(g)) {}

CoeffMatrix CoeffMatrix::from_blocks(const Matrix& k, const Matrix& m, const Matrix& l,
                                     const Matrix& n) {
  const Index n_h = k.rows();
  if (n_h < 1 || n.rows() < n_h || n.rows() % n_h != 0)
    throw DimensionError("CoeffMatrix: N size is not a multiple of the initial space size");
  const SpaceDims dims{n_h, n.rows() / n_h};
  if (n.cols() != n.rows()) throw DimensionError("CoeffMatrix: N must be square");
  const Matrix b = n - Matrix::Identity(n.rows(), n.cols());
  return CoeffMatrix(dims, BlockOp::assemble(dims, k, m, l, b).full());
}

CoeffMatrix CoeffMatrix::zero(SpaceDims dims) {
  dims.validate();
  return CoeffMatrix(dims, Matrix::Zero(dims.total(), dims.total()));
}

std::optional<ItoSymbol> ito_product(ItoSymbol x, ItoSymbol y, int n_k) {
  auto in_range = [n_k](int i) { return i >= 0 && i <= n_k; };
  if (!in_range(x.alpha) || !in_range(x.beta) || !in_range(y.alpha) || !in_range(y.beta))
    throw DimensionError("ito_product: index out of range");
  if (x.beta == y.alpha && x.beta >= 1) return ItoSymbol{x.alpha, y.beta};
  return std::nullopt;
}

CoeffMatrix series(const CoeffMatrix& g2, const CoeffMatrix& g1) {
  require_same_dims(g2.dims(), g1.dims(), "series");
  const Index n = g1.dims().noise();
  // G2 delta_hat G1 only involves the noise columns of G2 and noise rows of G1.
  Matrix g = g1.G() + g2.G();
  g.noalias() += g2.G().rightCols(n) * g1.G().bottomRows(n);
  return CoeffMatrix(g1.dims(), std::move(g));
}

CoeffMatrix ampliate_first(const CoeffMatrix& g1, Index n_k2) {
  if (n_k2 < 1) throw DimensionError("ampliate_first: second multiplicity must be >= 1");
  return ampliate(g1, 0, g1.dims().n_k + n_k2);
}

CoeffMatrix ampliate_second(const CoeffMatrix& g2, Index n_k1) {
  if (n_k1 < 1) throw DimensionError("ampliate_second: first multiplicity must be >= 1");
  return ampliate(g2, n_k1, n_k1 + g2.dims().n_k);
}

CoeffMatrix concat(const CoeffMatrix& g1, const CoeffMatrix& g2) {
  if (g1.dims().n_h != g2.dims().n_h) throw DimensionError("concat: initial spaces differ");
  return series(ampliate_second(g2, g1.dims().n_k), ampliate_first(g1, g2.dims().n_k));
}

CoeffMatrix gl_inverse(const CoeffMatrix& g) {
  const Matrix n = g.N();
  Eigen::FullPivLU<Matrix> lu(n);
  if (!lu.isInvertible()) throw DomainError("gl_inverse: N is singular, G is not in GL_<|");
  const Matrix n_inv = lu.inverse();
  const Matrix m_n_inv = g.M() * n_inv;
  return CoeffMatrix::from_blocks(-g.K() + m_n_inv * g.L(), -m_n_inv, -n_inv * g.L(), n_inv);
}

UnitarityCheck is_unitary_generator(const CoeffMatrix& g, double tol) {
  const Matrix& x = g.G();
  const Matrix d = delta_hat(g.dims());
  UnitarityCheck out;
  out.isometry = (x + x.adjoint() + x.adjoint() * d * x).norm();
  out.coisometry = (x + x.adjoint() + x * d * x.adjoint()).norm();
  out.unitary = out.isometry < tol && out.coisometry < tol;
  return out;
}

SpaceDims SLHTriple::dims() const {
  const Index n_h = H.rows();
  if (n_h < 1 || S.rows() % n_h != 0) throw DimensionError("SLHTriple: S size is not a multiple of H");
  return {n_h, S.rows() / n_h};
}

void SLHTriple::validate(double tol) const {
  const SpaceDims d = dims();
  if (H.cols() != d.n_h || S.cols() != S.rows() || L.rows() != d.noise() || L.cols() != d.n_h)
    throw DimensionError("SLHTriple: block shapes inconsistent");
  const Index n = d.noise();
  if ((S.adjoint() * S - Matrix::Identity(n, n)).norm() >= tol)
    throw DomainError("SLHTriple: S is not unitary");
  if ((H - H.adjoint()).norm() >= tol) throw DomainError("SLHTriple: H is not self-adjoint");
}

SLHTriple SLHTriple::identity(SpaceDims dims) {
  dims.validate();
  return {Matrix::Identity(dims.noise(), dims.noise()), Matrix::Zero(dims.noise(), dims.n_h),
          Matrix::Zero(dims.n_h, dims.n_h)};
}

CoeffMatrix slh_to_coeff(const SLHTriple& slh, double tol) {
  slh.validate(tol);
  const Matrix k = -0.5 * slh.L.adjoint() * slh.L - kI * slh.H;
  return CoeffMatrix::from_blocks(k, -slh.L.adjoint() * slh.S, slh.L, slh.S);
}

SLHTriple coeff_to_slh(const CoeffMatrix& g, double tol) {
  const UnitarityCheck u = is_unitary_generator(g, tol);
  if (!u.unitary) throw DomainError("coeff_to_slh: G is not a unitary generator");
  SLHTriple out{g.N(), g.L(), 0.5 * kI * (g.K() - g.K().adjoint())};
  if ((g.M() + out.L.adjoint() * out.S).norm() >= tol)
    throw DomainError("coeff_to_slh: M differs from -L^dag S");
  const Matrix re_k = 0.5 * (g.K() + g.K().adjoint());
  if ((re_k + 0.5 * out.L.adjoint() * out.L).norm() >= tol)
    throw DomainError("coeff_to_slh: Re K differs from -1/2 L^dag L");
  out.H = 0.5 * (out.H + out.H.adjoint()).eval();
  return out;
}

Matrix im_part(const Matrix& x) { return (x - x.adjoint()) / (2.0 * kI); }

SLHTriple slh_series(const SLHTriple& b, const SLHTriple& a) {
  require_same_dims(b.dims(), a.dims(), "slh_series");
  return {b.S * a.S, b.L + b.S * a.L, a.H + b.H + im_part(b.L.adjoint() * b.S * a.L)};
}

SLHTriple slh_inverse(const SLHTriple& a) {
  const Matrix s_dag = a.S.adjoint();
  return {s_dag, -s_dag * a.L, -a.H};
}

SLHTriple heisenberg_embed(const weyl::HeisenbergElem& g) {
  Matrix h(1, 1);
  h(0, 0) = g.theta;
  return {g.T, Matrix(g.phi), h};
}

Matrix belavkin_rep(const CoeffMatrix& g) {
  const Index h = g.dims().n_h, n = g.dims().noise();
  Matrix v = Matrix::Zero(2 * h + n, 2 * h + n);
  v.topLeftCorner(h, h).setIdentity();
  v.block(0, h, h, n) = g.M();
  v.block(0, h + n, h, h) = g.K();
  v.block(h, h, n, n) = g.N();
  v.block(h, h + n, n, h) = g.L();
  v.bottomRightCorner(h, h).setIdentity();
  return v;
}

CoeffMatrix from_belavkin(SpaceDims dims, const Matrix& v) {
  const Index h = dims.n_h, n = dims.noise();
  if (v.rows() != 2 * h + n || v.cols() != 2 * h + n)
    throw DimensionError("from_belavkin: matrix size does not match dims");
  return CoeffMatrix::from_blocks(v.block(0, h + n, h, h), v.block(0, h, h, n),
                                  v.block(h, h + n, n, h), v.block(h, h, n, n));
}

SpaceDims LieAlgElem::dims() const {
  const Index n_h = kappa.rows();
  if (n_h < 1 || nu.rows() % n_h != 0) throw DimensionError("LieAlgElem: nu size is not a multiple of kappa");
  const SpaceDims d{n_h, nu.rows() / n_h};
  if (kappa.cols() != n_h || mu.rows() != n_h || mu.cols() != d.noise() || lambda.rows() != d.noise() ||
      lambda.cols() != n_h || nu.cols() != d.noise())
    throw DimensionError("LieAlgElem: block shapes inconsistent");
  return d;
}

Matrix LieAlgElem::full() const {
  return BlockOp::assemble(dims(), kappa, mu, lambda, nu).full();
}

LieAlgElem LieAlgElem::from_full(SpaceDims dims, const Matrix& h) {
  const BlockOp op(dims, h);
  return {op.K(), op.M(), op.L(), op.B()};
}

LieAlgElem LieAlgElem::zero(SpaceDims dims) {
  return from_full(dims, Matrix::Zero(dims.total(), dims.total()));
}

Matrix lie_rep(const LieAlgElem& x) {
  const SpaceDims d = x.dims();
  const Index h = d.n_h, n = d.noise();
  Matrix r = Matrix::Zero(2 * h + n, 2 * h + n);
  r.block(0, h, h, n) = x.mu;
  r.block(0, h + n, h, h) = x.kappa;
  r.block(h, h, n, n) = x.nu;
  r.block(h, h + n, n, h) = x.lambda;
  return r;
}

LieAlgElem lie_from_rep(SpaceDims dims, const Matrix& r) {
  const Index h = dims.n_h, n = dims.noise();
  if (r.rows() != 2 * h + n || r.cols() != 2 * h + n)
    throw DimensionError("lie_from_rep: matrix size does not match dims");
  return {r.block(0, h + n, h, h), r.block(0, h, h, n), r.block(h, h + n, n, h), r.block(h, h, n, n)};
}

CoeffMatrix hat_exp(const LieAlgElem& x) {
  (void)x.dims();
  const PhiPair<Scalar> phi = phi_pair(x.nu);
  return CoeffMatrix::from_blocks(x.kappa + x.mu * phi.e2 * x.lambda, x.mu * phi.e1,
                                  phi.e1 * x.lambda, mat_exp(x.nu));
}

CoeffMatrix hat_exp_series(const LieAlgElem& x) {
  const SpaceDims d = x.dims();
  const Matrix h = x.full();
  const Matrix dh = delta_hat(d) * h;
  Matrix term = h;
  Matrix sum = h;
  for (int n = 2; n < 1000; ++n) {
    term = (term * dh / static_cast<double>(n)).eval();
    sum += term;
    if (term.norm() <= 1e-18 * (1.0 + sum.norm())) break;
  }
  return CoeffMatrix(d, sum);
}

CoeffMatrix hat_exp_belavkin(const LieAlgElem& x) {
  return from_belavkin(x.dims(), mat_exp(lie_rep(x)));
}

LieAlgElem hat_log(const CoeffMatrix& g) {
  const Matrix nu = principal_log(g.N());
  const PhiPair<Scalar> phi = phi_pair(nu);
  Eigen::FullPivLU<Matrix> lu(phi.e1);
  if (!lu.isInvertible()) throw DomainError("hat_log: e1(nu) is singular");
  const Matrix lambda = lu.solve(Matrix(g.L()));
  const Matrix mu = g.M() * lu.inverse();
  return {g.K() - mu * phi.e2 * lambda, mu, lambda, nu};
}

LieAlgElem lie_bracket(const LieAlgElem& h2, const LieAlgElem& h1) {
  require_same_dims(h2.dims(), h1.dims(), "lie_bracket");
  const Matrix r2 = lie_rep(h2), r1 = lie_rep(h1);
  return lie_from_rep(h1.dims(), r2 * r1 - r1 * r2);
}

SLHTriple lie_to_slh(const Matrix& eta, const Matrix& lambda, const Matrix& sigma, double tol) {
  if (eta.rows() != eta.cols() || sigma.rows() != sigma.cols() || lambda.rows() != sigma.rows() ||
      lambda.cols() != eta.rows())
    throw DimensionError("lie_to_slh: block shapes inconsistent");
  if ((eta - eta.adjoint()).norm() >= tol) throw DomainError("lie_to_slh: eta is not self-adjoint");
  if ((sigma - sigma.adjoint()).norm() >= tol) throw DomainError("lie_to_slh: sigma is not self-adjoint");
  const Matrix nu = -kI * sigma;
  const PhiPair<Scalar> phi = phi_pair(nu);
  Matrix h = eta + lambda.adjoint() * im_part(phi.e2) * lambda;
  h = 0.5 * (h + h.adjoint()).eval();
  return {mat_exp(nu), phi.e1 * lambda, h};
}

}  // namespace slh::qsde
