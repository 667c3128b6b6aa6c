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

#include "slhkit/fock_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace slh::fock {

using qsde::CoeffMatrix;
using qsde::LieAlgElem;

Partition::Partition(double s, double t, std::vector<double> interior) {
  if (!(t > s)) throw DomainError("Partition: need s < t");
  points_.reserve(interior.size() + 2);
  points_.push_back(s);
  for (double x : interior) points_.push_back(x);
  points_.push_back(t);
  for (std::size_t k = 1; k < points_.size(); ++k)
    if (!(points_[k] > points_[k - 1])) throw DomainError("Partition: points must be strictly increasing");
}

Partition Partition::uniform(double s, double t, int slices) {
  if (slices < 1) throw DomainError("Partition::uniform: need at least one slice");
  std::vector<double> interior;
  interior.reserve(static_cast<std::size_t>(slices - 1));
  const double h = (t - s) / slices;
  for (int k = 1; k < slices; ++k) interior.push_back(s + k * h);
  return Partition(s, t, std::move(interior));
}

double Partition::grid_size() const {
  double g = 0.0;
  for (Index k = 0; k < slices(); ++k) g = std::max(g, width(k));
  return g;
}

StepFunction StepFunction::constant(const Vector& value, double s, double t) {
  StepFunction f{{s, t}, Matrix(value)};
  f.validate();
  return f;
}

StepFunction StepFunction::zero(Index n_k, double s, double t) {
  return constant(Vector::Zero(n_k), s, t);
}

void StepFunction::validate() const {
  if (breaks.size() < 2) throw DomainError("StepFunction: need at least two breakpoints");
  for (std::size_t k = 1; k < breaks.size(); ++k)
    if (!(breaks[k] > breaks[k - 1])) throw DomainError("StepFunction: breakpoints must increase");
  if (values.cols() != static_cast<Index>(breaks.size()) - 1)
    throw DimensionError("StepFunction: one value column per interval required");
}

Vector StepFunction::value_at(double tau) const {
  if (tau < breaks.front() || tau >= breaks.back()) return Vector::Zero(n_k());
  const auto it = std::upper_bound(breaks.begin(), breaks.end(), tau);
  return values.col(static_cast<Index>(it - breaks.begin()) - 1);
}

Vector StepFunction::integral(double a, double b) const {
  Vector acc = Vector::Zero(n_k());
  for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
    const double lo = std::max(a, breaks[j]), hi = std::min(b, breaks[j + 1]);
    if (hi > lo) acc += (hi - lo) * values.col(static_cast<Index>(j));
  }
  return acc;
}

void MatrixElementSpec::validate(SpaceDims dims) const {
  f.validate();
  g.validate();
  if (u.size() != dims.n_h || v.size() != dims.n_h)
    throw DimensionError("MatrixElementSpec: u/v do not match the initial space");
  if (f.n_k() != dims.n_k || g.n_k() != dims.n_k)
    throw DimensionError("MatrixElementSpec: test functions do not match the multiplicity space");
}

Matrix slice_scaling(SpaceDims dims, double dt) {
  Matrix d = Matrix::Identity(dims.total(), dims.total());
  d.topLeftCorner(dims.n_h, dims.n_h) *= std::sqrt(dt);
  return d;
}

Matrix slice_operator(const CoeffMatrix& g, double dt) {
  if (!(dt > 0.0)) throw DomainError("slice_operator: dt must be positive");
  const SpaceDims d = g.dims();
  const double r = std::sqrt(dt);
  Matrix o = g.G();
  o.topLeftCorner(d.n_h, d.n_h) *= dt;
  o.topRightCorner(d.n_h, d.noise()) *= r;
  o.bottomLeftCorner(d.noise(), d.n_h) *= r;
  o += Matrix::Identity(d.total(), d.total());
  return o;
}

Matrix holevo_slice(const LieAlgElem& h, double dt) {
  if (!(dt > 0.0)) throw DomainError("holevo_slice: dt must be positive");
  const SpaceDims d = h.dims();
  const Matrix scale = slice_scaling(d, dt);
  return mat_exp(scale * h.full() * scale);
}

namespace {

/// [I_h; I_h (x) a] for a discrete exponential-vector amplitude a.
Matrix amplitude_frame(Index n_h, const Vector& a) {
  Matrix x(n_h * (1 + a.size()), n_h);
  x << Matrix::Identity(n_h, n_h), ampliate_vector(n_h, a);
  return x;
}

}  // namespace

Scalar contract_with(const std::function<Matrix(double)>& slice, const Partition& p,
                     const MatrixElementSpec& spec, SpaceDims dims, Ordering order) {
  spec.validate(dims);
  const Index m = p.slices();
  std::vector<Matrix> factors(static_cast<std::size_t>(m));
  for (Index k = 0; k < m; ++k) {
    const double a = p.points()[static_cast<std::size_t>(k)];
    const double b = p.points()[static_cast<std::size_t>(k + 1)];
    const double dt = b - a;
    const double inv_root = 1.0 / std::sqrt(dt);
    const Matrix xi = amplitude_frame(dims.n_h, spec.f.integral(a, b) * inv_root);
    const Matrix zeta = amplitude_frame(dims.n_h, spec.g.integral(a, b) * inv_root);
    const Matrix o = slice(dt);
    if (o.rows() != dims.total() || o.cols() != dims.total())
      throw DimensionError("contract_evolution: slice operator has wrong size");
    factors[static_cast<std::size_t>(k)] = xi.adjoint() * o * zeta;
  }
  Vector w = spec.v;
  if (order == Ordering::left) {
    for (Index k = 0; k < m; ++k) w = factors[static_cast<std::size_t>(k)] * w;
  } else {
    for (Index k = m - 1; k >= 0; --k) w = factors[static_cast<std::size_t>(k)] * w;
  }
  return spec.u.dot(w);
}

Scalar contract_evolution(const std::vector<Matrix>& slices, const Partition& p,
                          const MatrixElementSpec& spec, SpaceDims dims, Ordering order) {
  if (static_cast<Index>(slices.size()) != p.slices())
    throw DimensionError("contract_evolution: slice count does not match the partition");
  std::size_t next = 0;
  return contract_with([&](double) { return slices[next++]; }, p, spec, dims, order);
}

Matrix ode_propagator(const CoeffMatrix& g, const StepFunction& f, const StepFunction& gfun,
                      double s, double t) {
  const SpaceDims d = g.dims();
  f.validate();
  gfun.validate();
  if (f.n_k() != d.n_k || gfun.n_k() != d.n_k)
    throw DimensionError("ode_propagator: test functions do not match the multiplicity space");
  if (t < s) throw DomainError("ode_propagator: need s <= t");

  std::vector<double> cuts{s, t};
  for (double x : f.breaks)
    if (x > s && x < t) cuts.push_back(x);
  for (double x : gfun.breaks)
    if (x > s && x < t) cuts.push_back(x);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  Matrix x = Matrix::Identity(d.n_h, d.n_h);
  for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
    const double a = cuts[j], b = cuts[j + 1];
    const double mid = 0.5 * (a + b);
    const Vector fv = f.value_at(mid), gv = gfun.value_at(mid);
    Matrix c = amplitude_frame(d.n_h, fv).adjoint() * g.G() * amplitude_frame(d.n_h, gv);
    c.diagonal().array() += fv.dot(gv);
    x = (mat_exp((b - a) * c) * x).eval();
  }
  return x;
}

Scalar ode_oracle(const CoeffMatrix& g, const MatrixElementSpec& spec, double s, double t) {
  spec.validate(g.dims());
  return spec.u.dot(ode_propagator(g, spec.f, spec.g, s, t) * spec.v);
}

Scalar simulate_V(const CoeffMatrix& g, const Partition& p, const MatrixElementSpec& spec) {
  return contract_with([&](double dt) { return slice_operator(g, dt); }, p, spec, g.dims());
}

Scalar simulate_trotter(const std::vector<CoeffMatrix>& factors, const Partition& p,
                        const MatrixElementSpec& spec, SliceRule rule) {
  if (factors.empty()) throw DimensionError("simulate_trotter: no factors");
  const SpaceDims d = factors.front().dims();
  for (const auto& g : factors)
    if (!(g.dims() == d)) throw DimensionError("simulate_trotter: factors have different dims");

  if (rule == SliceRule::increment) {
    return contract_with(
        [&](double dt) {
          Matrix o = slice_operator(factors.front(), dt);
          for (std::size_t i = 1; i < factors.size(); ++i) o = (o * slice_operator(factors[i], dt)).eval();
          return o;
        },
        p, spec, d);
  }
  std::vector<LieAlgElem> logs;
  logs.reserve(factors.size());
  for (const auto& g : factors) logs.push_back(qsde::hat_log(g));
  return contract_with(
      [&](double dt) {
        Matrix o = holevo_slice(logs.front(), dt);
        for (std::size_t i = 1; i < logs.size(); ++i) o = (o * holevo_slice(logs[i], dt)).eval();
        return o;
      },
      p, spec, d);
}

Scalar simulate_holevo(const LieAlgElem& h, const Partition& p, const MatrixElementSpec& spec) {
  return contract_with([&](double dt) { return holevo_slice(h, dt); }, p, spec, h.dims());
}

Scalar simulate_right_process(const CoeffMatrix& g, const Partition& p,
                              const MatrixElementSpec& spec) {
  return contract_with([&](double dt) { return slice_operator(g, dt); }, p, spec, g.dims(),
                       Ordering::right);
}

std::vector<ConvergenceRow> convergence_table(const Simulator& sim, Scalar target, double s,
                                              double t, const std::vector<int>& grid_sizes) {
  std::vector<ConvergenceRow> rows;
  rows.reserve(grid_sizes.size());
  const double scale = std::abs(target);
  for (int m : grid_sizes) {
    ConvergenceRow row;
    row.m = m;
    row.dt = (t - s) / m;
    row.value = sim(Partition::uniform(s, t, m));
    row.abs_error = std::abs(row.value - target);
    row.rel_error = scale > 0.0 ? row.abs_error / scale : row.abs_error;
    row.order = std::numeric_limits<double>::quiet_NaN();
    if (!rows.empty()) {
      const ConvergenceRow& prev = rows.back();
      row.order = std::log(prev.abs_error / row.abs_error) / std::log(prev.dt / row.dt);
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<ConvergenceRow> trotter_experiment(const std::vector<CoeffMatrix>& factors,
                                               const CoeffMatrix& target,
                                               const MatrixElementSpec& spec, double t,
                                               const std::vector<int>& grid_sizes, SliceRule rule) {
  const Scalar exact = ode_oracle(target, spec, 0.0, t);
  return convergence_table(
      [&](const Partition& p) { return simulate_trotter(factors, p, spec, rule); }, exact, 0.0, t,
      grid_sizes);
}

std::vector<ConvergenceRow> trotter_experiment(const CoeffMatrix& g2, const CoeffMatrix& g1,
                                               const MatrixElementSpec& spec, double t,
                                               const std::vector<int>& grid_sizes) {
  return trotter_experiment({g2, g1}, qsde::series(g2, g1), spec, t, grid_sizes);
}

std::vector<ConvergenceRow> holevo_experiment(const LieAlgElem& h, const MatrixElementSpec& spec,
                                              double t, const std::vector<int>& grid_sizes) {
  const Scalar exact = ode_oracle(qsde::hat_exp(h), spec, 0.0, t);
  return convergence_table([&](const Partition& p) { return simulate_holevo(h, p, spec); }, exact,
                           0.0, t, grid_sizes);
}

double fit_order(const std::vector<ConvergenceRow>& rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& r : rows) {
    if (!(r.abs_error > 0.0)) continue;
    const double x = std::log(r.dt), y = std::log(r.abs_error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

bool monotone_nonincreasing(const std::vector<ConvergenceRow>& rows, int from_m) {
  const ConvergenceRow* prev = nullptr;
  for (const auto& r : rows) {
    if (r.m < from_m) continue;
    if (prev != nullptr && r.abs_error > prev->abs_error) return false;
    prev = &r;
  }
  return true;
}

}  // namespace slh::fock
