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

#include <functional>
#include <vector>

#include "slhkit/blockspace.hpp"
#include "slhkit/qsde_algebra.hpp"

namespace slh::fock {

/// Ordered grid s = t_0 < t_1 < ... < t_m = t.
class Partition {
 public:
  /// `interior` holds t_1 < ... < t_{m-1}, all strictly inside (s, t).
  Partition(double s, double t, std::vector<double> interior = {});

  static Partition uniform(double s, double t, int slices);

  double start() const { return points_.front(); }
  double end() const { return points_.back(); }
  const std::vector<double>& points() const { return points_; }
  Index slices() const { return static_cast<Index>(points_.size()) - 1; }
  double width(Index k) const {
    return points_[static_cast<std::size_t>(k + 1)] - points_[static_cast<std::size_t>(k)];
  }
  /// |P| = max_k (t_{k+1} - t_k).
  double grid_size() const;

 private:
  std::vector<double> points_;
};

/// Piecewise-constant K-valued test function, zero outside
/// [breaks.front(), breaks.back()). Column j of `values` holds the value on
/// [breaks[j], breaks[j+1]).
struct StepFunction {
  std::vector<double> breaks;
  Matrix values;

  static StepFunction constant(const Vector& value, double s, double t);
  static StepFunction zero(Index n_k, double s, double t);

  Index n_k() const { return values.rows(); }
  void validate() const;
  Vector value_at(double tau) const;
  /// int_a^b f(tau) dtau.
  Vector integral(double a, double b) const;
};

/// Data for <u (x) e(f), X v (x) e(g)>.
struct MatrixElementSpec {
  Vector u, v;
  StepFunction f, g;

  void validate(SpaceDims dims) const;
};

/// D(dt) = diag(sqrt(dt) I_h, I_{h (x) K}).
Matrix slice_scaling(SpaceDims dims, double dt);

/// I + D G D = [[I + K dt, sqrt(dt) M], [sqrt(dt) L, N]] on h (x) (C (+) K).
Matrix slice_operator(const qsde::CoeffMatrix& g, double dt);

/// exp(D H D) for a Lie algebra element.
Matrix holevo_slice(const qsde::LieAlgElem& h, double dt);

enum class Ordering {
  left,   ///< later slices act on the left: O_m ... O_1
  right,  ///< earlier slices act on the left: O_1 ... O_m
};

/// Contracts an ordered chain of slice operators (slice k acting on its own
/// noise factor C (+) K) against discrete exponential vectors
/// (1, int_slice f / sqrt(dt)).
Scalar contract_evolution(const std::vector<Matrix>& slices, const Partition& p,
                          const MatrixElementSpec& spec, SpaceDims dims,
                          Ordering order = Ordering::left);

/// Same contraction with the slice operators produced on demand.
Scalar contract_with(const std::function<Matrix(double dt)>& slice, const Partition& p,
                     const MatrixElementSpec& spec, SpaceDims dims,
                     Ordering order = Ordering::left);

/// Exact n_h x n_h propagator X(t, s) with
/// <u (x) e_[s,t)(f), V_G(t, s) v (x) e_[s,t)(g)> = <u, X v>.
///
/// X' = C X with C = <f,g> I + K + M (I (x) g) + (I (x) f)^dag L
/// + (I (x) f)^dag (N - I) (I (x) g), solved exactly on every interval where
/// f and g are constant.
Matrix ode_propagator(const qsde::CoeffMatrix& g, const StepFunction& f, const StepFunction& gfun,
                      double s, double t);

Scalar ode_oracle(const qsde::CoeffMatrix& g, const MatrixElementSpec& spec, double s, double t);

/// Discretised left process [1 + Delta G]_P.
Scalar simulate_V(const qsde::CoeffMatrix& g, const Partition& p, const MatrixElementSpec& spec);

/// How each factor V_{G_i} is represented on a slice.
enum class SliceRule {
  increment,    ///< I + D G D
  exponential,  ///< exp(D hat_log(G) D), exact for K-only generators
};

/// Interval-wise product [V_{G_m} ... V_{G_1}]_P. `factors` lists the
/// generators left to right, i.e. {G_m, ..., G_1}.
Scalar simulate_trotter(const std::vector<qsde::CoeffMatrix>& factors, const Partition& p,
                        const MatrixElementSpec& spec, SliceRule rule = SliceRule::increment);

inline Scalar simulate_trotter(const qsde::CoeffMatrix& g2, const qsde::CoeffMatrix& g1,
                               const Partition& p, const MatrixElementSpec& spec,
                               SliceRule rule = SliceRule::increment) {
  return simulate_trotter(std::vector<qsde::CoeffMatrix>{g2, g1}, p, spec, rule);
}

/// Holevo time-ordered exponential [e^{Delta H}]_P.
Scalar simulate_holevo(const qsde::LieAlgElem& h, const Partition& p, const MatrixElementSpec& spec);

/// Right process: slice products with earlier slices on the left.
Scalar simulate_right_process(const qsde::CoeffMatrix& g, const Partition& p,
                              const MatrixElementSpec& spec);

struct ConvergenceRow {
  int m = 0;
  double dt = 0.0;
  Scalar value;
  double abs_error = 0.0;
  double rel_error = 0.0;
  double order = 0.0;  ///< log-ratio against the previous row; NaN on the first row
};

using Simulator = std::function<Scalar(const Partition&)>;

/// Runs `sim` on uniform partitions of [s, t] with m slices for each m.
std::vector<ConvergenceRow> convergence_table(const Simulator& sim, Scalar target, double s,
                                              double t, const std::vector<int>& grid_sizes);

/// err(m) of the interval-wise product of `factors` against the oracle of
/// `target` on [0, t].
std::vector<ConvergenceRow> trotter_experiment(const std::vector<qsde::CoeffMatrix>& factors,
                                               const qsde::CoeffMatrix& target,
                                               const MatrixElementSpec& spec, double t,
                                               const std::vector<int>& grid_sizes,
                                               SliceRule rule = SliceRule::increment);

/// Reference form: target is G2 <| G1.
std::vector<ConvergenceRow> trotter_experiment(const qsde::CoeffMatrix& g2,
                                               const qsde::CoeffMatrix& g1,
                                               const MatrixElementSpec& spec, double t,
                                               const std::vector<int>& grid_sizes);

std::vector<ConvergenceRow> holevo_experiment(const qsde::LieAlgElem& h,
                                              const MatrixElementSpec& spec, double t,
                                              const std::vector<int>& grid_sizes);

/// Least-squares slope of log(err) against log(dt).
double fit_order(const std::vector<ConvergenceRow>& rows);

/// True when abs_error never increases over rows with m >= from_m.
bool monotone_nonincreasing(const std::vector<ConvergenceRow>& rows, int from_m = 0);

}  // namespace slh::fock
