// Copyright 2026 The spapt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Entanglement quantifiers: exact negativity and concurrence, and the
// estimators that need only mu_min, the smallest eigenvalue of the SPA-PT
// output.
//
// For two qubits the partial transpose has at most one negative eigenvalue,
// so N^D = max(0, 4 - 18 mu_min) exactly, and the quadratic estimator
//   N^N = (108/113)(2/9 - mu)(19 - mu)
// lies on the curve N^N = N^D (338 + N^D) / 339. It undershoots N^D by
// N^D (1 - N^D) / 339 <= 1/1356.

#pragma once

#include <array>
#include <optional>

#include "spapt/qmat.hpp"
#include "spapt/states.hpp"

namespace spapt {

/// Slack accepted on the documented domain of mu, F and the other scalar
/// arguments before an InputError; values inside the slack are clamped.
inline constexpr double kDomainSlack = 1e-10;

/// 2 sum_i max(0, -lambda_i(rho^{T_B}))
double negativity_exact(const DensityMatrix& rho);

/// Number of partial-transpose eigenvalues below -threshold.
int negative_pt_eigenvalue_count(const DensityMatrix& rho, double threshold = 1e-10);

/// 4 - 18 mu, unclamped. mu in [1/6, 1/4].
double negativity_lower_bound(double mu_min);

/// (108/113)(2/9 - mu)(19 - mu) for mu < 2/9, zero from 2/9 up to 1/4.
double negativity_normalized(double mu_min);

/// N^D (1 - N^D) / 339: how far N^N sits below N^D.
double estimator_bias(double nd);

/// Descending square roots of the spectrum of rho (sy x sy) rho* (sy x sy),
/// computed as the singular values of sqrt(rho) (sy x sy) sqrt(rho)*.
std::array<double, 4> wootters_lambdas(const DensityMatrix& rho);

double concurrence_wootters(const DensityMatrix& rho);

/// Concurrence of a pure state from its mu_min; same curve as N^N.
double concurrence_pure(double mu_min);

/// -N + sqrt(2 N (N + 1)), inverse of verstraete_rhs. n in [0, 1].
double concurrence_quasi(double n);

/// sqrt((1 - C)^2 + C^2) - (1 - C): the lowest negativity compatible with
/// concurrence C, attained by rank-2 quasi-distillable states.
double verstraete_rhs(double c);

struct WitnessPair {
  /// |phi><phi| - (2/9) I
  Matrix4 w;
  /// (2/9) W + (7/36) I
  Matrix4 w_tilde;
  Vector<4> phi{};
};

/// phi must have unit norm within 1e-9.
WitnessPair witness_pair(const Vector<4>& phi);

/// Re Tr(W rho~). Equals <phi|rho^{T_B}|phi>/9 for the affine SPA output, so
/// it is nonnegative on every PPT state.
double witness_value(const WitnessPair& pair, const Matrix4& rho_tilde);

/// F = (mu + 47/72) * 8/15; mu in [1/6, 1/4].
double favg_from_mu(double mu);
/// mu = (15/8) F - 47/72; F in [59/135, 65/135].
double mu_from_favg(double f);

inline constexpr double kFavgLowest = 59.0 / 135.0;
inline constexpr double kFavgHighest = 65.0 / 135.0;

/// (1 - lambda) * concurrence_pure(mu) for a decomposition
/// rho = lambda rho_sep + (1 - lambda) |psi_e><psi_e|, mu from |psi_e>.
/// lambda in [0, 1], mu in [1/6, 2/9].
double ls_upper_bound(double lambda, double mu_min_of_pure_part);

struct EntanglementReport {
  double nd = 0.0;
  double nn = 0.0;
  double lower_bound = 0.0;
  double concurrence = 0.0;
  bool ppt = true;
  double mu_min = 0.0;
  double bias = 0.0;
  int neg_pt_eigs = 0;
  /// Present when the state is pure within 1e-9.
  std::optional<double> concurrence_pure_estimate;
  /// Present when the state is a quasi-distillable family member within 1e-9.
  std::optional<double> concurrence_quasi_estimate;
  /// Trivial decomposition bound (lambda = 0) for pure states.
  std::optional<double> ls_bound;
};

EntanglementReport full_report(const DensityMatrix& rho);

}  // namespace spapt
