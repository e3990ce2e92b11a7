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

#include "spapt/measures.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include <fmt/core.h>

#include "spapt/spa.hpp"

namespace spapt {

namespace {

double in_domain(double x, double lo, double hi, const char* what) {
  if (!(x >= lo - kDomainSlack && x <= hi + kDomainSlack))
    throw InputError(fmt::format("{} = {} outside [{}, {}]", what, x, lo, hi));
  return std::clamp(x, lo, hi);
}

double mu_in_domain(double mu) {
  return in_domain(mu, kMuMinLowest, kMuMinHighest, "mu_min");
}

}  // namespace

double negativity_exact(const DensityMatrix& rho) {
  const Spectrum<4> s = herm_eigen(partial_transpose_b(rho.matrix()));
  double sum = 0.0;
  for (double v : s.eigenvalues) sum += std::max(0.0, -v);
  return 2.0 * sum;
}

int negative_pt_eigenvalue_count(const DensityMatrix& rho, double threshold) {
  const Spectrum<4> s = herm_eigen(partial_transpose_b(rho.matrix()));
  return static_cast<int>(std::count_if(s.eigenvalues.begin(), s.eigenvalues.end(),
                                        [threshold](double v) { return v < -threshold; }));
}

double negativity_lower_bound(double mu_min) {
  return 4.0 - 18.0 * mu_in_domain(mu_min);
}

double negativity_normalized(double mu_min) {
  const double mu = mu_in_domain(mu_min);
  if (mu >= kMuMinSeparable) return 0.0;
  return (108.0 / 113.0) * (kMuMinSeparable - mu) * (19.0 - mu);
}

double estimator_bias(double nd) { return nd * (1.0 - nd) / 339.0; }

std::array<double, 4> wootters_lambdas(const DensityMatrix& rho) {
  // lambda_i are the singular values of tau = X (sy x sy) X* with X X^dagger
  // = rho. They are read off the Hermitian dilation [[0, tau], [tau^dagger, 0]]
  // (spectrum +-lambda_i) so no square root of a near-zero eigenvalue is
  // taken. Eigenvalues of rho at rounding level are treated as exact zeros.
  const Spectrum<4> s = herm_eigen(rho.matrix());
  const double cut = 64.0 * std::numeric_limits<double>::epsilon() * std::max(s.max(), 0.0);
  const Matrix4 x =
      spectral_apply(s, [cut](double v) { return v > cut ? std::sqrt(v) : 0.0; });
  const Matrix4 yy = kron(pauli::y(), pauli::y());
  const Matrix4 tau = x * yy * x.conjugate();

  Matrix<8> dilation;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      dilation(i, 4 + j) = tau(i, j);
      dilation(4 + j, i) = std::conj(tau(i, j));
    }
  const Spectrum<8> d = herm_eigen(dilation);
  std::array<double, 4> lam{};
  for (std::size_t i = 0; i < 4; ++i) lam[i] = std::max(0.0, d.eigenvalues[7 - i]);
  return lam;
}

double concurrence_wootters(const DensityMatrix& rho) {
  const auto l = wootters_lambdas(rho);
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double concurrence_pure(double mu_min) { return negativity_normalized(mu_min); }

double concurrence_quasi(double n) {
  const double x = in_domain(n, 0.0, 1.0, "N");
  return -x + std::sqrt(2.0 * x * (x + 1.0));
}

double verstraete_rhs(double c) {
  const double x = in_domain(c, 0.0, 1.0, "C");
  return std::hypot(1.0 - x, x) - (1.0 - x);
}

WitnessPair witness_pair(const Vector<4>& phi) {
  const double n = norm(phi);
  if (!(std::abs(n - 1.0) <= 1e-9))
    throw InputError(fmt::format("witness vector norm {} is not 1", n));
  WitnessPair p;
  p.phi = phi;
  p.w = Matrix4::projector(phi) - (2.0 / 9.0) * Matrix4::identity();
  p.w_tilde = (2.0 / 9.0) * p.w + (7.0 / 36.0) * Matrix4::identity();
  return p;
}

double witness_value(const WitnessPair& pair, const Matrix4& rho_tilde) {
  return trace_product(pair.w, rho_tilde).real();
}

double favg_from_mu(double mu) {
  const double m = mu_in_domain(mu);
  return (m + 47.0 / 72.0) * 8.0 / 15.0;
}

double mu_from_favg(double f) {
  const double x = in_domain(f, kFavgLowest, kFavgHighest, "F_avg");
  return 15.0 / 8.0 * x - 47.0 / 72.0;
}

double ls_upper_bound(double lambda, double mu_min_of_pure_part) {
  const double l = in_domain(lambda, 0.0, 1.0, "lambda");
  const double mu = in_domain(mu_min_of_pure_part, kMuMinLowest, kMuMinSeparable, "mu_min");
  return (1.0 - l) * concurrence_pure(mu);
}

EntanglementReport full_report(const DensityMatrix& rho) {
  const SpaOutcome spa = spa_pt_affine(rho);
  EntanglementReport r;
  r.mu_min = spa.mu_min;
  r.nd = negativity_exact(rho);
  r.ppt = r.nd <= 1e-10;
  r.nn = r.ppt ? 0.0 : negativity_normalized(r.mu_min);
  r.lower_bound = negativity_lower_bound(r.mu_min);
  r.concurrence = concurrence_wootters(rho);
  r.bias = estimator_bias(r.nd);
  r.neg_pt_eigs = negative_pt_eigenvalue_count(rho);

  const Spectrum<4> s = herm_eigen(rho.matrix());
  if (s.max() >= 1.0 - 1e-9) {
    r.concurrence_pure_estimate = concurrence_pure(r.mu_min);
    r.ls_bound = ls_upper_bound(0.0, std::min(r.mu_min, kMuMinSeparable));
  }

  const double c = 2.0 * rho(0, 0).real();
  if (c >= 0.0 && c <= 1.0 &&
      max_abs_diff(family_quasi(c).matrix(), rho.matrix()) <= 1e-9)
    r.concurrence_quasi_estimate = concurrence_quasi(r.nn);
  return r;
}

}  // namespace spapt
