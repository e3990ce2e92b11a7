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

#include "spapt/shotsim.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "spapt/measures.hpp"
#include "spapt/spa.hpp"

namespace spapt {

namespace {

double exact_favg(const DensityMatrix& rho) { return favg_from_mu(spa_pt_affine(rho).mu_min); }

struct TrialValue {
  double favg;
  double mu;
  double nn;
  bool clamped;
};

TrialValue propagate(double favg) {
  const double raw_mu = 15.0 / 8.0 * favg - 47.0 / 72.0;
  const double mu = std::clamp(raw_mu, kMuMinLowest, kMuMinHighest);
  return {favg, mu, negativity_normalized(mu), mu != raw_mu};
}

std::pair<double, double> mean_and_std(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= n;
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0))};
}

}  // namespace

double sample_bernoulli_mean(double probability, std::uint64_t shots, Rng& rng) {
  if (shots < 1) throw InputError("shots must be >= 1");
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < shots; ++i)
    if (rng.uniform() < probability) ++hits;
  return static_cast<double>(hits) / static_cast<double>(shots);
}

double simulate_favg(const DensityMatrix& rho, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw InputError("shots must be >= 1");
  Rng rng(seed);
  return sample_bernoulli_mean(exact_favg(rho), shots, rng);
}

ShotEstimate estimate_negativity(const DensityMatrix& rho, std::uint64_t shots,
                                 std::uint64_t trials, std::uint64_t seed) {
  if (shots < 1) throw InputError("shots must be >= 1");
  if (trials < 1) throw InputError("trials must be >= 1");
  const double f = exact_favg(rho);

  ShotEstimate est;
  est.shots = shots;
  est.trials = trials;
  std::vector<double> favgs, nns;
  favgs.reserve(trials);
  nns.reserve(trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const TrialValue v = propagate(sample_bernoulli_mean(f, shots, rng));
    if (t == 0) {
      est.favg_hat = v.favg;
      est.mu_hat = v.mu;
      est.nn_hat = v.nn;
    }
    if (v.clamped) ++est.clamp_events;
    if (v.nn == 0.0) ++est.zero_nn_trials;
    favgs.push_back(v.favg);
    nns.push_back(v.nn);
  }
  std::tie(est.mean_favg, est.std_favg) = mean_and_std(favgs);
  std::tie(est.mean_nn, est.std_nn) = mean_and_std(nns);
  const double half = 1.96 * est.std_nn / std::sqrt(static_cast<double>(trials));
  est.ci95 = {est.mean_nn - half, est.mean_nn + half};
  return est;
}

ShotEstimate estimate_negativity_noiseless(const DensityMatrix& rho) {
  const SpaOutcome spa = spa_pt_affine(rho);
  ShotEstimate est;
  est.noiseless = true;
  est.trials = 1;
  est.favg_hat = est.mean_favg = favg_from_mu(spa.mu_min);
  // Pass mu through directly; F -> mu would add rounding.
  est.mu_hat = spa.mu_min;
  est.nn_hat = est.mean_nn = negativity_exact(rho) <= 1e-10 ? 0.0 : negativity_normalized(spa.mu_min);
  est.ci95 = {est.mean_nn, est.mean_nn};
  return est;
}

}  // namespace spapt
