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

// Finite-shot estimation of the average fidelity F_avg and its propagation
// to mu_min and the normalized negativity.
//
// Each shot is one Bernoulli outcome with success probability F_avg of the
// affine SPA-PT output. Trial t draws from Rng(derive_seed(seed, t)), so the
// result does not depend on how trials are scheduled.

#pragma once

#include <cstdint>
#include <utility>

#include "spapt/states.hpp"

namespace spapt {

/// Empirical mean of `shots` Bernoulli(F_avg) draws. shots >= 1.
double simulate_favg(const DensityMatrix& rho, std::uint64_t shots, std::uint64_t seed);

/// Same, for a known success probability.
double sample_bernoulli_mean(double probability, std::uint64_t shots, Rng& rng);

struct ShotEstimate {
  /// Point estimates from the first trial.
  double favg_hat = 0.0;
  double mu_hat = 0.0;
  double nn_hat = 0.0;

  std::uint64_t shots = 0;
  std::uint64_t trials = 0;
  /// shots = infinity: the exact F_avg is passed through.
  bool noiseless = false;

  double mean_favg = 0.0;
  double std_favg = 0.0;
  double mean_nn = 0.0;
  /// Sample standard deviation (n - 1); zero for a single trial.
  double std_nn = 0.0;
  /// Normal-approximation 95% interval for mean_nn.
  std::pair<double, double> ci95{0.0, 0.0};
  /// Trials whose raw mu estimate fell outside [1/6, 1/4].
  std::uint64_t clamp_events = 0;
  /// Trials with nn = 0.
  std::uint64_t zero_nn_trials = 0;
};

/// shots >= 1 and trials >= 1, else InputError.
ShotEstimate estimate_negativity(const DensityMatrix& rho, std::uint64_t shots,
                                 std::uint64_t trials, std::uint64_t seed);

/// Infinite-shot limit: one trial with the exact F_avg.
ShotEstimate estimate_negativity_noiseless(const DensityMatrix& rho);

}  // namespace spapt
