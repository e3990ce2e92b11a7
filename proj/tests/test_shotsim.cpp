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


#include <cmath>

#include "doctest.h"

#include "spapt/measures.hpp"
#include "spapt/rng.hpp"
#include "spapt/shotsim.hpp"
#include "spapt/spa.hpp"
#include "spapt/states.hpp"

using namespace spapt;

TEST_CASE("shot estimates are deterministic in the seed") {
  const DensityMatrix rho = family_horodecki(0.7);
  const ShotEstimate a = estimate_negativity(rho, 5000, 20, 42);
  const ShotEstimate b = estimate_negativity(rho, 5000, 20, 42);
  CHECK(a.mean_nn == b.mean_nn);
  CHECK(a.std_nn == b.std_nn);
  CHECK(a.nn_hat == b.nn_hat);
  const ShotEstimate c = estimate_negativity(rho, 5000, 20, 43);
  CHECK(a.mean_nn != c.mean_nn);
  CHECK(simulate_favg(rho, 1000, 9) == simulate_favg(rho, 1000, 9));
}

TEST_CASE("sample mean concentrates at the binomial rate") {
  const DensityMatrix rho = bell_state(0);
  const double f = favg_from_mu(spa_pt_affine(rho).mu_min);
  const std::uint64_t shots = 10'000'000;
  const double sigma = std::sqrt(f * (1.0 - f) / static_cast<double>(shots));
  CHECK(std::abs(simulate_favg(rho, shots, 1) - f) <= 5.0 * sigma);
}

TEST_CASE("bell state estimate is near one") {
  const ShotEstimate e = estimate_negativity(bell_state(0), 1'000'000, 100, 7);
  CHECK(std::abs(e.mean_nn - 1.0) <= 0.01);
  const ShotEstimate single = estimate_negativity(bell_state(0), 10'000'000, 1, 7);
  CHECK(std::abs(single.mean_nn - 1.0) <= 0.01);
  CHECK(single.std_nn == 0.0);
  CHECK(e.ci95.first <= e.mean_nn);
  CHECK(e.ci95.second >= e.mean_nn);
  // mu sits at the lower edge, so roughly half of the trials clamp.
  CHECK(e.clamp_events > 0);
}

TEST_CASE("separable states estimate zero almost always") {
  const ShotEstimate e = estimate_negativity(maximally_mixed(), 100'000, 200, 11);
  CHECK(e.zero_nn_trials >= 198);
  CHECK(e.mean_nn <= 0.01);
}

TEST_CASE("horodecki 0.8 mean is within three standard errors") {
  const DensityMatrix rho = family_horodecki(0.8);
  const double exact = negativity_normalized(spa_pt_affine(rho).mu_min);
  const ShotEstimate e = estimate_negativity(rho, 100'000, 200, 2024);
  CHECK(std::abs(e.mean_nn - exact) <= 3.0 * e.std_nn / std::sqrt(200.0));
}

TEST_CASE("standard deviation halves with four times the shots") {
  const DensityMatrix rho = family_horodecki(0.8);
  const ShotEstimate one = estimate_negativity(rho, 25'000, 200, 5);
  const ShotEstimate four = estimate_negativity(rho, 100'000, 200, 6);
  const double ratio = four.std_nn / one.std_nn;
  CHECK(ratio >= 0.5 * 0.75);
  CHECK(ratio <= 0.5 * 1.25);
}

TEST_CASE("noiseless estimate matches the exact pipeline") {
  for (double p : {0.0, 0.3, 0.8, 1.0}) {
    const DensityMatrix rho = family_horodecki(p);
    const ShotEstimate e = estimate_negativity_noiseless(rho);
    CHECK(e.noiseless);
    CHECK(e.mean_nn == full_report(rho).nn);
    CHECK(e.std_nn == 0.0);
  }
}

TEST_CASE("invalid shot and trial counts") {
  CHECK_THROWS_AS((void)estimate_negativity(bell_state(0), 0, 10, 1), InputError);
  CHECK_THROWS_AS((void)estimate_negativity(bell_state(0), 10, 0, 1), InputError);
  CHECK_THROWS_AS((void)simulate_favg(bell_state(0), 0, 1), InputError);
  Rng rng(1);
  CHECK(sample_bernoulli_mean(0.0, 100, rng) == 0.0);
  CHECK(sample_bernoulli_mean(1.0, 100, rng) == 1.0);
}
