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

// Reproducible random numbers.
//
// Engine: std::mt19937_64, whose output sequence is fixed by the C++
// standard. The standard library distributions are implementation-defined,
// so the variates are derived here:
//   uniform()  = (next_u64() >> 11) * 2^-53            in [0, 1)
//   normal()   = Box-Muller on (1 - uniform(), uniform()), both outputs used
//
// Sub-streams (per trial, per sampled state) use
//   derive_seed(base, i) = splitmix64(splitmix64(base) + i).

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace spapt {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  double uniform();
  double normal();
  /// Real and imaginary parts independent N(0, 1).
  std::complex<double> complex_normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace spapt
