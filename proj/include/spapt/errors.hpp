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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spapt {

/// Bad argument: out-of-range parameter, wrong shape, unnormalized vector.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHermitianError : public InputError {
 public:
  explicit NotHermitianError(double max_asymmetry);
  double max_asymmetry() const noexcept { return max_asymmetry_; }

 private:
  double max_asymmetry_;
};

class NotPsdError : public std::domain_error {
 public:
  explicit NotPsdError(double min_eigenvalue);
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

struct Violation {
  enum class Kind { NotHermitian, TraceNotOne, NotPsd, NotFinite };
  Kind kind;
  /// Hermitian defect, |trace - 1|, or -lambda_min respectively.
  double magnitude;
};

std::string to_string(Violation::Kind kind);

/// A candidate density matrix failed one or more invariants; all of them are
/// listed.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept {
    return violations_;
  }
  bool has(Violation::Kind kind) const noexcept;

 private:
  std::vector<Violation> violations_;
};

/// A channel construction produced something that is not a state.
class ConstructionError : public std::logic_error {
 public:
  ConstructionError(const std::string& what, std::vector<double> spectrum);
  const std::vector<double>& spectrum() const noexcept { return spectrum_; }

 private:
  std::vector<double> spectrum_;
};

}  // namespace spapt
