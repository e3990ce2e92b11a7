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

// Two-qubit density matrices: validation, parametric families, random
// ensembles and the JSON state file format.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spapt/errors.hpp"
#include "spapt/qmat.hpp"
#include "spapt/rng.hpp"

namespace spapt {

/// A 4x4 operator known to be Hermitian (within tol::kValidate), of unit
/// trace (within tol::kValidate) and PSD (down to -tol::kPsdClamp). Only
/// obtainable through validate() or the constructors below.
class DensityMatrix {
 public:
  const Matrix4& matrix() const noexcept { return mat_; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

  friend DensityMatrix validate(const Matrix4& raw);

 private:
  explicit DensityMatrix(const Matrix4& m) : mat_(m) {}
  Matrix4 mat_;
};

/// Every invariant the candidate violates; empty when it is a valid state.
std::vector<Violation> check_density(const Matrix4& raw);

/// Throws ValidationError listing all violations.
DensityMatrix validate(const Matrix4& raw);

/// |v><v|. Norms within 1e-6 of one are renormalized; zero or farther off
/// vectors throw InputError.
DensityMatrix pure_from_vector(const Vector<4>& v);

/// M|01><01| + sqrt(M(1-M)) (|01><10| + |10><01|) + (1-M)|10><10|, M in [0,1].
DensityMatrix family_pure_m(double m);

/// p|psi+><psi+| + (1-p)|00><00| with |psi+> = (|01> + |10>)/sqrt(2).
DensityMatrix family_horodecki(double p);

/// Rank-2 quasi-distillable state with concurrence c:
/// (c/2)(|00> + |11>)(<00| + <11|) + (1-c)|01><01|.
DensityMatrix family_quasi(double c);

/// 0: Phi+ (|00>+|11>)/sqrt2, 1: Phi-, 2: Psi+ (|01>+|10>)/sqrt2, 3: Psi-.
Vector<4> bell_vector(int index);
DensityMatrix bell_state(int index);

DensityMatrix maximally_mixed();

/// Haar-random pure state from four complex standard normals.
DensityMatrix random_pure(Rng& rng);
DensityMatrix random_pure(std::uint64_t seed);

/// G G^dagger / Tr(G G^dagger) with G a 4 x rank complex Ginibre matrix.
DensityMatrix random_mixed(Rng& rng, int rank = 4);
DensityMatrix random_mixed(std::uint64_t seed, int rank = 4);

struct StateSpec {
  enum class Kind { Raw, PureM, Horodecki, Quasi, Bell };
  Kind kind = Kind::Bell;
  /// M, p, C or Bell index depending on kind; unused for Raw.
  double param = 0.0;
  std::optional<std::filesystem::path> source_path;
};

std::optional<StateSpec::Kind> parse_family(std::string_view name);
std::string_view family_name(StateSpec::Kind kind);

/// Builds the state a spec names. Range errors surface as InputError,
/// bad files as InputError or ValidationError.
DensityMatrix resolve(const StateSpec& spec);

// State file: {"re": [[4 x 4]], "im": [[4 x 4]]}, row-major, basis order
// |00>, |01>, |10>, |11>. "im" may be omitted for real matrices.

/// Parses the JSON text; shape errors throw InputError. No state validation.
Matrix4 parse_state_json(std::string_view text);
std::string to_state_json(const Matrix4& m);

DensityMatrix load_state(const std::filesystem::path& path);
void save_state(const std::filesystem::path& path, const DensityMatrix& rho);

}  // namespace spapt
