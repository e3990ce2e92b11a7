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

// Structural physical approximation of the partial transpose (SPA-PT) on
// two qubits.
//
// Three constructions are provided:
//   affine         rho~ = (1/9) rho^{T_B} + (2/9) I           (reference)
//   compositional  rho~ = [1/3 (id x T~) + 2/3 (Theta~ x D)] rho
//                  with T~ realized by a four-outcome SIC measurement
//   paper_literal  rho~ assembled entry by entry from the published
//                  closed-form matrix elements, including their extra phase
//                  terms. Kept only to quantify how far those entries are
//                  from the affine map; never used for estimation.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "spapt/qmat.hpp"
#include "spapt/states.hpp"

namespace spapt {

enum class SpaMethod { Affine, Compositional, PaperLiteral };

std::string_view method_name(SpaMethod method);

/// Extra checks attached to paper_literal outcomes.
struct SpaDiagnostics {
  double hermitian_defect = 0.0;
  double trace_deviation = 0.0;
  double min_eigenvalue = 0.0;
  /// True when the literal matrix passes density-matrix validation.
  bool is_state = true;
  /// max |literal - affine| over all entries.
  double max_dev_from_affine = 0.0;
};

struct SpaOutcome {
  Matrix4 rho_tilde;
  Spectrum<4> spectrum;
  double mu_min = 0.0;
  Vector<4> min_eigvec{};
  SpaMethod method = SpaMethod::Affine;
  /// Set only for SpaMethod::PaperLiteral.
  std::optional<SpaDiagnostics> diagnostics;
};

/// Bounds of mu_min over all two-qubit states for the affine map.
inline constexpr double kMuMinLowest = 1.0 / 6.0;
inline constexpr double kMuMinHighest = 1.0 / 4.0;
/// mu_min below this value means the state is entangled.
inline constexpr double kMuMinSeparable = 2.0 / 9.0;

/// Measurement data behind T~: b1, b2, the vectors |s_k> and |s_k*>, and the
/// POVM effects M_k = |s_k*><s_k*| / 2.
struct SpaConstants {
  cplx b1;
  cplx b2;
  std::array<Vector<2>, 4> s;
  std::array<Vector<2>, 4> s_conj;
  std::array<Matrix2, 4> povm;
  /// max |sum_k M_k - I|
  double completeness_residual = 0.0;
  /// max_k | ||s_k|| - 1 |
  double norm_defect = 0.0;

  bool complete() const noexcept { return completeness_residual <= 1e-10; }
};

SpaConstants compute_spa_constants();

/// Computed on first use and immutable afterwards.
const SpaConstants& spa_constants();

/// sum_k Tr(M_k x) |s_k><s_k|
Matrix2 spa_transpose_tilde(const Matrix2& x);

/// (x^T + Tr(x) I) / 3, the map the SIC measurement realizes when complete.
Matrix2 transpose_tilde_closed_form(const Matrix2& x);

/// sigma_y T~(x) sigma_y
Matrix2 spa_theta(const Matrix2& x);

/// (1/4) sum_i sigma_i x sigma_i = Tr(x) I / 2
Matrix2 depol_d(const Matrix2& x);

/// Linear extensions of the maps to arbitrary 4x4 operators.
Matrix4 apply_spa_affine(const Matrix4& x);
Matrix4 apply_spa_compositional(const Matrix4& x);

/// True when the compositional map falls back to the closed-form T~
/// because the measurement constants are not a complete POVM.
bool compositional_uses_fallback();

SpaOutcome spa_pt_affine(const DensityMatrix& rho);

/// Throws ConstructionError when the output is not a valid state.
SpaOutcome spa_pt_compositional(const DensityMatrix& rho);

/// Always returns; inspect outcome.diagnostics.
SpaOutcome spa_pt_paper_entries(const DensityMatrix& rho);

SpaOutcome spa_pt(const DensityMatrix& rho, SpaMethod method);

using LinearMap4 = std::function<Matrix4(const Matrix4&)>;

/// Choi operator sum_ij |i><j| (x) Phi(|i><j|), row index 4 i + k.
Matrix16 choi_matrix(const LinearMap4& map);

struct ChoiReport {
  Matrix16 choi;
  double min_eigenvalue = 0.0;
  /// min_eigenvalue >= -1e-10
  bool is_cp = false;
};

inline constexpr double kChoiCpTol = 1e-10;

ChoiReport choi_report(const LinearMap4& map);

/// method must be Affine or Compositional; PaperLiteral is not a linear map
/// and throws InputError.
ChoiReport choi_report(SpaMethod method);

// Consistency audit behind the `spa-verify` command.

struct LiteralRow {
  double param = 0.0;
  double mu_literal = 0.0;
  double mu_closed_form = 0.0;
  double mu_affine = 0.0;
  double max_dev_from_affine = 0.0;
  bool literal_is_state = true;
};

struct SpaVerifyReport {
  double povm_completeness_residual = 0.0;
  double s_norm_defect = 0.0;
  /// max |T~(rho) - (rho^T + I)/3| over random qubit states.
  double transpose_tilde_closed_form_dev = 0.0;
  bool fallback_engaged = false;

  int random_states = 0;
  double compositional_vs_affine_max_dev = 0.0;
  double trace_relation_max_residual = 0.0;
  double spectrum_mapping_max_residual = 0.0;
  int affine_invalid_outputs = 0;
  double affine_mu_range_violation = 0.0;

  std::vector<LiteralRow> literal_pure_m;
  std::vector<LiteralRow> literal_horodecki;

  ChoiReport choi_affine;
  ChoiReport choi_compositional;
  ChoiReport choi_partial_transpose;
  ChoiReport choi_identity;

  /// Every affine-map invariant held.
  bool affine_ok = false;
};

SpaVerifyReport run_spa_verification(std::uint64_t seed, int random_states = 1000,
                                     int grid_points = 11);

}  // namespace spapt
