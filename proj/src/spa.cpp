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

#include "spapt/spa.hpp"

#include <numbers>

#include <fmt/core.h>

namespace spapt {

std::string_view method_name(SpaMethod method) {
  switch (method) {
    case SpaMethod::Affine: return "affine";
    case SpaMethod::Compositional: return "compositional";
    case SpaMethod::PaperLiteral: return "paper_literal";
  }
  return "unknown";
}

SpaConstants compute_spa_constants() {
  using namespace std::complex_literals;
  const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const cplx w_bar = std::conj(w);

  SpaConstants k;
  k.b1 = 1i * w / (1i + w_bar);
  k.b2 = 1i * w / (1i - w_bar);

  const std::array<cplx, 4> b = {k.b1, -k.b1, k.b2, -k.b2};
  Matrix2 sum;
  for (std::size_t j = 0; j < 4; ++j) {
    const double n = std::sqrt(1.0 + std::norm(b[j]));
    k.s_conj[j] = {1.0 / n, std::conj(b[j]) / n};
    k.s[j] = {1.0 / n, b[j] / n};
    k.povm[j] = 0.5 * Matrix2::projector(k.s_conj[j]);
    sum += k.povm[j];
    k.norm_defect = std::max(k.norm_defect, std::abs(norm(k.s[j]) - 1.0));
  }
  k.completeness_residual = max_abs_diff(sum, Matrix2::identity());
  return k;
}

const SpaConstants& spa_constants() {
  static const SpaConstants constants = compute_spa_constants();
  return constants;
}

Matrix2 spa_transpose_tilde(const Matrix2& x) {
  const SpaConstants& k = spa_constants();
  Matrix2 out;
  for (std::size_t j = 0; j < 4; ++j)
    out += trace_product(k.povm[j], x) * Matrix2::projector(k.s[j]);
  return out;
}

Matrix2 transpose_tilde_closed_form(const Matrix2& x) {
  return (1.0 / 3.0) * (x.transpose() + x.trace() * Matrix2::identity());
}

Matrix2 spa_theta(const Matrix2& x) {
  const Matrix2 y = pauli::y();
  return y * spa_transpose_tilde(x) * y;
}

Matrix2 depol_d(const Matrix2& x) {
  Matrix2 out;
  for (const auto& s : pauli::all()) out += s * x * s;
  return 0.25 * out;
}

Matrix4 apply_spa_affine(const Matrix4& x) {
  return (1.0 / 9.0) * partial_transpose_b(x) +
         (2.0 / 9.0) * x.trace() * Matrix4::identity();
}

bool compositional_uses_fallback() { return !spa_constants().complete(); }

Matrix4 apply_spa_compositional(const Matrix4& x) {
  const bool fallback = compositional_uses_fallback();
  const Matrix2 y = pauli::y();
  auto t_tilde = [fallback](const Matrix2& m) {
    return fallback ? transpose_tilde_closed_form(m) : spa_transpose_tilde(m);
  };
  auto theta = [&](const Matrix2& m) { return y * t_tilde(m) * y; };

  // x = sum_ij c_ij sigma_i (x) sigma_j; each product map acts factorwise.
  const auto paulis = pauli::all();
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const cplx c = trace_product(kron(paulis[i], paulis[j]), x) / 4.0;
      if (c == cplx{}) continue;
      const Matrix4 term = (1.0 / 3.0) * kron(paulis[i], t_tilde(paulis[j])) +
                           (2.0 / 3.0) * kron(theta(paulis[i]), depol_d(paulis[j]));
      out += c * term;
    }
  }
  return out;
}

namespace {

SpaOutcome make_outcome(const Matrix4& rho_tilde, SpaMethod method) {
  SpaOutcome out;
  out.rho_tilde = rho_tilde;
  out.spectrum = herm_eigen(rho_tilde);
  out.mu_min = out.spectrum.min();
  out.min_eigvec = out.spectrum.eigenvector(0);
  out.method = method;
  return out;
}

std::vector<double> as_vector(const Spectrum<4>& s) {
  return {s.eigenvalues.begin(), s.eigenvalues.end()};
}

// Throws ConstructionError when a CP construction yields a non-state.
void require_state(const SpaOutcome& out) {
  if (!check_density(out.rho_tilde).empty())
    throw ConstructionError(
        fmt::format("{} SPA-PT output is not a density matrix (min eigenvalue {:.3e})",
                    method_name(out.method), out.mu_min),
        as_vector(out.spectrum));
}

}  // namespace

SpaOutcome spa_pt_affine(const DensityMatrix& rho) {
  SpaOutcome out = make_outcome(apply_spa_affine(rho.matrix()), SpaMethod::Affine);
  require_state(out);
  return out;
}

SpaOutcome spa_pt_compositional(const DensityMatrix& rho) {
  const Matrix4 raw = apply_spa_compositional(rho.matrix());
  if (raw.hermitian_defect() > tol::kValidate)
    throw ConstructionError("compositional SPA-PT output is not Hermitian", {});
  SpaOutcome out = make_outcome(raw, SpaMethod::Compositional);
  require_state(out);
  return out;
}

SpaOutcome spa_pt_paper_entries(const DensityMatrix& rho) {
  using namespace std::complex_literals;
  // 1-based aliases t_ij = rho(i-1, j-1).
  auto t = [&rho](int i, int j) { return rho(static_cast<std::size_t>(i - 1),
                                             static_cast<std::size_t>(j - 1)); };
  auto tc = [&t](int i, int j) { return std::conj(t(i, j)); };

  Matrix4 e;
  e(0, 0) = (2.0 + t(1, 1).real()) / 9.0;
  e(0, 1) = (-1i * t(1, 2) + tc(1, 2)) / 9.0;
  e(0, 2) = (t(1, 3) - 1i * (tc(1, 3) + tc(2, 4))) / 9.0;
  e(0, 3) = (-1i * t(1, 4) + t(2, 3)) / 9.0;
  e(1, 1) = (2.0 + t(2, 2).real()) / 9.0;
  e(1, 2) = (t(1, 4) + 1i * t(2, 3)) / 9.0;
  e(1, 3) = (-1i / 9.0) * (tc(1, 3) + tc(2, 4));
  e(2, 2) = (2.0 + t(3, 3).real()) / 9.0;
  e(2, 3) = (-1i * t(3, 4) + tc(3, 4)) / 9.0;
  e(3, 3) = (2.0 + t(4, 4).real()) / 9.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) e(j, i) = std::conj(e(i, j));

  SpaOutcome out = make_outcome(e, SpaMethod::PaperLiteral);
  SpaDiagnostics d;
  d.hermitian_defect = e.hermitian_defect();
  d.trace_deviation = std::abs(e.trace() - 1.0);
  d.min_eigenvalue = out.mu_min;
  d.is_state = check_density(e).empty();
  d.max_dev_from_affine = max_abs_diff(e, apply_spa_affine(rho.matrix()));
  out.diagnostics = d;
  return out;
}

SpaOutcome spa_pt(const DensityMatrix& rho, SpaMethod method) {
  switch (method) {
    case SpaMethod::Affine: return spa_pt_affine(rho);
    case SpaMethod::Compositional: return spa_pt_compositional(rho);
    case SpaMethod::PaperLiteral: return spa_pt_paper_entries(rho);
  }
  throw InputError("unknown SPA method");
}

Matrix16 choi_matrix(const LinearMap4& map) {
  Matrix16 c;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      Matrix4 unit;
      unit(i, j) = 1.0;
      const Matrix4 image = map(unit);
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l) c(4 * i + k, 4 * j + l) = image(k, l);
    }
  }
  return c;
}

ChoiReport choi_report(const LinearMap4& map) {
  ChoiReport r;
  r.choi = choi_matrix(map);
  r.min_eigenvalue = herm_eigen(r.choi).min();
  r.is_cp = r.min_eigenvalue >= -kChoiCpTol;
  return r;
}

ChoiReport choi_report(SpaMethod method) {
  switch (method) {
    case SpaMethod::Affine: return choi_report(LinearMap4(apply_spa_affine));
    case SpaMethod::Compositional: return choi_report(LinearMap4(apply_spa_compositional));
    case SpaMethod::PaperLiteral: break;
  }
  throw InputError("the paper_literal construction is not a linear map; no Choi operator");
}

namespace {

Matrix2 random_qubit_state(Rng& rng) {
  Matrix2 g;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) g(i, j) = rng.complex_normal();
  Matrix2 r = g * g.adjoint();
  return r * (1.0 / r.trace().real());
}

std::vector<LiteralRow> literal_table(int points, bool horodecki) {
  std::vector<LiteralRow> rows;
  for (int i = 0; i < points; ++i) {
    const double x = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    const DensityMatrix rho = horodecki ? family_horodecki(x) : family_pure_m(x);
    const SpaOutcome lit = spa_pt_paper_entries(rho);
    LiteralRow row;
    row.param = x;
    row.mu_literal = lit.mu_min;
    row.mu_closed_form =
        horodecki ? 5.0 / 18.0 - x / 18.0 - std::sqrt(1.0 - 2.0 * x + 2.0 * x * x) / 18.0
                  : 2.0 / 9.0 - std::sqrt(x * (1.0 - x)) / 9.0;
    row.mu_affine = spa_pt_affine(rho).mu_min;
    row.max_dev_from_affine = lit.diagnostics->max_dev_from_affine;
    row.literal_is_state = lit.diagnostics->is_state;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

SpaVerifyReport run_spa_verification(std::uint64_t seed, int random_states,
                                     int grid_points) {
  SpaVerifyReport rep;
  const SpaConstants& k = spa_constants();
  rep.povm_completeness_residual = k.completeness_residual;
  rep.s_norm_defect = k.norm_defect;
  rep.fallback_engaged = compositional_uses_fallback();

  Rng qubit_rng(derive_seed(seed, 0xC0FFEE));
  for (int i = 0; i < 100; ++i) {
    const Matrix2 r = random_qubit_state(qubit_rng);
    rep.transpose_tilde_closed_form_dev =
        std::max(rep.transpose_tilde_closed_form_dev,
                 max_abs_diff(spa_transpose_tilde(r), transpose_tilde_closed_form(r)));
  }

  rep.random_states = random_states;
  for (int i = 0; i < random_states; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const DensityMatrix rho = random_mixed(rng, 4);
    const DensityMatrix probe = random_pure(rng);

    const Matrix4 affine = apply_spa_affine(rho.matrix());
    rep.compositional_vs_affine_max_dev =
        std::max(rep.compositional_vs_affine_max_dev,
                 max_abs_diff(apply_spa_compositional(rho.matrix()), affine));

    const Matrix4 pt = partial_transpose_b(rho.matrix());
    const cplx lhs = trace_product(probe.matrix(), pt);
    const cplx rhs = 9.0 * trace_product(probe.matrix(), affine) - 2.0;
    rep.trace_relation_max_residual =
        std::max(rep.trace_relation_max_residual, std::abs(lhs - rhs));

    if (!check_density(affine).empty()) {
      ++rep.affine_invalid_outputs;
      continue;
    }
    const Spectrum<4> mu = herm_eigen(affine);
    const Spectrum<4> lam = herm_eigen(pt);
    for (std::size_t j = 0; j < 4; ++j)
      rep.spectrum_mapping_max_residual =
          std::max(rep.spectrum_mapping_max_residual,
                   std::abs(mu.eigenvalues[j] - (lam.eigenvalues[j] / 9.0 + 2.0 / 9.0)));
    rep.affine_mu_range_violation =
        std::max({rep.affine_mu_range_violation, kMuMinLowest - mu.min(),
                  mu.min() - kMuMinHighest});
  }

  rep.literal_pure_m = literal_table(grid_points, false);
  rep.literal_horodecki = literal_table(grid_points, true);

  rep.choi_affine = choi_report(SpaMethod::Affine);
  rep.choi_compositional = choi_report(SpaMethod::Compositional);
  rep.choi_partial_transpose = choi_report(LinearMap4(partial_transpose_b));
  rep.choi_identity = choi_report([](const Matrix4& x) { return x; });

  rep.affine_ok = rep.trace_relation_max_residual <= 1e-10 &&
                  rep.spectrum_mapping_max_residual <= 1e-10 &&
                  rep.affine_invalid_outputs == 0 &&
                  rep.affine_mu_range_violation <= 1e-10 &&
                  rep.choi_affine.min_eigenvalue >= -1e-12 &&
                  !rep.choi_partial_transpose.is_cp;
  return rep;
}

}  // namespace spapt
