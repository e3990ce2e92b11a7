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

#include "doctest.h"

#include "oracles.hpp"
#include "spapt/qmat.hpp"
#include "spapt/rng.hpp"

using namespace spapt;

TEST_CASE("kron: identity and diagonal cases") {
  CHECK(kron(Matrix2::identity(), Matrix2::identity()) == Matrix4::identity());
  CHECK(kron(pauli::z(), pauli::z()) == Matrix4::diag({1, -1, -1, 1}));
}

TEST_CASE("kron: block layout follows |00>,|01>,|10>,|11>") {
  // |0><1| (x) |1><0| = |01><10|
  Matrix2 a, b;
  a(0, 1) = 1.0;
  b(1, 0) = 1.0;
  const Matrix4 k = kron(a, b);
  CHECK(k(1, 2) == cplx(1.0));
  CHECK(k.max_abs() == 1.0);
  CHECK((k - Matrix4::outer({0, 1, 0, 0}, {0, 0, 1, 0})).max_abs() == 0.0);
}

TEST_CASE("kron: trace multiplies on random pairs") {
  Rng rng(11);
  for (int n = 0; n < 100; ++n) {
    const Matrix2 a = oracle::random_complex<2>(rng);
    const Matrix2 b = oracle::random_complex<2>(rng);
    // Multiply-out oracle: Tr(A (x) B) = sum_i sum_k a_ii b_kk.
    cplx expected{};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 2; ++k) expected += a(i, i) * b(k, k);
    CHECK(std::abs(kron(a, b).trace() - expected) <= 1e-13);
    CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) <= 1e-13);
  }
}

TEST_CASE("partial_transpose_b: diagonal matrices are fixed") {
  const Matrix4 d = Matrix4::diag({0.1, 0.2, 0.3, 0.4});
  CHECK(partial_transpose_b(d) == d);
}

TEST_CASE("partial_transpose_b: Bell projector spectrum") {
  const double h = std::sqrt(0.5);
  const Matrix4 bell = Matrix4::projector({h, 0, 0, h});
  const auto s = herm_eigen(partial_transpose_b(bell));
  CHECK(s.eigenvalues[0] == doctest::Approx(-0.5).epsilon(1e-14));
  for (int i = 1; i < 4; ++i) CHECK(s.eigenvalues[i] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("partial_transpose_b: |01><10| coherence moves to |00><11|") {
  Matrix4 m;
  m(1, 1) = 0.3;
  m(2, 2) = 0.7;
  m(1, 2) = m(2, 1) = std::sqrt(0.21);
  const Matrix4 pt = partial_transpose_b(m);
  CHECK(pt(0, 3) == m(1, 2));
  CHECK(pt(3, 0) == m(2, 1));
  CHECK(pt(1, 2) == cplx{});
  CHECK(pt(1, 1) == m(1, 1));
  CHECK(pt(2, 2) == m(2, 2));
}

TEST_CASE("partial_transpose_b: involutive, trace and Hermiticity preserving") {
  Rng rng(12);
  for (int n = 0; n < 200; ++n) {
    const Matrix4 m = oracle::random_complex<4>(rng);
    CHECK(partial_transpose_b(partial_transpose_b(m)) == m);
    CHECK(partial_transpose_b(m).trace() == m.trace());
    const Matrix4 h = oracle::random_hermitian(rng);
    CHECK(partial_transpose_b(h).hermitian_defect() == 0.0);
    CHECK(max_abs_diff(partial_transpose_b(h), oracle::pt_by_pauli_basis(h)) <= 1e-14);
  }
}

TEST_CASE("partial_trace: product and Bell cases") {
  Rng rng(13);
  const Matrix2 a = oracle::random_complex<2>(rng);
  const Matrix2 b = oracle::random_complex<2>(rng);
  CHECK(max_abs_diff(partial_trace(kron(a, b), Subsystem::B), a * b.trace()) <= 1e-14);
  CHECK(max_abs_diff(partial_trace(kron(a, b), Subsystem::A), b * a.trace()) <= 1e-14);

  const double h = std::sqrt(0.5);
  const Matrix4 bell = Matrix4::projector({h, 0, 0, h});
  CHECK(max_abs_diff(partial_trace(bell, Subsystem::A), 0.5 * Matrix2::identity()) <= 1e-15);
  CHECK(max_abs_diff(partial_trace(bell, Subsystem::B), 0.5 * Matrix2::identity()) <= 1e-15);
}

TEST_CASE("partial_trace: trace preserved (index-sum oracle)") {
  Rng rng(14);
  for (int n = 0; n < 100; ++n) {
    const Matrix4 m = oracle::random_hermitian(rng);
    cplx diag_sum{};
    for (std::size_t i = 0; i < 4; ++i) diag_sum += m(i, i);
    CHECK(std::abs(partial_trace(m, Subsystem::A).trace() - diag_sum) <= 1e-13);
    CHECK(std::abs(partial_trace(m, Subsystem::B).trace() - diag_sum) <= 1e-13);
  }
}

TEST_CASE("herm_eigen: diagonal and Pauli") {
  const auto d = herm_eigen(Matrix4::diag({3, 1, 2, 0}));
  CHECK(d.eigenvalues == std::array<double, 4>{0, 1, 2, 3});
  const auto x = herm_eigen(pauli::x());
  CHECK(x.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(x.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(max_residual(pauli::x(), x) <= 1e-15);
}

TEST_CASE("herm_eigen: eigenvalues match characteristic-polynomial roots") {
  Rng rng(15);
  for (int n = 0; n < 200; ++n) {
    const Matrix4 m = oracle::random_hermitian(rng);
    const auto s = herm_eigen(m);
    const auto roots = oracle::eigenvalues_by_roots(m);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(s.eigenvalues[i] - roots[i]) <= 1e-9);
  }
}

TEST_CASE("herm_eigen: residual, orthonormality and trace over 1000 matrices") {
  Rng rng(16);
  double worst_res = 0, worst_orth = 0, worst_trace = 0;
  for (int n = 0; n < 1000; ++n) {
    const Matrix4 m = oracle::random_hermitian(rng);
    const auto s = herm_eigen(m);
    worst_res = std::max(worst_res, max_residual(m, s));
    worst_orth = std::max(worst_orth, orthonormality_defect(s));
    double sum = 0;
    for (double v : s.eigenvalues) sum += v;
    worst_trace = std::max(worst_trace, std::abs(sum - m.trace().real()));
    CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
  }
  CHECK(worst_res <= tol::kResidual);
  CHECK(worst_orth <= tol::kResidual);
  CHECK(worst_trace <= 1e-10);
}

TEST_CASE("herm_eigen: degenerate and 16x16 inputs") {
  const auto s = herm_eigen(Matrix4::identity());
  CHECK(s.eigenvalues == std::array<double, 4>{1, 1, 1, 1});
  CHECK(orthonormality_defect(s) == 0.0);

  Rng rng(17);
  Matrix16 g = oracle::random_complex<16>(rng);
  const Matrix16 h = g + g.adjoint();
  const auto s16 = herm_eigen(h);
  CHECK(max_residual(h, s16) <= 1e-10);
  CHECK(orthonormality_defect(s16) <= 1e-10);
}

TEST_CASE("herm_eigen: rejects non-Hermitian input with the asymmetry") {
  Matrix4 m = Matrix4::identity();
  m(0, 1) = 0.25;
  try {
    (void)herm_eigen(m);
    FAIL("expected NotHermitianError");
  } catch (const NotHermitianError& e) {
    CHECK(e.max_asymmetry() == doctest::Approx(0.25));
  }
  m(0, 1) = 5e-10;  // within tolerance
  CHECK_NOTHROW((void)herm_eigen(m));
}

TEST_CASE("Lemma: trace of a product is bracketed by ordered eigenvalue sums") {
  Rng rng(18);
  for (int n = 0; n < 1000; ++n) {
    const Matrix4 f1 = oracle::random_hermitian(rng);
    const Matrix4 f2 = oracle::random_hermitian(rng);
    const auto l1 = herm_eigen(f1).eigenvalues;
    const auto l2 = herm_eigen(f2).eigenvalues;
    double same = 0, opposite = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      same += l1[i] * l2[i];
      opposite += l1[i] * l2[3 - i];
    }
    const double t = trace_product(f1, f2).real();
    CHECK(opposite <= t + 1e-10);
    CHECK(t <= same + 1e-10);
  }
}

TEST_CASE("psd_sqrt: identity, diagonal and Ginibre reconstruction") {
  CHECK(max_abs_diff(psd_sqrt(Matrix4::identity()), Matrix4::identity()) <= 1e-15);
  CHECK(max_abs_diff(psd_sqrt(Matrix4::diag({4, 1, 0, 9})), Matrix4::diag({2, 1, 0, 3})) <=
        1e-15);
  Rng rng(19);
  for (int n = 0; n < 200; ++n) {
    const Matrix4 g = oracle::random_complex<4>(rng);
    const Matrix4 p = g * g.adjoint();
    const Matrix4 s = psd_sqrt(p);
    CHECK(s.hermitian_defect() <= 1e-12);
    CHECK(herm_eigen(s).min() >= -1e-12);
    CHECK(max_abs_diff(s * s, p) <= 1e-9);
  }
}

TEST_CASE("psd_sqrt: clamps tiny negatives, rejects real ones") {
  CHECK_NOTHROW((void)psd_sqrt(Matrix4::diag({1, 1, 1, -5e-11})));
  try {
    (void)psd_sqrt(Matrix4::diag({1, 1, 1, -1e-3}));
    FAIL("expected NotPsdError");
  } catch (const NotPsdError& e) {
    CHECK(e.min_eigenvalue() == doctest::Approx(-1e-3));
  }
}
