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

#include "spapt/qmat.hpp"

#include <numeric>

#include <fmt/core.h>

namespace spapt {

NotHermitianError::NotHermitianError(double max_asymmetry)
    : InputError(fmt::format("matrix is not Hermitian: max |M - M^dagger| = {:.3e}",
                             max_asymmetry)),
      max_asymmetry_(max_asymmetry) {}

NotPsdError::NotPsdError(double min_eigenvalue)
    : std::domain_error(fmt::format(
          "matrix is not positive semidefinite: min eigenvalue = {:.3e}",
          min_eigenvalue)),
      min_eigenvalue_(min_eigenvalue) {}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::NotHermitian: return "not Hermitian";
    case Violation::Kind::TraceNotOne: return "trace deviation";
    case Violation::Kind::NotPsd: return "negative eigenvalue";
    case Violation::Kind::NotFinite: return "non-finite entry";
  }
  return "unknown";
}

namespace {
std::string describe(const std::vector<Violation>& vs) {
  std::string msg = "invalid density matrix:";
  for (const auto& v : vs)
    msg += fmt::format(" {} {:.6g};", to_string(v.kind), v.magnitude);
  return msg;
}
}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(describe(violations)),
      violations_(std::move(violations)) {}

bool ValidationError::has(Violation::Kind kind) const noexcept {
  return std::any_of(violations_.begin(), violations_.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

ConstructionError::ConstructionError(const std::string& what,
                                     std::vector<double> spectrum)
    : std::logic_error(what), spectrum_(std::move(spectrum)) {}

Matrix4 partial_transpose_b(const Matrix4& m) {
  Matrix4 out;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t ap = 0; ap < 2; ++ap)
        for (std::size_t bp = 0; bp < 2; ++bp)
          out(2 * a + b, 2 * ap + bp) = m(2 * a + bp, 2 * ap + b);
  return out;
}

Matrix2 partial_trace(const Matrix4& m, Subsystem traced) {
  Matrix2 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        out(i, j) += traced == Subsystem::B ? m(2 * i + k, 2 * j + k)
                                            : m(2 * k + i, 2 * k + j);
  return out;
}

template <std::size_t N>
Spectrum<N> herm_eigen(const Matrix<N>& m) {
  const double defect = m.hermitian_defect();
  if (!(defect <= tol::kValidate)) throw NotHermitianError(defect);

  Matrix<N> a;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  Matrix<N> v = Matrix<N>::identity();

  const double threshold = tol::kJacobiOffDiag * std::max(1.0, a.frobenius_norm());
  auto off_norm = [&a] {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < tol::kJacobiMaxSweeps; ++sweep) {
    if (off_norm() <= threshold) break;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const cplx g = a(p, q);
        const double r = std::abs(g);
        if (r == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Phase diag(1, e^{-i phi}) makes the pivot real, then a real
        // rotation annihilates it.
        const double theta = (aqq - app) / (2.0 * r);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) /
              (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const cplx phase_conj = std::conj(g / r);
        const cplx upp = c, upq = s;
        const cplx uqp = -s * phase_conj, uqq = c * phase_conj;

        for (std::size_t k = 0; k < N; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
        for (std::size_t k = 0; k < N; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&a](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  Spectrum<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < N; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

template <std::size_t N>
double max_residual(const Matrix<N>& m, const Spectrum<N>& s) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    const Vector<N> vi = s.eigenvector(i);
    Vector<N> r = m * vi;
    for (std::size_t k = 0; k < N; ++k) r[k] -= s.eigenvalues[i] * vi[k];
    worst = std::max(worst, norm(r));
  }
  return worst;
}

template <std::size_t N>
double orthonormality_defect(const Spectrum<N>& s) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const cplx ip = inner(s.eigenvector(i), s.eigenvector(j));
      worst = std::max(worst, std::abs(ip - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

template <std::size_t N>
Matrix<N> psd_sqrt(const Matrix<N>& m) {
  const Spectrum<N> s = herm_eigen(m);
  if (s.min() < -tol::kPsdClamp) throw NotPsdError(s.min());
  return spectral_apply(s, [](double x) { return std::sqrt(std::max(0.0, x)); });
}

template Spectrum<2> herm_eigen(const Matrix<2>&);
template Spectrum<4> herm_eigen(const Matrix<4>&);
template Spectrum<8> herm_eigen(const Matrix<8>&);
template Spectrum<16> herm_eigen(const Matrix<16>&);
template double max_residual(const Matrix<2>&, const Spectrum<2>&);
template double max_residual(const Matrix<4>&, const Spectrum<4>&);
template double max_residual(const Matrix<16>&, const Spectrum<16>&);
template double orthonormality_defect(const Spectrum<2>&);
template double orthonormality_defect(const Spectrum<4>&);
template double orthonormality_defect(const Spectrum<16>&);
template Matrix<2> psd_sqrt(const Matrix<2>&);
template Matrix<4> psd_sqrt(const Matrix<4>&);

}  // namespace spapt
