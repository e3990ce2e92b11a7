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

// Small dense complex matrices for one- and two-qubit operators.
//
// Dimensions are compile-time constants. Two-qubit operators use the basis
// order |00>, |01>, |10>, |11>, i.e. row index = 2 * a + b with a the qubit
// of subsystem A and b the qubit of subsystem B.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "spapt/errors.hpp"

namespace spapt {

using cplx = std::complex<double>;

namespace tol {
/// Max |M - M^dagger| entry accepted as Hermitian.
inline constexpr double kValidate = 1e-9;
/// Eigen-residual and orthonormality bound for a Spectrum.
inline constexpr double kResidual = 1e-10;
/// Eigenvalues in [-kPsdClamp, 0) are treated as zero.
inline constexpr double kPsdClamp = 1e-10;
/// Jacobi stops once the off-diagonal Frobenius norm drops below this
/// (relative to max(1, ||M||_F)).
inline constexpr double kJacobiOffDiag = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;
}  // namespace tol

template <std::size_t N>
using Vector = std::array<cplx, N>;

template <std::size_t N>
class Matrix {
 public:
  static constexpr std::size_t dim = N;

  constexpr Matrix() : data_{} {}

  static Matrix zero() { return Matrix{}; }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diag(const std::array<double, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  /// |v><w|
  static Matrix outer(const Vector<N>& v, const Vector<N>& w) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = v[i] * std::conj(w[j]);
    return m;
  }

  static Matrix projector(const Vector<N>& v) { return outer(v, v); }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * N + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * N + j];
  }

  const std::array<cplx, N * N>& data() const { return data_; }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(cplx s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
  friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= cplx(s); }
  friend Matrix operator*(Matrix a, double s) { return a *= cplx(s); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix c;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        for (std::size_t j = 0; j < N; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vector<N> operator*(const Matrix& a, const Vector<N>& v) {
    Vector<N> r{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r[i] += a(i, j) * v[j];
    return r;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix adjoint() const {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
  }

  Matrix transpose() const {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = (*this)(j, i);
    return m;
  }

  Matrix conjugate() const {
    Matrix m;
    for (std::size_t k = 0; k < N * N; ++k) m.data_[k] = std::conj(data_[k]);
    return m;
  }

  cplx trace() const {
    cplx t{};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& x : data_) m = std::max(m, std::abs(x));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& x : data_) s += std::norm(x);
    return std::sqrt(s);
  }

  /// max_ij |M_ij - conj(M_ji)|
  double hermitian_defect() const {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i; j < N; ++j)
        m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
  }

 private:
  std::array<cplx, N * N> data_;
};

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;
using Matrix16 = Matrix<16>;

/// max_ij |a_ij - b_ij|
template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  return (a - b).max_abs();
}

template <std::size_t N>
cplx inner(const Vector<N>& v, const Vector<N>& w) {
  cplx s{};
  for (std::size_t i = 0; i < N; ++i) s += std::conj(v[i]) * w[i];
  return s;
}

template <std::size_t N>
double norm(const Vector<N>& v) {
  return std::sqrt(std::real(inner(v, v)));
}

/// <v|M|v>
template <std::size_t N>
cplx expectation(const Matrix<N>& m, const Vector<N>& v) {
  return inner(v, m * v);
}

/// Tr(A B) without forming the product.
template <std::size_t N>
cplx trace_product(const Matrix<N>& a, const Matrix<N>& b) {
  cplx s{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) s += a(i, k) * b(k, i);
  return s;
}

/// Kronecker product with row index i * M + k for a(i, .) and b(k, .).
template <std::size_t N, std::size_t M>
Matrix<N * M> kron(const Matrix<N>& a, const Matrix<M>& b) {
  Matrix<N * M> c;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < M; ++k)
        for (std::size_t l = 0; l < M; ++l)
          c(i * M + k, j * M + l) = a(i, j) * b(k, l);
  return c;
}

namespace pauli {
inline Matrix2 id() { return Matrix2::identity(); }
inline Matrix2 x() {
  Matrix2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}
inline Matrix2 y() {
  Matrix2 m;
  m(0, 1) = cplx(0.0, -1.0);
  m(1, 0) = cplx(0.0, 1.0);
  return m;
}
inline Matrix2 z() { return Matrix2::diag({1.0, -1.0}); }
/// sigma_0 = I, sigma_1 = X, sigma_2 = Y, sigma_3 = Z
inline std::array<Matrix2, 4> all() { return {id(), x(), y(), z()}; }
}  // namespace pauli

/// Transposes every 2x2 block acting on subsystem B.
Matrix4 partial_transpose_b(const Matrix4& m);

enum class Subsystem { A, B };

/// Traces out `traced`; the result acts on the remaining qubit.
Matrix2 partial_trace(const Matrix4& m, Subsystem traced);

template <std::size_t N>
struct Spectrum {
  /// Ascending.
  std::array<double, N> eigenvalues{};
  /// Column i is the eigenvector paired with eigenvalues[i].
  Matrix<N> eigenvectors;

  Vector<N> eigenvector(std::size_t i) const {
    Vector<N> v{};
    for (std::size_t r = 0; r < N; ++r) v[r] = eigenvectors(r, i);
    return v;
  }
  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
};

/// Full spectrum of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Throws NotHermitianError when the Hermitian defect exceeds tol::kValidate.
template <std::size_t N>
Spectrum<N> herm_eigen(const Matrix<N>& m);

/// Largest ||M v_i - lambda_i v_i||_2 over the spectrum.
template <std::size_t N>
double max_residual(const Matrix<N>& m, const Spectrum<N>& s);

/// Largest |<v_i|v_j> - delta_ij|.
template <std::size_t N>
double orthonormality_defect(const Spectrum<N>& s);

/// Hermitian PSD square root. Eigenvalues down to -tol::kPsdClamp are
/// clamped to zero; anything lower throws NotPsdError.
template <std::size_t N>
Matrix<N> psd_sqrt(const Matrix<N>& m);

/// V diag(f(lambda)) V^dagger
template <std::size_t N, class F>
Matrix<N> spectral_apply(const Spectrum<N>& s, F&& f) {
  Matrix<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    const double fk = f(s.eigenvalues[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        out(i, j) += fk * s.eigenvectors(i, k) * std::conj(s.eigenvectors(j, k));
  }
  return out;
}

extern template Spectrum<2> herm_eigen(const Matrix<2>&);
extern template Spectrum<4> herm_eigen(const Matrix<4>&);
extern template Spectrum<8> herm_eigen(const Matrix<8>&);
extern template Spectrum<16> herm_eigen(const Matrix<16>&);
extern template double max_residual(const Matrix<2>&, const Spectrum<2>&);
extern template double max_residual(const Matrix<4>&, const Spectrum<4>&);
extern template double max_residual(const Matrix<16>&, const Spectrum<16>&);
extern template double orthonormality_defect(const Spectrum<2>&);
extern template double orthonormality_defect(const Spectrum<4>&);
extern template double orthonormality_defect(const Spectrum<16>&);
extern template Matrix<2> psd_sqrt(const Matrix<2>&);
extern template Matrix<4> psd_sqrt(const Matrix<4>&);

}  // namespace spapt
