// Copyright 2026 The speclab Authors.
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

// Dense complex linear algebra: norms, positive-diagonal QR, Hermitian
// eigendecomposition (Householder tridiagonalization + implicit-shift QL)
// and eigenangles of unitary matrices.

#ifndef SPECLAB_CORE_MATLIN_HPP
#define SPECLAB_CORE_MATLIN_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace speclab {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.141592653589793238462643383279;

// Square n x n complex matrix, row-major.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t n);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> d);
  static ComplexMatrix diagonal(std::span<const double> d);

  std::size_t dim() const noexcept { return n_; }

  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  std::span<const Complex> entries() const noexcept { return a_; }
  std::span<Complex> entries() noexcept { return a_; }
  const Complex* row(std::size_t i) const { return a_.data() + i * n_; }
  Complex* row(std::size_t i) { return a_.data() + i * n_; }

  bool all_finite() const noexcept;

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  // Top-left k x k block.
  ComplexMatrix leading_block(std::size_t k) const;

  ComplexMatrix& operator+=(const ComplexMatrix& b);
  ComplexMatrix& operator-=(const ComplexMatrix& b);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Complex> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Hermitian matrix; construction checks ||A - A*||_HS <= 1e-12 ||A||_HS.
class HermitianView {
 public:
  explicit HermitianView(ComplexMatrix m);
  // Replaces m by (m + m*)/2 first; for products that are Hermitian only up
  // to rounding.
  static HermitianView symmetrized(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }

 private:
  ComplexMatrix m_;
};

// Unitary matrix; construction checks ||U U* - I||_HS <= 1e-10 sqrt(n).
class UnitaryView {
 public:
  explicit UnitaryView(ComplexMatrix m);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }

 private:
  ComplexMatrix m_;
};

// Real eigenvalues, ascending.
class SpectrumLine {
 public:
  // Sorts; rejects non-finite values.
  explicit SpectrumLine(std::vector<double> values);

  std::span<const double> values() const noexcept { return v_; }
  std::size_t size() const noexcept { return v_.size(); }
  double min() const { return v_.front(); }
  double max() const { return v_.back(); }

 private:
  std::vector<double> v_;
};

// Eigenangles in [0, 2pi), ascending.
class SpectrumCircle {
 public:
  // Wraps every angle into [0, 2pi) and sorts (stable, so ties keep input
  // order).
  explicit SpectrumCircle(std::vector<double> angles);

  std::span<const double> angles() const noexcept { return a_; }
  std::size_t size() const noexcept { return a_.size(); }

 private:
  std::vector<double> a_;
};

// Maps any finite angle to [0, 2pi).
double wrap_angle(double theta);

double hs_norm(const ComplexMatrix& a);
double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b);

double op_norm(const HermitianView& a);
double spectral_diameter(const HermitianView& a);

struct QrResult {
  UnitaryView q;
  ComplexMatrix r;
};

// G = QR with R upper triangular and diag(R) > 0. Throws
// DegenerateInputError when a diagonal entry of R falls below 1e-300.
QrResult qr_positive(const ComplexMatrix& g);

struct HermitianEigen {
  SpectrumLine values;
  // Column j is the unit eigenvector for values[j].
  ComplexMatrix vectors;
};

SpectrumLine eig_hermitian(const HermitianView& a);
HermitianEigen eig_hermitian_vectors(const HermitianView& a);

SpectrumCircle eig_unitary_angles(const UnitaryView& u);

// LU with partial pivoting.
Complex determinant(const ComplexMatrix& a);

}  // namespace speclab

#endif  // SPECLAB_CORE_MATLIN_HPP
