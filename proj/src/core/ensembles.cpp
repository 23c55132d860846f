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

#include "core/ensembles.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace speclab {

namespace {

constexpr double kDetTol = 1e-8;
constexpr double kSymplecticTol = 1e-8;

void require_positive(std::size_t n) {
  if (n == 0) throw ContractError("dimension must be positive");
}

// Right-multiplies by diag(1, ..., 1, -1), i.e. negates the last column.
ComplexMatrix flip_last_column(ComplexMatrix m) {
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -m(i, n - 1);
  return m;
}

UnitaryView orthogonal_with_sign(std::size_t n, const StreamKey& key,
                                 double sign) {
  ComplexMatrix q = haar_orthogonal(n, key).matrix();
  const double det = determinant(q).real();
  if ((det < 0) != (sign < 0)) q = flip_last_column(std::move(q));
  const Complex d = determinant(q);
  if (std::abs(d - sign) > kDetTol) {
    throw NumericalError("orthogonal sample has det " +
                         std::to_string(d.real()) + ", expected " +
                         std::to_string(sign));
  }
  return UnitaryView(std::move(q));
}

}  // namespace

ComplexMatrix SymplecticForm::matrix(std::size_t half_n) {
  require_positive(half_n);
  ComplexMatrix j(2 * half_n);
  for (std::size_t b = 0; b < half_n; ++b) {
    j(2 * b, 2 * b + 1) = -1.0;
    j(2 * b + 1, 2 * b) = 1.0;
  }
  return j;
}

ComplexMatrix ginibre_complex(std::size_t n, const StreamKey& key) {
  require_positive(n);
  RandomStream rs(key);
  const double s = std::sqrt(0.5);
  ComplexMatrix g(n);
  for (Complex& z : g.entries()) {
    const double re = rs.next_normal();
    const double im = rs.next_normal();
    z = Complex(s * re, s * im);
  }
  return g;
}

ComplexMatrix ginibre_real(std::size_t n, const StreamKey& key) {
  require_positive(n);
  RandomStream rs(key);
  ComplexMatrix g(n);
  for (Complex& z : g.entries()) z = rs.next_normal();
  return g;
}

UnitaryView haar_unitary(std::size_t n, const StreamKey& key) {
  return qr_positive(ginibre_complex(n, key)).q;
}

UnitaryView haar_orthogonal(std::size_t n, const StreamKey& key) {
  ComplexMatrix q = qr_positive(ginibre_real(n, key)).q.matrix();
  // Householder QR of a real matrix stays real; clear signed zeros.
  for (Complex& z : q.entries()) z = z.real();
  return UnitaryView(std::move(q));
}

UnitaryView haar_so(std::size_t n, const StreamKey& key) {
  return orthogonal_with_sign(n, key, 1.0);
}

UnitaryView haar_so_minus(std::size_t n, const StreamKey& key) {
  return orthogonal_with_sign(n, key, -1.0);
}

UnitaryView haar_su(std::size_t n, const StreamKey& key) {
  ComplexMatrix u = haar_unitary(n, key).matrix();
  const Complex det = determinant(u);
  const Complex inv = std::conj(det) / std::norm(det);
  for (std::size_t i = 0; i < n; ++i) u(i, n - 1) *= inv;
  const Complex d = determinant(u);
  if (std::abs(d - 1.0) > kDetTol) {
    throw NumericalError("SU(n) sample has |det - 1| = " +
                         std::to_string(std::abs(d - 1.0)));
  }
  return UnitaryView(std::move(u));
}

// Quaternionic Ginibre in the 2x2 complex representation aligned with J:
// column 2j+1 is J * conj(column 2j), so G commutes with x -> J conj(x).
// Positive-diagonal QR is the complex form of quaternionic Gram-Schmidt and
// preserves that structure, which for a unitary means Q J Q^T = J.
UnitaryView haar_symplectic(std::size_t half_n, const StreamKey& key) {
  require_positive(half_n);
  const std::size_t dim = 2 * half_n;
  RandomStream rs(key);
  const double s = std::sqrt(0.5);
  ComplexMatrix g(dim);
  for (std::size_t c = 0; c < half_n; ++c) {
    for (std::size_t i = 0; i < dim; ++i) {
      const double re = rs.next_normal();
      const double im = rs.next_normal();
      g(i, 2 * c) = Complex(s * re, s * im);
    }
    for (std::size_t b = 0; b < half_n; ++b) {
      g(2 * b, 2 * c + 1) = -std::conj(g(2 * b + 1, 2 * c));
      g(2 * b + 1, 2 * c + 1) = std::conj(g(2 * b, 2 * c));
    }
  }
  UnitaryView q = qr_positive(g).q;
  const ComplexMatrix j = SymplecticForm::matrix(half_n);
  const ComplexMatrix qjqt = q.matrix() * j * q.matrix().transpose();
  const double dev = hs_distance(qjqt, j);
  if (dev > kSymplecticTol * std::sqrt(static_cast<double>(half_n))) {
    throw NumericalError("symplectic sample has ||UJU^T - J||_HS = " +
                         std::to_string(dev));
  }
  return q;
}

UnitaryView sample_coe(std::size_t n, const StreamKey& key) {
  const ComplexMatrix v = haar_unitary(n, key).matrix();
  return UnitaryView(v.transpose() * v);
}

UnitaryView sample_cse(std::size_t half_n, const StreamKey& key) {
  require_positive(half_n);
  const ComplexMatrix v = haar_unitary(2 * half_n, key).matrix();
  const ComplexMatrix j = SymplecticForm::matrix(half_n);
  return UnitaryView(j * v.transpose() * j.transpose() * v);
}

HermitianView gue_wigner(std::size_t n, const StreamKey& key) {
  const ComplexMatrix g = ginibre_complex(n, key);
  const double s = 1.0 / std::sqrt(2.0 * static_cast<double>(n));
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = 2.0 * s * g(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z = s * (g(i, j) + std::conj(g(j, i)));
      a(i, j) = z;
      a(j, i) = std::conj(z);
    }
  }
  return HermitianView(std::move(a));
}

HermitianView conjugate(const HermitianView& a, const ComplexMatrix& u) {
  if (u.dim() != a.dim()) throw ContractError("dimension mismatch");
  return HermitianView::symmetrized(u * a.matrix() * u.adjoint());
}

HermitianView compress(const HermitianView& a, const UnitaryView& u,
                       std::size_t k) {
  if (u.dim() != a.dim()) {
    throw ContractError("compress: A is " + std::to_string(a.dim()) +
                        "x" + std::to_string(a.dim()) + " but U is " +
                        std::to_string(u.dim()) + "x" +
                        std::to_string(u.dim()));
  }
  if (k == 0 || k > a.dim()) {
    throw ContractError("compress: k must lie in 1.." +
                        std::to_string(a.dim()));
  }
  const ComplexMatrix m = u.matrix() * a.matrix() * u.matrix().adjoint();
  return HermitianView::symmetrized(m.leading_block(k));
}

HermitianView randomized_sum(const HermitianView& a, const HermitianView& b,
                             const UnitaryView& u) {
  if (a.dim() != b.dim() || a.dim() != u.dim()) {
    throw ContractError("randomized_sum: dimension mismatch");
  }
  ComplexMatrix m = u.matrix() * a.matrix() * u.matrix().adjoint();
  m += b.matrix();
  return HermitianView::symmetrized(m);
}

HermitianView sample_compression(std::size_t n, std::size_t k,
                                 const StreamKey& key) {
  const HermitianView a = gue_wigner(n, key.with_substream(0));
  const UnitaryView u = haar_unitary(n, key.with_substream(1));
  return compress(a, u, k);
}

HermitianView sample_randomized_sum(std::size_t n, const StreamKey& key) {
  const HermitianView a = gue_wigner(n, key.with_substream(0));
  const HermitianView b = gue_wigner(n, key.with_substream(1));
  const UnitaryView u = haar_unitary(n, key.with_substream(2));
  return randomized_sum(a, b, u);
}

}  // namespace speclab
