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

#include <doctest.h>

#include <cmath>

#include "core/ensembles.hpp"
#include "core/errors.hpp"
#include "core/matlin.hpp"

using namespace speclab;

namespace {

Complex trace(const ComplexMatrix& a) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

StreamKey key(std::uint64_t rep, std::uint64_t n = 5) {
  return StreamKey{11, EnsembleTag::kUnitary, n, rep, 0};
}

}  // namespace

TEST_SUITE("matlin") {

TEST_CASE("construction and arithmetic") {
  CHECK_THROWS_AS(ComplexMatrix(0), ContractError);
  CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), ContractError);
  const ComplexMatrix a{{1.0, 2.0}, {3.0, 4.0}};
  const ComplexMatrix b{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix ab = a * b;
  CHECK(ab == ComplexMatrix{{2.0, 1.0}, {4.0, 3.0}});
  CHECK((a + b) - b == a);
  CHECK(a.transpose() == ComplexMatrix{{1.0, 3.0}, {2.0, 4.0}});
  const ComplexMatrix c{{Complex(0, 1), 2.0}, {0.0, 1.0}};
  CHECK(c.adjoint()(0, 0) == Complex(0, -1));
  CHECK(c.adjoint()(1, 0) == Complex(2, 0));
  CHECK(a.leading_block(1) == ComplexMatrix{{1.0}});
  CHECK_THROWS_AS(a.leading_block(3), ContractError);
  CHECK_THROWS_AS(a * ComplexMatrix(3), ContractError);
}

TEST_CASE("norms") {
  const ComplexMatrix id = ComplexMatrix::identity(4);
  CHECK(hs_norm(id) == doctest::Approx(2.0));
  const ComplexMatrix a{{3.0, Complex(0, 4)}, {0.0, 0.0}};
  CHECK(hs_norm(a) == doctest::Approx(5.0));
  CHECK(hs_distance(a, a) == 0.0);
  const HermitianView h(ComplexMatrix{{2.0, 1.0}, {1.0, 2.0}});
  CHECK(op_norm(h) == doctest::Approx(3.0));
  CHECK(spectral_diameter(h) == doctest::Approx(2.0));
}

TEST_CASE("views validate their input") {
  CHECK_THROWS_AS(HermitianView(ComplexMatrix{{1.0, 2.0}, {0.0, 1.0}}),
                  ContractError);
  CHECK_THROWS_AS(UnitaryView(ComplexMatrix{{2.0, 0.0}, {0.0, 1.0}}),
                  ContractError);
  ComplexMatrix bad = ComplexMatrix::identity(2);
  bad(0, 0) = std::nan("");
  CHECK_THROWS_AS(HermitianView{bad}, ContractError);
  CHECK_THROWS_AS(SpectrumLine({1.0, std::nan("")}), ContractError);
  CHECK_THROWS_AS(SpectrumLine({}), ContractError);
}

TEST_CASE("wrap_angle and spectrum ordering") {
  CHECK(wrap_angle(-0.25) == doctest::Approx(kTwoPi - 0.25));
  CHECK(wrap_angle(kTwoPi) == 0.0);
  CHECK(wrap_angle(3 * kTwoPi + 1.0) == doctest::Approx(1.0));
  const SpectrumCircle s({-0.5, 7.0, 0.1});
  CHECK(s.angles()[0] == doctest::Approx(0.1));
  CHECK(s.angles()[1] == doctest::Approx(7.0 - kTwoPi));
  CHECK(s.angles()[2] == doctest::Approx(kTwoPi - 0.5));
  const SpectrumLine l({3.0, -1.0, 2.0});
  CHECK(l.min() == -1.0);
  CHECK(l.max() == 3.0);
}

TEST_CASE("hand-solved Hermitian eigenvalues") {
  {
    const auto s = eig_hermitian(HermitianView(ComplexMatrix{{2.0, 1.0}, {1.0, 2.0}}));
    CHECK(s.values()[0] == doctest::Approx(1.0));
    CHECK(s.values()[1] == doctest::Approx(3.0));
  }
  {
    // [[1, i], [-i, 1]] has eigenvalues 0 and 2.
    const auto s = eig_hermitian(HermitianView(
        ComplexMatrix{{1.0, Complex(0, 1)}, {Complex(0, -1), 1.0}}));
    CHECK(std::abs(s.values()[0]) < 1e-14);
    CHECK(s.values()[1] == doctest::Approx(2.0));
  }
  {
    // Path graph on 3 vertices: 0, +-sqrt(2).
    const auto s = eig_hermitian(HermitianView(
        ComplexMatrix{{0.0, 1.0, 0.0}, {1.0, 0.0, 1.0}, {0.0, 1.0, 0.0}}));
    CHECK(s.values()[0] == doctest::Approx(-std::sqrt(2.0)));
    CHECK(std::abs(s.values()[1]) < 1e-14);
    CHECK(s.values()[2] == doctest::Approx(std::sqrt(2.0)));
  }
  {
    const std::vector<double> d{4.0, -2.0, 0.5, 0.5};
    const auto s = eig_hermitian(HermitianView(ComplexMatrix::diagonal(d)));
    CHECK(s.values()[0] == -2.0);
    CHECK(s.values()[3] == 4.0);
  }
  {
    const auto s = eig_hermitian(HermitianView(ComplexMatrix{{-7.5}}));
    CHECK(s.values()[0] == -7.5);
  }
}

TEST_CASE("Hermitian eigen: trace identities and residuals") {
  for (std::size_t n : {2u, 5u, 17u, 40u}) {
    const HermitianView a = gue_wigner(n, key(n, n));
    const HermitianEigen e = eig_hermitian_vectors(a);
    double s1 = 0.0, s2 = 0.0;
    for (double x : e.values.values()) {
      s1 += x;
      s2 += x * x;
    }
    CHECK(s1 == doctest::Approx(trace(a.matrix()).real()).epsilon(1e-10));
    CHECK(s2 == doctest::Approx(std::pow(hs_norm(a.matrix()), 2)).epsilon(1e-10));
    const ComplexMatrix& v = e.vectors;
    CHECK(hs_distance(v.adjoint() * v, ComplexMatrix::identity(n)) < 1e-10);
    const ComplexMatrix av = a.matrix() * v;
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        worst = std::max(worst,
                         std::abs(av(i, j) - e.values.values()[j] * v(i, j)));
      }
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("unitary eigenangles") {
  {
    const std::vector<Complex> d{std::polar(1.0, 0.3), std::polar(1.0, -1.0),
                                 std::polar(1.0, 3.0)};
    const auto s = eig_unitary_angles(UnitaryView(ComplexMatrix::diagonal(d)));
    CHECK(s.angles()[0] == doctest::Approx(0.3));
    CHECK(s.angles()[1] == doctest::Approx(3.0));
    CHECK(s.angles()[2] == doctest::Approx(kTwoPi - 1.0));
  }
  {
    // Real rotation by theta has eigenangles theta and 2pi - theta.
    const double t = 0.7;
    const auto s = eig_unitary_angles(UnitaryView(ComplexMatrix{
        {std::cos(t), -std::sin(t)}, {std::sin(t), std::cos(t)}}));
    CHECK(s.angles()[0] == doctest::Approx(t));
    CHECK(s.angles()[1] == doctest::Approx(kTwoPi - t));
  }
  {
    const auto s = eig_unitary_angles(UnitaryView(-1.0 * ComplexMatrix::identity(3)));
    for (double a : s.angles()) CHECK(a == doctest::Approx(kPi));
  }
  {
    const auto s = eig_unitary_angles(UnitaryView(ComplexMatrix::identity(4)));
    for (double a : s.angles()) CHECK(std::abs(a) < 1e-12);
  }
}

TEST_CASE("unitary eigenangles reproduce trace powers") {
  for (std::size_t n : {3u, 8u, 33u}) {
    const UnitaryView u = haar_unitary(n, key(2, n));
    const auto s = eig_unitary_angles(u);
    ComplexMatrix power = ComplexMatrix::identity(n);
    for (int k = 1; k <= 3; ++k) {
      power = power * u.matrix();
      Complex sum = 0.0;
      for (double a : s.angles()) sum += std::polar(1.0, k * a);
      CHECK(std::abs(sum - trace(power)) < 1e-9);
    }
  }
}

TEST_CASE("qr_positive") {
  const ComplexMatrix g = ginibre_complex(6, key(3));
  const QrResult qr = qr_positive(g);
  CHECK(hs_distance(qr.q.matrix() * qr.r, g) < 1e-12);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(qr.r(i, i).real() > 0.0);
    CHECK(qr.r(i, i).imag() == 0.0);
    for (std::size_t j = 0; j < i; ++j) CHECK(qr.r(i, j) == Complex(0.0));
  }
  CHECK_THROWS_AS(qr_positive(ComplexMatrix(3)), DegenerateInputError);
}

TEST_CASE("determinant") {
  CHECK(std::abs(determinant(ComplexMatrix{{1.0, 2.0}, {3.0, 4.0}}) - (-2.0)) <
        1e-14);
  CHECK(std::abs(determinant(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}) - (-1.0)) <
        1e-14);
  const ComplexMatrix t{{2.0, 5.0, Complex(0, 1)}, {0.0, 3.0, 7.0}, {0.0, 0.0, Complex(0, 1)}};
  CHECK(std::abs(determinant(t) - Complex(0, 6)) < 1e-13);
  CHECK(std::abs(std::abs(determinant(haar_unitary(9, key(4, 9)).matrix())) - 1.0) <
        1e-12);
}

}  // TEST_SUITE
