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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/errors.hpp"
#include "core/measures.hpp"
#include "core/rng.hpp"
#include "core/transport.hpp"

using namespace speclab;

namespace {

EmpiricalMeasure line(std::vector<double> a) {
  return EmpiricalMeasure::from_atoms(Domain::kLine, std::move(a));
}

EmpiricalMeasure circle(std::vector<double> a) {
  return EmpiricalMeasure::from_atoms(Domain::kCircle, std::move(a));
}

// Same measure with every atom repeated r times.
EmpiricalMeasure replicate(const EmpiricalMeasure& m, std::size_t r) {
  std::vector<double> a;
  for (double x : m.atoms()) a.insert(a.end(), r, x);
  return EmpiricalMeasure::from_atoms(m.domain(), a);
}

// Minimum over all permutations; the brute-force oracle for the assignment
// solver.
double brute_force_assignment(const std::vector<double>& cost, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = INFINITY;
  do {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += cost[i * n + perm[i]];
    best = std::min(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Antiderivative of the semicircle CDF, zero at -2 and extended linearly.
double semicircle_cdf_primitive(double x) {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 2.0 + (x - 2.0);
  const double r = std::sqrt(4.0 - x * x);
  return x / 2.0 - r * r * r / (12.0 * kPi) + (x * std::asin(x / 2.0) + r) / kPi;
}

double semicircle_cdf_oracle(double x) {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  return 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * kPi) + std::asin(x / 2.0) / kPi;
}

// int_a^b |c - F(x)| dx, splitting where the monotone F crosses c.
double abs_gap_integral(double a, double b, double c) {
  if (b <= a) return 0.0;
  double lo = a, hi = b;
  if (semicircle_cdf_oracle(a) >= c) {
    hi = a;
  } else if (semicircle_cdf_oracle(b) <= c) {
    lo = b;
  } else {
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (semicircle_cdf_oracle(mid) < c ? lo : hi) = mid;
    }
  }
  const double x = 0.5 * (lo + hi);
  const auto P = semicircle_cdf_primitive;
  return (c * (x - a) - (P(x) - P(a))) + ((P(b) - P(x)) - c * (b - x));
}

// d1 between an empirical measure and the semicircle law in closed form.
double w1_semicircle_oracle(const EmpiricalMeasure& m) {
  const auto a = m.atoms();
  const std::size_t n = a.size();
  std::vector<double> cuts(a.begin(), a.end());
  cuts.push_back(-2.0);
  cuts.push_back(2.0);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    const double c =
        static_cast<double>(std::upper_bound(a.begin(), a.end(), mid) - a.begin()) /
        static_cast<double>(n);
    total += abs_gap_integral(cuts[i], cuts[i + 1], c);
  }
  return total;
}

}  // namespace

TEST_SUITE("transport") {

TEST_CASE("line examples") {
  const auto m = line({0.2, -1.0, 4.0});
  CHECK(wp_line(m, m, 1.0).value == 0.0);
  CHECK(wp_line(line({0.0}), line({3.0}), 1.0).value == doctest::Approx(3.0));
  CHECK(wp_line(line({0.0, 1.0}), line({1.0, 3.0}), 1.0).value ==
        doctest::Approx(1.5));
  // p = 2: sqrt((1 + 4)/2).
  CHECK(wp_line(line({0.0, 1.0}), line({1.0, 3.0}), 2.0).value ==
        doctest::Approx(std::sqrt(2.5)));
  CHECK(wp_line(m, m, 1.5).algorithm == TransportAlgorithm::kSortedPairing);
  CHECK_THROWS_AS(wp_line(line({0.0}), line({0.0, 1.0}), 1.0), ContractError);
  CHECK_THROWS_AS(wp_line(m, m, 0.5), ContractError);
  CHECK_THROWS_AS(wp_line(m, m, 3.0), ContractError);
  CHECK_THROWS_AS(wp_line(m, circle({0.0, 1.0, 2.0}), 1.0), ContractError);
}

TEST_CASE("w1_line_pair against replicated sorted pairing") {
  RandomStream rs(StreamKey{21, EnsembleTag::kGueWigner, 0, 0, 0});
  for (int t = 0; t < 300; ++t) {
    const auto na = static_cast<std::size_t>(1 + rs.next_u64() % 7);
    const auto nb = static_cast<std::size_t>(1 + rs.next_u64() % 7);
    std::vector<double> a(na), b(nb);
    for (auto& x : a) x = rs.next_normal();
    for (auto& x : b) x = rs.next_normal();
    const auto ma = line(a), mb = line(b);
    const std::size_t l = std::lcm(na, nb);
    const double want =
        wp_line(replicate(ma, l / na), replicate(mb, l / nb), 1.0).value;
    CHECK(w1_line_pair(ma, mb).value == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("circle examples") {
  CHECK(w1_circle_uniform(circle({1.234})).value == doctest::Approx(kPi / 2));
  CHECK(w1_circle_pair(circle({0.0}), circle({kPi})).value == doctest::Approx(kPi));
  const auto m = circle({0.1, 3.0, 6.0});
  CHECK(w1_circle_pair(m, m).value == 0.0);
  const auto r = w1_circle_uniform(m);
  REQUIRE(r.chordal.has_value());
  CHECK(r.chordal->lower == doctest::Approx(2.0 / kPi * r.value));
  CHECK(r.chordal->upper == doctest::Approx(r.value));
  CHECK(r.metric == GroundMetric::kCircleGeodesic);
  CHECK_THROWS_AS(w1_circle_uniform(line({0.0})), ContractError);
}

TEST_CASE("roots of unity") {
  for (std::size_t n = 1; n <= 64; ++n) {
    std::vector<double> a(n);
    for (std::size_t j = 0; j < n; ++j) a[j] = kTwoPi * double(j) / double(n);
    CHECK(std::abs(w1_circle_uniform(circle(a)).value - kPi / (2.0 * n)) < 1e-12);
    // A rotated copy gives the same value.
    CHECK(std::abs(w1_circle_uniform(circle(a).shifted(0.37)).value -
                   kPi / (2.0 * n)) < 1e-12);
  }
}

TEST_CASE("w1_circle_uniform against a fine discretization") {
  // Uniform on N equally spaced points is within pi/(2N) of the uniform law.
  const std::size_t big = 4096;
  std::vector<double> grid(big);
  for (std::size_t j = 0; j < big; ++j) grid[j] = kTwoPi * (j + 0.5) / double(big);
  const auto nu = circle(grid);
  RandomStream rs(StreamKey{22, EnsembleTag::kUnitary, 0, 0, 0});
  for (int t = 0; t < 40; ++t) {
    const auto n = static_cast<std::size_t>(1 + rs.next_u64() % 16);
    std::vector<double> a(n);
    for (auto& x : a) x = kTwoPi * rs.next_uniform();
    const auto m = circle(a);
    CHECK(std::abs(w1_circle_uniform(m).value - w1_circle_pair(m, nu).value) <=
          kPi / (2.0 * big) + 1e-12);
  }
}

TEST_CASE("w1_circle_pair against the assignment oracle") {
  RandomStream rs(StreamKey{23, EnsembleTag::kUnitary, 0, 0, 0});
  for (int t = 0; t < 300; ++t) {
    const auto n = static_cast<std::size_t>(1 + rs.next_u64() % 8);
    std::vector<double> a(n), b(n);
    for (auto& x : a) x = kTwoPi * rs.next_uniform();
    for (auto& x : b) x = kTwoPi * rs.next_uniform();
    const auto ma = circle(a), mb = circle(b);
    const double geo = w1_circle_pair(ma, mb).value;
    CHECK(std::abs(geo - assignment_oracle(ma, mb, GroundMetric::kCircleGeodesic,
                                           1.0).value) < 1e-9);
    const double chord =
        assignment_oracle(ma, mb, GroundMetric::kCircleChordal, 1.0).value;
    CHECK(chord <= geo + 1e-12);
    CHECK(geo <= kPi / 2.0 * chord + 1e-12);
  }
  // Unequal counts, through the replicated oracle.
  for (int t = 0; t < 100; ++t) {
    const std::size_t na = 3, nb = 4;
    std::vector<double> a(na), b(nb);
    for (auto& x : a) x = kTwoPi * rs.next_uniform();
    for (auto& x : b) x = kTwoPi * rs.next_uniform();
    const auto ma = circle(a), mb = circle(b);
    const double want = assignment_oracle(replicate(ma, 4), replicate(mb, 3),
                                          GroundMetric::kCircleGeodesic, 1.0)
                            .value;
    CHECK(std::abs(w1_circle_pair(ma, mb).value - want) < 1e-9);
  }
}

TEST_CASE("wp_line against the assignment oracle") {
  RandomStream rs(StreamKey{24, EnsembleTag::kUnitary, 0, 0, 0});
  for (int t = 0; t < 300; ++t) {
    const auto n = static_cast<std::size_t>(1 + rs.next_u64() % 8);
    const double p = 1.0 + rs.next_uniform();
    std::vector<double> a(n), b(n);
    for (auto& x : a) x = 3.0 * rs.next_normal();
    for (auto& x : b) x = 3.0 * rs.next_normal();
    const auto ma = line(a), mb = line(b);
    CHECK(std::abs(wp_line(ma, mb, p).value -
                   assignment_oracle(ma, mb, GroundMetric::kLineEuclidean, p).value) <
          1e-9);
  }
}

TEST_CASE("hungarian against brute force") {
  RandomStream rs(StreamKey{25, EnsembleTag::kUnitary, 0, 0, 0});
  for (int t = 0; t < 200; ++t) {
    const auto n = static_cast<std::size_t>(1 + rs.next_u64() % 7);
    std::vector<double> cost(n * n);
    for (auto& c : cost) c = rs.next_uniform() < 0.2 ? 1.0 : 10.0 * rs.next_uniform();
    CHECK(hungarian_min_cost(cost, n) ==
          doctest::Approx(brute_force_assignment(cost, n)).epsilon(1e-12));
  }
  std::vector<double> a(13, 0.0);
  CHECK_THROWS_AS(assignment_oracle(line(a), line(a),
                                    GroundMetric::kLineEuclidean, 1.0),
                  SizeGuardError);
  CHECK(assignment_oracle(line({1.0, 2.0}), line({1.0, 2.0}),
                          GroundMetric::kLineEuclidean, 1.0)
            .value == 0.0);
}

TEST_CASE("ground costs") {
  CHECK(ground_cost(GroundMetric::kLineEuclidean, -1.0, 2.0) == 3.0);
  CHECK(ground_cost(GroundMetric::kCircleGeodesic, 0.1, kTwoPi - 0.1) ==
        doctest::Approx(0.2));
  CHECK(ground_cost(GroundMetric::kCircleChordal, 0.0, kPi) == doctest::Approx(2.0));
  CHECK(ground_cost(GroundMetric::kCircleChordal, 0.0, 1.0) ==
        doctest::Approx(2.0 * std::sin(0.5)));
}

TEST_CASE("semicircle CDF") {
  CHECK(semicircle_cdf(0.0) == doctest::Approx(0.5));
  CHECK(semicircle_cdf(2.0) == 1.0);
  CHECK(semicircle_cdf(-2.0) == 0.0);
  CHECK(semicircle_cdf(5.0) == 1.0);
  CHECK(semicircle_cdf(1.0) ==
        doctest::Approx(0.5 + std::sqrt(3.0) / (4 * kPi) + 1.0 / 6.0));
  CHECK(semicircle_cdf(1.0) == doctest::Approx(0.80450).epsilon(1e-5));
  // Midpoint-rule integral of the density up to 1.
  const int steps = 200000;
  double acc = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double x = -2.0 + 3.0 * (i + 0.5) / steps;
    acc += std::sqrt(4.0 - x * x) / (2.0 * kPi) * 3.0 / steps;
  }
  CHECK(std::abs(semicircle_cdf(1.0) - acc) < 1e-6);
}

TEST_CASE("w1_line_vs_cdf") {
  const auto r = w1_line_vs_cdf(line({0.0}), semicircle_reference());
  CHECK(std::abs(r.value - 8.0 / (3.0 * kPi)) < 1e-10);
  CHECK(r.algorithm == TransportAlgorithm::kCdfIntegral);

  RandomStream rs(StreamKey{26, EnsembleTag::kGueWigner, 0, 0, 0});
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(1 + rs.next_u64() % 20);
    std::vector<double> a(n);
    for (auto& x : a) x = 1.5 * rs.next_normal();
    const auto m = line(a);
    CHECK(std::abs(w1_line_vs_cdf(m, semicircle_reference()).value -
                   w1_semicircle_oracle(m)) < 1e-9);
  }

  // Quantile midpoints approach the law.
  auto quantiles = [](std::size_t n) {
    std::vector<double> q(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double target = (i + 0.5) / double(n);
      double lo = -2.0, hi = 2.0;
      for (int k = 0; k < 100; ++k) {
        const double mid = 0.5 * (lo + hi);
        (semicircle_cdf_oracle(mid) < target ? lo : hi) = mid;
      }
      q[i] = 0.5 * (lo + hi);
    }
    return line(q);
  };
  const double d10 = w1_line_vs_cdf(quantiles(10), semicircle_reference()).value;
  const double d100 = w1_line_vs_cdf(quantiles(100), semicircle_reference()).value;
  CHECK(d100 < d10);
  CHECK(d100 < 0.01);
}

TEST_CASE("w1_to_reference dispatch") {
  const auto c = circle({0.5});
  CHECK(w1_to_reference(c, Reference{UniformCircleReference{}}).algorithm ==
        TransportAlgorithm::kCircleCdf);
  const auto l = line({0.0, 1.0});
  CHECK(w1_to_reference(l, Reference{SemicircleReference{}}).algorithm ==
        TransportAlgorithm::kCdfIntegral);
  CHECK(w1_to_reference(l, Reference{line({0.0, 2.0, 3.0})}).value ==
        doctest::Approx(w1_line_pair(l, line({0.0, 2.0, 3.0})).value));
  CHECK_THROWS_AS(w1_to_reference(l, Reference{UniformCircleReference{}}),
                  ContractError);
  CHECK_THROWS_AS(w1_to_reference(c, Reference{l}), ContractError);
}

}  // TEST_SUITE
