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

#include "core/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "core/ensembles.hpp"
#include "core/errors.hpp"
#include "core/experiments.hpp"
#include "core/matlin.hpp"
#include "core/measures.hpp"
#include "core/rng.hpp"
#include "core/transport.hpp"

namespace speclab {

void VerifyReport::merge(const VerifyReport& other) {
  checks += other.checks;
  violations += other.violations;
  details.insert(details.end(), other.details.begin(), other.details.end());
}

namespace {

class Checker {
 public:
  explicit Checker(std::string suite) { report_.suite = std::move(suite); }

  void expect(bool ok, const std::string& what) {
    ++report_.checks;
    if (!ok) {
      ++report_.violations;
      report_.details.push_back(report_.suite + ": " + what);
    }
  }

  void expect_close(double got, double want, double tol,
                    const std::string& what) {
    std::ostringstream os;
    os.precision(17);
    os << what << " got=" << got << " want=" << want;
    expect(std::abs(got - want) <= tol, os.str());
  }

  VerifyReport take() { return std::move(report_); }

 private:
  VerifyReport report_;
};

std::string tag(const char* what, std::uint64_t trial) {
  return std::string(what) + " (trial " + std::to_string(trial) + ")";
}

// Atoms drawn so that ties, near-ties and wrap-around clusters show up.
std::vector<double> random_line_atoms(RandomStream& rs, std::size_t n) {
  std::vector<double> x(n);
  for (auto& v : x) v = rs.next_normal();
  if (n > 1 && rs.next_uniform() < 0.2) x[n - 1] = x[0];
  return x;
}

std::vector<double> random_circle_atoms(RandomStream& rs, std::size_t n) {
  std::vector<double> x(n);
  const bool clustered = rs.next_uniform() < 0.3;
  for (auto& v : x) {
    v = clustered ? 0.3 * rs.next_normal() : kTwoPi * rs.next_uniform();
  }
  if (n > 1 && rs.next_uniform() < 0.2) x[n - 1] = x[0];
  return x;
}

}  // namespace

VerifyReport verify_lipschitz(std::uint64_t trials, std::uint64_t seed) {
  const LipschitzReport r = run_lipschitz_suite(trials, 16, seed);
  VerifyReport out;
  out.suite = "lipschitz";
  out.checks = 4 * r.trials;
  out.violations = r.total_violations();
  for (const auto& d : r.details) out.details.push_back("lipschitz: " + d);
  return out;
}

VerifyReport verify_transport_oracle(std::uint64_t trials,
                                     std::uint64_t seed) {
  Checker c("transport-oracle");

  for (std::size_t n = 1; n <= 64; ++n) {
    std::vector<double> roots(n);
    for (std::size_t j = 0; j < n; ++j) {
      roots[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    }
    const auto m = EmpiricalMeasure::from_atoms(Domain::kCircle, roots);
    c.expect_close(w1_circle_uniform(m).value,
                   kPi / (2.0 * static_cast<double>(n)),
                   kRootsOfUnityTolerance,
                   "roots of unity n=" + std::to_string(n));
  }

  for (std::uint64_t t = 0; t < trials; ++t) {
    RandomStream rs(StreamKey{seed, EnsembleTag::kUnitary, 0, t, 7});
    const auto n = static_cast<std::size_t>(1 + rs.next_u64() % 8);
    const double p = 1.0 + rs.next_uniform();

    const auto l1 =
        EmpiricalMeasure::from_atoms(Domain::kLine, random_line_atoms(rs, n));
    const auto l2 =
        EmpiricalMeasure::from_atoms(Domain::kLine, random_line_atoms(rs, n));
    const auto l3 =
        EmpiricalMeasure::from_atoms(Domain::kLine, random_line_atoms(rs, n));
    for (double pp : {1.0, 2.0, p}) {
      const double oracle =
          assignment_oracle(l1, l2, GroundMetric::kLineEuclidean, pp).value;
      c.expect_close(wp_line(l1, l2, pp).value, oracle, kOracleTolerance,
                     tag("wp_line vs oracle", t));
    }
    const double w1 = wp_line(l1, l2, 1.0).value;
    const double w2 = wp_line(l1, l2, 2.0).value;
    c.expect_close(w1_line_pair(l1, l2).value, w1, kOracleTolerance,
                   tag("cdf integral vs pairing", t));
    c.expect(w1 <= w2 + kOracleTolerance, tag("p-monotonicity", t));
    c.expect(std::abs(wp_line(l2, l1, p).value - wp_line(l1, l2, p).value) <=
                 kOracleTolerance,
             tag("line symmetry", t));
    c.expect(wp_line(l1, l3, p).value <=
                 wp_line(l1, l2, p).value + wp_line(l2, l3, p).value +
                     kOracleTolerance,
             tag("line triangle", t));
    c.expect(wp_line(l1, l1, p).value == 0.0, tag("line identity", t));

    const auto c1 = EmpiricalMeasure::from_atoms(Domain::kCircle,
                                                 random_circle_atoms(rs, n));
    const auto c2 = EmpiricalMeasure::from_atoms(Domain::kCircle,
                                                 random_circle_atoms(rs, n));
    const auto c3 = EmpiricalMeasure::from_atoms(Domain::kCircle,
                                                 random_circle_atoms(rs, n));
    const DistanceResult geo = w1_circle_pair(c1, c2);
    c.expect_close(
        geo.value,
        assignment_oracle(c1, c2, GroundMetric::kCircleGeodesic, 1.0).value,
        kOracleTolerance, tag("w1_circle_pair vs oracle", t));
    const double chord =
        assignment_oracle(c1, c2, GroundMetric::kCircleChordal, 1.0).value;
    c.expect(geo.chordal.has_value() &&
                 chord >= geo.chordal->lower - kOracleTolerance &&
                 chord <= geo.chordal->upper + kOracleTolerance,
             tag("chordal sandwich", t));
    c.expect(std::abs(w1_circle_pair(c2, c1).value - geo.value) <=
                 kOracleTolerance,
             tag("circle symmetry", t));
    c.expect(w1_circle_pair(c1, c3).value <=
                 geo.value + w1_circle_pair(c2, c3).value + kOracleTolerance,
             tag("circle triangle", t));
    const double phi = kTwoPi * rs.next_uniform();
    c.expect(std::abs(w1_circle_pair(c1.shifted(phi), c2.shifted(phi)).value -
                      geo.value) <= kOracleTolerance,
             tag("rotation invariance", t));

    // Dual form: |X_f| <= L d_1 for a random L-Lipschitz piecewise linear f.
    {
      const double lip = 0.5 + rs.next_uniform();
      std::vector<double> knots{-3.0, -1.0, 0.0, 1.0, 3.0};
      std::vector<double> values(knots.size(), 0.0);
      for (std::size_t i = 3; i < knots.size(); ++i) {
        values[i] = values[i - 1] +
                    lip * (2.0 * rs.next_uniform() - 1.0) *
                        (knots[i] - knots[i - 1]);
      }
      for (std::size_t i = 2; i-- > 0;) {
        values[i] = values[i + 1] +
                    lip * (2.0 * rs.next_uniform() - 1.0) *
                        (knots[i + 1] - knots[i]);
      }
      const PiecewiseLinearTestFunction f(Domain::kLine, knots, values, lip);
      const double xf = test_function_statistic(f, l1, Reference{l2});
      c.expect(std::abs(xf) <= lip * w1 + 1e-10, tag("dual form bound", t));
    }
  }
  return c.take();
}

VerifyReport verify_group_membership(std::uint64_t trials,
                                     std::uint64_t seed) {
  Checker c("group-membership");
  constexpr std::array<std::size_t, 5> kDims = {2, 3, 8, 17, 64};
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::size_t n = kDims[t % kDims.size()];
    const double tol = 1e-8 * std::sqrt(static_cast<double>(n));
    auto key = [&](EnsembleTag e, std::size_t dim) {
      return StreamKey{seed, e, dim, t, 0};
    };
    const std::string sfx = " n=" + std::to_string(n);

    const ComplexMatrix id = ComplexMatrix::identity(n);
    const ComplexMatrix u = haar_unitary(n, key(EnsembleTag::kUnitary, n)).matrix();
    c.expect(hs_distance(u * u.adjoint(), id) <= tol, tag("U unitary", t) + sfx);

    const ComplexMatrix o =
        haar_orthogonal(n, key(EnsembleTag::kOrthogonal, n)).matrix();
    bool real = true;
    for (const Complex z : o.entries()) real = real && z.imag() == 0.0;
    c.expect(real && hs_distance(o * o.transpose(), id) <= tol,
             tag("O real orthogonal", t) + sfx);

    const ComplexMatrix so = haar_so(n, key(EnsembleTag::kSo, n)).matrix();
    c.expect(std::abs(determinant(so) - 1.0) <= tol &&
                 hs_distance(so * so.transpose(), id) <= tol,
             tag("SO det +1", t) + sfx);

    const ComplexMatrix sm =
        haar_so_minus(n, key(EnsembleTag::kSoMinus, n)).matrix();
    c.expect(std::abs(determinant(sm) + 1.0) <= tol &&
                 hs_distance(sm * sm.transpose(), id) <= tol,
             tag("SO- det -1", t) + sfx);

    const ComplexMatrix su = haar_su(n, key(EnsembleTag::kSu, n)).matrix();
    c.expect(std::abs(determinant(su) - 1.0) <= tol &&
                 hs_distance(su * su.adjoint(), id) <= tol,
             tag("SU det 1", t) + sfx);

    const ComplexMatrix coe = sample_coe(n, key(EnsembleTag::kCoe, n)).matrix();
    c.expect(hs_distance(coe, coe.transpose()) <= tol &&
                 hs_distance(coe * coe.adjoint(), id) <= tol,
             tag("COE symmetric unitary", t) + sfx);

    // Quaternionic ensembles at half dimension ceil(n/2), ambient 2 ceil(n/2).
    const std::size_t h = (n + 1) / 2;
    const double tol2 = 1e-8 * std::sqrt(static_cast<double>(2 * h));
    const ComplexMatrix j = SymplecticForm::matrix(h);
    const ComplexMatrix id2 = ComplexMatrix::identity(2 * h);
    const ComplexMatrix sp =
        haar_symplectic(h, key(EnsembleTag::kSymplectic, h)).matrix();
    c.expect(hs_distance(sp * j * sp.transpose(), j) <= tol2 &&
                 hs_distance(sp * sp.adjoint(), id2) <= tol2,
             tag("Sp preserves J", t) + sfx);

    const ComplexMatrix cse = sample_cse(h, key(EnsembleTag::kCse, h)).matrix();
    const ComplexMatrix dual = j * cse.transpose() * j.transpose();
    c.expect(hs_distance(dual, cse) <= tol2 &&
                 hs_distance(cse * cse.adjoint(), id2) <= tol2,
             tag("CSE self-dual unitary", t) + sfx);
  }
  return c.take();
}

VerifyReport run_verify_suite(std::string_view suite, std::uint64_t trials,
                              std::uint64_t seed) {
  if (suite == "lipschitz") return verify_lipschitz(trials, seed);
  if (suite == "transport-oracle") return verify_transport_oracle(trials, seed);
  if (suite == "group-membership") {
    return verify_group_membership(trials, seed);
  }
  if (suite == "all") {
    VerifyReport all;
    all.suite = "all";
    all.merge(verify_lipschitz(trials, seed));
    all.merge(verify_transport_oracle(trials, seed));
    all.merge(verify_group_membership(trials, seed));
    return all;
  }
  throw UsageError("unknown suite '" + std::string(suite) +
                   "' (expected lipschitz, transport-oracle, "
                   "group-membership or all)");
}

}  // namespace speclab
