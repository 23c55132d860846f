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

// Exact Wasserstein distances between uniform-weight empirical measures on
// the line and circle, and against continuous references.
//
// Circle distances use the geodesic (arc-length) ground metric. The chordal
// metric |e^{ia} - e^{ib}| is sandwiched as (2/pi) geo <= chord <= geo, so
// every circle result also carries chordal bounds; exact chordal values are
// available from assignment_oracle for small n.

#ifndef SPECLAB_CORE_TRANSPORT_HPP
#define SPECLAB_CORE_TRANSPORT_HPP

#include <functional>
#include <optional>
#include <string_view>

#include "core/measures.hpp"

namespace speclab {

enum class GroundMetric { kLineEuclidean, kCircleGeodesic, kCircleChordal };
enum class TransportAlgorithm {
  kSortedPairing,
  kCircleCdf,
  kCdfIntegral,
  kAssignmentOracle
};

std::string_view metric_name(GroundMetric m);
std::string_view algorithm_name(TransportAlgorithm a);

struct ChordalBounds {
  double lower;
  double upper;
};

struct DistanceResult {
  double value = 0.0;
  double p = 1.0;
  GroundMetric metric = GroundMetric::kLineEuclidean;
  TransportAlgorithm algorithm = TransportAlgorithm::kSortedPairing;
  std::optional<ChordalBounds> chordal;
};

// Continuous reference CDF with compact support [lo, hi].
struct ContinuousCdf {
  std::function<double(double)> cdf;
  double lo;
  double hi;
};

double semicircle_cdf(double x);
ContinuousCdf semicircle_reference();

// d_p on the line between equal-size measures via the monotone coupling.
DistanceResult wp_line(const EmpiricalMeasure& m1, const EmpiricalMeasure& m2,
                       double p);
// d_1 on the line for any atom counts: integral of |F1 - F2|, exact.
DistanceResult w1_line_pair(const EmpiricalMeasure& m1,
                            const EmpiricalMeasure& m2);
// d_1 against a continuous CDF, adaptive quadrature between atoms.
DistanceResult w1_line_vs_cdf(const EmpiricalMeasure& m,
                              const ContinuousCdf& ref);

// Geodesic d_1 to the uniform measure on the circle, closed form.
DistanceResult w1_circle_uniform(const EmpiricalMeasure& m);
// Geodesic d_1 between two circle measures of any atom counts.
DistanceResult w1_circle_pair(const EmpiricalMeasure& m1,
                              const EmpiricalMeasure& m2);

inline constexpr std::size_t kAssignmentOracleMaxN = 12;

// Minimal assignment (Hungarian); equal atom counts, n <= 12.
DistanceResult assignment_oracle(const EmpiricalMeasure& m1,
                                 const EmpiricalMeasure& m2,
                                 GroundMetric metric, double p);

// Minimal-cost perfect matching of a square cost matrix (row-major).
double hungarian_min_cost(std::span<const double> cost, std::size_t n);

double ground_cost(GroundMetric metric, double x, double y);

// d_1 from a measure to a reference, choosing the exact algorithm.
DistanceResult w1_to_reference(const EmpiricalMeasure& m, const Reference& ref);

}  // namespace speclab

#endif  // SPECLAB_CORE_TRANSPORT_HPP
