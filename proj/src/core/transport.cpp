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

#include "core/transport.hpp"

#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace speclab {

namespace {

constexpr double kQuadratureTol = 1e-12;

void require_p(double p) {
  if (!(p >= 1.0 && p <= 2.0)) {
    throw ContractError("p must lie in [1, 2], got " + std::to_string(p));
  }
}

void require_domain(const EmpiricalMeasure& m, Domain d, const char* who) {
  if (m.domain() != d) {
    throw ContractError(std::string(who) + ": wrong measure domain");
  }
}

ChordalBounds chordal_sandwich(double geodesic) {
  return ChordalBounds{2.0 / kPi * geodesic, geodesic};
}

// int_a^b |y - c| dy for a <= b.
double abs_dev_integral(double a, double b, double c) {
  if (c <= a) return 0.5 * ((b - c) * (b - c) - (a - c) * (a - c));
  if (c >= b) return 0.5 * ((c - a) * (c - a) - (c - b) * (c - b));
  return 0.5 * ((c - a) * (c - a) + (b - c) * (b - c));
}

// Weighted median of values with nonnegative weights. When the half-mass
// point falls exactly between two distinct values the midpoint is returned.
double weighted_median(std::vector<std::pair<double, double>> vw) {
  std::sort(vw.begin(), vw.end());
  double total = 0.0;
  for (const auto& [v, w] : vw) total += w;
  const double half = 0.5 * total;
  double cum = 0.0;
  for (std::size_t i = 0; i < vw.size(); ++i) {
    cum += vw[i].second;
    if (cum > half) return vw[i].first;
    if (cum == half) {
      std::size_t j = i + 1;
      while (j < vw.size() && vw[j].second == 0.0) ++j;
      return j < vw.size() ? 0.5 * (vw[i].first + vw[j].first) : vw[i].first;
    }
  }
  return vw.back().first;
}

// Median of a mixture of uniform laws on intervals [lo_i, hi_i] with weights
// equal to their lengths; the mixture CDF is piecewise linear.
double interval_mixture_median(const std::vector<std::pair<double, double>>& iv) {
  std::vector<double> pts;
  pts.reserve(2 * iv.size());
  double total = 0.0;
  for (const auto& [lo, hi] : iv) {
    pts.push_back(lo);
    pts.push_back(hi);
    total += hi - lo;
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto mass_below = [&](double c) {
    double s = 0.0;
    for (const auto& [lo, hi] : iv) {
      if (c >= hi) {
        s += hi - lo;
      } else if (c > lo) {
        s += c - lo;
      }
    }
    return s;
  };
  const double half = 0.5 * total;
  // Binary search over breakpoints for the first one with mass >= half.
  std::size_t lo_i = 0;
  std::size_t hi_i = pts.size() - 1;
  if (mass_below(pts[0]) >= half) return pts[0];
  while (hi_i - lo_i > 1) {
    const std::size_t mid = (lo_i + hi_i) / 2;
    if (mass_below(pts[mid]) >= half) {
      hi_i = mid;
    } else {
      lo_i = mid;
    }
  }
  const double a = pts[lo_i];
  const double b = pts[hi_i];
  const double ma = mass_below(a);
  const double mb = mass_below(b);
  if (mb == half) {
    // Flat stretch at exactly half: take the midpoint of the flat interval.
    std::size_t k = hi_i;
    while (k + 1 < pts.size() && mass_below(pts[k + 1]) == half) ++k;
    return 0.5 * (b + pts[k]);
  }
  return a + (half - ma) / (mb - ma) * (b - a);
}

boost::math::quadrature::tanh_sinh<double>& integrator() {
  thread_local boost::math::quadrature::tanh_sinh<double> q;
  return q;
}

double integrate_abs_gap(const std::function<double(double)>& cdf, double a,
                         double b, double level) {
  if (!(b > a)) return 0.0;
  auto f = [&](double x) { return std::abs(level - cdf(x)); };
  return integrator().integrate(f, a, b, kQuadratureTol);
}

}  // namespace

std::string_view metric_name(GroundMetric m) {
  switch (m) {
    case GroundMetric::kLineEuclidean:
      return "line_euclidean";
    case GroundMetric::kCircleGeodesic:
      return "circle_geodesic";
    case GroundMetric::kCircleChordal:
      return "circle_chordal";
  }
  return "?";
}

std::string_view algorithm_name(TransportAlgorithm a) {
  switch (a) {
    case TransportAlgorithm::kSortedPairing:
      return "sorted_pairing";
    case TransportAlgorithm::kCircleCdf:
      return "circle_cdf";
    case TransportAlgorithm::kCdfIntegral:
      return "cdf_integral";
    case TransportAlgorithm::kAssignmentOracle:
      return "assignment_oracle";
  }
  return "?";
}

double semicircle_cdf(double x) {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  return 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * kPi) +
         std::asin(0.5 * x) / kPi;
}

ContinuousCdf semicircle_reference() {
  return ContinuousCdf{semicircle_cdf, -2.0, 2.0};
}

double ground_cost(GroundMetric metric, double x, double y) {
  switch (metric) {
    case GroundMetric::kLineEuclidean:
      return std::abs(x - y);
    case GroundMetric::kCircleGeodesic: {
      const double d = std::abs(x - y);
      return std::min(d, kTwoPi - d);
    }
    case GroundMetric::kCircleChordal: {
      const double d = std::abs(x - y);
      return 2.0 * std::sin(0.5 * std::min(d, kTwoPi - d));
    }
  }
  return 0.0;
}

DistanceResult wp_line(const EmpiricalMeasure& m1, const EmpiricalMeasure& m2,
                       double p) {
  require_p(p);
  require_domain(m1, Domain::kLine, "wp_line");
  require_domain(m2, Domain::kLine, "wp_line");
  if (m1.size() != m2.size()) {
    throw ContractError("wp_line: atom counts differ (" +
                        std::to_string(m1.size()) + " vs " +
                        std::to_string(m2.size()) + ")");
  }
  const auto a = m1.atoms();
  const auto b = m2.atoms();
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += std::pow(std::abs(a[i] - b[i]), p);
  }
  s /= static_cast<double>(a.size());
  return DistanceResult{std::pow(s, 1.0 / p), p, GroundMetric::kLineEuclidean,
                        TransportAlgorithm::kSortedPairing, std::nullopt};
}

DistanceResult w1_line_pair(const EmpiricalMeasure& m1,
                            const EmpiricalMeasure& m2) {
  require_domain(m1, Domain::kLine, "w1_line_pair");
  require_domain(m2, Domain::kLine, "w1_line_pair");
  const auto a = m1.atoms();
  const auto b = m2.atoms();
  const double wa = m1.weight();
  const double wb = m2.weight();
  std::size_t i = 0;
  std::size_t j = 0;
  double fa = 0.0;
  double fb = 0.0;
  double prev = std::min(a.front(), b.front());
  double s = 0.0;
  while (i < a.size() || j < b.size()) {
    const double x = (j >= b.size() || (i < a.size() && a[i] <= b[j])) ? a[i]
                                                                       : b[j];
    s += std::abs(fa - fb) * (x - prev);
    while (i < a.size() && a[i] == x) {
      fa = static_cast<double>(++i) * wa;
    }
    while (j < b.size() && b[j] == x) {
      fb = static_cast<double>(++j) * wb;
    }
    prev = x;
  }
  return DistanceResult{s, 1.0, GroundMetric::kLineEuclidean,
                        TransportAlgorithm::kCdfIntegral, std::nullopt};
}

DistanceResult w1_line_vs_cdf(const EmpiricalMeasure& m,
                              const ContinuousCdf& ref) {
  require_domain(m, Domain::kLine, "w1_line_vs_cdf");
  if (!ref.cdf || !std::isfinite(ref.lo) || !std::isfinite(ref.hi) ||
      !(ref.hi > ref.lo)) {
    throw ContractError(
        "w1_line_vs_cdf: reference needs a finite support [lo, hi]");
  }
  const auto atoms = m.atoms();
  std::vector<double> cuts(atoms.begin(), atoms.end());
  cuts.push_back(ref.lo);
  cuts.push_back(ref.hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const double w = m.weight();
  double s = 0.0;
  std::size_t counted = 0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double a = cuts[k];
    const double b = cuts[k + 1];
    while (counted < atoms.size() && atoms[counted] <= a) ++counted;
    const double level = static_cast<double>(counted) * w;
    // Split where the monotone reference CDF crosses the empirical level.
    const double ga = ref.cdf(a) - level;
    const double gb = ref.cdf(b) - level;
    if (ga < 0 && gb > 0) {
      double lo = a;
      double hi = b;
      for (int it = 0; it < 200 && hi - lo > 0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (ref.cdf(mid) - level < 0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      s += integrate_abs_gap(ref.cdf, a, lo, level) +
           integrate_abs_gap(ref.cdf, lo, b, level);
    } else {
      s += integrate_abs_gap(ref.cdf, a, b, level);
    }
  }
  if (!std::isfinite(s)) {
    throw ContractError("w1_line_vs_cdf: reference is not integrable");
  }
  return DistanceResult{s, 1.0, GroundMetric::kLineEuclidean,
                        TransportAlgorithm::kCdfIntegral, std::nullopt};
}

// With u = t / 2pi, the integrand F_m(t) - u on the stretch after j atoms is
// j/n - u, so over that stretch it sweeps the interval [j/n - u_end,
// j/n - u_start] uniformly. The optimal shift is the median of the resulting
// interval mixture and the objective is a sum of closed-form integrals.
DistanceResult w1_circle_uniform(const EmpiricalMeasure& m) {
  require_domain(m, Domain::kCircle, "w1_circle_uniform");
  const auto a = m.atoms();
  const double w = m.weight();
  std::vector<std::pair<double, double>> intervals;
  intervals.reserve(a.size() + 1);
  double start = 0.0;
  std::size_t j = 0;
  while (true) {
    while (j < a.size() && a[j] <= start) ++j;
    const double end = j < a.size() ? a[j] : kTwoPi;
    if (end > start) {
      const double level = static_cast<double>(j) * w;
      intervals.emplace_back(level - end / kTwoPi, level - start / kTwoPi);
    }
    if (j >= a.size()) break;
    start = end;
  }
  const double c = interval_mixture_median(intervals);
  double s = 0.0;
  for (const auto& [lo, hi] : intervals) s += abs_dev_integral(lo, hi, c);
  const double value = kTwoPi * s;
  return DistanceResult{value, 1.0, GroundMetric::kCircleGeodesic,
                        TransportAlgorithm::kCircleCdf, chordal_sandwich(value)};
}

DistanceResult w1_circle_pair(const EmpiricalMeasure& m1,
                              const EmpiricalMeasure& m2) {
  require_domain(m1, Domain::kCircle, "w1_circle_pair");
  require_domain(m2, Domain::kCircle, "w1_circle_pair");
  const auto a = m1.atoms();
  const auto b = m2.atoms();
  const double wa = m1.weight();
  const double wb = m2.weight();
  std::vector<std::pair<double, double>> segments;  // (F1 - F2, length)
  segments.reserve(a.size() + b.size() + 1);
  std::size_t i = 0;
  std::size_t j = 0;
  double start = 0.0;
  while (true) {
    while (i < a.size() && a[i] <= start) ++i;
    while (j < b.size() && b[j] <= start) ++j;
    double end = kTwoPi;
    if (i < a.size()) end = std::min(end, a[i]);
    if (j < b.size()) end = std::min(end, b[j]);
    if (end > start) {
      segments.emplace_back(
          static_cast<double>(i) * wa - static_cast<double>(j) * wb,
          end - start);
    }
    if (i >= a.size() && j >= b.size()) break;
    start = end;
  }
  const double c = weighted_median(segments);
  double s = 0.0;
  for (const auto& [g, len] : segments) s += std::abs(g - c) * len;
  return DistanceResult{s, 1.0, GroundMetric::kCircleGeodesic,
                        TransportAlgorithm::kCircleCdf, chordal_sandwich(s)};
}

double hungarian_min_cost(std::span<const double> cost, std::size_t n) {
  if (cost.size() != n * n) throw ContractError("cost matrix is not n x n");
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  auto c = [&](std::size_t i, std::size_t j) {
    return cost[(i - 1) * n + (j - 1)];
  };
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = c(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  double total = 0.0;
  for (std::size_t j = 1; j <= n; ++j) total += c(p[j], j);
  return total;
}

DistanceResult assignment_oracle(const EmpiricalMeasure& m1,
                                 const EmpiricalMeasure& m2,
                                 GroundMetric metric, double p) {
  require_p(p);
  if (m1.size() != m2.size()) {
    throw ContractError("assignment_oracle: atom counts differ");
  }
  const std::size_t n = m1.size();
  if (n > kAssignmentOracleMaxN) {
    throw SizeGuardError("assignment_oracle: n = " + std::to_string(n) +
                         " exceeds the guard of 12");
  }
  const Domain want = metric == GroundMetric::kLineEuclidean ? Domain::kLine
                                                             : Domain::kCircle;
  require_domain(m1, want, "assignment_oracle");
  require_domain(m2, want, "assignment_oracle");
  std::vector<double> cost(n * n);
  const auto a = m1.atoms();
  const auto b = m2.atoms();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cost[i * n + j] = std::pow(ground_cost(metric, a[i], b[j]), p);
    }
  }
  const double total = hungarian_min_cost(cost, n);
  const double value =
      std::pow(std::max(0.0, total) / static_cast<double>(n), 1.0 / p);
  return DistanceResult{value, p, metric, TransportAlgorithm::kAssignmentOracle,
                        std::nullopt};
}

DistanceResult w1_to_reference(const EmpiricalMeasure& m,
                               const Reference& ref) {
  return std::visit(
      [&](const auto& r) -> DistanceResult {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, UniformCircleReference>) {
          return w1_circle_uniform(m);
        } else if constexpr (std::is_same_v<T, SemicircleReference>) {
          return w1_line_vs_cdf(m, semicircle_reference());
        } else {
          if (m.domain() != r.domain()) {
            throw ContractError("measure and reference domains differ");
          }
          if (m.domain() == Domain::kCircle) return w1_circle_pair(m, r);
          if (m.size() == r.size()) return wp_line(m, r, 1.0);
          return w1_line_pair(m, r);
        }
      },
      ref);
}

}  // namespace speclab
