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

#ifndef SPECLAB_CORE_STATS_HPP
#define SPECLAB_CORE_STATS_HPP

#include <cstddef>
#include <span>
#include <utility>

namespace speclab {

struct SampleSummary {
  std::size_t count = 0;
  double mean = 0.0;
  double std = 0.0;     // sample standard deviation (n - 1)
  double std_error = 0.0;  // std / sqrt(n)
  double ci95_lo = 0.0;
  double ci95_hi = 0.0;
};

SampleSummary summarize(std::span<const double> xs);

struct RateFitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double r_squared = 0.0;
  std::size_t n_used = 0;
};

// Least squares of log y on log x. Needs >= 3 points, all coordinates > 0.
RateFitResult fit_loglog(std::span<const std::pair<double, double>> points);

// P[K > lambda] for the Kolmogorov distribution.
double kolmogorov_survival(double lambda);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

// One-sample KS against the uniform law on [0, 2pi).
KsResult ks_uniform_circle(std::span<const double> angles);
// Two-sample KS with the asymptotic p-value.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

struct WilsonInterval {
  double lo;
  double hi;
};

// 95% Wilson score interval for k successes out of n.
WilsonInterval wilson95(std::size_t k, std::size_t n);

}  // namespace speclab

#endif  // SPECLAB_CORE_STATS_HPP
