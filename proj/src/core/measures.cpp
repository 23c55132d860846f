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

#include "core/measures.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/transport.hpp"

namespace speclab {

namespace {

constexpr double kSlopeSlack = 1e-12;

// Antiderivative of x * rho_sc(x) on [-2, 2].
double semicircle_first_moment_primitive(double x) {
  x = std::clamp(x, -2.0, 2.0);
  const double r = 4.0 - x * x;
  return -r * std::sqrt(r) / (6.0 * kPi);
}

}  // namespace

EmpiricalMeasure EmpiricalMeasure::circle(const SpectrumCircle& s) {
  const auto a = s.angles();
  return EmpiricalMeasure(Domain::kCircle, {a.begin(), a.end()});
}

EmpiricalMeasure EmpiricalMeasure::line(const SpectrumLine& s) {
  const auto v = s.values();
  return EmpiricalMeasure(Domain::kLine, {v.begin(), v.end()});
}

EmpiricalMeasure EmpiricalMeasure::from_atoms(Domain domain,
                                              std::vector<double> atoms) {
  if (domain == Domain::kCircle) {
    return EmpiricalMeasure::circle(SpectrumCircle(std::move(atoms)));
  }
  return EmpiricalMeasure::line(SpectrumLine(std::move(atoms)));
}

EmpiricalMeasure EmpiricalMeasure::shifted(double phi) const {
  std::vector<double> a(atoms_.begin(), atoms_.end());
  for (double& x : a) x += phi;
  return from_atoms(domain_, std::move(a));
}

EmpiricalMeasure esd_circle(const UnitaryView& u) {
  return EmpiricalMeasure::circle(eig_unitary_angles(u));
}

EmpiricalMeasure esd_line(const HermitianView& a) {
  return EmpiricalMeasure::line(eig_hermitian(a));
}

PooledMeasure pool(std::span<const EmpiricalMeasure> samples,
                   std::span<const StreamKey> provenance) {
  if (samples.empty()) throw ContractError("pool: no samples");
  if (!provenance.empty() && provenance.size() != samples.size()) {
    throw ContractError("pool: provenance length differs from sample count");
  }
  const Domain d = samples.front().domain();
  const std::size_t n = samples.front().size();
  std::vector<double> atoms;
  atoms.reserve(n * samples.size());
  for (const auto& s : samples) {
    if (s.domain() != d) throw ContractError("pool: mixed domains");
    if (s.size() != n) throw ContractError("pool: mixed atom counts");
    atoms.insert(atoms.end(), s.atoms().begin(), s.atoms().end());
  }
  return PooledMeasure{EmpiricalMeasure::from_atoms(d, std::move(atoms)),
                       {provenance.begin(), provenance.end()}};
}

PiecewiseLinearTestFunction::PiecewiseLinearTestFunction(
    Domain domain, std::vector<double> knots, std::vector<double> values,
    double lipschitz)
    : domain_(domain),
      knots_(std::move(knots)),
      values_(std::move(values)),
      lipschitz_(lipschitz) {
  if (knots_.size() < 2 || knots_.size() != values_.size()) {
    throw ContractError("test function needs >= 2 knots with one value each");
  }
  if (!(lipschitz_ >= 0) || !std::isfinite(lipschitz_)) {
    throw ContractError("Lipschitz constant must be finite and >= 0");
  }
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    const double dx = knots_[i] - knots_[i - 1];
    if (!(dx > 0)) throw ContractError("test function knots must increase");
    const double slope = std::abs(values_[i] - values_[i - 1]) / dx;
    if (slope > lipschitz_ * (1.0 + kSlopeSlack) + kSlopeSlack) {
      throw ContractError("test function slope exceeds its Lipschitz constant");
    }
  }
  if (domain_ == Domain::kCircle) {
    if (knots_.front() != 0.0 || std::abs(knots_.back() - kTwoPi) > 1e-12) {
      throw ContractError("circle test function knots must span [0, 2pi]");
    }
    knots_.back() = kTwoPi;
    if (values_.front() != 0.0 || values_.back() != 0.0) {
      throw ContractError("circle test function must vanish at angle 0");
    }
  } else if (std::abs((*this)(0.0)) > 1e-12) {
    throw ContractError("line test function must vanish at 0");
  }
}

double PiecewiseLinearTestFunction::operator()(double x) const {
  if (domain_ == Domain::kCircle) x = wrap_angle(x);
  if (x <= knots_.front()) return values_.front();
  if (x >= knots_.back()) return values_.back();
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - knots_.begin());
  const double t = (x - knots_[i - 1]) / (knots_[i] - knots_[i - 1]);
  return values_[i - 1] + t * (values_[i] - values_[i - 1]);
}

double PiecewiseLinearTestFunction::integrate_uniform_circle() const {
  if (domain_ != Domain::kCircle) {
    throw ContractError("uniform circle reference needs a circle function");
  }
  double s = 0.0;
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    s += 0.5 * (values_[i] + values_[i - 1]) * (knots_[i] - knots_[i - 1]);
  }
  return s / kTwoPi;
}

double PiecewiseLinearTestFunction::integrate_semicircle() const {
  if (domain_ != Domain::kLine) {
    throw ContractError("semicircle reference needs a line function");
  }
  std::vector<double> cuts = {-2.0, 2.0};
  for (double k : knots_) {
    if (k > -2.0 && k < 2.0) cuts.push_back(k);
  }
  std::sort(cuts.begin(), cuts.end());
  double s = 0.0;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    const double a = cuts[i - 1];
    const double b = cuts[i];
    if (!(b > a)) continue;
    const double fa = (*this)(a);
    const double fb = (*this)(b);
    const double slope = (fb - fa) / (b - a);
    const double intercept = fa - slope * a;
    s += intercept * (semicircle_cdf(b) - semicircle_cdf(a)) +
         slope * (semicircle_first_moment_primitive(b) -
                  semicircle_first_moment_primitive(a));
  }
  return s;
}

double test_function_statistic(const PiecewiseLinearTestFunction& f,
                               const EmpiricalMeasure& m,
                               const Reference& ref) {
  if (f.domain() != m.domain()) {
    throw ContractError("test function and measure live on different domains");
  }
  double integral_m = 0.0;
  for (double x : m.atoms()) integral_m += f(x);
  integral_m *= m.weight();

  return std::visit(
      [&](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, EmpiricalMeasure>) {
          if (r.domain() != m.domain()) {
            throw ContractError("measure and reference domains differ");
          }
          if (&r == &m || r == m) return 0.0;
          double s = 0.0;
          for (double x : r.atoms()) s += f(x);
          return integral_m - s * r.weight();
        } else if constexpr (std::is_same_v<T, UniformCircleReference>) {
          if (m.domain() != Domain::kCircle) {
            throw ContractError("uniform circle reference needs circle data");
          }
          return integral_m - f.integrate_uniform_circle();
        } else {
          if (m.domain() != Domain::kLine) {
            throw ContractError("semicircle reference needs line data");
          }
          return integral_m - f.integrate_semicircle();
        }
      },
      ref);
}

}  // namespace speclab
