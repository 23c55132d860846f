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

#ifndef SPECLAB_CORE_MEASURES_HPP
#define SPECLAB_CORE_MEASURES_HPP

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "core/matlin.hpp"
#include "core/rng.hpp"

namespace speclab {

enum class Domain { kCircle, kLine };

// Uniform probability measure on a sorted list of atoms. Circle atoms are
// angles in [0, 2pi).
class EmpiricalMeasure {
 public:
  static EmpiricalMeasure circle(const SpectrumCircle& s);
  static EmpiricalMeasure line(const SpectrumLine& s);
  // Validates, wraps (circle) and sorts.
  static EmpiricalMeasure from_atoms(Domain domain, std::vector<double> atoms);

  Domain domain() const noexcept { return domain_; }
  std::span<const double> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  double weight() const noexcept {
    return 1.0 / static_cast<double>(atoms_.size());
  }

  // Every atom shifted by phi (mod 2pi on the circle).
  EmpiricalMeasure shifted(double phi) const;

  friend bool operator==(const EmpiricalMeasure&,
                         const EmpiricalMeasure&) = default;

 private:
  EmpiricalMeasure(Domain d, std::vector<double> atoms)
      : domain_(d), atoms_(std::move(atoms)) {}

  Domain domain_;
  std::vector<double> atoms_;
};

EmpiricalMeasure esd_circle(const UnitaryView& u);
EmpiricalMeasure esd_line(const HermitianView& a);

struct PooledMeasure {
  EmpiricalMeasure measure;
  std::vector<StreamKey> provenance;
};

// Uniform measure on the multiset union, in input order before sorting.
PooledMeasure pool(std::span<const EmpiricalMeasure> samples,
                   std::span<const StreamKey> provenance = {});

struct UniformCircleReference {};
struct SemicircleReference {};

using Reference =
    std::variant<EmpiricalMeasure, UniformCircleReference, SemicircleReference>;

// Piecewise linear f with explicit knots. On the circle the knots run from 0
// to 2pi and f(0) = f(2pi) = 0; on the line f is constant beyond the outer
// knots and f(0) = 0.
class PiecewiseLinearTestFunction {
 public:
  PiecewiseLinearTestFunction(Domain domain, std::vector<double> knots,
                              std::vector<double> values, double lipschitz);

  Domain domain() const noexcept { return domain_; }
  double lipschitz() const noexcept { return lipschitz_; }
  std::span<const double> knots() const noexcept { return knots_; }
  std::span<const double> values() const noexcept { return values_; }

  double operator()(double x) const;

  // Exact integrals against the uniform measure on [0, 2pi) and against
  // the semicircle law on [-2, 2].
  double integrate_uniform_circle() const;
  double integrate_semicircle() const;

 private:
  Domain domain_;
  std::vector<double> knots_;
  std::vector<double> values_;
  double lipschitz_;
};

// X_f = int f dm - int f dref.
double test_function_statistic(const PiecewiseLinearTestFunction& f,
                               const EmpiricalMeasure& m, const Reference& ref);

}  // namespace speclab

#endif  // SPECLAB_CORE_MEASURES_HPP
