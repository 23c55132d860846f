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

// Randomized property suites: inequality checks, oracle equivalence for the
// transport solvers, and group-membership identities for the samplers.

#ifndef SPECLAB_CORE_VERIFY_HPP
#define SPECLAB_CORE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace speclab {

struct VerifyReport {
  std::string suite;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> details;

  void merge(const VerifyReport& other);
};

inline constexpr double kOracleTolerance = 1e-9;
inline constexpr double kRootsOfUnityTolerance = 1e-12;

VerifyReport verify_lipschitz(std::uint64_t trials, std::uint64_t seed);
VerifyReport verify_transport_oracle(std::uint64_t trials, std::uint64_t seed);
VerifyReport verify_group_membership(std::uint64_t trials, std::uint64_t seed);

// suite is one of lipschitz, transport-oracle, group-membership, all;
// anything else throws UsageError.
VerifyReport run_verify_suite(std::string_view suite, std::uint64_t trials,
                              std::uint64_t seed);

}  // namespace speclab

#endif  // SPECLAB_CORE_VERIFY_HPP
