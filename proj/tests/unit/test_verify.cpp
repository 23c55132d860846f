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

#include "core/errors.hpp"
#include "core/verify.hpp"

using namespace speclab;

TEST_SUITE("verify") {

TEST_CASE("suites pass") {
  const auto t = verify_transport_oracle(100, 1);
  CHECK(t.suite == "transport-oracle");
  CHECK(t.checks > 100);
  CHECK(t.violations == 0);
  CHECK(t.details.empty());

  const auto l = verify_lipschitz(100, 2);
  CHECK(l.violations == 0);

  const auto g = verify_group_membership(10, 3);
  CHECK(g.checks > 0);
  CHECK(g.violations == 0);
}

TEST_CASE("suite dispatch") {
  const auto all = run_verify_suite("all", 20, 4);
  CHECK(all.violations == 0);
  const auto parts = verify_lipschitz(20, 4).checks +
                     verify_transport_oracle(20, 4).checks +
                     verify_group_membership(20, 4).checks;
  CHECK(all.checks == parts);
  CHECK_THROWS_AS(run_verify_suite("bogus", 1, 1), UsageError);
}

TEST_CASE("reports merge") {
  VerifyReport a{"x", 3, 1, {"bad"}};
  const VerifyReport b{"y", 2, 0, {}};
  a.merge(b);
  CHECK(a.checks == 5);
  CHECK(a.violations == 1);
  CHECK(a.details.size() == 1);
}

}  // TEST_SUITE
