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
#include <set>
#include <string>

#include "core/errors.hpp"
#include "core/experiments.hpp"
#include "core/transport.hpp"

using namespace speclab;

namespace {

ExperimentPlan plan(EnsembleTag e, std::vector<std::uint64_t> grid,
                    std::uint64_t reps, std::uint64_t seed = 7) {
  ExperimentPlan p;
  p.ensemble = e;
  p.n_grid = std::move(grid);
  p.replicates = reps;
  p.master_seed = seed;
  return p;
}

std::string schema_pointer(const ExperimentPlan& p) {
  try {
    p.validate();
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "<valid>";
}

bool same_records(const std::vector<SummaryRecord>& a,
                  const std::vector<SummaryRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].n != b[i].n || a[i].replicate != b[i].replicate ||
        a[i].statistic != b[i].statistic || a[i].value != b[i].value) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("experiments") {

TEST_CASE("plan validation pointers") {
  CHECK(schema_pointer(plan(EnsembleTag::kUnitary, {4, 8}, 10)) == "<valid>");
  CHECK(schema_pointer(plan(EnsembleTag::kUnitary, {}, 10)) == "/n_grid");
  CHECK(schema_pointer(plan(EnsembleTag::kUnitary, {4, 0}, 10)) == "/n_grid/1");
  CHECK(schema_pointer(plan(EnsembleTag::kUnitary, {8, 4}, 10)) == "/n_grid/1");
  CHECK(schema_pointer(plan(EnsembleTag::kUnitary, {4}, 1)) == "/replicates");

  auto p = plan(EnsembleTag::kUnitary, {4}, 10);
  p.k_rule = KRule{};
  CHECK(schema_pointer(p) == "/k_rule");
  p = plan(EnsembleTag::kCompression, {4, 8}, 10);
  p.k_rule = KRule{KRule::Kind::kFixed, 5};
  CHECK(schema_pointer(p) == "/k_rule");
  p.k_rule = KRule{KRule::Kind::kFixed, 4};
  CHECK(schema_pointer(p) == "<valid>");

  p = plan(EnsembleTag::kUnitary, {4}, 10);
  p.t_grid = std::vector<double>{0.0, -0.1};
  CHECK(schema_pointer(p) == "/t_grid/1");

  p = plan(EnsembleTag::kUnitary, {4, 8}, 10);
  p.moments_kmax = 4;
  CHECK(schema_pointer(p) == "/moments_kmax");
  p.moments_kmax = 3;
  CHECK(schema_pointer(p) == "<valid>");
  p = plan(EnsembleTag::kGueWigner, {4, 8}, 10);
  p.moments_kmax = 1;
  CHECK(schema_pointer(p) == "/moments_kmax");
}

TEST_CASE("k rule") {
  const KRule half;
  CHECK(half.k_for(1) == 1);
  CHECK(half.k_for(7) == 4);
  CHECK(half.k_for(8) == 4);
  CHECK(half.to_string() == "half");
  const KRule fixed{KRule::Kind::kFixed, 3};
  CHECK(fixed.k_for(100) == 3);
  CHECK(fixed.to_string() == "fixed:3");
  CHECK(plan(EnsembleTag::kCompression, {4}, 2).effective_k_rule().kind ==
        KRule::Kind::kHalf);
}

TEST_CASE("single grid point gives no fit") {
  const auto r = run_rate_experiment(plan(EnsembleTag::kUnitary, {2}, 20));
  CHECK_FALSE(r.fit.has_value());
  REQUIRE(r.warnings.size() == 1);
  REQUIRE(r.per_n.size() == 1);
  CHECK(r.per_n[0].d1.count == 20);
  CHECK(r.per_n[0].d1.mean > 0.0);
}

TEST_CASE("records do not depend on the worker count") {
  for (EnsembleTag e : {EnsembleTag::kUnitary, EnsembleTag::kCompression,
                        EnsembleTag::kRandomizedSum}) {
    const auto p = plan(e, {4, 8, 12}, 6);
    const auto one = sample_plan(p, RunOptions{1});
    const auto many = sample_plan(p, RunOptions{8});
    CHECK(same_records(one.records, many.records));
    CHECK(one.pools.size() == many.pools.size());
  }
}

TEST_CASE("record layout") {
  auto p = plan(EnsembleTag::kUnitary, {4, 8}, 5);
  p.moments_kmax = 2;
  const auto s = sample_plan(p, RunOptions{2});
  // d1 plus re/im for two orders, per (n, replicate).
  CHECK(s.records.size() == 2 * 5 * 5);
  CHECK(s.pools.empty());
  for (std::size_t i = 1; i < s.records.size(); ++i) {
    const auto& a = s.records[i - 1];
    const auto& b = s.records[i];
    CHECK((a.n < b.n || (a.n == b.n && (a.replicate < b.replicate ||
                                        (a.replicate == b.replicate &&
                                         a.statistic < b.statistic)))));
  }
  // The d1 record matches a direct recomputation from its key.
  const auto& r = s.records.front();
  CHECK(r.statistic == "d1");
  CHECK(r.value ==
        w1_circle_uniform(sample_esd(r.ensemble, r.n, 0, r.key)).value);
}

TEST_CASE("split-sample pool is disjoint from distance replicates") {
  const auto s = sample_plan(plan(EnsembleTag::kGueWigner, {6}, 8), RunOptions{1});
  REQUIRE(s.pools.size() == 1);
  CHECK(s.pools[0].replicates >= 8);
  CHECK(s.pools[0].replicates <= 8 * kPoolMaxFactor);
  std::set<std::uint64_t> reps;
  for (const auto& r : s.records) {
    reps.insert(r.key.replicate);
    CHECK(r.key.replicate < kPoolReplicateOffset);
  }
  CHECK(reps.size() == 8);
}

TEST_CASE("summaries are a pure function of the records") {
  auto p = plan(EnsembleTag::kSu, {4, 6, 8}, 30);
  p.t_grid = std::vector<double>{0.0, 0.05};
  p.moments_kmax = 2;
  const auto s = sample_plan(p, RunOptions{1});
  auto shuffled = s.records;
  std::reverse(shuffled.begin(), shuffled.end());
  const auto a = summarize_records(p, s.records, s.pools);
  const auto b = summarize_records(p, shuffled, s.pools);
  REQUIRE(a.rate.fit.has_value());
  CHECK(a.rate.fit->slope == b.rate.fit->slope);
  CHECK(a.slope_ok == b.slope_ok);
  CHECK(a.scaled_ratio == b.scaled_ratio);
  CHECK(a.concentration->tails.size() == 6);
  CHECK(a.moments->size() == 6);
  for (std::size_t i = 0; i < a.moments->size(); ++i) {
    CHECK((*a.moments)[i].mean == (*b.moments)[i].mean);
  }
}

TEST_CASE("tail at t = 0 sits near one half") {
  const auto c = run_concentration_experiment(
      plan(EnsembleTag::kUnitary, {8, 16}, 200), {0.0, 0.01, 0.05});
  REQUIRE(c.tails.size() == 6);
  for (const auto& t : c.tails) {
    if (t.t == 0.0) {
      CHECK(t.p_hat >= 0.3);
      CHECK(t.p_hat <= 0.7);
    }
    CHECK(t.ci95.lo <= t.p_hat);
    CHECK(t.ci95.hi >= t.p_hat);
  }
  CHECK(c.std_by_n.size() == 2);
  CHECK_FALSE(c.std_fit.has_value());
}

TEST_CASE("moment orders must stay below n") {
  CHECK_THROWS_AS(run_moment_experiment(plan(EnsembleTag::kSu, {4}, 10), 4),
                  ContractError);
  CHECK_THROWS_AS(run_moment_experiment(plan(EnsembleTag::kSu, {4}, 10), 0),
                  ContractError);
  const auto rows = run_moment_experiment(plan(EnsembleTag::kSu, {4}, 200), 3);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) CHECK(r.zero_consistent);
  CHECK(moment_claim(EnsembleTag::kSu) == MomentClaim::kZero);
  CHECK(moment_claim(EnsembleTag::kSymplectic) == MomentClaim::kBounded);
  CHECK(moment_claim(EnsembleTag::kCoe) == MomentClaim::kNone);
}

TEST_CASE("randomized sums satisfy Weyl containment") {
  const auto p = plan(EnsembleTag::kRandomizedSum, {4, 8, 16}, 10);
  const auto s = sample_plan(p, RunOptions{1});
  const auto sum = summarize_records(p, s.records, s.pools);
  REQUIRE(sum.weyl_all_ok.has_value());
  CHECK(*sum.weyl_all_ok);
}

TEST_CASE("distance-law comparison") {
  const auto same = run_identdist_experiment(8, 200, 3);
  CHECK(same.first.size() == 200);
  CHECK(same.accept);
  const auto diff =
      compare_distance_laws(EnsembleTag::kUnitary, 4, EnsembleTag::kUnitary, 32,
                            200, 3);
  CHECK_FALSE(diff.accept);
  CHECK_THROWS_AS(compare_distance_laws(EnsembleTag::kGueWigner, 4,
                                        EnsembleTag::kUnitary, 4, 10, 3),
                  ContractError);
}

TEST_CASE("lipschitz suite") {
  const auto r = run_lipschitz_suite(200, 12, 5);
  CHECK(r.trials == 200);
  CHECK(r.total_violations() == 0);
  CHECK(r.worst_excess <= kLipschitzSlack);
}

}  // TEST_SUITE
