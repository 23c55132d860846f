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

#include <cmath>
#include <json.hpp>
#include <string>

#include "core/errors.hpp"
#include "core/experiments.hpp"
#include "core/io.hpp"

using namespace speclab;

namespace {

std::string plan_error(const std::string& text) {
  try {
    parse_plan_json(text);
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "<valid>";
}

std::size_t spectra_error_line(const std::string& text) {
  try {
    parse_spectra_csv(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("format_double round-trips") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, kPi}) {
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("plan parsing") {
  const auto p = parse_plan_json(
      R"({"ensemble":"compression","n_grid":[4,8],"replicates":10,"seed":3,)"
      R"("k_rule":"fixed:2","t_grid":null})");
  CHECK(p.ensemble == EnsembleTag::kCompression);
  CHECK(p.n_grid == std::vector<std::uint64_t>{4, 8});
  CHECK(p.replicates == 10);
  CHECK(p.master_seed == 3);
  REQUIRE(p.k_rule.has_value());
  CHECK(p.k_rule->fixed == 2);
  CHECK_FALSE(p.t_grid.has_value());
  CHECK_FALSE(p.moments_kmax.has_value());
}

TEST_CASE("plan schema errors carry pointers") {
  const std::string base = R"("n_grid":[4,8],"replicates":10,"seed":3)";
  CHECK(plan_error("{\"ensemble\":\"unitary\"," + base + "}") == "<valid>");
  CHECK(plan_error("not json") == "");
  CHECK(plan_error("[1,2]") == "");
  CHECK(plan_error("{\"ensemble\":\"gaussian\"," + base + "}") == "/ensemble");
  CHECK(plan_error(R"({"ensemble":"unitary","replicates":10,"seed":3})") ==
        "/n_grid");
  CHECK(plan_error("{\"ensemble\":\"unitary\"," + base + ",\"colour\":1}") ==
        "/colour");
  CHECK(plan_error(R"({"ensemble":"unitary","n_grid":[],"replicates":10,"seed":3})") ==
        "/n_grid");
  CHECK(plan_error(
            R"({"ensemble":"unitary","n_grid":[4,"x"],"replicates":10,"seed":3})") ==
        "/n_grid/1");
  CHECK(plan_error("{\"ensemble\":\"unitary\"," + base + ",\"k_rule\":\"half\"}") ==
        "/k_rule");
  CHECK(plan_error("{\"ensemble\":\"unitary\"," + base + ",\"t_grid\":[0,\"a\"]}") ==
        "/t_grid/1");
}

TEST_CASE("canonical plan JSON") {
  const std::string a =
      R"({"seed":3,"replicates":10,"n_grid":[4,8],"ensemble":"unitary"})";
  const std::string b =
      R"({"ensemble":"unitary","n_grid":[4,8],"replicates":10,"seed":3})";
  CHECK(plan_to_json(parse_plan_json(a)) == plan_to_json(parse_plan_json(b)));
  const std::string canon = plan_to_json(parse_plan_json(a));
  CHECK(plan_to_json(parse_plan_json(canon)) == canon);
  const auto j = nlohmann::json::parse(canon);
  CHECK(j["ensemble"] == "unitary");
  CHECK(j["seed"] == 3);
}

TEST_CASE("records CSV round trip") {
  ExperimentPlan p;
  p.ensemble = EnsembleTag::kUnitary;
  p.n_grid = {3, 5};
  p.replicates = 3;
  p.master_seed = 99;
  p.moments_kmax = 1;
  const auto s = sample_plan(p, RunOptions{1});
  const std::string csv = records_to_csv(s.records);
  CHECK(csv.rfind("ensemble,n,replicate,statistic,value,seed\n", 0) == 0);
  const auto back = parse_records_csv(csv);
  REQUIRE(back.size() == s.records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].value == s.records[i].value);
    CHECK(back[i].statistic == s.records[i].statistic);
    CHECK(back[i].key.master_seed == 99);
  }
  CHECK(records_to_csv(back) == csv);

  try {
    parse_records_csv("ensemble,n,replicate,statistic,value,seed\nunitary,3,0,d1,x,1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_records_csv("a,b\n"), ParseError);
}

TEST_CASE("spectra CSV round trip is exact") {
  std::vector<SpectrumRow> rows;
  rows.push_back({0, EmpiricalMeasure::from_atoms(Domain::kCircle, {0.1, 1.0 / 3.0, 6.0})});
  rows.push_back({1, EmpiricalMeasure::from_atoms(Domain::kCircle, {kPi, 0.0, 2.0})});
  const std::string csv = spectra_to_csv(rows);
  CHECK(csv.rfind("replicate,domain,dim,x0,x1,x2\n", 0) == 0);
  const auto back = parse_spectra_csv(csv);
  REQUIRE(back.size() == 2);
  CHECK(back[0].measure == rows[0].measure);
  CHECK(back[1].measure == rows[1].measure);
  CHECK(back[1].replicate == 1);
  CHECK(spectra_to_csv(back) == csv);

  std::vector<SpectrumRow> mixed = rows;
  mixed.push_back({2, EmpiricalMeasure::from_atoms(Domain::kCircle, {0.0})});
  CHECK_THROWS_AS(spectra_to_csv(mixed), ContractError);
}

TEST_CASE("spectra CSV errors report lines") {
  const std::string h = "replicate,domain,dim,x0,x1\n";
  CHECK(spectra_error_line(h + "0,line,2,1,2\n") == 0);
  CHECK(spectra_error_line(h + "0,line,2,1,abc\n") == 2);
  CHECK(spectra_error_line(h + "0,line,2,1,2\n1,plane,2,1,2\n") == 3);
  CHECK(spectra_error_line(h + "0,line,3,1,2\n") == 2);
  CHECK(spectra_error_line(h + "0,line,2,1\n") == 2);
  CHECK(spectra_error_line(h + "0,line,2,1,nan\n") == 2);
  CHECK(spectra_error_line("x,y\n") == 1);
  CHECK(spectra_error_line("") == 1);
  CHECK(spectra_error_line(h) > 0);
}

TEST_CASE("manifest round trip") {
  RunManifest m;
  m.tool_version = "1.0.0";
  m.master_seed = 18446744073709551615ull;
  m.plan_json = R"({"ensemble":"unitary"})";
  m.started_utc = "2026-01-02T03:04:05Z";
  m.finished_utc = "2026-01-02T03:04:06Z";
  m.record_count = 12;
  m.records_file = "records.csv";
  m.records_sha256 = std::string(64, 'a');
  const std::string text = manifest_to_json(m);
  const RunManifest back = parse_manifest_json(text);
  CHECK(back.master_seed == m.master_seed);
  CHECK(back.plan_json == m.plan_json);
  CHECK(back.records_sha256 == m.records_sha256);
  CHECK(manifest_to_json(back) == text);
  CHECK_THROWS(parse_manifest_json("{"));
  CHECK_THROWS(parse_manifest_json("{}"));
}

TEST_CASE("utc timestamps") {
  const std::string t = utc_now_iso8601();
  CHECK(t.size() == 20);
  CHECK(t[4] == '-');
  CHECK(t[10] == 'T');
  CHECK(t.back() == 'Z');
}

TEST_CASE("summary JSON flags") {
  ExperimentPlan p;
  p.ensemble = EnsembleTag::kUnitary;
  p.n_grid = {4, 8, 16};
  p.replicates = 20;
  p.master_seed = 5;
  const auto s = sample_plan(p, RunOptions{1});
  const auto sum = summarize_records(p, s.records, s.pools);
  const auto j = nlohmann::json::parse(summary_to_json(sum));
  CHECK(j["per_n"].size() == 3);
  CHECK(j["flags"]["slope_ok"].is_boolean());
  CHECK(j["rate_fit"]["slope"].get<double>() == sum.rate.fit->slope);
  CHECK(summary_to_json(sum) == summary_to_json(sum));
  CHECK(verdict_table(sum).find("slope") != std::string::npos);
}

}  // TEST_SUITE
