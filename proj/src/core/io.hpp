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

// Serialization. JSON objects are written with keys in a fixed order and
// CSV numbers with 17 significant digits, so equal inputs give equal bytes.

#ifndef SPECLAB_CORE_IO_HPP
#define SPECLAB_CORE_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/experiments.hpp"
#include "core/measures.hpp"
#include "core/transport.hpp"
#include "core/verify.hpp"

namespace speclab {

// %.17g.
std::string format_double(double x);

// Plan schema:
//   {"ensemble": string, "n_grid": [int], "replicates": int, "seed": int,
//    "k_rule": "half" | "fixed:<int>" | null, "t_grid": [float] | null,
//    "moments_kmax": int | null}
// Throws SchemaError carrying the JSON pointer of the offending field; a
// document that is not JSON at all reports the empty pointer.
ExperimentPlan parse_plan_json(std::string_view text);
std::string plan_to_json(const ExperimentPlan& plan);

// Header: ensemble,n,replicate,statistic,value,seed
std::string records_to_csv(const std::vector<SummaryRecord>& records);
std::vector<SummaryRecord> parse_records_csv(std::string_view text);

std::string summary_to_json(const ExperimentSummary& summary);
std::string verdict_table(const ExperimentSummary& summary);

std::string distance_to_json(const DistanceResult& d);
std::string verify_report_to_json(const VerifyReport& r);

struct SpectrumRow {
  std::uint64_t replicate;
  EmpiricalMeasure measure;
};

// Header: replicate,domain,dim,x0,...,x{dim-1}; one spectrum per row.
std::string spectra_to_csv(const std::vector<SpectrumRow>& rows);
// Throws ParseError with the 1-based line number of the first bad line.
std::vector<SpectrumRow> parse_spectra_csv(std::string_view text);

struct RunManifest {
  std::string tool_version;
  std::uint64_t master_seed = 0;
  std::string plan_json;  // canonical plan, or the sample command echo
  std::string started_utc;
  std::string finished_utc;
  std::uint64_t record_count = 0;
  std::string records_file;
  std::string records_sha256;
};

std::string manifest_to_json(const RunManifest& m);
RunManifest parse_manifest_json(std::string_view text);

// ISO-8601 UTC with second resolution, e.g. 2026-01-02T03:04:05Z.
std::string utc_now_iso8601();

}  // namespace speclab

#endif  // SPECLAB_CORE_IO_HPP
