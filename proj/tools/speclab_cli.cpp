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

// speclab command-line tool. Exit codes: 0 success, 1 runtime or data
// error, 2 usage or schema error.

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "speclab/speclab.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

// Carries an exit code out of a subcommand.
struct Exit {
  int code;
};

struct CString {
  char* p = nullptr;
  ~CString() { speclab_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct MeasureHandle {
  speclab_measure* p = nullptr;
  ~MeasureHandle() { speclab_measure_free(p); }
};

struct ExperimentHandle {
  speclab_experiment* p = nullptr;
  ~ExperimentHandle() { speclab_experiment_free(p); }
};

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "speclab: " << msg << "\n";
  throw Exit{code};
}

void check(speclab_status s, const std::string& context = "") {
  if (s == SPECLAB_OK) return;
  const int code = (s == SPECLAB_ERR_SCHEMA || s == SPECLAB_ERR_USAGE)
                       ? kExitUsage
                       : kExitRuntime;
  std::string msg = speclab_last_error();
  if (!context.empty()) msg = context + ": " + msg;
  die(code, msg);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(kExitRuntime, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) die(kExitRuntime, "cannot write '" + path + "'");
  out << content;
  out.close();
  if (!out) die(kExitRuntime, "write failed for '" + path + "'");
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    die(kExitRuntime, "SHA-256 failed");
  }
  static const char* const kHex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 15]);
  }
  return out;
}

std::string utc_now() {
  CString s;
  check(speclab_utc_now(&s.p));
  return s.str();
}

int ensemble_or_usage(const std::string& name) {
  int tag = 0;
  if (speclab_ensemble_from_name(name.c_str(), &tag) != SPECLAB_OK) {
    die(kExitUsage, speclab_last_error());
  }
  return tag;
}

std::optional<std::uint64_t> env_seed() {
  const char* v = std::getenv("SPECLAB_SEED");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const unsigned long long x = std::strtoull(v, &end, 10);
  if (errno != 0 || *end != '\0' || *v == '-') {
    die(kExitUsage, std::string("SPECLAB_SEED is not an unsigned integer: ") + v);
  }
  return x;
}

std::string write_manifest(const std::string& path, std::uint64_t seed,
                           const std::string& plan_json,
                           const std::string& started, std::uint64_t records,
                           const std::string& records_file,
                           const std::string& records_content) {
  const std::string finished = utc_now();
  const std::string sha = sha256_hex(records_content);
  speclab_manifest m{seed,    plan_json.c_str(),    started.c_str(),
                     finished.c_str(), records, records_file.c_str(),
                     sha.c_str()};
  CString json;
  check(speclab_manifest_to_json(&m, &json.p));
  write_file(path, json.str());
  return sha;
}

// ---- subcommands ----------------------------------------------------------

struct SampleArgs {
  std::string ensemble;
  std::uint64_t n = 0;
  std::uint64_t count = 1;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int cmd_sample(const SampleArgs& a) {
  const int tag = ensemble_or_usage(a.ensemble);
  if (a.n < 1) die(kExitUsage, "--n must be >= 1");
  if (a.count < 1) die(kExitUsage, "--count must be >= 1");
  std::uint64_t seed = 0;
  if (a.seed) {
    seed = *a.seed;
  } else if (auto e = env_seed()) {
    seed = *e;
  }
  const std::string started = utc_now();
  CString csv;
  check(speclab_sample_spectra_csv(tag, a.n, a.count, seed, &csv.p));
  write_file(a.out, csv.str());
  std::ostringstream echo;
  echo << "{\"command\":\"sample\",\"ensemble\":\"" << a.ensemble
       << "\",\"n\":" << a.n << ",\"dim\":" << speclab_ambient_dim(tag, a.n)
       << ",\"count\":" << a.count << ",\"seed\":" << seed << "}";
  write_manifest(a.out + ".manifest.json", seed, echo.str(), started, a.count,
                 fs::path(a.out).filename().string(), csv.str());
  return kExitOk;
}

struct DistanceArgs {
  std::string input;
  std::size_t row = 0;
  std::string reference;
  std::size_t reference_row = 0;
  std::string metric;
  double p = 1.0;
};

MeasureHandle load_row(const std::string& path, std::size_t row) {
  const std::string text = read_file(path);
  MeasureHandle m;
  check(speclab_spectra_csv_row(text.c_str(), row, &m.p), path);
  return m;
}

int metric_from_name(const std::string& name) {
  for (int i = 0; i < 3; ++i) {
    if (name == speclab_metric_name(i)) return i;
  }
  die(kExitUsage, "unknown metric '" + name +
                      "' (expected line_euclidean, circle_geodesic or "
                      "circle_chordal)");
}

int cmd_distance(const DistanceArgs& a) {
  const MeasureHandle m = load_row(a.input, a.row);
  speclab_distance d{};
  if (a.reference == "uniform-circle" || a.reference == "semicircle") {
    if (a.p != 1.0) die(kExitUsage, "continuous references support p = 1 only");
    if (!a.metric.empty()) {
      const int want = a.reference == "semicircle"
                           ? SPECLAB_METRIC_LINE_EUCLIDEAN
                           : SPECLAB_METRIC_CIRCLE_GEODESIC;
      if (metric_from_name(a.metric) != want) {
        die(kExitUsage, "metric not available for reference " + a.reference);
      }
    }
    check(speclab_distance_to_reference(
        m.p,
        a.reference == "semicircle" ? SPECLAB_REF_SEMICIRCLE
                                    : SPECLAB_REF_UNIFORM_CIRCLE,
        nullptr, &d));
  } else {
    const MeasureHandle ref = load_row(a.reference, a.reference_row);
    int metric = speclab_measure_domain(m.p) == SPECLAB_DOMAIN_CIRCLE
                     ? SPECLAB_METRIC_CIRCLE_GEODESIC
                     : SPECLAB_METRIC_LINE_EUCLIDEAN;
    if (!a.metric.empty()) metric = metric_from_name(a.metric);
    check(speclab_distance_pair(m.p, ref.p, metric, a.p, &d));
  }
  CString json;
  check(speclab_distance_json(&d, &json.p));
  std::cout << json.str();
  return kExitOk;
}

struct ExperimentArgs {
  std::string plan;
  std::string out;
  unsigned workers = 1;
  std::optional<std::uint64_t> seed;
};

int cmd_experiment(const ExperimentArgs& a) {
  const std::string plan_text = read_file(a.plan);
  check(speclab_plan_validate(plan_text.c_str()), a.plan);
  std::optional<std::uint64_t> seed = a.seed;
  if (!seed) seed = env_seed();

  const std::string started = utc_now();
  ExperimentHandle e;
  check(speclab_experiment_run(plan_text.c_str(), a.workers,
                               seed ? &*seed : nullptr, &e.p));
  CString records, summary, verdict, plan;
  check(speclab_experiment_records_csv(e.p, &records.p));
  check(speclab_experiment_summary_json(e.p, &summary.p));
  check(speclab_experiment_verdict(e.p, &verdict.p));
  check(speclab_experiment_plan_json(e.p, &plan.p));

  std::error_code ec;
  fs::create_directories(a.out, ec);
  if (ec) die(kExitRuntime, "cannot create '" + a.out + "': " + ec.message());
  const fs::path dir(a.out);
  write_file((dir / "records.csv").string(), records.str());
  write_file((dir / "summary.json").string(), summary.str());
  write_manifest((dir / "manifest.json").string(), speclab_experiment_seed(e.p),
                 plan.str(), started, speclab_experiment_record_count(e.p),
                 "records.csv", records.str());
  std::cout << verdict.str();
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::uint64_t trials = 200;
  std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& a) {
  std::uint64_t checks = 0, violations = 0;
  CString details;
  check(speclab_verify(a.suite.c_str(), a.trials, a.seed, &checks, &violations,
                       &details.p));
  std::cerr << details.str();
  std::cout << "suite " << a.suite << ": " << checks << " checks, "
            << violations << " violations\n";
  return violations == 0 ? kExitOk : kExitRuntime;
}

int cmd_manifest_check(const std::string& dir, const std::string& manifest) {
  const fs::path mpath = manifest.empty() ? fs::path(dir) / "manifest.json"
                                          : fs::path(manifest);
  const std::string text = read_file(mpath.string());
  CString file, sha;
  std::uint64_t count = 0;
  check(speclab_manifest_parse(text.c_str(), &file.p, &sha.p, &count),
        mpath.string());
  const fs::path rpath = mpath.parent_path() / file.str();
  const std::string content = read_file(rpath.string());
  const std::string got = sha256_hex(content);
  if (got != sha.str()) {
    std::cerr << "speclab: hash mismatch for " << rpath.string()
              << "\n  manifest " << sha.str() << "\n  actual   " << got
              << "\n";
    return kExitRuntime;
  }
  std::cout << "ok " << rpath.string() << " sha256 " << got << "\n";
  return kExitOk;
}

struct CouplingArgs {
  std::string ensemble_a = "unitary";
  std::uint64_t n_a = 16;
  std::string ensemble_b = "su";
  std::uint64_t n_b = 16;
  std::uint64_t replicates = 1000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

int cmd_coupling(const CouplingArgs& a) {
  const int ta = ensemble_or_usage(a.ensemble_a);
  const int tb = ensemble_or_usage(a.ensemble_b);
  double ks = 0.0, p = 0.0;
  int accept = 0;
  check(speclab_identdist(ta, a.n_a, tb, a.n_b, a.replicates, a.seed,
                          a.workers, &ks, &p, &accept));
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "{\"ks_statistic\":%.17g,\"p_value\":%.17g,\"level\":0.01,"
                "\"accept\":%s}\n",
                ks, p, accept ? "true" : "false");
  std::cout << buf;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"speclab: spectral measures of random matrices"};
  app.set_version_flag("--version", std::string(speclab_version()));
  app.require_subcommand(1);

  SampleArgs sample;
  auto* s = app.add_subcommand("sample", "Sample spectra to CSV");
  s->add_option("--ensemble", sample.ensemble, "Ensemble name")->required();
  s->add_option("--n", sample.n, "Group parameter n")->required();
  s->add_option("--count", sample.count, "Number of spectra");
  s->add_option("--seed", sample.seed, "Master seed");
  s->add_option("--out", sample.out, "Output CSV path")->required();

  DistanceArgs dist;
  auto* d = app.add_subcommand("distance", "Wasserstein distance of a spectrum");
  d->add_option("--input", dist.input, "Spectrum CSV")->required();
  d->add_option("--row", dist.row, "Data row of --input (0-based)");
  d->add_option("--reference", dist.reference,
                "uniform-circle, semicircle, or a spectrum CSV")
      ->required();
  d->add_option("--reference-row", dist.reference_row,
                "Data row of the reference file");
  d->add_option("--metric", dist.metric,
                "line_euclidean, circle_geodesic or circle_chordal");
  d->add_option("--p", dist.p, "Order p");

  ExperimentArgs exp;
  auto* e = app.add_subcommand("experiment", "Run an experiment plan");
  e->add_option("--plan", exp.plan, "Plan JSON file")->required();
  e->add_option("--out", exp.out, "Output directory")->required();
  e->add_option("--workers", exp.workers, "Worker threads");
  e->add_option("--seed", exp.seed, "Master seed (overrides env and plan)");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run property suites");
  v->add_option("--suite", ver.suite,
                "lipschitz, transport-oracle, group-membership or all")
      ->required();
  v->add_option("--trials", ver.trials, "Random trials per suite");
  v->add_option("--seed", ver.seed, "Seed");

  std::string check_dir, check_manifest;
  auto* mc = app.add_subcommand("manifest-check",
                                "Validate a records file against its manifest");
  mc->add_option("--dir", check_dir, "Experiment output directory");
  mc->add_option("--manifest", check_manifest, "Manifest JSON path");

  CouplingArgs coup;
  auto* c = app.add_subcommand(
      "coupling", "Two-sample KS between d1 laws of two circle ensembles");
  c->add_option("--ensemble-a", coup.ensemble_a);
  c->add_option("--n-a", coup.n_a);
  c->add_option("--ensemble-b", coup.ensemble_b);
  c->add_option("--n-b", coup.n_b);
  c->add_option("--replicates", coup.replicates);
  c->add_option("--seed", coup.seed);
  c->add_option("--workers", coup.workers);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForVersion& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kExitUsage;
  }

  try {
    if (*s) return cmd_sample(sample);
    if (*d) return cmd_distance(dist);
    if (*e) return cmd_experiment(exp);
    if (*v) return cmd_verify(ver);
    if (*mc) {
      if (check_dir.empty() == check_manifest.empty()) {
        die(kExitUsage, "give exactly one of --dir or --manifest");
      }
      return cmd_manifest_check(check_dir, check_manifest);
    }
    if (*c) return cmd_coupling(coup);
  } catch (const Exit& x) {
    return x.code;
  } catch (const std::exception& ex) {
    std::cerr << "speclab: " << ex.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
