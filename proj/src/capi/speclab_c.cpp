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

#include "speclab/speclab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <string_view>

#include "core/ensembles.hpp"
#include "core/errors.hpp"
#include "core/experiments.hpp"
#include "core/io.hpp"
#include "core/matlin.hpp"
#include "core/measures.hpp"
#include "core/rng.hpp"
#include "core/transport.hpp"
#include "core/verify.hpp"

using namespace speclab;

struct speclab_matrix {
  ComplexMatrix m;
  bool hermitian;
};

struct speclab_measure {
  EmpiricalMeasure m;
};

struct speclab_experiment {
  ExperimentPlan plan;
  PlanSamples samples;
  ExperimentSummary summary;
};

namespace {

thread_local std::string g_last_error;

speclab_status fail(speclab_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Runs fn, mapping exceptions to status codes.
template <typename Fn>
speclab_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return SPECLAB_OK;
  } catch (const Error& e) {
    return fail(static_cast<speclab_status>(static_cast<int>(e.code())),
                e.what());
  } catch (const std::bad_alloc&) {
    return fail(SPECLAB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SPECLAB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SPECLAB_ERR_INTERNAL, "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool cond, const char* what) {
  if (!cond) throw ContractError(what);
}

EnsembleTag to_tag(int tag) {
  if (tag < 0 || tag > static_cast<int>(EnsembleTag::kRandomizedSum)) {
    throw UsageError("unknown ensemble tag " + std::to_string(tag));
  }
  return static_cast<EnsembleTag>(tag);
}

StreamKey to_key(const speclab_stream_key* k) {
  require(k != nullptr, "stream key must not be NULL");
  return StreamKey{k->master_seed, to_tag(k->ensemble), k->n, k->replicate,
                   k->substream};
}

GroundMetric to_metric(int metric) {
  switch (metric) {
    case SPECLAB_METRIC_LINE_EUCLIDEAN:
      return GroundMetric::kLineEuclidean;
    case SPECLAB_METRIC_CIRCLE_GEODESIC:
      return GroundMetric::kCircleGeodesic;
    case SPECLAB_METRIC_CIRCLE_CHORDAL:
      return GroundMetric::kCircleChordal;
  }
  throw UsageError("unknown metric " + std::to_string(metric));
}

void fill(const DistanceResult& d, speclab_distance* out) {
  out->value = d.value;
  out->p = d.p;
  out->metric = static_cast<int>(d.metric);
  out->algorithm = static_cast<int>(d.algorithm);
  out->has_chordal_bounds = d.chordal.has_value() ? 1 : 0;
  out->chordal_lower = d.chordal ? d.chordal->lower : 0.0;
  out->chordal_upper = d.chordal ? d.chordal->upper : 0.0;
}

DistanceResult from_c(const speclab_distance* d) {
  DistanceResult r;
  r.value = d->value;
  r.p = d->p;
  r.metric = to_metric(d->metric);
  require(d->algorithm >= 0 && d->algorithm <= 3, "unknown algorithm");
  r.algorithm = static_cast<TransportAlgorithm>(d->algorithm);
  if (d->has_chordal_bounds) {
    r.chordal = ChordalBounds{d->chordal_lower, d->chordal_upper};
  }
  return r;
}

}  // namespace

extern "C" {

const char* speclab_version(void) { return SPECLAB_VERSION_STRING; }

const char* speclab_last_error(void) { return g_last_error.c_str(); }

const char* speclab_status_name(speclab_status status) {
  switch (status) {
    case SPECLAB_OK: return "ok";
    case SPECLAB_ERR_CONTRACT: return "contract";
    case SPECLAB_ERR_DEGENERATE_INPUT: return "degenerate_input";
    case SPECLAB_ERR_NUMERICAL: return "numerical";
    case SPECLAB_ERR_NO_CONVERGENCE: return "no_convergence";
    case SPECLAB_ERR_SIZE_GUARD: return "size_guard";
    case SPECLAB_ERR_PARSE: return "parse";
    case SPECLAB_ERR_SCHEMA: return "schema";
    case SPECLAB_ERR_IO: return "io";
    case SPECLAB_ERR_USAGE: return "usage";
    case SPECLAB_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void speclab_string_free(char* s) { std::free(s); }

// ---- ensembles ------------------------------------------------------------

speclab_status speclab_ensemble_from_name(const char* name, int* tag_out) {
  return guarded([&] {
    require(name && tag_out, "arguments must not be NULL");
    const auto tag = ensemble_from_name(name);
    if (!tag) throw UsageError(std::string("unknown ensemble '") + name + "'");
    *tag_out = static_cast<int>(*tag);
  });
}

const char* speclab_ensemble_name(int tag) {
  if (tag < 0 || tag > static_cast<int>(EnsembleTag::kRandomizedSum)) {
    return nullptr;
  }
  return ensemble_name(static_cast<EnsembleTag>(tag)).data();
}

int speclab_ensemble_is_circle(int tag) {
  if (tag < 0 || tag > static_cast<int>(EnsembleTag::kRandomizedSum)) return 0;
  return is_circle_ensemble(static_cast<EnsembleTag>(tag)) ? 1 : 0;
}

uint64_t speclab_ambient_dim(int tag, uint64_t n) {
  if (tag < 0 || tag > static_cast<int>(EnsembleTag::kRandomizedSum)) return 0;
  return ambient_dim(static_cast<EnsembleTag>(tag), n);
}

speclab_status speclab_sample_matrix(int tag, uint64_t n, uint64_t k,
                                     const speclab_stream_key* key,
                                     speclab_matrix** out) {
  return guarded([&] {
    require(out != nullptr, "output must not be NULL");
    require(n >= 1, "n must be >= 1");
    const EnsembleTag t = to_tag(tag);
    const StreamKey sk = to_key(key);
    const auto nn = static_cast<std::size_t>(n);
    std::optional<speclab_matrix> m;
    switch (t) {
      case EnsembleTag::kOrthogonal:
        m.emplace(speclab_matrix{haar_orthogonal(nn, sk).matrix(), false});
        break;
      case EnsembleTag::kSo:
        m.emplace(speclab_matrix{haar_so(nn, sk).matrix(), false});
        break;
      case EnsembleTag::kSoMinus:
        m.emplace(speclab_matrix{haar_so_minus(nn, sk).matrix(), false});
        break;
      case EnsembleTag::kUnitary:
        m.emplace(speclab_matrix{haar_unitary(nn, sk).matrix(), false});
        break;
      case EnsembleTag::kSu:
        m.emplace(speclab_matrix{haar_su(nn, sk).matrix(), false});
        break;
      case EnsembleTag::kSymplectic:
        m.emplace(speclab_matrix{haar_symplectic(nn, sk).matrix(), false});
        break;
      case EnsembleTag::kCoe:
        m.emplace(speclab_matrix{sample_coe(nn, sk).matrix(), false});
        break;
      case EnsembleTag::kCse:
        m.emplace(speclab_matrix{sample_cse(nn, sk).matrix(), false});
        break;
      case EnsembleTag::kGueWigner:
        m.emplace(speclab_matrix{gue_wigner(nn, sk).matrix(), true});
        break;
      case EnsembleTag::kCompression:
        m.emplace(speclab_matrix{
            sample_compression(nn, static_cast<std::size_t>(k), sk).matrix(),
            true});
        break;
      case EnsembleTag::kRandomizedSum:
        m.emplace(speclab_matrix{sample_randomized_sum(nn, sk).matrix(), true});
        break;
    }
    *out = new speclab_matrix(std::move(*m));
  });
}

size_t speclab_matrix_dim(const speclab_matrix* m) {
  return m ? m->m.dim() : 0;
}

speclab_status speclab_matrix_copy(const speclab_matrix* m, double* out) {
  return guarded([&] {
    require(m && out, "arguments must not be NULL");
    std::size_t i = 0;
    for (const Complex z : m->m.entries()) {
      out[i++] = z.real();
      out[i++] = z.imag();
    }
  });
}

void speclab_matrix_free(speclab_matrix* m) { delete m; }

// ---- measures -------------------------------------------------------------

speclab_status speclab_sample_spectrum(int tag, uint64_t n, uint64_t k,
                                       const speclab_stream_key* key,
                                       speclab_measure** out) {
  return guarded([&] {
    require(out != nullptr, "output must not be NULL");
    require(n >= 1, "n must be >= 1");
    *out = new speclab_measure{sample_esd(to_tag(tag), n, k, to_key(key))};
  });
}

speclab_status speclab_matrix_spectrum(const speclab_matrix* m,
                                       speclab_measure** out) {
  return guarded([&] {
    require(m && out, "arguments must not be NULL");
    if (m->hermitian) {
      *out = new speclab_measure{esd_line(HermitianView(m->m))};
    } else {
      *out = new speclab_measure{esd_circle(UnitaryView(m->m))};
    }
  });
}

speclab_status speclab_measure_from_atoms(int domain, const double* atoms,
                                          size_t count,
                                          speclab_measure** out) {
  return guarded([&] {
    require(out != nullptr, "output must not be NULL");
    require(atoms != nullptr || count == 0, "atoms must not be NULL");
    require(domain == SPECLAB_DOMAIN_CIRCLE || domain == SPECLAB_DOMAIN_LINE,
            "unknown domain");
    const Domain d =
        domain == SPECLAB_DOMAIN_CIRCLE ? Domain::kCircle : Domain::kLine;
    *out = new speclab_measure{EmpiricalMeasure::from_atoms(
        d, std::vector<double>(atoms, atoms + count))};
  });
}

int speclab_measure_domain(const speclab_measure* m) {
  if (!m) return -1;
  return m->m.domain() == Domain::kCircle ? SPECLAB_DOMAIN_CIRCLE
                                          : SPECLAB_DOMAIN_LINE;
}

size_t speclab_measure_size(const speclab_measure* m) {
  return m ? m->m.size() : 0;
}

speclab_status speclab_measure_atoms(const speclab_measure* m, double* out) {
  return guarded([&] {
    require(m && out, "arguments must not be NULL");
    const auto a = m->m.atoms();
    std::copy(a.begin(), a.end(), out);
  });
}

void speclab_measure_free(speclab_measure* m) { delete m; }

// ---- transport ------------------------------------------------------------

const char* speclab_metric_name(int metric) {
  if (metric < 0 || metric > 2) return nullptr;
  return metric_name(static_cast<GroundMetric>(metric)).data();
}

const char* speclab_algorithm_name(int algorithm) {
  if (algorithm < 0 || algorithm > 3) return nullptr;
  return algorithm_name(static_cast<TransportAlgorithm>(algorithm)).data();
}

speclab_status speclab_distance_to_reference(const speclab_measure* m,
                                             int reference,
                                             const speclab_measure* ref,
                                             speclab_distance* out) {
  return guarded([&] {
    require(m && out, "arguments must not be NULL");
    switch (reference) {
      case SPECLAB_REF_MEASURE:
        require(ref != nullptr, "reference measure must not be NULL");
        fill(w1_to_reference(m->m, Reference{ref->m}), out);
        return;
      case SPECLAB_REF_UNIFORM_CIRCLE:
        fill(w1_to_reference(m->m, Reference{UniformCircleReference{}}), out);
        return;
      case SPECLAB_REF_SEMICIRCLE:
        fill(w1_to_reference(m->m, Reference{SemicircleReference{}}), out);
        return;
    }
    throw UsageError("unknown reference kind " + std::to_string(reference));
  });
}

speclab_status speclab_distance_pair(const speclab_measure* a,
                                     const speclab_measure* b, int metric,
                                     double p, speclab_distance* out) {
  return guarded([&] {
    require(a && b && out, "arguments must not be NULL");
    switch (to_metric(metric)) {
      case GroundMetric::kLineEuclidean:
        if (p == 1.0 && a->m.size() != b->m.size()) {
          fill(w1_line_pair(a->m, b->m), out);
        } else {
          fill(wp_line(a->m, b->m, p), out);
        }
        return;
      case GroundMetric::kCircleGeodesic:
        require(p == 1.0, "circle distances are implemented for p = 1");
        fill(w1_circle_pair(a->m, b->m), out);
        return;
      case GroundMetric::kCircleChordal:
        fill(assignment_oracle(a->m, b->m, GroundMetric::kCircleChordal, p),
             out);
        return;
    }
  });
}

speclab_status speclab_assignment_oracle(const speclab_measure* a,
                                         const speclab_measure* b, int metric,
                                         double p, speclab_distance* out) {
  return guarded([&] {
    require(a && b && out, "arguments must not be NULL");
    fill(assignment_oracle(a->m, b->m, to_metric(metric), p), out);
  });
}

speclab_status speclab_distance_json(const speclab_distance* d,
                                     char** json_out) {
  return guarded([&] {
    require(d && json_out, "arguments must not be NULL");
    *json_out = dup_string(distance_to_json(from_c(d)));
  });
}

// ---- spectra files --------------------------------------------------------

speclab_status speclab_sample_spectra_csv(int tag, uint64_t n, uint64_t count,
                                          uint64_t seed, char** csv_out) {
  return guarded([&] {
    require(csv_out != nullptr, "output must not be NULL");
    require(n >= 1, "n must be >= 1");
    require(count >= 1, "count must be >= 1");
    const EnsembleTag t = to_tag(tag);
    const std::uint64_t k = t == EnsembleTag::kCompression ? (n + 1) / 2 : 0;
    std::vector<SpectrumRow> rows;
    rows.reserve(count);
    for (std::uint64_t r = 0; r < count; ++r) {
      rows.push_back(
          SpectrumRow{r, sample_esd(t, n, k, StreamKey{seed, t, n, r, 0})});
    }
    *csv_out = dup_string(spectra_to_csv(rows));
  });
}

speclab_status speclab_spectra_csv_count(const char* csv, size_t* rows_out) {
  return guarded([&] {
    require(csv && rows_out, "arguments must not be NULL");
    *rows_out = parse_spectra_csv(csv).size();
  });
}

speclab_status speclab_spectra_csv_row(const char* csv, size_t row,
                                       speclab_measure** out) {
  return guarded([&] {
    require(csv && out, "arguments must not be NULL");
    auto rows = parse_spectra_csv(csv);
    if (row >= rows.size()) {
      throw ContractError("row " + std::to_string(row) + " out of range (" +
                          std::to_string(rows.size()) + " rows)");
    }
    *out = new speclab_measure{std::move(rows[row].measure)};
  });
}

// ---- experiments ----------------------------------------------------------

speclab_status speclab_plan_validate(const char* plan_json) {
  return guarded([&] {
    require(plan_json != nullptr, "plan must not be NULL");
    (void)parse_plan_json(plan_json);
  });
}

speclab_status speclab_experiment_run(const char* plan_json, unsigned workers,
                                      const uint64_t* seed_override,
                                      speclab_experiment** out) {
  return guarded([&] {
    require(plan_json && out, "arguments must not be NULL");
    ExperimentPlan plan = parse_plan_json(plan_json);
    if (seed_override) plan.master_seed = *seed_override;
    RunOptions opts;
    opts.workers = workers == 0 ? 1 : workers;
    PlanSamples samples = sample_plan(plan, opts);
    ExperimentSummary summary =
        summarize_records(plan, samples.records, samples.pools);
    *out = new speclab_experiment{plan, std::move(samples), std::move(summary)};
  });
}

uint64_t speclab_experiment_record_count(const speclab_experiment* e) {
  return e ? e->samples.records.size() : 0;
}

uint64_t speclab_experiment_seed(const speclab_experiment* e) {
  return e ? e->plan.master_seed : 0;
}

speclab_status speclab_experiment_plan_json(const speclab_experiment* e,
                                            char** out) {
  return guarded([&] {
    require(e && out, "arguments must not be NULL");
    *out = dup_string(plan_to_json(e->plan));
  });
}

speclab_status speclab_experiment_records_csv(const speclab_experiment* e,
                                              char** out) {
  return guarded([&] {
    require(e && out, "arguments must not be NULL");
    *out = dup_string(records_to_csv(e->samples.records));
  });
}

speclab_status speclab_experiment_summary_json(const speclab_experiment* e,
                                               char** out) {
  return guarded([&] {
    require(e && out, "arguments must not be NULL");
    *out = dup_string(summary_to_json(e->summary));
  });
}

speclab_status speclab_experiment_verdict(const speclab_experiment* e,
                                          char** out) {
  return guarded([&] {
    require(e && out, "arguments must not be NULL");
    *out = dup_string(verdict_table(e->summary));
  });
}

void speclab_experiment_free(speclab_experiment* e) { delete e; }

speclab_status speclab_summarize_records(const char* plan_json,
                                         const char* records_csv,
                                         char** summary_out) {
  return guarded([&] {
    require(plan_json && records_csv && summary_out,
            "arguments must not be NULL");
    const ExperimentPlan plan = parse_plan_json(plan_json);
    auto records = parse_records_csv(records_csv);
    sort_records(records);
    *summary_out =
        dup_string(summary_to_json(summarize_records(plan, records, {})));
  });
}

speclab_status speclab_identdist(int tag_a, uint64_t n_a, int tag_b,
                                 uint64_t n_b, uint64_t replicates,
                                 uint64_t seed, unsigned workers,
                                 double* ks_out, double* p_out,
                                 int* accept_out) {
  return guarded([&] {
    require(ks_out && p_out && accept_out, "outputs must not be NULL");
    RunOptions opts;
    opts.workers = workers == 0 ? 1 : workers;
    const IdentDistResult r = compare_distance_laws(
        to_tag(tag_a), n_a, to_tag(tag_b), n_b, replicates, seed, opts);
    *ks_out = r.ks_statistic;
    *p_out = r.p_value;
    *accept_out = r.accept ? 1 : 0;
  });
}

speclab_status speclab_verify(const char* suite, uint64_t trials,
                              uint64_t seed, uint64_t* checks_out,
                              uint64_t* violations_out, char** details_out) {
  return guarded([&] {
    require(suite && violations_out, "arguments must not be NULL");
    const VerifyReport r = run_verify_suite(suite, trials, seed);
    if (checks_out) *checks_out = r.checks;
    *violations_out = r.violations;
    if (details_out) {
      std::string text;
      for (const auto& d : r.details) text += d + "\n";
      *details_out = dup_string(text);
    }
  });
}

// ---- manifests ------------------------------------------------------------

speclab_status speclab_manifest_to_json(const speclab_manifest* m,
                                        char** json_out) {
  return guarded([&] {
    require(m && json_out, "arguments must not be NULL");
    RunManifest rm;
    rm.tool_version = SPECLAB_VERSION_STRING;
    rm.master_seed = m->master_seed;
    rm.plan_json = m->plan_json ? m->plan_json : "";
    rm.started_utc = m->started_utc ? m->started_utc : "";
    rm.finished_utc = m->finished_utc ? m->finished_utc : "";
    rm.record_count = m->record_count;
    rm.records_file = m->records_file ? m->records_file : "";
    rm.records_sha256 = m->records_sha256 ? m->records_sha256 : "";
    *json_out = dup_string(manifest_to_json(rm));
  });
}

speclab_status speclab_manifest_parse(const char* json,
                                      char** records_file_out,
                                      char** records_sha256_out,
                                      uint64_t* record_count_out) {
  return guarded([&] {
    require(json && records_file_out && records_sha256_out && record_count_out,
            "arguments must not be NULL");
    const RunManifest m = parse_manifest_json(json);
    char* file = dup_string(m.records_file);
    try {
      *records_sha256_out = dup_string(m.records_sha256);
    } catch (...) {
      std::free(file);
      throw;
    }
    *records_file_out = file;
    *record_count_out = m.record_count;
  });
}

speclab_status speclab_utc_now(char** out) {
  return guarded([&] {
    require(out != nullptr, "output must not be NULL");
    *out = dup_string(utc_now_iso8601());
  });
}

}  // extern "C"
