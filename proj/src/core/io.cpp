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

#include "core/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <json.hpp>
#include <sstream>

#include "core/errors.hpp"

namespace speclab {

using ojson = nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

// JSON numbers for doubles that may be non-finite (e.g. an undefined ratio).
ojson num(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

template <typename T>
ojson opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

std::uint64_t require_uint(const ojson& v, const std::string& ptr,
                           const char* what) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() &&
                                 v.get<std::int64_t>() < 0)) {
    throw SchemaError(ptr, std::string("expected ") + what);
  }
  return v.get<std::uint64_t>();
}

KRule parse_k_rule(const ojson& v) {
  if (!v.is_string()) {
    throw SchemaError("/k_rule", "expected \"half\", \"fixed:<int>\" or null");
  }
  const std::string s = v.get<std::string>();
  if (s == "half") return KRule{};
  constexpr std::string_view kPrefix = "fixed:";
  if (s.rfind(kPrefix, 0) == 0) {
    const std::string_view digits = std::string_view(s).substr(kPrefix.size());
    std::uint64_t k = 0;
    const auto [p, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && p == digits.data() + digits.size() &&
        !digits.empty()) {
      return KRule{KRule::Kind::kFixed, k};
    }
  }
  throw SchemaError("/k_rule", "expected \"half\", \"fixed:<int>\" or null");
}

ojson plan_json(const ExperimentPlan& plan) {
  ojson j;
  j["ensemble"] = std::string(ensemble_name(plan.ensemble));
  j["n_grid"] = plan.n_grid;
  j["replicates"] = plan.replicates;
  j["seed"] = plan.master_seed;
  j["k_rule"] = plan.k_rule ? ojson(plan.k_rule->to_string()) : ojson(nullptr);
  j["t_grid"] = plan.t_grid ? ojson(*plan.t_grid) : ojson(nullptr);
  j["moments_kmax"] = opt(plan.moments_kmax);
  return j;
}

ojson summary_json(const SampleSummary& s) {
  ojson j;
  j["count"] = s.count;
  j["mean"] = num(s.mean);
  j["std"] = num(s.std);
  j["std_error"] = num(s.std_error);
  j["ci95_lo"] = num(s.ci95_lo);
  j["ci95_hi"] = num(s.ci95_hi);
  return j;
}

ojson fit_json(const std::optional<RateFitResult>& f) {
  if (!f) return nullptr;
  ojson j;
  j["slope"] = num(f->slope);
  j["intercept"] = num(f->intercept);
  j["slope_stderr"] = num(f->slope_stderr);
  j["r_squared"] = num(f->r_squared);
  j["n_used"] = f->n_used;
  return j;
}

// Splits one CSV line (RFC 4180 quoting, no embedded newlines).
std::vector<std::string> split_csv(std::string_view line, std::size_t lineno) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  bool field_was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(ch);
      }
    } else if (ch == '"') {
      if (!cur.empty() || field_was_quoted) {
        throw ParseError("stray quote in field", lineno);
      }
      quoted = true;
      field_was_quoted = true;
    } else if (ch == ',') {
      out.push_back(std::move(cur));
      cur.clear();
      field_was_quoted = false;
    } else {
      cur.push_back(ch);
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", lineno);
  out.push_back(std::move(cur));
  return out;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

double parse_real(const std::string& s, std::size_t lineno,
                  const char* what) {
  double x = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw ParseError(std::string("bad ") + what + " '" + s + "'", lineno);
  }
  return x;
}

std::uint64_t parse_count(const std::string& s, std::size_t lineno,
                          const char* what) {
  std::uint64_t x = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw ParseError(std::string("bad ") + what + " '" + s + "'", lineno);
  }
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------

ExperimentPlan parse_plan_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("", "plan must be a JSON object");
  static const char* const kKnown[] = {"ensemble", "n_grid",  "replicates",
                                       "seed",     "k_rule",  "t_grid",
                                       "moments_kmax"};
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : kKnown) known = known || key == k;
    if (!known) throw SchemaError("/" + key, "unknown field");
  }
  for (const char* req : {"ensemble", "n_grid", "replicates", "seed"}) {
    if (!j.contains(req)) {
      throw SchemaError(std::string("/") + req, "required field missing");
    }
  }

  ExperimentPlan plan;
  const ojson& ens = j["ensemble"];
  if (!ens.is_string()) throw SchemaError("/ensemble", "expected a string");
  const auto tag = ensemble_from_name(ens.get<std::string>());
  if (!tag) {
    throw SchemaError("/ensemble",
                      "unknown ensemble '" + ens.get<std::string>() + "'");
  }
  plan.ensemble = *tag;

  const ojson& grid = j["n_grid"];
  if (!grid.is_array()) throw SchemaError("/n_grid", "expected an array");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    plan.n_grid.push_back(require_uint(grid[i], "/n_grid/" + std::to_string(i),
                                       "a positive integer"));
  }
  plan.replicates =
      require_uint(j["replicates"], "/replicates", "a positive integer");
  plan.master_seed =
      require_uint(j["seed"], "/seed", "an unsigned 64-bit integer");

  if (j.contains("k_rule") && !j["k_rule"].is_null()) {
    plan.k_rule = parse_k_rule(j["k_rule"]);
  }
  if (j.contains("t_grid") && !j["t_grid"].is_null()) {
    const ojson& tg = j["t_grid"];
    if (!tg.is_array()) throw SchemaError("/t_grid", "expected an array");
    std::vector<double> ts;
    for (std::size_t i = 0; i < tg.size(); ++i) {
      if (!tg[i].is_number()) {
        throw SchemaError("/t_grid/" + std::to_string(i), "expected a number");
      }
      ts.push_back(tg[i].get<double>());
    }
    plan.t_grid = std::move(ts);
  }
  if (j.contains("moments_kmax") && !j["moments_kmax"].is_null()) {
    plan.moments_kmax = require_uint(j["moments_kmax"], "/moments_kmax",
                                     "a positive integer");
  }
  plan.validate();
  return plan;
}

std::string plan_to_json(const ExperimentPlan& plan) {
  return plan_json(plan).dump(2) + "\n";
}

// ---------------------------------------------------------------------------

std::string records_to_csv(const std::vector<SummaryRecord>& records) {
  std::string out = "ensemble,n,replicate,statistic,value,seed\n";
  for (const auto& r : records) {
    out += csv_field(ensemble_name(r.ensemble));
    out += ',' + std::to_string(r.n) + ',' + std::to_string(r.replicate) + ',';
    out += csv_field(r.statistic);
    out += ',' + format_double(r.value) + ',' +
           std::to_string(r.key.master_seed) + '\n';
  }
  return out;
}

std::vector<SummaryRecord> parse_records_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "ensemble,n,replicate,statistic,value,seed") {
    throw ParseError("expected records header", 1);
  }
  std::vector<SummaryRecord> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    if (lines[i].empty()) continue;
    const auto f = split_csv(lines[i], lineno);
    if (f.size() != 6) throw ParseError("expected 6 fields", lineno);
    const auto tag = ensemble_from_name(f[0]);
    if (!tag) throw ParseError("unknown ensemble '" + f[0] + "'", lineno);
    SummaryRecord r{*tag,
                    parse_count(f[1], lineno, "n"),
                    parse_count(f[2], lineno, "replicate"),
                    f[3],
                    parse_real(f[4], lineno, "value"),
                    {}};
    r.key = StreamKey{parse_count(f[5], lineno, "seed"), r.ensemble, r.n,
                      r.replicate, 0};
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string summary_to_json(const ExperimentSummary& s) {
  ojson j;
  j["plan"] = plan_json(s.plan);

  ojson per_n = ojson::array();
  for (const auto& ns : s.rate.per_n) {
    ojson row;
    row["n"] = ns.n;
    row["k"] = opt(ns.k);
    row["x"] = num(ns.x);
    row["d1"] = summary_json(ns.d1);
    row["scaled_mean"] = num(ns.scaled_mean);
    per_n.push_back(std::move(row));
  }
  j["per_n"] = std::move(per_n);
  j["rate_fit"] = fit_json(s.rate.fit);
  j["warnings"] = s.rate.warnings;

  ojson pools = ojson::array();
  for (const auto& p : s.pools) {
    ojson row;
    row["n"] = p.n;
    row["pooled_replicates"] = p.replicates;
    row["relative_change"] = num(p.relative_change);
    pools.push_back(std::move(row));
  }
  j["pools"] = std::move(pools);

  if (s.concentration) {
    ojson c;
    ojson tails = ojson::array();
    for (const auto& t : s.concentration->tails) {
      ojson row;
      row["n"] = t.n;
      row["t"] = num(t.t);
      row["p_hat"] = num(t.p_hat);
      row["exceed"] = t.exceed;
      row["replicates"] = t.replicates;
      row["wilson95_lo"] = num(t.ci95.lo);
      row["wilson95_hi"] = num(t.ci95.hi);
      tails.push_back(std::move(row));
    }
    c["tails"] = std::move(tails);
    ojson stds = ojson::array();
    for (const auto& [n, sd] : s.concentration->std_by_n) {
      ojson row;
      row["n"] = num(n);
      row["std"] = num(sd);
      stds.push_back(std::move(row));
    }
    c["std_by_n"] = std::move(stds);
    c["std_fit"] = fit_json(s.concentration->std_fit);
    j["concentration"] = std::move(c);
  } else {
    j["concentration"] = nullptr;
  }

  if (s.moments) {
    ojson rows = ojson::array();
    for (const auto& m : *s.moments) {
      ojson row;
      row["n"] = m.n;
      row["k"] = m.k;
      row["mean_re"] = num(m.mean.real());
      row["mean_im"] = num(m.mean.imag());
      row["std_error"] = num(m.std_error);
      row["zero_consistent"] = m.zero_consistent;
      row["bounded_consistent"] = m.bounded_consistent;
      rows.push_back(std::move(row));
    }
    j["moments"] = std::move(rows);
  } else {
    j["moments"] = nullptr;
  }

  ojson flags;
  const bool compression = s.plan.ensemble == EnsembleTag::kCompression;
  flags["slope_threshold"] = compression ? kCompressionSlopeMax : kGroupSlopeMax;
  flags["slope_ok"] = opt(s.slope_ok);
  flags["scaled_ratio"] = s.scaled_ratio ? num(*s.scaled_ratio) : ojson(nullptr);
  flags["scaled_ratio_max"] = kScaledRatioMax;
  flags["scaled_ratio_ok"] = opt(s.scaled_ratio_ok);
  flags["scaled_nonincreasing"] = opt(s.scaled_nonincreasing);
  flags["std_slope_threshold"] = kStdSlopeMax;
  flags["std_slope_ok"] = opt(s.std_slope_ok);
  flags["tail_monotone"] = opt(s.tail_monotone);
  flags["moments_consistent"] = opt(s.moments_consistent);
  flags["weyl_all_ok"] = opt(s.weyl_all_ok);
  j["flags"] = std::move(flags);
  return j.dump(2) + "\n";
}

std::string verdict_table(const ExperimentSummary& s) {
  std::ostringstream os;
  char buf[160];
  os << "ensemble " << ensemble_name(s.plan.ensemble) << ", replicates "
     << s.plan.replicates << ", seed " << s.plan.master_seed << "\n";
  std::snprintf(buf, sizeof buf, "%8s %14s %14s %14s %14s\n", "n", "mean_d1",
                "std_d1", "ci95_half", "n^(2/3)*mean");
  os << buf;
  for (const auto& ns : s.rate.per_n) {
    std::snprintf(buf, sizeof buf, "%8llu %14.6e %14.6e %14.6e %14.6e\n",
                  static_cast<unsigned long long>(ns.n), ns.d1.mean, ns.d1.std,
                  1.96 * ns.d1.std_error, ns.scaled_mean);
    os << buf;
  }
  auto verdict = [](const std::optional<bool>& b) {
    return !b ? "n/a" : (*b ? "PASS" : "FAIL");
  };
  const bool compression = s.plan.ensemble == EnsembleTag::kCompression;
  if (s.rate.fit) {
    std::snprintf(buf, sizeof buf,
                  "slope vs %s: %.4f (stderr %.4f, r^2 %.4f), threshold %.2f: %s\n",
                  compression ? "kn" : "n", s.rate.fit->slope,
                  s.rate.fit->slope_stderr, s.rate.fit->r_squared,
                  compression ? kCompressionSlopeMax : kGroupSlopeMax,
                  verdict(s.slope_ok));
    os << buf;
  }
  for (const auto& w : s.rate.warnings) os << "warning: " << w << "\n";
  if (s.scaled_ratio) {
    std::snprintf(buf, sizeof buf,
                  "scaled mean max/min: %.4f, limit %.2f: %s; "
                  "nonincreasing within noise: %s\n",
                  *s.scaled_ratio, kScaledRatioMax, verdict(s.scaled_ratio_ok),
                  verdict(s.scaled_nonincreasing));
    os << buf;
  }
  if (s.concentration && s.concentration->std_fit) {
    std::snprintf(buf, sizeof buf,
                  "std slope vs n: %.4f, threshold %.2f: %s\n",
                  s.concentration->std_fit->slope, kStdSlopeMax,
                  verdict(s.std_slope_ok));
    os << buf;
  }
  if (s.tail_monotone) {
    os << "tail monotone in t: " << verdict(s.tail_monotone) << "\n";
  }
  if (s.moments_consistent) {
    os << "moments consistent: " << verdict(s.moments_consistent) << "\n";
  }
  if (s.weyl_all_ok) {
    os << "weyl containment: " << verdict(s.weyl_all_ok) << "\n";
  }
  return os.str();
}

std::string distance_to_json(const DistanceResult& d) {
  ojson j;
  j["value"] = num(d.value);
  j["p"] = d.p;
  j["metric"] = std::string(metric_name(d.metric));
  j["algorithm"] = std::string(algorithm_name(d.algorithm));
  if (d.chordal) {
    j["chordal_lower"] = num(d.chordal->lower);
    j["chordal_upper"] = num(d.chordal->upper);
  }
  return j.dump() + "\n";
}

std::string verify_report_to_json(const VerifyReport& r) {
  ojson j;
  j["suite"] = r.suite;
  j["checks"] = r.checks;
  j["violations"] = r.violations;
  return j.dump() + "\n";
}

// ---------------------------------------------------------------------------

std::string spectra_to_csv(const std::vector<SpectrumRow>& rows) {
  if (rows.empty()) throw ContractError("no spectra to write");
  const std::size_t dim = rows.front().measure.size();
  std::string out = "replicate,domain,dim";
  for (std::size_t i = 0; i < dim; ++i) out += ",x" + std::to_string(i);
  out += '\n';
  for (const auto& r : rows) {
    if (r.measure.size() != dim) {
      throw ContractError("all spectra in one file must share a dimension");
    }
    out += std::to_string(r.replicate);
    out += r.measure.domain() == Domain::kCircle ? ",circle," : ",line,";
    out += std::to_string(dim);
    for (double x : r.measure.atoms()) out += ',' + format_double(x);
    out += '\n';
  }
  return out;
}

std::vector<SpectrumRow> parse_spectra_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty spectrum file", 1);
  const auto header = split_csv(lines[0], 1);
  if (header.size() < 4 || header[0] != "replicate" || header[1] != "domain" ||
      header[2] != "dim") {
    throw ParseError("expected header replicate,domain,dim,x0,...", 1);
  }
  const std::size_t dim = header.size() - 3;
  for (std::size_t i = 0; i < dim; ++i) {
    if (header[3 + i] != "x" + std::to_string(i)) {
      throw ParseError("bad column name '" + header[3 + i] + "'", 1);
    }
  }
  std::vector<SpectrumRow> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    if (lines[i].empty()) continue;
    const auto f = split_csv(lines[i], lineno);
    if (f.size() != header.size()) {
      throw ParseError("expected " + std::to_string(header.size()) +
                           " fields, found " + std::to_string(f.size()),
                       lineno);
    }
    const std::uint64_t rep = parse_count(f[0], lineno, "replicate");
    Domain domain;
    if (f[1] == "circle") {
      domain = Domain::kCircle;
    } else if (f[1] == "line") {
      domain = Domain::kLine;
    } else {
      throw ParseError("domain must be circle or line", lineno);
    }
    if (parse_count(f[2], lineno, "dim") != dim) {
      throw ParseError("dim does not match the header", lineno);
    }
    std::vector<double> atoms(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      atoms[k] = parse_real(f[3 + k], lineno, "atom");
      if (!std::isfinite(atoms[k])) {
        throw ParseError("non-finite atom", lineno);
      }
    }
    out.push_back(
        SpectrumRow{rep, EmpiricalMeasure::from_atoms(domain, std::move(atoms))});
  }
  if (out.empty()) throw ParseError("no spectra", lines.size());
  return out;
}

// ---------------------------------------------------------------------------

std::string manifest_to_json(const RunManifest& m) {
  ojson j;
  j["tool_version"] = m.tool_version;
  j["master_seed"] = m.master_seed;
  j["plan"] = m.plan_json.empty() ? ojson(nullptr) : ojson::parse(m.plan_json);
  j["started_utc"] = m.started_utc;
  j["finished_utc"] = m.finished_utc;
  j["record_count"] = m.record_count;
  j["records_file"] = m.records_file;
  j["records_sha256"] = m.records_sha256;
  return j.dump(2) + "\n";
}

RunManifest parse_manifest_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("manifest is not valid JSON: ") + e.what(),
                     1);
  }
  RunManifest m;
  try {
    m.tool_version = j.at("tool_version").get<std::string>();
    m.master_seed = j.at("master_seed").get<std::uint64_t>();
    m.plan_json = j.at("plan").is_null() ? "" : j.at("plan").dump();
    m.started_utc = j.at("started_utc").get<std::string>();
    m.finished_utc = j.at("finished_utc").get<std::string>();
    m.record_count = j.at("record_count").get<std::uint64_t>();
    m.records_file = j.at("records_file").get<std::string>();
    m.records_sha256 = j.at("records_sha256").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("", std::string("bad manifest: ") + e.what());
  }
  return m;
}

std::string utc_now_iso8601() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace speclab
