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

#include "core/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "core/ensembles.hpp"
#include "core/errors.hpp"
#include "core/transport.hpp"

namespace speclab {

namespace {

// Evaluates fn(i) for i in [0, count) on `workers` threads; results land in
// slot i so the output does not depend on scheduling.
template <typename Fn>
auto parallel_map(std::size_t count, unsigned workers, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{}))> {
  using T = decltype(fn(std::size_t{}));
  std::vector<std::optional<T>> slots(count);
  const unsigned w = std::max(1u, std::min<unsigned>(
                                      workers, static_cast<unsigned>(count)));
  if (w <= 1) {
    for (std::size_t i = 0; i < count; ++i) slots[i].emplace(fn(i));
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (unsigned t = 0; t < w; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= count) return;
          try {
            slots[i].emplace(fn(i));
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mu);
            if (!failure) failure = std::current_exception();
            next.store(count);
            return;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::string trace_stat_name(const char* part, std::uint64_t k) {
  return std::string("trace_") + part + "_k" + std::to_string(k);
}

struct ReplicateOutput {
  EmpiricalMeasure esd;
  std::optional<bool> weyl_ok;
};

ReplicateOutput sample_replicate(EnsembleTag tag, std::uint64_t n,
                                 std::uint64_t k, const StreamKey& key) {
  if (tag != EnsembleTag::kRandomizedSum) {
    return {sample_esd(tag, n, k, key), std::nullopt};
  }
  const HermitianView a = gue_wigner(n, key.with_substream(0));
  const HermitianView b = gue_wigner(n, key.with_substream(1));
  const UnitaryView u = haar_unitary(n, key.with_substream(2));
  const SpectrumLine sa = eig_hermitian(a);
  const SpectrumLine sb = eig_hermitian(b);
  const SpectrumLine ss = eig_hermitian(randomized_sum(a, b, u));
  const double op_a = std::max(std::abs(sa.min()), std::abs(sa.max()));
  const double op_b = std::max(std::abs(sb.min()), std::abs(sb.max()));
  const double eps = 1e-8 * (op_a + op_b);
  const bool ok = ss.min() >= sa.min() + sb.min() - eps &&
                  ss.max() <= sa.max() + sb.max() + eps;
  return {EmpiricalMeasure::line(ss), ok};
}

StreamKey make_key(const ExperimentPlan& plan, std::uint64_t n,
                   std::uint64_t replicate) {
  return StreamKey{plan.master_seed, plan.ensemble, n, replicate, 0};
}

double mean_distance(const std::vector<EmpiricalMeasure>& spectra,
                     const EmpiricalMeasure& reference) {
  double s = 0.0;
  for (const auto& m : spectra) s += w1_to_reference(m, reference).value;
  return s / static_cast<double>(spectra.size());
}

SummaryRecord make_record(const ExperimentPlan& plan, std::uint64_t n,
                          std::uint64_t r, std::string stat, double value) {
  return SummaryRecord{plan.ensemble, n, r, std::move(stat), value,
                       make_key(plan, n, r)};
}

double scaled(double n, double v) { return std::pow(n, 2.0 / 3.0) * v; }

}  // namespace

// ---------------------------------------------------------------------------

std::uint64_t KRule::k_for(std::uint64_t n) const {
  return kind == Kind::kHalf ? (n + 1) / 2 : fixed;
}

std::string KRule::to_string() const {
  return kind == Kind::kHalf ? "half" : "fixed:" + std::to_string(fixed);
}

KRule ExperimentPlan::effective_k_rule() const {
  return k_rule.value_or(KRule{});
}

void ExperimentPlan::validate() const {
  if (n_grid.empty()) throw SchemaError("/n_grid", "must be non-empty");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    const std::string ptr = "/n_grid/" + std::to_string(i);
    if (n_grid[i] < 1) throw SchemaError(ptr, "dimensions must be >= 1");
    if (i > 0 && n_grid[i] <= n_grid[i - 1]) {
      throw SchemaError(ptr, "n_grid must be strictly ascending");
    }
  }
  if (replicates < 2) throw SchemaError("/replicates", "must be >= 2");
  if (k_rule) {
    if (ensemble != EnsembleTag::kCompression) {
      throw SchemaError("/k_rule", "only valid for the compression ensemble");
    }
    if (k_rule->kind == KRule::Kind::kFixed) {
      for (std::uint64_t n : n_grid) {
        if (k_rule->fixed < 1 || k_rule->fixed > n) {
          throw SchemaError("/k_rule", "fixed k must lie in 1..n for every n");
        }
      }
    }
  }
  if (t_grid) {
    for (std::size_t i = 0; i < t_grid->size(); ++i) {
      const double t = (*t_grid)[i];
      if (!std::isfinite(t) || t < 0) {
        throw SchemaError("/t_grid/" + std::to_string(i),
                          "must be finite and >= 0");
      }
    }
  }
  if (moments_kmax) {
    if (!is_circle_ensemble(ensemble)) {
      throw SchemaError("/moments_kmax",
                        "moments are defined for circle ensembles only");
    }
    if (*moments_kmax < 1 || *moments_kmax >= n_grid.front()) {
      throw SchemaError("/moments_kmax", "need 1 <= k_max < n for every n");
    }
  }
}

void sort_records(std::vector<SummaryRecord>& records) {
  std::sort(records.begin(), records.end(),
            [](const SummaryRecord& a, const SummaryRecord& b) {
              if (a.n != b.n) return a.n < b.n;
              if (a.replicate != b.replicate) return a.replicate < b.replicate;
              return a.statistic < b.statistic;
            });
}

MomentClaim moment_claim(EnsembleTag tag) {
  switch (tag) {
    case EnsembleTag::kUnitary:
    case EnsembleTag::kSu:
      return MomentClaim::kZero;
    case EnsembleTag::kOrthogonal:
    case EnsembleTag::kSo:
    case EnsembleTag::kSoMinus:
    case EnsembleTag::kSymplectic:
      return MomentClaim::kBounded;
    default:
      return MomentClaim::kNone;
  }
}

EmpiricalMeasure sample_esd(EnsembleTag tag, std::uint64_t n, std::uint64_t k,
                            const StreamKey& key) {
  const auto nn = static_cast<std::size_t>(n);
  switch (tag) {
    case EnsembleTag::kOrthogonal:
      return esd_circle(haar_orthogonal(nn, key));
    case EnsembleTag::kSo:
      return esd_circle(haar_so(nn, key));
    case EnsembleTag::kSoMinus:
      return esd_circle(haar_so_minus(nn, key));
    case EnsembleTag::kUnitary:
      return esd_circle(haar_unitary(nn, key));
    case EnsembleTag::kSu:
      return esd_circle(haar_su(nn, key));
    case EnsembleTag::kSymplectic:
      return esd_circle(haar_symplectic(nn, key));
    case EnsembleTag::kCoe:
      return esd_circle(sample_coe(nn, key));
    case EnsembleTag::kCse:
      return esd_circle(sample_cse(nn, key));
    case EnsembleTag::kGueWigner:
      return esd_line(gue_wigner(nn, key));
    case EnsembleTag::kCompression:
      return esd_line(sample_compression(nn, static_cast<std::size_t>(k), key));
    case EnsembleTag::kRandomizedSum:
      return esd_line(sample_randomized_sum(nn, key));
  }
  throw ContractError("unknown ensemble");
}

PlanSamples sample_plan(const ExperimentPlan& plan, const RunOptions& opts) {
  plan.validate();
  PlanSamples out{plan, {}, {}};
  const bool circle = is_circle_ensemble(plan.ensemble);
  const std::uint64_t kmax = plan.moments_kmax.value_or(0);
  const std::uint64_t reps = plan.replicates;

  for (std::uint64_t n : plan.n_grid) {
    const std::uint64_t k = plan.ensemble == EnsembleTag::kCompression
                                ? plan.effective_k_rule().k_for(n)
                                : 0;
    auto outputs = parallel_map(reps, opts.workers, [&](std::size_t r) {
      return sample_replicate(plan.ensemble, n, k, make_key(plan, n, r));
    });

    std::vector<double> d1(reps);
    if (circle) {
      for (std::uint64_t r = 0; r < reps; ++r) {
        d1[r] = w1_circle_uniform(outputs[r].esd).value;
      }
    } else {
      std::vector<EmpiricalMeasure> dist_spectra;
      dist_spectra.reserve(reps);
      for (auto& o : outputs) dist_spectra.push_back(o.esd);

      std::vector<EmpiricalMeasure> pool_spectra;
      auto grow_pool = [&](std::uint64_t target) {
        const std::uint64_t have = pool_spectra.size();
        auto extra = parallel_map(target - have, opts.workers,
                                  [&](std::size_t j) {
                                    return sample_esd(
                                        plan.ensemble, n, k,
                                        make_key(plan, n,
                                                 kPoolReplicateOffset + have +
                                                     j));
                                  });
        for (auto& e : extra) pool_spectra.push_back(std::move(e));
      };
      std::uint64_t m = reps;
      grow_pool(m);
      double mean_prev = mean_distance(dist_spectra, pool(pool_spectra).measure);
      double rel = 1.0;
      while (2 * m <= reps * kPoolMaxFactor) {
        grow_pool(2 * m);
        m *= 2;
        const double mean_new =
            mean_distance(dist_spectra, pool(pool_spectra).measure);
        rel = std::abs(mean_new - mean_prev) / mean_new;
        mean_prev = mean_new;
        if (rel <= kPoolStability) break;
      }
      const EmpiricalMeasure reference = pool(pool_spectra).measure;
      auto dists = parallel_map(reps, opts.workers, [&](std::size_t r) {
        return w1_to_reference(dist_spectra[r], reference).value;
      });
      d1 = std::move(dists);
      out.pools.push_back(PoolInfo{n, m, rel});
    }

    for (std::uint64_t r = 0; r < reps; ++r) {
      out.records.push_back(make_record(plan, n, r, "d1", d1[r]));
      if (outputs[r].weyl_ok) {
        out.records.push_back(
            make_record(plan, n, r, "weyl_ok", *outputs[r].weyl_ok ? 1.0 : 0.0));
      }
      if (kmax > 0) {
        const auto angles = outputs[r].esd.atoms();
        for (std::uint64_t kk = 1; kk <= kmax; ++kk) {
          Complex tr(0.0, 0.0);
          for (double th : angles) {
            const double a = static_cast<double>(kk) * th;
            tr += Complex(std::cos(a), std::sin(a));
          }
          out.records.push_back(
              make_record(plan, n, r, trace_stat_name("re", kk), tr.real()));
          out.records.push_back(
              make_record(plan, n, r, trace_stat_name("im", kk), tr.imag()));
        }
      }
    }
  }
  sort_records(out.records);
  return out;
}

// ---------------------------------------------------------------------------

ExperimentSummary summarize_records(const ExperimentPlan& plan,
                                    const std::vector<SummaryRecord>& records,
                                    const std::vector<PoolInfo>& pools) {
  ExperimentSummary s;
  s.plan = plan;
  s.pools = pools;

  // (n, statistic) -> values in replicate order.
  std::map<std::pair<std::uint64_t, std::string>,
           std::vector<std::pair<std::uint64_t, double>>>
      by_stat;
  for (const auto& r : records) {
    by_stat[{r.n, r.statistic}].emplace_back(r.replicate, r.value);
  }
  auto values = [&](std::uint64_t n, const std::string& stat) {
    std::vector<double> v;
    auto it = by_stat.find({n, stat});
    if (it == by_stat.end()) return v;
    auto rows = it->second;
    std::sort(rows.begin(), rows.end());
    v.reserve(rows.size());
    for (const auto& [rep, x] : rows) v.push_back(x);
    return v;
  };

  const bool circle = is_circle_ensemble(plan.ensemble);
  const bool compression = plan.ensemble == EnsembleTag::kCompression;

  std::vector<std::pair<double, double>> fit_points;
  for (std::uint64_t n : plan.n_grid) {
    const std::vector<double> d1 = values(n, "d1");
    if (d1.empty()) continue;
    NSummary ns;
    ns.n = n;
    ns.d1 = summarize(d1);
    if (compression) {
      ns.k = plan.effective_k_rule().k_for(n);
      ns.x = static_cast<double>(*ns.k) * static_cast<double>(n);
    } else {
      ns.x = static_cast<double>(n);
    }
    ns.scaled_mean = scaled(static_cast<double>(n), ns.d1.mean);
    fit_points.emplace_back(ns.x, ns.d1.mean);
    s.rate.per_n.push_back(ns);
  }
  if (fit_points.size() >= 3) {
    s.rate.fit = fit_loglog(fit_points);
    const double threshold = compression ? kCompressionSlopeMax : kGroupSlopeMax;
    s.slope_ok = s.rate.fit->slope <= threshold;
  } else {
    s.rate.warnings.push_back("fewer than 3 grid points: rate fit omitted");
  }

  if (circle && s.rate.per_n.size() >= 2) {
    double lo = s.rate.per_n.front().scaled_mean;
    double hi = lo;
    bool nonincreasing = true;
    for (std::size_t i = 1; i < s.rate.per_n.size(); ++i) {
      const auto& prev = s.rate.per_n[i - 1];
      const auto& cur = s.rate.per_n[i];
      lo = std::min(lo, cur.scaled_mean);
      hi = std::max(hi, cur.scaled_mean);
      const double se_prev =
          scaled(static_cast<double>(prev.n), prev.d1.std_error);
      const double se_cur = scaled(static_cast<double>(cur.n), cur.d1.std_error);
      const double noise = 4.0 * std::hypot(se_prev, se_cur);
      if (cur.scaled_mean > prev.scaled_mean + noise) nonincreasing = false;
    }
    s.scaled_ratio = hi / lo;
    s.scaled_ratio_ok = *s.scaled_ratio <= kScaledRatioMax;
    s.scaled_nonincreasing = nonincreasing;
  }

  if (plan.t_grid) {
    ConcentrationResult c;
    std::vector<double> ts = *plan.t_grid;
    std::sort(ts.begin(), ts.end());
    bool monotone = true;
    for (const auto& ns : s.rate.per_n) {
      const std::vector<double> d1 = values(ns.n, "d1");
      double prev_p = 1.0;
      for (double t : ts) {
        const double cut = ns.d1.mean + t;
        const auto exceed = static_cast<std::uint64_t>(
            std::count_if(d1.begin(), d1.end(),
                          [&](double x) { return x >= cut; }));
        const double p_hat =
            static_cast<double>(exceed) / static_cast<double>(d1.size());
        if (p_hat > prev_p) monotone = false;
        prev_p = p_hat;
        c.tails.push_back(TailEstimate{ns.n, t, p_hat, exceed, d1.size(),
                                       wilson95(exceed, d1.size())});
      }
      c.std_by_n.emplace_back(static_cast<double>(ns.n), ns.d1.std);
    }
    const bool positive = std::all_of(
        c.std_by_n.begin(), c.std_by_n.end(),
        [](const auto& p) { return p.second > 0; });
    if (c.std_by_n.size() >= 3 && positive) {
      c.std_fit = fit_loglog(c.std_by_n);
      s.std_slope_ok = c.std_fit->slope <= kStdSlopeMax;
    }
    s.tail_monotone = monotone;
    s.concentration = std::move(c);
  }

  if (plan.moments_kmax) {
    std::vector<MomentRow> rows;
    const MomentClaim claim = moment_claim(plan.ensemble);
    bool all_ok = true;
    for (std::uint64_t n : plan.n_grid) {
      for (std::uint64_t k = 1; k <= *plan.moments_kmax; ++k) {
        const std::vector<double> re = values(n, trace_stat_name("re", k));
        const std::vector<double> im = values(n, trace_stat_name("im", k));
        if (re.empty()) continue;
        const SampleSummary sr = summarize(re);
        const SampleSummary si = summarize(im);
        const double se = std::hypot(sr.std_error, si.std_error);
        const Complex mean(sr.mean, si.mean);
        MomentRow row{plan.ensemble,
                      n,
                      k,
                      mean,
                      se,
                      std::abs(mean) <= 4.0 * se,
                      std::abs(mean) <= 1.0 + 4.0 * se};
        if (claim == MomentClaim::kZero) all_ok = all_ok && row.zero_consistent;
        if (claim == MomentClaim::kBounded) {
          all_ok = all_ok && row.bounded_consistent;
        }
        rows.push_back(row);
      }
    }
    if (claim != MomentClaim::kNone) s.moments_consistent = all_ok;
    s.moments = std::move(rows);
  }

  if (plan.ensemble == EnsembleTag::kRandomizedSum) {
    bool ok = true;
    for (const auto& r : records) {
      if (r.statistic == "weyl_ok" && r.value != 1.0) ok = false;
    }
    s.weyl_all_ok = ok;
  }
  return s;
}

RateExperimentResult run_rate_experiment(const ExperimentPlan& plan,
                                         const RunOptions& opts) {
  const PlanSamples ps = sample_plan(plan, opts);
  return summarize_records(plan, ps.records, ps.pools).rate;
}

ConcentrationResult run_concentration_experiment(
    const ExperimentPlan& plan, const std::vector<double>& t_grid,
    const RunOptions& opts) {
  ExperimentPlan p = plan;
  p.t_grid = t_grid;
  const PlanSamples ps = sample_plan(p, opts);
  return *summarize_records(p, ps.records, ps.pools).concentration;
}

std::vector<MomentRow> run_moment_experiment(const ExperimentPlan& plan,
                                             std::uint64_t k_max,
                                             const RunOptions& opts) {
  for (std::uint64_t n : plan.n_grid) {
    if (k_max >= n) {
      throw ContractError("moment order " + std::to_string(k_max) +
                          " must be below n = " + std::to_string(n));
    }
  }
  if (k_max < 1) throw ContractError("moment order must be >= 1");
  ExperimentPlan p = plan;
  p.moments_kmax = k_max;
  const PlanSamples ps = sample_plan(p, opts);
  return *summarize_records(p, ps.records, ps.pools).moments;
}

// ---------------------------------------------------------------------------

IdentDistResult compare_distance_laws(EnsembleTag a, std::uint64_t na,
                                      EnsembleTag b, std::uint64_t nb,
                                      std::uint64_t replicates,
                                      std::uint64_t seed,
                                      const RunOptions& opts) {
  if (!is_circle_ensemble(a) || !is_circle_ensemble(b)) {
    throw ContractError("distance-law comparison needs circle ensembles");
  }
  if (replicates < 2) throw ContractError("need at least 2 replicates");
  auto draw = [&](EnsembleTag tag, std::uint64_t n) {
    return parallel_map(replicates, opts.workers, [&](std::size_t r) {
      const StreamKey key{seed, tag, n, r, 0};
      return w1_circle_uniform(sample_esd(tag, n, 0, key)).value;
    });
  };
  IdentDistResult res;
  res.first = draw(a, na);
  res.second = draw(b, nb);
  const KsResult ks = ks_two_sample(res.first, res.second);
  res.ks_statistic = ks.statistic;
  res.p_value = ks.p_value;
  res.accept = ks.p_value > kKsLevel;
  return res;
}

IdentDistResult run_identdist_experiment(std::uint64_t n,
                                         std::uint64_t replicates,
                                         std::uint64_t seed,
                                         const RunOptions& opts) {
  return compare_distance_laws(EnsembleTag::kUnitary, n, EnsembleTag::kSu, n,
                               replicates, seed, opts);
}

// ---------------------------------------------------------------------------

namespace {

// Hermitian matrix with random scale and shift, so spectral diameters vary.
HermitianView random_hermitian(std::size_t n, const StreamKey& key,
                               double scale, double shift) {
  ComplexMatrix m = gue_wigner(n, key).matrix();
  m *= scale;
  for (std::size_t i = 0; i < n; ++i) m(i, i) += shift;
  return HermitianView(std::move(m));
}

// A unitary within roughly eps of the identity.
ComplexMatrix near_identity_unitary(std::size_t n, const StreamKey& key,
                                    double eps) {
  ComplexMatrix g = ginibre_complex(n, key);
  g *= eps;
  g += ComplexMatrix::identity(n);
  return qr_positive(g).q.matrix();
}

}  // namespace

LipschitzReport run_lipschitz_suite(std::uint64_t trials, std::uint64_t n_max,
                                    std::uint64_t seed) {
  if (n_max < 1 || n_max > 32) {
    throw ContractError("lipschitz suite needs 1 <= n_max <= 32");
  }
  LipschitzReport rep;
  rep.trials = trials;
  auto note = [&](std::uint64_t& counter, std::uint64_t trial,
                  const char* what, double lhs, double rhs) {
    const double excess = lhs - rhs;
    rep.worst_excess = std::max(rep.worst_excess, excess);
    if (excess > kLipschitzSlack) {
      ++counter;
      rep.details.push_back("trial " + std::to_string(trial) + ": " + what +
                            " lhs=" + std::to_string(lhs) +
                            " rhs=" + std::to_string(rhs));
    }
  };
  rep.worst_excess = -std::numeric_limits<double>::infinity();
  for (std::uint64_t t = 0; t < trials; ++t) {
    const StreamKey base{seed, EnsembleTag::kGueWigner, n_max, t, 0};
    RandomStream rs(base.with_substream(100));
    const auto n = static_cast<std::size_t>(
        1 + rs.next_u64() % n_max);
    const auto k = static_cast<std::size_t>(1 + rs.next_u64() % n);
    const double scale_a = 0.1 + 3.0 * rs.next_uniform();
    const double scale_b = 0.1 + 3.0 * rs.next_uniform();
    const double shift_a = 4.0 * (rs.next_uniform() - 0.5);
    const double shift_b = 4.0 * (rs.next_uniform() - 0.5);
    const bool near = rs.next_uniform() < 0.5;
    const double eps = std::pow(10.0, -4.0 * rs.next_uniform());

    const HermitianView a = random_hermitian(n, base.with_substream(0),
                                             scale_a, shift_a);
    HermitianView b = random_hermitian(n, base.with_substream(1), scale_b,
                                       shift_b);
    if (near) {
      // B a small perturbation of A exercises the sharp end of (a).
      ComplexMatrix pb = a.matrix();
      ComplexMatrix d = gue_wigner(n, base.with_substream(2)).matrix();
      d *= eps;
      pb += d;
      b = HermitianView(std::move(pb));
    }
    const ComplexMatrix u = haar_unitary(n, base.with_substream(3)).matrix();
    const ComplexMatrix v =
        near ? u * near_identity_unitary(n, base.with_substream(4), eps)
             : haar_unitary(n, base.with_substream(4)).matrix();

    const SpectrumLine sa = eig_hermitian(a);
    const SpectrumLine sb = eig_hermitian(b);

    // (a) spectral map is n^{-1/2}-Lipschitz into d_2 (hence d_1).
    const EmpiricalMeasure ma = EmpiricalMeasure::line(sa);
    const EmpiricalMeasure mb = EmpiricalMeasure::line(sb);
    const double d2 = wp_line(ma, mb, 2.0).value;
    const double hs_ab = hs_distance(a.matrix(), b.matrix());
    note(rep.spectral_map_violations, t, "spectral map",
         d2, hs_ab / std::sqrt(static_cast<double>(n)));

    // (b) U -> U A U* is delta(A)-Lipschitz.
    const double delta = sa.max() - sa.min();
    const double hs_uv = hs_distance(u, v);
    const ComplexMatrix uau = conjugate(a, u).matrix();
    const ComplexMatrix vav = conjugate(a, v).matrix();
    note(rep.conjugation_violations, t, "conjugation",
         hs_distance(uau, vav), delta * hs_uv);

    // (c) the same after compression to the leading k x k block.
    note(rep.compression_violations, t, "compression",
         hs_distance(uau.leading_block(k), vav.leading_block(k)),
         delta * hs_uv);

    // (d) Weyl containment of spec(U A U* + B).
    const SpectrumLine ss =
        eig_hermitian(HermitianView::symmetrized(uau + b.matrix()));
    note(rep.weyl_violations, t, "weyl lower", sa.min() + sb.min() - ss.min(),
         0.0);
    note(rep.weyl_violations, t, "weyl upper", ss.max() - sa.max() - sb.max(),
         0.0);
  }
  return rep;
}

}  // namespace speclab
