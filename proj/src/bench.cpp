#include "parabound/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace parabound::bench {

namespace {

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// platform-stable uniforms: std::uniform_real_distribution is not
// specified bit-for-bit, the raw 53-bit ladder is
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

SampleSet sample_truth(const ParametricLP& p, const SimplexConfig& cfg) {
  SampleSet s;
  const double t0 = now_seconds();
  SimplexSolver solver(cfg);
  for (int i = 0; i < 100; ++i) {
    const double lambda =
        p.lambda_lo + (p.lambda_hi - p.lambda_lo) * (i / 99.0);
    s.lambdas.push_back(lambda);
    const SimplexOutcome out = solver.solve(instantiate(p, lambda));
    double v = out.objective;
    if (out.status == SolveStatus::Infeasible) v = kInf;
    if (out.status == SolveStatus::Unbounded) v = -kInf;
    if (out.status == SolveStatus::IterLimit) v = std::nan("");
    s.values.push_back(v);
  }
  s.solve_seconds = now_seconds() - t0;
  return s;
}

Normalization normalize(const SampleSet& samples) {
  double lo = kInf, hi = -kInf;
  for (double v : samples.values) {
    if (!std::isfinite(v)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (lo > hi) throw std::invalid_argument("no finite samples to normalize");
  Normalization norm;
  if (hi > lo) {
    norm.scale = 1.0 / (hi - lo);
    norm.offset = 1.0 - lo * norm.scale;
  } else {
    norm.scale = 1.0;
    norm.offset = 1.0 - lo;
  }
  return norm;
}

BenchmarkRecord metrics(const BoundFunction& bound, const SampleSet& samples,
                        const Normalization& norm, double bound_seconds,
                        double timeout) {
  BenchmarkRecord rec;
  rec.side = to_string(bound.side);
  rec.rel_time = samples.solve_seconds > 0.0
                     ? bound_seconds / samples.solve_seconds
                     : 0.0;
  if (bound_seconds > timeout) {
    rec.timed_out = true;
    return rec;
  }
  int available = 0, used = 0;
  double sq = 0.0;
  for (size_t i = 0; i < samples.lambdas.size(); ++i) {
    const auto v = evaluate(bound, samples.lambdas[i]);
    if (!v) continue;
    ++available;
    if (!std::isfinite(samples.values[i])) continue;
    const double err = norm(*v) - norm(samples.values[i]);
    sq += err * err;
    ++used;
  }
  rec.availability =
      100.0 * available / static_cast<double>(samples.lambdas.size());
  rec.rmse = used > 0 ? 1.0 + std::sqrt(sq / used) : kInf;
  return rec;
}

io::PerturbationSpec generated_spec(const io::FrozenLP& lp, std::uint64_t seed,
                                    RowFilter filter) {
  // candidate rows: distinct origin names passing the sense filter,
  // synthesized bound rows excluded
  std::vector<int> candidates;  // index of the first normalized row per name
  std::set<std::string> seen;
  for (int r = 0; r < lp.m(); ++r) {
    const io::FrozenRow& row = lp.rows[r];
    if (row.origin_name.rfind("__bnd_", 0) == 0) continue;
    if (!seen.insert(row.origin_name).second) continue;
    const bool eq = row.origin_sense == 'E';
    if (filter == RowFilter::EqualityOnly && !eq) continue;
    if (filter == RowFilter::InequalityOnly && eq) continue;
    candidates.push_back(r);
  }

  std::mt19937_64 rng(seed);
  // partial Fisher-Yates draw of up to 100 rows
  const int take = std::min<int>(100, static_cast<int>(candidates.size()));
  for (int i = 0; i < take; ++i) {
    const int j =
        i + static_cast<int>(bounded(rng, candidates.size() - i));
    std::swap(candidates[i], candidates[j]);
  }
  candidates.resize(take);

  io::PerturbationSpec spec;
  spec.lambda_lo = -1.0;
  spec.lambda_hi = 1.0;
  for (int r : candidates) {
    const io::FrozenRow& row = lp.rows[r];
    spec.a2_rows.push_back(row.origin_name);
    std::vector<int> nz;  // original columns with structural nonzeros
    for (int j = 0; j < lp.n_original(); ++j)
      if (lp.a(r, lp.col_plus[j]) != 0.0) nz.push_back(j);
    const int picks = std::min<int>(3, static_cast<int>(nz.size()));
    for (int i = 0; i < picks; ++i) {
      const int j = i + static_cast<int>(bounded(rng, nz.size() - i));
      std::swap(nz[i], nz[j]);
    }
    for (int i = 0; i < picks; ++i) {
      // coefficient in the row's original orientation
      const double aij = row.sign * lp.a(r, lp.col_plus[nz[i]]);
      const double u = 0.1 + 0.8 * unit_uniform(rng);
      const double sgn = (rng() & 1) ? 1.0 : -1.0;
      spec.d.push_back({row.origin_name, lp.col_names[nz[i]], sgn * u * aij});
    }
  }
  return spec;
}

GeneratedInstance generate_instance(const io::FrozenLP& lp, std::uint64_t seed,
                                    RowFilter filter, const SimplexConfig& cfg) {
  GeneratedInstance out;
  const io::PerturbationSpec spec = generated_spec(lp, seed, filter);
  if (spec.a2_rows.empty()) {
    out.reject_reason = "no rows pass the filter";
    return out;
  }
  if (spec.d.empty()) {
    out.reject_reason = "no nonzeros to perturb";
    return out;
  }
  ParametricLP p = assemble(lp, spec);
  SimplexSolver solver(cfg);
  for (double lambda : {-1.0, 0.0, 1.0}) {
    const SimplexOutcome o = solver.solve(instantiate(p, lambda));
    if (o.status != SolveStatus::Optimal) {
      out.reject_reason = "not feasible-bounded at lambda=" + fmt(lambda);
      return out;
    }
  }
  // nonlinearity test: the profile must leave the chord between the endpoints
  double f[5];
  const double probes[5] = {-1.0, -0.5, 0.0, 0.5, 1.0};
  double lo = kInf, hi = -kInf;
  for (int i = 0; i < 5; ++i) {
    const SimplexOutcome o = solver.solve(instantiate(p, probes[i]));
    if (o.status != SolveStatus::Optimal) {
      out.reject_reason = "not feasible-bounded at lambda=" + fmt(probes[i]);
      return out;
    }
    f[i] = o.objective;
    lo = std::min(lo, f[i]);
    hi = std::max(hi, f[i]);
  }
  const double scale = std::max(hi - lo, 1.0);
  double dev = 0.0;
  for (int i = 1; i < 4; ++i) {
    const double chord = f[0] + (f[4] - f[0]) * (probes[i] + 1.0) / 2.0;
    dev = std::max(dev, std::abs(f[i] - chord));
  }
  if (dev <= 1e-4 * scale) {
    out.reject_reason = "profile is linear within tolerance";
    return out;
  }
  out.accepted = true;
  out.problem = std::move(p);
  return out;
}

std::vector<BenchmarkRecord> run_bench(
    const std::vector<std::pair<std::string, ParametricLP>>& problems,
    const BenchConfig& config) {
  struct Task {
    int problem = 0;
    Method method = Method::Reuse;
    BoundSide side = BoundSide::Upper;
    int n_splits = 1;
  };
  std::vector<Task> tasks;
  std::vector<BoundSide> sides{BoundSide::Upper};
  if (config.both_sides) sides.push_back(BoundSide::Lower);
  for (int pi = 0; pi < static_cast<int>(problems.size()); ++pi)
    for (Method m : config.methods)
      for (BoundSide side : sides)
        for (int n : config.splits) tasks.push_back({pi, m, side, n});

  std::vector<SampleSet> samples(problems.size());
  std::vector<Normalization> norms(problems.size());
  for (size_t pi = 0; pi < problems.size(); ++pi) {
    samples[pi] = sample_truth(problems[pi].second, config.solver);
    norms[pi] = normalize(samples[pi]);
  }

  std::vector<BenchmarkRecord> records(tasks.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&] {
    for (size_t t = cursor.fetch_add(1); t < tasks.size();
         t = cursor.fetch_add(1)) {
      const Task& task = tasks[t];
      const auto& [name, p] = problems[task.problem];
      BenchmarkRecord rec;
      const double t0 = now_seconds();
      try {
        const BoundFunction bf = compute_split_bound(
            p, task.method, task.side, task.n_splits, config.solver);
        rec = metrics(bf, samples[task.problem], norms[task.problem],
                      now_seconds() - t0, config.timeout);
      } catch (const std::exception&) {
        rec.rel_time = samples[task.problem].solve_seconds > 0.0
                           ? (now_seconds() - t0) /
                                 samples[task.problem].solve_seconds
                           : 0.0;
      }
      rec.problem = name;
      rec.method = method_name(task.method);
      rec.side = to_string(task.side);
      rec.n_splits = task.n_splits;
      records[t] = std::move(rec);
    }
  };
  const int workers = std::max(1, config.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  return records;
}

std::string to_csv(const std::vector<BenchmarkRecord>& records, bool timing,
                   std::uint64_t seed) {
  std::string out =
      "problem,method,side,N,availability,rmse,rel_time,timeout,seed\n";
  for (const BenchmarkRecord& r : records) {
    out += r.problem + ',' + r.method + ',' + r.side + ',' +
           std::to_string(r.n_splits) + ',' + fmt(r.availability) + ',' +
           fmt(r.rmse) + ',';
    out += timing ? fmt(r.rel_time) : std::string("NA");
    out += ',' + std::string(r.timed_out ? "1" : "0") + ',' +
           std::to_string(seed) + '\n';
  }
  return out;
}

}  // namespace parabound::bench
