#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parabound/bound_function.hpp"
#include "parabound/methods.hpp"
#include "parabound/mps.hpp"

namespace parabound::bench {

/// The 100 uniform sample points lambda_lo + (i/99) * width, endpoints
/// included, with f at each (infeasible -> +inf, unbounded -> -inf).
struct SampleSet {
  std::vector<double> lambdas;
  std::vector<double> values;
  double solve_seconds = 0.0;  // baseline for relative timing
};

SampleSet sample_truth(const ParametricLP& p, const SimplexConfig& cfg = {});

/// Affine map v -> scale * v + offset sending the finite sample range onto
/// [1, 2]; a constant profile maps onto 1 (offset only).
struct Normalization {
  double scale = 1.0;
  double offset = 0.0;

  double operator()(double v) const { return scale * v + offset; }
};

/// Throws std::invalid_argument when no sample is finite.
Normalization normalize(const SampleSet& samples);

struct BenchmarkRecord {
  std::string problem;
  std::string method;
  std::string side;
  int n_splits = 1;
  double availability = 0.0;  // percent of the 100 points
  double rmse = kInf;         // includes the +1 convention
  double rel_time = 0.0;
  bool timed_out = false;
};

/// Metrics of one bound against normalized truth. bound_seconds and the
/// sample set's solve time feed relative timing; bound_seconds beyond
/// `timeout` marks the record timed out and all-unavailable.
BenchmarkRecord metrics(const BoundFunction& bound, const SampleSet& samples,
                        const Normalization& norm, double bound_seconds,
                        double timeout);

struct Rejected {
  std::string reason;
};

struct GeneratedInstance {
  bool accepted = false;
  ParametricLP problem;  // valid when accepted
  std::string reject_reason;
};

enum class RowFilter { Any, EqualityOnly, InequalityOnly };

/// Random perturbation of a parsed LP: up to 100 rows, 3 perturbed
/// coefficients per row, D entries +-u * a_ij with u ~ U(0.1, 0.9), interval
/// [-1, 1]; accepted when feasible-bounded at lambda in {-1, 0, 1} and the
/// profile bends away from its chord.
GeneratedInstance generate_instance(const io::FrozenLP& lp, std::uint64_t seed,
                                    RowFilter filter,
                                    const SimplexConfig& cfg = {});

/// The perturbation spec of a generated instance (for serialisation): rows
/// are addressed by origin name, columns by original column name.
io::PerturbationSpec generated_spec(const io::FrozenLP& lp, std::uint64_t seed,
                                    RowFilter filter);

struct BenchConfig {
  std::vector<Method> methods;
  std::vector<int> splits{1};
  bool both_sides = true;
  double timeout = 60.0;
  bool timing = false;  // when false, rel_time is reported as NA
  int workers = 1;
  SimplexConfig solver;
};

/// Cross product (problem, method, side, N) -> records, deterministic order.
std::vector<BenchmarkRecord> run_bench(
    const std::vector<std::pair<std::string, ParametricLP>>& problems,
    const BenchConfig& config);

/// CSV with header problem,method,side,N,availability,rmse,rel_time,timeout;
/// rel_time prints NA unless timing was requested.
std::string to_csv(const std::vector<BenchmarkRecord>& records, bool timing,
                   std::uint64_t seed);

}  // namespace parabound::bench
