#pragma once

#include <functional>
#include <vector>

#include "parabound/bound_function.hpp"

namespace parabound {

/// Produces a bound of the given side over a subinterval.
using BoundMethod =
    std::function<BoundFunction(const ParametricLP&, LambdaInterval)>;

struct RefineConfig {
  double epsilon_lambda = 1e-3;  // smallest interval before a truth point
  double time_limit = 60.0;      // seconds, wall clock
  BoundMethod lower_method;
  BoundMethod upper_method;
  /// Truth oracle f(lambda); supplied by the caller (typically a memoised
  /// simplex solve).
  std::function<double(double)> truth;
};

struct RefineTraceEntry {
  LambdaInterval interval;
  double priority = 0.0;  // gap at pop time
  bool split = false;     // false -> retired with a truth point
};

struct RefineResult {
  std::vector<BoundFunction> lower;
  std::vector<BoundFunction> upper;
  std::vector<std::pair<double, double>> points;  // (lambda, f(lambda))
  std::vector<RefineTraceEntry> trace;
  bool hit_time_limit = false;
};

/// Anytime priority-queue bisection driving the (lower, upper) pair toward a
/// small gap. Ties in priority break toward the leftmost interval.
RefineResult refine(const ParametricLP& p, const RefineConfig& config);

}  // namespace parabound
