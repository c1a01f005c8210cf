#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parabound/bound_function.hpp"
#include "parabound/refine.hpp"

namespace parabound::io {

/// One serialisable result: a bound (or refined bound set), the truth samples
/// it was judged against, and its metrics.
struct ResultsDocument {
  std::string problem;
  std::string method;
  std::string side;  // "upper" or "lower"
  int n_splits = 1;
  std::vector<BoundSegment> segments;
  std::vector<std::pair<double, double>> samples;  // (lambda, f)
  double availability = 0.0;
  double rmse = kInf;
  std::optional<double> rel_time;  // absent unless timing was requested
  std::vector<RefineTraceEntry> iterations;  // refine runs only
  bool has_iterations = false;
};

/// Deterministic JSON: fixed field order, reals with 17 significant digits,
/// non-finite reals as the strings "inf" / "-inf" / "nan".
std::string emit_results(const ResultsDocument& doc);

ResultsDocument parse_results(const std::string& text);

}  // namespace parabound::io
