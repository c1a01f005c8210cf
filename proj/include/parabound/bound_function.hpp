#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parabound/model.hpp"

namespace parabound {

enum class BoundSide { Lower, Upper };
const char* to_string(BoundSide s);

/// One piece of a piecewise polynomial bound. Covers [lo, hi); the final
/// segment of a function also owns its right endpoint.
struct BoundSegment {
  double lo = 0.0;
  double hi = 0.0;
  bool available = true;
  double c0 = 0.0, c1 = 0.0, c2 = 0.0;

  double value(double lambda) const {
    return c0 + c1 * lambda + c2 * lambda * lambda;
  }
};

/// Side-tagged piecewise polynomial of degree <= 2 over a lambda interval.
struct BoundFunction {
  BoundSide side = BoundSide::Upper;
  std::vector<BoundSegment> segments;  // sorted, non-overlapping, tiling
  std::string provenance;

  LambdaInterval domain() const;
  bool fully_unavailable() const;
  bool available_at(double lambda) const;

  static BoundFunction constant(BoundSide side, LambdaInterval iv, double value,
                                std::string provenance);
  static BoundFunction unavailable(BoundSide side, LambdaInterval iv,
                                   std::string provenance);
  /// Negates values and flips the side (used when mapping dual-route bounds
  /// back onto the primal).
  BoundFunction negated() const;
};

/// Value at lambda, or nullopt on an unavailable segment. Throws
/// std::domain_error outside the domain.
std::optional<double> evaluate(const BoundFunction& bf, double lambda);

/// Concatenate per-subinterval parts covering adjacent intervals.
/// Throws std::invalid_argument on gaps, overlaps or mixed sides.
BoundFunction merge(const std::vector<BoundFunction>& parts);

struct GapPoint {
  double lambda = 0.0;
  double gap = 0.0;
};

/// Exact maximiser of ub - lb over the interval; +inf where either side is
/// unavailable. Ties break toward the leftmost lambda.
GapPoint max_gap(const BoundFunction& ub, const BoundFunction& lb,
                 LambdaInterval interval);

}  // namespace parabound
