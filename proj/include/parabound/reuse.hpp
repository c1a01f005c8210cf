#pragma once

#include "parabound/bound_function.hpp"
#include "parabound/simplex.hpp"

namespace parabound {

/// Interval around lambda1 on which the fixed point x_star stays feasible,
/// clipped to the problem's lambda interval.
LambdaInterval feasibility_interval(const ParametricLP& p, const Vector& x_star,
                                    double lambda1,
                                    const SimplexConfig& cfg = {});

/// Constant upper bound f(lambda1) on the feasibility interval of the optimal
/// solution at lambda1; unavailable outside it.
BoundFunction reuse_bound(const ParametricLP& p, double lambda1,
                          const SimplexConfig& cfg = {});

}  // namespace parabound
