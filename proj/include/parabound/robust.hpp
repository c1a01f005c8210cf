#pragma once

#include "parabound/bound_function.hpp"
#include "parabound/simplex.hpp"

namespace parabound {

/// lambda-affine solution family x(lambda) = y + lambda z.
struct AffineSolution {
  Vector y;
  Vector z;
};

/// Constant robust counterpart: worst-case rows at both interval endpoints.
/// Infeasible counterpart -> unavailable bound; unbounded counterpart throws.
BoundFunction robust_flat(const ParametricLP& p, LambdaInterval interval,
                          const SimplexConfig& cfg = {});

/// The 2n-variable LP over (y, z) whose feasible set guarantees
/// c'(y + lambda z) >= f(lambda) on the interval, minimised at
/// objective_lambda.
SimplexOutcome robust_affine_problem(const ParametricLP& p,
                                     LambdaInterval interval,
                                     double objective_lambda,
                                     const SimplexConfig& cfg = {});

AffineSolution affine_solution(const SimplexOutcome& out);

struct AffineSelect {
  enum Kind { LineLeft, LineRight, FixedSlope, YZFlat, FixedSlopePairwise };
  Kind kind = YZFlat;
  double delta = 0.0;  // used by FixedSlope
};

/// Linear upper bound from one of the (y, z) selection strategies.
BoundFunction select_affine(const ParametricLP& p, LambdaInterval interval,
                            AffineSelect strategy,
                            const SimplexConfig& cfg = {});

/// Piecewise-linear concave upper envelope: basis-wise optimal pieces of the
/// affine robust problem, walked left to right with warm starts.
BoundFunction robust_envelope(const ParametricLP& p, LambdaInterval interval,
                              const SimplexConfig& cfg = {});

/// Overestimate of max {a t^2 + b t + c : t in [x1, x2]} using only the
/// endpoint values and the midpoint tangent value a*x1*x2 + b*(x1+x2)/2 + c;
/// this is what makes the midpoint row of the affine robust problem valid.
double quadratic_interval_max_bound(double a, double b, double c, double x1,
                                    double x2);

/// Shared envelope walk over an LP whose objective is base + lambda * drift
/// (structural space) plus the affine constant const0 + lambda * const1.
BoundFunction walk_envelope(const SimplexSolver& solver,
                            SimplexOutcome initial, const Vector& base,
                            const Vector& drift, double const0, double const1,
                            LambdaInterval interval, BoundSide side,
                            std::string provenance);

}  // namespace parabound
