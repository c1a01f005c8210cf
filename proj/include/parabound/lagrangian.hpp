#pragma once

#include "parabound/bound_function.hpp"
#include "parabound/simplex.hpp"

namespace parabound {

/// Multiplier polynomial mu(lambda) = mu0 + lambda * mu1 in the internal
/// mu = -rho >= 0 convention (mu(lambda) must be nonnegative on the interval
/// it is used on; the coefficient vectors themselves may have any sign).
struct MultiplierPolynomial {
  Vector mu0;
  Vector mu1;  // empty or zero for a constant multiplier

  bool linear() const { return mu1.size() > 0 && mu1.cwiseAbs().maxCoeff() > 0; }
};

/// min c'x + mu'((A2 + lambda D) x - b2)  s.t.  A1 x <= b1 [, x >= 0].
/// The outcome objective already includes the -mu'b2 constant (it is h^L).
SimplexOutcome lagrangian_relaxation(const ParametricLP& p, const Vector& mu,
                                     double lambda,
                                     const SimplexConfig& cfg = {});

/// Constant lower bound: max of the two endpoint-anchored relaxation minima.
BoundFunction lagrangian_flat(const ParametricLP& p, LambdaInterval interval,
                              const SimplexConfig& cfg = {});

/// Polynomial lower bound from term-wise minimisation; degree <= 2 in lambda.
/// Intervals straddling zero are split there and the two pieces merged.
BoundFunction lagrangian_polynomial(const ParametricLP& p,
                                    const MultiplierPolynomial& mp,
                                    LambdaInterval interval,
                                    const SimplexConfig& cfg = {});

/// Piecewise-linear concave lower envelope: exact h^L for the A2 duals
/// harvested at the left endpoint, walked with warm starts.
BoundFunction lagrangian_envelope(const ParametricLP& p,
                                  LambdaInterval interval,
                                  const SimplexConfig& cfg = {});

/// A2-block duals of an Optimal outcome of instantiate(p, lambda).
Vector a2_duals(const ParametricLP& p, const SimplexOutcome& out);

}  // namespace parabound
