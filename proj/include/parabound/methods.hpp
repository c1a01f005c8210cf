#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parabound/bound_function.hpp"
#include "parabound/simplex.hpp"

namespace parabound {

enum class Method {
  Reuse,
  RobustFlat,
  RobustLineLeft,
  RobustLineRight,
  RobustYZFlat,
  RobustFixedSlopePairwise,
  RobustEnvelope,
  LagrangianFlat,
  LagrangianLine,
  LagrangianQuadratic,
  LagrangianEnvelope,
};

const std::vector<Method>& all_methods();
const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

/// The side the method produces directly; the other side goes through the
/// dual route.
BoundSide native_side(Method m);

/// Memoised truth solves of one problem, shared across methods and samples.
class BoundContext {
 public:
  explicit BoundContext(const ParametricLP& p, const SimplexConfig& cfg = {})
      : p_(p), solver_(cfg) {}

  const ParametricLP& problem() const { return p_; }
  const SimplexOutcome& solve_at(double lambda);
  /// f(lambda); +inf when infeasible, -inf when unbounded.
  double value_at(double lambda);

 private:
  ParametricLP p_;
  SimplexSolver solver_;
  std::map<double, SimplexOutcome> cache_;
};

/// Run `method` over `interval` on its native side. The requested side, when
/// it differs, is served by running the method on the dual problem and
/// negating; provenance gains a "+dual" suffix.
BoundFunction compute_bound(const ParametricLP& p, Method method,
                            BoundSide side, LambdaInterval interval,
                            const SimplexConfig& cfg = {});

/// N uniform subintervals, bounded independently and merged.
BoundFunction compute_split_bound(const ParametricLP& p, Method method,
                                  BoundSide side, int n_splits,
                                  const SimplexConfig& cfg = {});

}  // namespace parabound
