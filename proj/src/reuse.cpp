#include "parabound/reuse.hpp"

#include <cmath>
#include <stdexcept>

namespace parabound {

namespace {
constexpr double kSignTol = 1e-9;

bool feasible_at(const ParametricLP& p, const Vector& x, double lambda,
                 double tol) {
  const DenseLP lp = instantiate(p, lambda);
  if ((lp.a * x - lp.b).maxCoeff() > tol) return false;
  if (p.nonneg && x.size() > 0 && x.minCoeff() < -tol) return false;
  return true;
}
}  // namespace

LambdaInterval feasibility_interval(const ParametricLP& p, const Vector& x_star,
                                    double lambda1, const SimplexConfig& cfg) {
  if (!feasible_at(p, x_star, lambda1, cfg.feas_tol * 10))
    throw std::invalid_argument("x_star is not feasible at lambda1");
  double lo = -kInf, hi = kInf;
  const Vector dx = p.d.size() > 0 ? Vector(p.d * x_star) : Vector();
  const Vector slack = p.m2() > 0 ? Vector(p.b2 - p.a2 * x_star) : Vector();
  for (int i = 0; i < p.m2(); ++i) {
    const double di = dx(i);
    if (di > kSignTol) {
      hi = std::min(hi, slack(i) / di);
    } else if (di < -kSignTol) {
      lo = std::max(lo, slack(i) / di);
    }
    // |d_i x*| <= tol: the row never constrains lambda
  }
  lo = std::max(lo, p.lambda_lo);
  hi = std::min(hi, p.lambda_hi);
  lo = std::min(lo, lambda1);
  hi = std::max(hi, lambda1);
  return {lo, hi};
}

BoundFunction reuse_bound(const ParametricLP& p, double lambda1,
                          const SimplexConfig& cfg) {
  const LambdaInterval full = p.interval();
  SimplexSolver solver(cfg);
  const SimplexOutcome sol = solver.solve(instantiate(p, lambda1));
  if (sol.status != SolveStatus::Optimal)
    return BoundFunction::unavailable(BoundSide::Upper, full, "reuse");
  const LambdaInterval feas = feasibility_interval(p, sol.x, lambda1, cfg);
  BoundFunction bf;
  bf.side = BoundSide::Upper;
  bf.provenance = "reuse";
  if (feas.lo > full.lo)
    bf.segments.push_back({full.lo, feas.lo, false, 0, 0, 0});
  bf.segments.push_back({std::max(feas.lo, full.lo), std::min(feas.hi, full.hi),
                         true, sol.objective, 0, 0});
  if (feas.hi < full.hi)
    bf.segments.push_back({feas.hi, full.hi, false, 0, 0, 0});
  return bf;
}

}  // namespace parabound
