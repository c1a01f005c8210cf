#include "parabound/methods.hpp"

#include <stdexcept>

#include "parabound/lagrangian.hpp"
#include "parabound/mps.hpp"
#include "parabound/reuse.hpp"
#include "parabound/robust.hpp"

namespace parabound {

namespace {

struct MethodInfo {
  Method method;
  const char* name;
  BoundSide side;
};

const MethodInfo kMethods[] = {
    {Method::Reuse, "reuse", BoundSide::Upper},
    {Method::RobustFlat, "robust-flat", BoundSide::Upper},
    {Method::RobustLineLeft, "robust-line-left", BoundSide::Upper},
    {Method::RobustLineRight, "robust-line-right", BoundSide::Upper},
    {Method::RobustYZFlat, "robust-yzflat", BoundSide::Upper},
    {Method::RobustFixedSlopePairwise, "robust-fixed-slope-pairwise",
     BoundSide::Upper},
    {Method::RobustEnvelope, "robust-envelope", BoundSide::Upper},
    {Method::LagrangianFlat, "lagrangian-flat", BoundSide::Lower},
    {Method::LagrangianLine, "lagrangian-line", BoundSide::Lower},
    {Method::LagrangianQuadratic, "lagrangian-quadratic", BoundSide::Lower},
    {Method::LagrangianEnvelope, "lagrangian-envelope", BoundSide::Lower},
};

const MethodInfo& info(Method m) {
  for (const MethodInfo& mi : kMethods)
    if (mi.method == m) return mi;
  throw std::logic_error("unknown method");
}

// Restrict the problem's own interval (reuse reads it directly).
ParametricLP with_interval(const ParametricLP& p, LambdaInterval iv) {
  ParametricLP q = p;
  q.lambda_lo = iv.lo;
  q.lambda_hi = iv.hi;
  return q;
}

BoundFunction native_bound(const ParametricLP& p, Method method,
                           LambdaInterval iv, const SimplexConfig& cfg) {
  switch (method) {
    case Method::Reuse:
      return reuse_bound(with_interval(p, iv), iv.mid(), cfg);
    case Method::RobustFlat:
      return robust_flat(p, iv, cfg);
    case Method::RobustLineLeft:
      return select_affine(p, iv, {AffineSelect::LineLeft, 0.0}, cfg);
    case Method::RobustLineRight:
      return select_affine(p, iv, {AffineSelect::LineRight, 0.0}, cfg);
    case Method::RobustYZFlat:
      return select_affine(p, iv, {AffineSelect::YZFlat, 0.0}, cfg);
    case Method::RobustFixedSlopePairwise:
      return select_affine(p, iv, {AffineSelect::FixedSlopePairwise, 0.0},
                           cfg);
    case Method::RobustEnvelope:
      return robust_envelope(p, iv, cfg);
    case Method::LagrangianFlat:
      return lagrangian_flat(p, iv, cfg);
    case Method::LagrangianLine: {
      const SimplexOutcome anchor =
          SimplexSolver(cfg).solve(instantiate(p, iv.lo));
      if (anchor.status != SolveStatus::Optimal)
        return BoundFunction::unavailable(BoundSide::Lower, iv,
                                          "lagrangian-line");
      MultiplierPolynomial mp;
      mp.mu0 = a2_duals(p, anchor);
      BoundFunction bf = lagrangian_polynomial(p, mp, iv, cfg);
      bf.provenance = "lagrangian-line";
      return bf;
    }
    case Method::LagrangianQuadratic: {
      SimplexSolver solver(cfg);
      const SimplexOutcome lo = solver.solve(instantiate(p, iv.lo));
      const SimplexOutcome hi = solver.solve(instantiate(p, iv.hi));
      if (lo.status != SolveStatus::Optimal ||
          hi.status != SolveStatus::Optimal)
        return BoundFunction::unavailable(BoundSide::Lower, iv,
                                          "lagrangian-quadratic");
      MultiplierPolynomial mp;
      const Vector mu_lo = a2_duals(p, lo);
      if (iv.width() <= 0.0) {
        mp.mu0 = mu_lo;  // degenerate interval: fall back to the line bound
      } else {
        mp.mu1 = (a2_duals(p, hi) - mu_lo) / iv.width();
        mp.mu0 = mu_lo - iv.lo * mp.mu1;
      }
      BoundFunction bf = lagrangian_polynomial(p, mp, iv, cfg);
      bf.provenance = "lagrangian-quadratic";
      return bf;
    }
    case Method::LagrangianEnvelope:
      return lagrangian_envelope(p, iv, cfg);
  }
  throw std::logic_error("unknown method");
}

}  // namespace

const std::vector<Method>& all_methods() {
  static const std::vector<Method> methods = [] {
    std::vector<Method> out;
    for (const MethodInfo& mi : kMethods) out.push_back(mi.method);
    return out;
  }();
  return methods;
}

const char* method_name(Method m) { return info(m).name; }

std::optional<Method> method_from_name(const std::string& name) {
  for (const MethodInfo& mi : kMethods)
    if (name == mi.name) return mi.method;
  return std::nullopt;
}

BoundSide native_side(Method m) { return info(m).side; }

const SimplexOutcome& BoundContext::solve_at(double lambda) {
  auto it = cache_.find(lambda);
  if (it == cache_.end())
    it = cache_.emplace(lambda, solver_.solve(instantiate(p_, lambda))).first;
  return it->second;
}

double BoundContext::value_at(double lambda) {
  const SimplexOutcome& out = solve_at(lambda);
  if (out.status == SolveStatus::Infeasible) return kInf;
  if (out.status == SolveStatus::Unbounded) return -kInf;
  return out.objective;
}

BoundFunction compute_bound(const ParametricLP& p, Method method,
                            BoundSide side, LambdaInterval iv,
                            const SimplexConfig& cfg) {
  if (side == native_side(method)) return native_bound(p, method, iv, cfg);
  const ParametricLP dual = dualize(p.nonneg ? p : io::split_free(p));
  BoundFunction bf = native_bound(dual, method, iv, cfg).negated();
  bf.provenance = std::string(method_name(method)) + "+dual";
  return bf;
}

BoundFunction compute_split_bound(const ParametricLP& p, Method method,
                                  BoundSide side, int n_splits,
                                  const SimplexConfig& cfg) {
  if (n_splits < 1) throw std::invalid_argument("n_splits must be >= 1");
  const LambdaInterval full = p.interval();
  std::vector<BoundFunction> parts;
  for (int k = 0; k < n_splits; ++k) {
    const double lo = full.lo + full.width() * k / n_splits;
    const double hi =
        k + 1 == n_splits ? full.hi : full.lo + full.width() * (k + 1) / n_splits;
    parts.push_back(compute_bound(p, method, side, {lo, hi}, cfg));
  }
  return merge(parts);
}

}  // namespace parabound
