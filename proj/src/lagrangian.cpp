#include "parabound/lagrangian.hpp"

#include <cmath>
#include <stdexcept>

#include "parabound/robust.hpp"

namespace parabound {

namespace {

DenseLP relaxed_constraints(const ParametricLP& p) {
  DenseLP lp;
  lp.a = p.a1;
  lp.b = p.b1;
  lp.c = Vector::Zero(p.n());
  lp.nonneg = p.nonneg;
  return lp;
}

// Optimal value of the given objective over {A1 x <= b1}; +/-inf signalling
// via optional. Warm-starts from `seed` when available.
struct CoefficientSolver {
  const ParametricLP& p;
  SimplexSolver solver;
  SimplexOutcome seed;  // last Optimal outcome on the shared constraint set

  explicit CoefficientSolver(const ParametricLP& p_, const SimplexConfig& cfg)
      : p(p_), solver(cfg) {}

  // min obj'x + shift; nullopt when unbounded or numerically failed
  std::optional<double> minimise(const Vector& obj, double shift) {
    SimplexOutcome out;
    if (seed.status == SolveStatus::Optimal) {
      out = solver.resolve_with_objective(seed, obj);
    } else {
      DenseLP lp = relaxed_constraints(p);
      lp.c = obj;
      out = solver.solve(lp);
    }
    if (out.status != SolveStatus::Optimal) return std::nullopt;
    seed = out;
    return out.objective + shift;
  }
  std::optional<double> maximise(const Vector& obj, double shift) {
    auto v = minimise(-obj, -shift);
    if (!v) return std::nullopt;
    return -*v;
  }
};

BoundFunction polynomial_piece(const ParametricLP& p,
                               const MultiplierPolynomial& mp,
                               LambdaInterval iv, const SimplexConfig& cfg) {
  const bool negative_side = iv.hi <= 0.0;
  const Vector mu1 =
      mp.mu1.size() > 0 ? mp.mu1 : Vector(Vector::Zero(p.m2()));
  CoefficientSolver cs(p, cfg);

  // constant term: min (c + A2' mu0)'x - mu0'b2
  const Vector c_const = p.c + p.a2.transpose() * mp.mu0;
  auto c0 = cs.minimise(c_const, -mp.mu0.dot(p.b2));
  if (!c0)
    return BoundFunction::unavailable(BoundSide::Lower, iv, "lagrangian-poly");

  // lambda term: mu0'D x + mu1'(A2 x - b2); maximised on the negative side
  const Vector c_lin = p.d.transpose() * mp.mu0 + p.a2.transpose() * mu1;
  std::optional<double> c1;
  if (c_lin.cwiseAbs().maxCoeff() == 0.0 && mu1.dot(p.b2) == 0.0) {
    c1 = 0.0;
  } else {
    c1 = negative_side ? cs.maximise(c_lin, -mu1.dot(p.b2))
                       : cs.minimise(c_lin, -mu1.dot(p.b2));
  }
  if (!c1)
    return BoundFunction::unavailable(BoundSide::Lower, iv, "lagrangian-poly");

  // lambda^2 term: mu1'D x (even power, minimised on both sides)
  std::optional<double> c2 = 0.0;
  if (mp.linear()) {
    const Vector c_quad = p.d.transpose() * mu1;
    if (c_quad.cwiseAbs().maxCoeff() > 0.0) c2 = cs.minimise(c_quad, 0.0);
  }
  if (!c2)
    return BoundFunction::unavailable(BoundSide::Lower, iv, "lagrangian-poly");

  BoundFunction bf;
  bf.side = BoundSide::Lower;
  bf.provenance = "lagrangian-poly";
  bf.segments.push_back({iv.lo, iv.hi, true, *c0, *c1, *c2});
  return bf;
}

}  // namespace

Vector a2_duals(const ParametricLP& p, const SimplexOutcome& out) {
  return out.duals.tail(p.m2());
}

SimplexOutcome lagrangian_relaxation(const ParametricLP& p, const Vector& mu,
                                     double lambda, const SimplexConfig& cfg) {
  if (mu.size() > 0 && mu.minCoeff() < -1e-9)
    throw std::invalid_argument("lagrangian multipliers must be nonnegative");
  DenseLP lp = relaxed_constraints(p);
  lp.c = p.c + (p.a2 + lambda * p.d).transpose() * mu;
  SimplexOutcome out = SimplexSolver(cfg).solve(lp);
  if (out.status == SolveStatus::Optimal) out.objective -= mu.dot(p.b2);
  return out;
}

BoundFunction lagrangian_flat(const ParametricLP& p, LambdaInterval iv,
                              const SimplexConfig& cfg) {
  SimplexSolver solver(cfg);
  const SimplexOutcome flo = solver.solve(instantiate(p, iv.lo));
  const SimplexOutcome fhi = solver.solve(instantiate(p, iv.hi));
  if (flo.status != SolveStatus::Optimal || fhi.status != SolveStatus::Optimal)
    return BoundFunction::unavailable(BoundSide::Lower, iv, "lagrangian-flat");
  auto branch = [&](const SimplexOutcome& anchor, double other_lambda) {
    const SimplexOutcome relaxed =
        lagrangian_relaxation(p, a2_duals(p, anchor), other_lambda, cfg);
    if (relaxed.status != SolveStatus::Optimal) return -kInf;
    return std::min(anchor.objective, relaxed.objective);
  };
  const double bound =
      std::max(branch(flo, iv.hi), branch(fhi, iv.lo));
  if (bound == -kInf)
    return BoundFunction::unavailable(BoundSide::Lower, iv, "lagrangian-flat");
  return BoundFunction::constant(BoundSide::Lower, iv, bound,
                                 "lagrangian-flat");
}

BoundFunction lagrangian_polynomial(const ParametricLP& p,
                                    const MultiplierPolynomial& mp,
                                    LambdaInterval iv,
                                    const SimplexConfig& cfg) {
  if (iv.lo < 0.0 && iv.hi > 0.0) {
    BoundFunction left = polynomial_piece(p, mp, {iv.lo, 0.0}, cfg);
    BoundFunction right = polynomial_piece(p, mp, {0.0, iv.hi}, cfg);
    return merge({left, right});
  }
  return polynomial_piece(p, mp, iv, cfg);
}

BoundFunction lagrangian_envelope(const ParametricLP& p, LambdaInterval iv,
                                  const SimplexConfig& cfg) {
  SimplexSolver solver(cfg);
  const SimplexOutcome truth = solver.solve(instantiate(p, iv.lo));
  if (truth.status != SolveStatus::Optimal)
    return BoundFunction::unavailable(BoundSide::Lower, iv,
                                      "lagrangian-envelope");
  const Vector mu = a2_duals(p, truth);
  const Vector base = p.c + p.a2.transpose() * mu;
  const Vector drift = p.d.transpose() * mu;
  DenseLP lp = relaxed_constraints(p);
  lp.c = base + iv.lo * drift;
  SimplexOutcome out = solver.solve(lp);
  return walk_envelope(solver, std::move(out), base, drift, -mu.dot(p.b2), 0.0,
                       iv, BoundSide::Lower, "lagrangian-envelope");
}

}  // namespace parabound
