#include "parabound/robust.hpp"

#include <cmath>
#include <stdexcept>

namespace parabound {

namespace {

// Rows over (y, z): the two A1 endpoint blocks, the two evaluated A2 endpoint
// blocks, the midpoint tangent block, plus nonnegativity of y + lambda z at
// both endpoints when the original variables are sign-constrained.
DenseLP affine_lp(const ParametricLP& p, LambdaInterval iv) {
  const int n = p.n();
  const int m1 = p.m1();
  const int m2 = p.m2();
  const double lo = iv.lo, hi = iv.hi, mid = 0.5 * (lo + hi);
  const int extra = p.nonneg ? 2 * n : 0;
  DenseLP lp;
  lp.a = Matrix::Zero(2 * m1 + 3 * m2 + extra, 2 * n);
  lp.b.resize(lp.a.rows());
  int r = 0;
  auto put = [&](const Matrix& ybl, const Matrix& zbl, const Vector& rhs) {
    const int k = static_cast<int>(rhs.size());
    if (k == 0) return;
    lp.a.block(r, 0, k, n) = ybl;
    lp.a.block(r, n, k, n) = zbl;
    lp.b.segment(r, k) = rhs;
    r += k;
  };
  put(p.a1, lo * p.a1, p.b1);
  put(p.a1, hi * p.a1, p.b1);
  const Matrix alo = p.a2 + lo * p.d;
  const Matrix ahi = p.a2 + hi * p.d;
  put(alo, lo * alo, p.b2);
  put(ahi, hi * ahi, p.b2);
  put(p.a2 + mid * p.d, (lo * hi) * p.d + mid * p.a2, p.b2);
  if (p.nonneg) {
    const Matrix id = Matrix::Identity(n, n);
    put(-id, -lo * id, Vector::Zero(n));
    put(-id, -hi * id, Vector::Zero(n));
  }
  lp.c.resize(2 * n);
  lp.nonneg = false;
  return lp;
}

Vector affine_objective(const ParametricLP& p, double lambda) {
  Vector c(2 * p.n());
  c.head(p.n()) = p.c;
  c.tail(p.n()) = lambda * p.c;
  return c;
}

BoundFunction line_bound(const ParametricLP& p, LambdaInterval iv,
                         const SimplexOutcome& out, std::string provenance) {
  const AffineSolution yz = affine_solution(out);
  BoundFunction bf;
  bf.side = BoundSide::Upper;
  bf.provenance = std::move(provenance);
  bf.segments.push_back(
      {iv.lo, iv.hi, true, p.c.dot(yz.y), p.c.dot(yz.z), 0.0});
  return bf;
}

}  // namespace

BoundFunction robust_flat(const ParametricLP& p, LambdaInterval iv,
                          const SimplexConfig& cfg) {
  DenseLP lp;
  const int m1 = p.m1(), m2 = p.m2();
  lp.a.resize(m1 + 2 * m2, p.n());
  lp.b.resize(m1 + 2 * m2);
  if (m1 > 0) {
    lp.a.topRows(m1) = p.a1;
    lp.b.head(m1) = p.b1;
  }
  if (m2 > 0) {
    lp.a.middleRows(m1, m2) = p.a2 + iv.lo * p.d;
    lp.b.segment(m1, m2) = p.b2;
    lp.a.bottomRows(m2) = p.a2 + iv.hi * p.d;
    lp.b.tail(m2) = p.b2;
  }
  lp.c = p.c;
  lp.nonneg = p.nonneg;
  const SimplexOutcome out = SimplexSolver(cfg).solve(lp);
  switch (out.status) {
    case SolveStatus::Optimal:
      return BoundFunction::constant(BoundSide::Upper, iv, out.objective,
                                     "robust-flat");
    case SolveStatus::Unbounded:
      throw std::runtime_error(
          "robust counterpart unbounded: problem ill-posed on the interval");
    default:
      return BoundFunction::unavailable(BoundSide::Upper, iv, "robust-flat");
  }
}

SimplexOutcome robust_affine_problem(const ParametricLP& p, LambdaInterval iv,
                                     double objective_lambda,
                                     const SimplexConfig& cfg) {
  DenseLP lp = affine_lp(p, iv);
  lp.c = affine_objective(p, objective_lambda);
  return SimplexSolver(cfg).solve(lp);
}

AffineSolution affine_solution(const SimplexOutcome& out) {
  const int n2 = static_cast<int>(out.x.size());
  return {out.x.head(n2 / 2), out.x.tail(n2 / 2)};
}

BoundFunction select_affine(const ParametricLP& p, LambdaInterval iv,
                            AffineSelect strategy, const SimplexConfig& cfg) {
  SimplexSolver solver(cfg);
  const int n = p.n();
  const Vector cy = affine_objective(p, 0.0);  // (c, 0)
  Vector cz = Vector::Zero(2 * n);
  cz.tail(n) = p.c;

  auto with_value_pinned = [&](DenseLP lp, const Vector& coeff, double value) {
    const double band = 1e-9 * (1.0 + std::abs(value));
    const int m = lp.m();
    lp.a.conservativeResize(m + 2, Eigen::NoChange);
    lp.b.conservativeResize(m + 2);
    lp.a.row(m) = coeff.transpose();
    lp.b(m) = value + band;
    lp.a.row(m + 1) = -coeff.transpose();
    lp.b(m + 1) = -(value - band);
    return lp;
  };

  switch (strategy.kind) {
    case AffineSelect::LineLeft:
    case AffineSelect::LineRight: {
      const bool left = strategy.kind == AffineSelect::LineLeft;
      const double first = left ? iv.lo : iv.hi;
      const double second = left ? iv.hi : iv.lo;
      SimplexOutcome o1 = robust_affine_problem(p, iv, first, cfg);
      if (o1.status != SolveStatus::Optimal)
        return BoundFunction::unavailable(
            BoundSide::Upper, iv, left ? "robust-line-left" : "robust-line-right");
      // pin the value at the first endpoint, optimise at the other
      const Vector pin = cy + first * cz;
      DenseLP lp = with_value_pinned(affine_lp(p, iv), pin, o1.objective);
      lp.c = cy + second * cz;
      SimplexOutcome o2 = solver.solve(lp);
      const std::string name = left ? "robust-line-left" : "robust-line-right";
      if (o2.status != SolveStatus::Optimal)
        return line_bound(p, iv, o1, name);  // first solve already feasible
      return line_bound(p, iv, o2, name);
    }
    case AffineSelect::FixedSlopePairwise: {
      SimplexSolver truth(cfg);
      const SimplexOutcome flo = truth.solve(instantiate(p, iv.lo));
      const SimplexOutcome fhi = truth.solve(instantiate(p, iv.hi));
      if (flo.status != SolveStatus::Optimal ||
          fhi.status != SolveStatus::Optimal || iv.width() <= 0.0)
        return BoundFunction::unavailable(BoundSide::Upper, iv,
                                          "robust-fixed-slope-pairwise");
      AffineSelect fs;
      fs.kind = AffineSelect::FixedSlope;
      fs.delta = (fhi.objective - flo.objective) / iv.width();
      BoundFunction bf = select_affine(p, iv, fs, cfg);
      bf.provenance = "robust-fixed-slope-pairwise";
      return bf;
    }
    case AffineSelect::FixedSlope:
    case AffineSelect::YZFlat: {
      const double delta =
          strategy.kind == AffineSelect::YZFlat ? 0.0 : strategy.delta;
      const std::string name = strategy.kind == AffineSelect::YZFlat
                                   ? "robust-yzflat"
                                   : "robust-fixed-slope";
      DenseLP lp = with_value_pinned(affine_lp(p, iv), cz, delta);
      lp.c = cy;  // minimise c'y with the slope fixed
      SimplexOutcome out = solver.solve(lp);
      if (out.status != SolveStatus::Optimal)
        return BoundFunction::unavailable(BoundSide::Upper, iv, name);
      return line_bound(p, iv, out, name);
    }
  }
  return BoundFunction::unavailable(BoundSide::Upper, iv, "robust-affine");
}

double quadratic_interval_max_bound(double a, double b, double c, double x1,
                                    double x2) {
  const double at_x1 = a * x1 * x1 + b * x1 + c;
  const double at_x2 = a * x2 * x2 + b * x2 + c;
  const double tangent = a * x1 * x2 + b * 0.5 * (x1 + x2) + c;
  return std::max({at_x1, at_x2, tangent});
}

BoundFunction walk_envelope(const SimplexSolver& solver, SimplexOutcome out,
                            const Vector& base, const Vector& drift,
                            double const0, double const1, LambdaInterval iv,
                            BoundSide side, std::string provenance) {
  BoundFunction bf;
  bf.side = side;
  bf.provenance = std::move(provenance);
  if (out.status != SolveStatus::Optimal) {
    return BoundFunction::unavailable(side, iv, bf.provenance);
  }
  const double width = iv.width();
  const double eps0 = std::max(1e-6 * width, 1e-12);
  const double edge_tol = 1e-12 * (1.0 + std::abs(iv.hi));
  double step = eps0;
  double cur = iv.lo;       // left edge of the next segment to emit
  double solve_at = iv.lo;  // lambda the current basis was optimised for
  const int max_pieces = 10000;
  for (int it = 0; it < max_pieces; ++it) {
    const double c0 = base.dot(out.x) + const0;
    const double c1 = drift.dot(out.x) + const1;
    const LambdaInterval range =
        solver.reduced_cost_range(out, drift, solve_at);
    const double seg_hi = std::min(range.hi, iv.hi);
    double next;
    if (seg_hi >= iv.hi - edge_tol) {
      bf.segments.push_back({cur, iv.hi, true, c0, c1, 0.0});
      return bf;
    }
    if (seg_hi <= cur + edge_tol) {
      // degenerate breakpoint: probe further right with a doubling step,
      // emitting nothing until a certified range resumes. The very first
      // piece still pins its (exact) value at the left endpoint.
      if (bf.segments.empty())
        bf.segments.push_back({cur, cur, true, c0, c1, 0.0});
      next = cur + step;
      step *= 2.0;
      if (bf.provenance.find("+bisect") == std::string::npos)
        bf.provenance += "+bisect";
    } else {
      bf.segments.push_back({cur, seg_hi, true, c0, c1, 0.0});
      cur = seg_hi;
      next = seg_hi + eps0;
      step = eps0;
    }
    next = std::min(next, iv.hi);
    SimplexOutcome re =
        solver.resolve_with_objective(out, base + next * drift);
    if (re.status != SolveStatus::Optimal) {
      bf.segments.push_back({cur, iv.hi, false, 0, 0, 0});
      return bf;
    }
    out = std::move(re);
    solve_at = next;
  }
  bf.segments.push_back({cur, iv.hi, false, 0, 0, 0});
  return bf;
}

BoundFunction robust_envelope(const ParametricLP& p, LambdaInterval iv,
                              const SimplexConfig& cfg) {
  SimplexSolver solver(cfg);
  SimplexOutcome out = robust_affine_problem(p, iv, iv.lo, cfg);
  const int n = p.n();
  Vector base = Vector::Zero(2 * n);
  base.head(n) = p.c;
  Vector drift = Vector::Zero(2 * n);
  drift.tail(n) = p.c;
  return walk_envelope(solver, std::move(out), base, drift, 0.0, 0.0, iv,
                       BoundSide::Upper, "robust-envelope");
}

}  // namespace parabound
