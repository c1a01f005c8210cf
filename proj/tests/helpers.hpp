#pragma once

#include <optional>
#include <random>
#include <vector>

#include "parabound/model.hpp"
#include "parabound/simplex.hpp"

namespace parabound::testing {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

/// Random feasible bounded LP over x >= 0: rhs is built from a feasible
/// point, and box rows x_i <= box keep every objective bounded.
inline DenseLP random_lp(std::mt19937_64& rng, int n, int m,
                         double box = 10.0) {
  DenseLP lp;
  lp.nonneg = true;
  lp.a = Matrix::Zero(m + n, n);
  lp.b.resize(m + n);
  Vector x0(n);
  for (int j = 0; j < n; ++j) x0(j) = uniform(rng, 0.0, 0.5 * box);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) lp.a(i, j) = uniform(rng, -2.0, 2.0);
    lp.b(i) = lp.a.row(i).dot(x0) + uniform(rng, 0.0, 2.0);
  }
  for (int j = 0; j < n; ++j) {
    lp.a(m + j, j) = 1.0;
    lp.b(m + j) = box;
  }
  lp.c.resize(n);
  for (int j = 0; j < n; ++j) lp.c(j) = uniform(rng, -1.0, 1.0);
  return lp;
}

/// Brute-force optimum of min c'x, a x <= b, x >= 0 by enumerating all
/// vertices (intersections of n active constraints, including x_j = 0).
inline std::optional<double> vertex_enumeration_optimum(const DenseLP& lp,
                                                        double tol = 1e-9) {
  const int n = lp.n();
  const int total = lp.m() + n;  // rows plus nonnegativity facets
  std::vector<int> pick(n, 0);
  std::optional<double> best;

  auto row_of = [&](int k, Vector& coef, double& rhs) {
    if (k < lp.m()) {
      coef = lp.a.row(k).transpose();
      rhs = lp.b(k);
    } else {
      coef = Vector::Zero(n);
      coef(k - lp.m()) = -1.0;
      rhs = 0.0;
    }
  };

  std::vector<int> idx(n);
  // lexicographic combinations of n active constraints out of `total`
  for (int i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    Matrix sys(n, n);
    Vector rhs(n);
    Vector coef;
    double r;
    for (int i = 0; i < n; ++i) {
      row_of(idx[i], coef, r);
      sys.row(i) = coef.transpose();
      rhs(i) = r;
    }
    Eigen::FullPivLU<Matrix> lu(sys);
    if (lu.isInvertible()) {
      const Vector x = lu.solve(rhs);
      bool feasible = x.minCoeff() >= -tol;
      if (feasible && lp.m() > 0)
        feasible = (lp.a * x - lp.b).maxCoeff() <= tol;
      if (feasible) {
        const double v = lp.c.dot(x);
        if (!best || v < *best) best = v;
      }
    }
    int i = n - 1;
    while (i >= 0 && idx[i] == total - n + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int k = i + 1; k < n; ++k) idx[k] = idx[k - 1] + 1;
  }
  return best;
}

/// Wrap a fixed LP as a (lambda-free) parametric problem with every row in
/// the varying block, so dualize applies.
inline ParametricLP as_parametric(const DenseLP& lp, double lo = 0.0,
                                  double hi = 1.0) {
  ParametricLP p;
  p.c = lp.c;
  p.a1.resize(0, lp.n());
  p.b1.resize(0);
  p.a2 = lp.a;
  p.b2 = lp.b;
  p.d = Matrix::Zero(lp.m(), lp.n());
  p.lambda_lo = lo;
  p.lambda_hi = hi;
  p.nonneg = lp.nonneg;
  p.lambda_free = true;
  return p;
}

/// Random parametric problem built on random_lp: a few rows move into the
/// varying block with random drift, interval [-1, 1] scaled by `spread`.
inline ParametricLP random_parametric(std::mt19937_64& rng, int n, int m,
                                      double spread = 0.5) {
  const DenseLP lp = random_lp(rng, n, m);
  const int m2 = 1 + static_cast<int>(rng() % static_cast<unsigned>(m));
  ParametricLP p;
  p.c = lp.c;
  p.nonneg = true;
  p.a1 = lp.a.bottomRows(lp.m() - m2 + n);
  p.b1 = lp.b.tail(lp.m() - m2 + n);
  p.a2 = lp.a.topRows(m2);
  p.b2 = lp.b.head(m2);
  p.d = Matrix::Zero(m2, n);
  for (int i = 0; i < m2; ++i)
    for (int j = 0; j < n; ++j)
      p.d(i, j) = uniform(rng, -spread, spread) * lp.a(i, j);
  p.lambda_lo = -1.0;
  p.lambda_hi = 1.0;
  return p;
}

}  // namespace parabound::testing
