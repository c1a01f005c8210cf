#pragma once

#include <string>
#include <vector>

#include "parabound/linalg.hpp"

namespace parabound {

/// Closed interval of the scalar parameter.
struct LambdaInterval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double v) const { return v >= lo && v <= hi; }
};

/// min c'x  s.t.  A1 x <= b1,  (A2 + lambda D) x <= b2  [, x >= 0 when nonneg],
/// for lambda in [lambda_lo, lambda_hi].
struct ParametricLP {
  Vector c;
  Matrix a1;
  Vector b1;
  Matrix a2;
  Vector b2;
  Matrix d;
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
  bool nonneg = false;
  /// Declares that D == 0 is intentional; validate() otherwise flags an
  /// all-zero D as suspicious.
  bool lambda_free = false;

  int n() const { return static_cast<int>(c.size()); }
  int m1() const { return static_cast<int>(b1.size()); }
  int m2() const { return static_cast<int>(b2.size()); }
  LambdaInterval interval() const { return {lambda_lo, lambda_hi}; }
};

struct Violation {
  std::string what;
  int row = -1;
  int col = -1;
};

/// A fixed LP: min c'x s.t. a x <= b [, x >= 0].
struct DenseLP {
  Matrix a;
  Vector b;
  Vector c;
  bool nonneg = false;

  int n() const { return static_cast<int>(c.size()); }
  int m() const { return static_cast<int>(b.size()); }
};

std::vector<Violation> validate(const ParametricLP& p);

/// Freeze the problem at a given lambda.
DenseLP instantiate(const ParametricLP& p, double lambda);

/// LP dual in the same min/<= shape. Requires p.nonneg. For every lambda at
/// which both problems are feasible and bounded,
///   optimum(dualize(p), lambda) == -optimum(p, lambda).
/// Every row of the result sits in the A2 block (d = -D'), so bounds computed
/// on the dual map back by negation with the side swapped.
ParametricLP dualize(const ParametricLP& p);

}  // namespace parabound
