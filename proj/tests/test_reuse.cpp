#include <doctest.h>

#include "helpers.hpp"
#include "parabound/reuse.hpp"
#include "parabound/toys.hpp"

using namespace parabound;
using namespace parabound::testing;

namespace {

double truth(const ParametricLP& p, double lambda) {
  const SimplexOutcome out = SimplexSolver().solve(instantiate(p, lambda));
  REQUIRE(out.status == SolveStatus::Optimal);
  return out.objective;
}

}  // namespace

TEST_CASE("the frozen optimum stays feasible exactly on its ratio interval") {
  // single varying row x1 + x2 <= 1 + lambda around x* = (1, 0):
  // d x* = -1 < 0, slack 0 at lambda = 0, so feasibility holds for lambda >= 0
  ParametricLP p;
  p.c = Vector::Zero(2);
  p.c << -1.0, 0.0;
  p.a1.resize(0, 2);
  p.b1.resize(0);
  p.a2 = Matrix::Ones(1, 2);
  p.b2 = Vector::Constant(1, 1.0);
  p.d = Matrix::Zero(1, 2);
  p.d(0, 0) = -1.0;
  p.lambda_lo = -3.0;
  p.lambda_hi = 3.0;
  p.nonneg = true;
  Vector x_star(2);
  x_star << 1.0, 0.0;
  const LambdaInterval iv = feasibility_interval(p, x_star, 0.0);
  CHECK(iv.lo == doctest::Approx(0.0));
  CHECK(iv.hi == doctest::Approx(3.0));
}

TEST_CASE("feasibility_interval rejects an infeasible anchor") {
  ParametricLP p = toy1();
  Vector far = Vector::Constant(2, 100.0);
  CHECK_THROWS_AS((void)feasibility_interval(p, far, 0.0),
                  std::invalid_argument);
}

TEST_CASE("reuse bound upper-bounds the truth wherever it is available") {
  for (const auto& [name, p] : all_toys()) {
    CAPTURE(name);
    const BoundFunction bf = reuse_bound(p, p.interval().mid());
    for (int i = 0; i < 100; ++i) {
      const double lambda =
          p.lambda_lo + (p.lambda_hi - p.lambda_lo) * i / 99.0;
      const auto v = evaluate(bf, lambda);
      if (!v) continue;
      const double f = truth(p, lambda);
      CHECK(*v >= f - 1e-6 * (1.0 + std::abs(f)));
    }
  }
}

TEST_CASE("reuse bound is exact at its anchor point") {
  const ParametricLP p = toy2();
  const double lambda1 = 0.5;
  const BoundFunction bf = reuse_bound(p, lambda1);
  const auto v = evaluate(bf, lambda1);
  REQUIRE(v.has_value());
  CHECK(*v == doctest::Approx(truth(p, lambda1)).epsilon(1e-7));
}

TEST_CASE("a lambda-free problem is covered on the whole interval") {
  std::mt19937_64 rng(3);
  const ParametricLP p = as_parametric(random_lp(rng, 3, 4), -2.0, 2.0);
  const BoundFunction bf = reuse_bound(p, 0.0);
  CHECK(bf.available_at(-2.0));
  CHECK(bf.available_at(2.0));
}
