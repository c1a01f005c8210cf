#include <doctest.h>

#include "helpers.hpp"
#include "parabound/model.hpp"
#include "parabound/simplex.hpp"
#include "parabound/toys.hpp"

using namespace parabound;
using namespace parabound::testing;

TEST_CASE("validate flags dimension mismatches") {
  ParametricLP p = toy1();
  CHECK(validate(p).empty());
  p.b1.conservativeResize(p.b1.size() - 1);
  CHECK(!validate(p).empty());
}

TEST_CASE("validate flags a zero D unless declared lambda-free") {
  ParametricLP p = toy1();
  p.d.setZero();
  CHECK(!validate(p).empty());
  p.lambda_free = true;
  CHECK(validate(p).empty());
}

TEST_CASE("validate flags a reversed interval") {
  ParametricLP p = toy2();
  std::swap(p.lambda_lo, p.lambda_hi);
  CHECK(!validate(p).empty());
}

TEST_CASE("instantiate stacks the static and varying blocks") {
  const ParametricLP p = toy3();
  const double lambda = 0.75;
  const DenseLP lp = instantiate(p, lambda);
  CHECK(lp.m() == p.m1() + p.m2());
  CHECK(lp.a.topRows(p.m1()).isApprox(p.a1));
  CHECK(lp.a.bottomRows(p.m2()).isApprox(p.a2 + lambda * p.d));
  CHECK(lp.b.head(p.m1()).isApprox(p.b1));
  CHECK(lp.b.tail(p.m2()).isApprox(p.b2));
}

TEST_CASE("dualize requires sign-constrained variables") {
  CHECK_THROWS(dualize(toy1()));
}

TEST_CASE("dual optimum is the negated primal optimum across the interval") {
  std::mt19937_64 rng(7);
  SimplexSolver solver;
  int checked = 0;
  for (int t = 0; t < 30; ++t) {
    const ParametricLP p = random_parametric(rng, 2 + t % 3, 3 + t % 4);
    const ParametricLP q = dualize(p);
    for (double lambda : {-1.0, -0.3, 0.4, 1.0}) {
      const SimplexOutcome po = solver.solve(instantiate(p, lambda));
      const SimplexOutcome qo = solver.solve(instantiate(q, lambda));
      if (po.status != SolveStatus::Optimal) continue;
      REQUIRE(qo.status == SolveStatus::Optimal);
      CHECK(qo.objective ==
            doctest::Approx(-po.objective).epsilon(1e-7).scale(1.0));
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("dualize keeps every dual row in the varying block") {
  std::mt19937_64 rng(11);
  const ParametricLP p = random_parametric(rng, 3, 4);
  const ParametricLP q = dualize(p);
  CHECK(q.m1() == 0);
  CHECK(q.m2() == p.n());
  // the varying block of the dual is exactly -D' on the primal-row columns
  Matrix expect = Matrix::Zero(p.n(), p.m1() + p.m2());
  expect.rightCols(p.m2()) = -p.d.transpose();
  CHECK(q.d.isApprox(expect));
}
