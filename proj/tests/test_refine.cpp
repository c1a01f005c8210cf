#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "parabound/methods.hpp"
#include "parabound/mps.hpp"
#include "parabound/refine.hpp"
#include "parabound/toys.hpp"

using namespace parabound;
using namespace parabound::testing;

namespace {

RefineConfig yzflat_pair() {
  RefineConfig config;
  config.lower_method = [](const ParametricLP& p, LambdaInterval iv) {
    return compute_bound(p, Method::RobustYZFlat, BoundSide::Lower, iv);
  };
  config.upper_method = [](const ParametricLP& p, LambdaInterval iv) {
    return compute_bound(p, Method::RobustYZFlat, BoundSide::Upper, iv);
  };
  return config;
}

double global_gap(const RefineResult& result, const ParametricLP& p) {
  double worst = 0.0;
  for (size_t i = 0; i < result.lower.size(); ++i) {
    const GapPoint g = max_gap(result.upper[i], result.lower[i],
                               result.lower[i].domain());
    worst = std::max(worst, g.gap);
  }
  (void)p;
  return worst;
}

}  // namespace

TEST_CASE("popped priorities never increase") {
  const ParametricLP base = toy1();
  const ParametricLP p = io::split_free(base);
  RefineConfig config = yzflat_pair();
  config.epsilon_lambda = 0.5;
  config.time_limit = 120.0;
  const RefineResult result = refine(p, config);
  REQUIRE(!result.trace.empty());
  double prev = kInf;
  for (const RefineTraceEntry& e : result.trace) {
    CHECK(e.priority <= prev + 1e-9);
    prev = e.priority;
  }
}

TEST_CASE("truth points stay inside the final bounds") {
  const ParametricLP p = io::split_free(toy2());
  RefineConfig config = yzflat_pair();
  config.epsilon_lambda = 1.0;
  config.time_limit = 120.0;
  const RefineResult result = refine(p, config);
  for (const auto& [lambda, f] : result.points) {
    if (!std::isfinite(f)) continue;
    for (size_t i = 0; i < result.lower.size(); ++i) {
      const LambdaInterval dom = result.lower[i].domain();
      if (lambda < dom.lo || lambda > dom.hi) continue;
      const auto lb = evaluate(result.lower[i], lambda);
      const auto ub = evaluate(result.upper[i], lambda);
      if (lb) CHECK(*lb <= f + 1e-6 * (1.0 + std::abs(f)));
      if (ub) CHECK(*ub >= f - 1e-6 * (1.0 + std::abs(f)));
    }
  }
}

TEST_CASE("a lambda-free problem closes its gap immediately") {
  std::mt19937_64 rng(13);
  ParametricLP p = as_parametric(random_lp(rng, 3, 4), -1.0, 1.0);
  RefineConfig config = yzflat_pair();
  config.epsilon_lambda = 0.25;
  config.time_limit = 60.0;
  const RefineResult result = refine(p, config);
  REQUIRE(!result.trace.empty());
  CHECK(result.trace.front().priority <= 1e-6);
}

TEST_CASE("leaves tile the full interval in order") {
  const ParametricLP p = io::split_free(toy3());
  RefineConfig config = yzflat_pair();
  config.epsilon_lambda = 4.0;
  config.time_limit = 120.0;
  const RefineResult result = refine(p, config);
  REQUIRE(!result.lower.empty());
  double cursor = p.lambda_lo;
  for (const BoundFunction& bf : result.lower) {
    CHECK(bf.domain().lo == doctest::Approx(cursor));
    cursor = bf.domain().hi;
  }
  CHECK(cursor == doctest::Approx(p.lambda_hi));
}

TEST_CASE("a tiny time budget still returns the initial bounds") {
  const ParametricLP p = io::split_free(toy1());
  RefineConfig config = yzflat_pair();
  config.epsilon_lambda = 0.5;
  config.time_limit = 1e-9;
  const RefineResult result = refine(p, config);
  CHECK(result.hit_time_limit);
  REQUIRE(result.lower.size() == 1);
  CHECK(result.lower[0].domain().lo == doctest::Approx(p.lambda_lo));
  CHECK(result.lower[0].domain().hi == doctest::Approx(p.lambda_hi));
}

TEST_CASE("refinement never loosens the global gap") {
  const ParametricLP p = io::split_free(toy4());
  RefineConfig loose = yzflat_pair();
  loose.epsilon_lambda = 4.0;
  loose.time_limit = 120.0;
  RefineConfig tight = loose;
  tight.epsilon_lambda = 1.0;
  const double g1 = global_gap(refine(p, loose), p);
  const double g2 = global_gap(refine(p, tight), p);
  CHECK(g2 <= g1 + 1e-9);
}
