#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "parabound/bench.hpp"
#include "parabound/toys.hpp"

using namespace parabound;
using namespace parabound::testing;

TEST_CASE("sampling covers both endpoints with 100 points") {
  const ParametricLP p = toy1();
  const bench::SampleSet s = bench::sample_truth(p);
  REQUIRE(s.lambdas.size() == 100);
  CHECK(s.lambdas.front() == doctest::Approx(p.lambda_lo));
  CHECK(s.lambdas.back() == doctest::Approx(p.lambda_hi));
}

TEST_CASE("a lambda-free problem samples a constant profile") {
  std::mt19937_64 rng(2);
  const ParametricLP p = as_parametric(random_lp(rng, 3, 4), -1.0, 1.0);
  const bench::SampleSet s = bench::sample_truth(p);
  for (double v : s.values) CHECK(v == doctest::Approx(s.values[0]));
}

TEST_CASE("normalization maps the sample range onto [1, 2]") {
  bench::SampleSet s;
  s.lambdas = {0.0, 1.0};
  s.values = {3.0, 5.0};
  const bench::Normalization norm = bench::normalize(s);
  CHECK(norm(3.0) == doctest::Approx(1.0));
  CHECK(norm(5.0) == doctest::Approx(2.0));
  CHECK(norm(4.0) == doctest::Approx(1.5));
}

TEST_CASE("a constant profile is offset onto 1") {
  bench::SampleSet s;
  s.lambdas = {0.0};
  s.values = {7.0};
  const bench::Normalization norm = bench::normalize(s);
  CHECK(norm.scale == 1.0);
  CHECK(norm(7.0) == doctest::Approx(1.0));
}

TEST_CASE("normalizing an already normalized profile is the identity") {
  const ParametricLP p = toy2();
  bench::SampleSet s = bench::sample_truth(p);
  const bench::Normalization norm = bench::normalize(s);
  for (double& v : s.values)
    if (std::isfinite(v)) v = norm(v);
  const bench::Normalization again = bench::normalize(s);
  CHECK(again.scale == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(again.offset == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("normalization fails with no finite samples") {
  bench::SampleSet s;
  s.lambdas = {0.0};
  s.values = {kInf};
  CHECK_THROWS_AS((void)bench::normalize(s), std::invalid_argument);
}

TEST_CASE("an exact bound scores availability 100 and unit error") {
  const ParametricLP p = toy1();
  const bench::SampleSet s = bench::sample_truth(p);
  const bench::Normalization norm = bench::normalize(s);
  // a piecewise-constant copy of the truth at each sample
  BoundFunction bf;
  bf.side = BoundSide::Upper;
  for (size_t i = 0; i < s.lambdas.size(); ++i) {
    const double hi = i + 1 < s.lambdas.size() ? s.lambdas[i + 1] : s.lambdas[i];
    bf.segments.push_back({s.lambdas[i], hi, true, s.values[i], 0.0, 0.0});
  }
  bf.segments.back().hi = p.lambda_hi;
  const bench::BenchmarkRecord rec = bench::metrics(bf, s, norm, 0.01, 60.0);
  CHECK(rec.availability == 100.0);
  CHECK(rec.rmse == doctest::Approx(1.0));
}

TEST_CASE("a unit offset in normalized units scores exactly 2") {
  bench::SampleSet s;
  for (int i = 0; i < 100; ++i) {
    s.lambdas.push_back(i / 99.0);
    s.values.push_back(i < 50 ? 0.0 : 4.0);  // normalizes to 1 and 2
  }
  const bench::Normalization norm = bench::normalize(s);
  BoundFunction bf;
  bf.side = BoundSide::Upper;
  // +4 raw is +1 normalized everywhere
  bf.segments.push_back({0.0, 0.5, true, 4.0, 0.0, 0.0});
  bf.segments.push_back({0.5, 1.0, true, 8.0, 0.0, 0.0});
  const bench::BenchmarkRecord rec = bench::metrics(bf, s, norm, 0.01, 60.0);
  CHECK(rec.availability == 100.0);
  CHECK(rec.rmse == doctest::Approx(2.0));
}

TEST_CASE("half coverage scores availability 50") {
  bench::SampleSet s;
  for (int i = 0; i < 100; ++i) {
    s.lambdas.push_back(i / 99.0);
    s.values.push_back(static_cast<double>(i));
  }
  BoundFunction bf;
  bf.side = BoundSide::Upper;
  bf.segments.push_back({0.0, 0.5, true, 1.0, 0.0, 0.0});
  bf.segments.push_back({0.5, 1.0, false, 0.0, 0.0, 0.0});
  const bench::BenchmarkRecord rec =
      bench::metrics(bf, s, bench::normalize(s), 0.01, 60.0);
  CHECK(rec.availability == 50.0);
}

TEST_CASE("a bound slower than the budget is marked timed out") {
  const ParametricLP p = toy1();
  const bench::SampleSet s = bench::sample_truth(p);
  const BoundFunction bf =
      BoundFunction::constant(BoundSide::Upper, p.interval(), 9.0, "t");
  const bench::BenchmarkRecord rec =
      bench::metrics(bf, s, bench::normalize(s), 10.0, 1e-9);
  CHECK(rec.timed_out);
  CHECK(rec.availability == 0.0);
  CHECK(std::isinf(rec.rmse));
}

TEST_CASE("generation is deterministic in the seed") {
  const io::FrozenLP lp = io::parse_mps(to_mps(toy1(), "toy1"));
  const io::PerturbationSpec a =
      bench::generated_spec(lp, 42, bench::RowFilter::Any);
  const io::PerturbationSpec b =
      bench::generated_spec(lp, 42, bench::RowFilter::Any);
  CHECK(io::emit_perturbation(a) == io::emit_perturbation(b));
  const io::PerturbationSpec c =
      bench::generated_spec(lp, 43, bench::RowFilter::Any);
  CHECK(io::emit_perturbation(a) != io::emit_perturbation(c));
}

TEST_CASE("generated drift entries scale existing coefficients") {
  const io::FrozenLP lp = io::parse_mps(to_mps(toy2(), "toy2"));
  const io::PerturbationSpec spec =
      bench::generated_spec(lp, 7, bench::RowFilter::Any);
  REQUIRE(!spec.d.empty());
  CHECK(spec.lambda_lo == -1.0);
  CHECK(spec.lambda_hi == 1.0);
  for (const auto& t : spec.d) {
    // find the original coefficient and check the 0.1..0.9 scaling
    bool found = false;
    for (int r = 0; r < lp.m() && !found; ++r) {
      if (lp.rows[r].origin_name != t.row) continue;
      for (int j = 0; j < lp.n_original(); ++j) {
        if (lp.col_names[j] != t.col) continue;
        const double aij = lp.rows[r].sign * lp.a(r, lp.col_plus[j]);
        if (aij == 0.0) continue;
        const double ratio = std::abs(t.value / aij);
        CHECK(ratio >= 0.1);
        CHECK(ratio <= 0.9);
        found = true;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("rejections carry their reason") {
  // the optimum stays at x = 0 whatever the drift, so the profile is
  // constant in lambda and the instance is rejected
  const std::string text =
      "NAME lin\nROWS\n N COST\n L R1\nCOLUMNS\n"
      "    X COST 1\n    X R1 1\nRHS\n    RHS R1 5\nENDATA\n";
  const io::FrozenLP lp = io::parse_mps(text);
  const bench::GeneratedInstance inst =
      bench::generate_instance(lp, 1, bench::RowFilter::Any);
  CHECK(!inst.accepted);
  CHECK(!inst.reject_reason.empty());
  // equality filter on a file without equality rows has nothing to pick
  const bench::GeneratedInstance none =
      bench::generate_instance(lp, 1, bench::RowFilter::EqualityOnly);
  CHECK(!none.accepted);
  CHECK(none.reject_reason == "no rows pass the filter");
}

TEST_CASE("the bench cross product is complete and worker-stable") {
  std::vector<std::pair<std::string, ParametricLP>> problems;
  for (const auto& [name, p] : all_toys())
    problems.emplace_back(name, io::split_free(p));
  bench::BenchConfig config;
  config.methods = {Method::RobustFlat, Method::LagrangianFlat};
  config.splits = {1, 2};
  config.timeout = 300.0;
  config.workers = 1;
  const auto one = bench::run_bench(problems, config);
  CHECK(one.size() == 4 * 2 * 2 * 2);
  config.workers = 4;
  const auto four = bench::run_bench(problems, config);
  CHECK(bench::to_csv(one, false, 5) == bench::to_csv(four, false, 5));
}
