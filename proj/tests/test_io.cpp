#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "parabound/mps.hpp"
#include "parabound/results_io.hpp"
#include "parabound/simplex.hpp"
#include "parabound/toys.hpp"

using namespace parabound;
using namespace parabound::testing;

namespace {

const char* kTinyMps = R"(NAME tiny
ROWS
 N  COST
 L  R1
COLUMNS
    X COST -1.0
    X R1 1.0
    Y COST -1.0
    Y R1 1.0
RHS
    RHS R1 1.0
ENDATA
)";

}  // namespace

TEST_CASE("a minimal file parses into one row and two columns") {
  const io::FrozenLP lp = io::parse_mps(kTinyMps);
  CHECK(lp.name == "tiny");
  CHECK(lp.n_original() == 2);
  CHECK(lp.m() == 1);
  CHECK(lp.b(0) == 1.0);
  CHECK(lp.c(0) == -1.0);
  CHECK(lp.rows[0].origin_sense == 'L');
}

TEST_CASE("greater-than rows are negated and equality rows are paired") {
  const std::string text =
      "NAME t\nROWS\n N COST\n G R1\n E R2\nCOLUMNS\n"
      "    X COST 1\n    X R1 2\n    X R2 3\nRHS\n"
      "    RHS R1 5\n    RHS R2 6\nENDATA\n";
  const io::FrozenLP lp = io::parse_mps(text);
  REQUIRE(lp.m() == 3);
  // G row: -2x <= -5
  CHECK(lp.a(0, 0) == -2.0);
  CHECK(lp.b(0) == -5.0);
  // E row: 3x <= 6 and -3x <= -6, same origin name
  CHECK(lp.a(1, 0) == 3.0);
  CHECK(lp.b(1) == 6.0);
  CHECK(lp.a(2, 0) == -3.0);
  CHECK(lp.b(2) == -6.0);
  CHECK(lp.rows[1].origin_name == lp.rows[2].origin_name);
}

TEST_CASE("free variables split and bounds become rows") {
  const std::string text =
      "NAME t\nROWS\n N COST\n L R1\nCOLUMNS\n"
      "    X COST 1\n    X R1 1\n    Y R1 1\nRHS\n    RHS R1 4\n"
      "BOUNDS\n FR BND X\n UP BD Y 3\nENDATA\n";
  const io::FrozenLP lp = io::parse_mps(text);
  CHECK(lp.n_original() == 2);
  CHECK(lp.n_internal() == 3);  // X split into a pair
  CHECK(lp.col_minus[0] >= 0);
  CHECK(lp.col_minus[1] == -1);
  // the synthesized bound row y <= 3
  bool found = false;
  for (int r = 0; r < lp.m(); ++r)
    if (lp.rows[r].origin_name == "__bnd_Y_up") {
      found = true;
      CHECK(lp.b(r) == 3.0);
    }
  CHECK(found);
}

TEST_CASE("RANGES and malformed input fail with a line number") {
  const std::string with_ranges =
      "NAME t\nROWS\n N COST\n L R1\nCOLUMNS\n    X R1 1\nRANGES\nENDATA\n";
  CHECK_THROWS_AS((void)io::parse_mps(with_ranges), io::ParseError);
  try {
    (void)io::parse_mps(with_ranges);
  } catch (const io::ParseError& e) {
    CHECK(e.line == 7);
  }
  const std::string bad_number =
      "NAME t\nROWS\n N COST\n L R1\nCOLUMNS\n    X R1 abc\nENDATA\n";
  CHECK_THROWS_AS((void)io::parse_mps(bad_number), io::ParseError);
  const std::string unknown_row =
      "NAME t\nROWS\n N COST\n L R1\nCOLUMNS\n    X R9 1\nENDATA\n";
  CHECK_THROWS_AS((void)io::parse_mps(unknown_row), io::ParseError);
  CHECK_THROWS_AS((void)io::parse_mps("NAME t\nROWS\n"), io::ParseError);
}

TEST_CASE("assemble partitions rows and builds the drift matrix") {
  const io::FrozenLP lp = io::parse_mps(kTinyMps);
  io::PerturbationSpec spec;
  spec.a2_rows = {"R1"};
  spec.d = {{"R1", "X", 0.25}};
  spec.lambda_lo = -1.0;
  spec.lambda_hi = 1.0;
  const ParametricLP p = io::assemble(lp, spec);
  CHECK(p.m1() == 0);
  CHECK(p.m2() == 1);
  CHECK(p.d(0, 0) == 0.25);
  CHECK(p.d(0, 1) == 0.0);
  CHECK(p.nonneg);
  CHECK(validate(p).empty());
}

TEST_CASE("assemble lists dangling names") {
  const io::FrozenLP lp = io::parse_mps(kTinyMps);
  io::PerturbationSpec spec;
  spec.a2_rows = {"R99"};
  spec.lambda_lo = 0.0;
  spec.lambda_hi = 1.0;
  try {
    (void)io::assemble(lp, spec);
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("R99") != std::string::npos);
  }
}

TEST_CASE("perturbation JSON round-trips") {
  io::PerturbationSpec spec;
  spec.a2_rows = {"R1", "R7"};
  spec.d = {{"R1", "X", -0.5}, {"R7", "Y", 1.25}};
  spec.lambda_lo = -2.0;
  spec.lambda_hi = 3.0;
  const io::PerturbationSpec back =
      io::parse_perturbation(io::emit_perturbation(spec));
  CHECK(back.a2_rows == spec.a2_rows);
  REQUIRE(back.d.size() == 2);
  CHECK(back.d[1].col == "Y");
  CHECK(back.d[1].value == 1.25);
  CHECK(back.lambda_lo == -2.0);
  CHECK(back.lambda_hi == 3.0);
}

TEST_CASE("the toy fixtures reproduce the embedded problems") {
  for (const auto& [name, p] : all_toys()) {
    CAPTURE(name);
    const io::FrozenLP lp = io::parse_mps(to_mps(p, name));
    const ParametricLP parsed =
        io::assemble(lp, io::parse_perturbation(to_perturbation_json(p)));
    // parsed is the sign-split equivalent; optima must agree
    SimplexSolver solver;
    for (double lambda : {p.lambda_lo, p.interval().mid(), p.lambda_hi}) {
      const SimplexOutcome a = solver.solve(instantiate(p, lambda));
      const SimplexOutcome b = solver.solve(instantiate(parsed, lambda));
      REQUIRE(a.status == b.status);
      if (a.status == SolveStatus::Optimal)
        CHECK(b.objective ==
              doctest::Approx(a.objective).epsilon(1e-7).scale(1.0));
    }
  }
}

TEST_CASE("split_free preserves optima") {
  SimplexSolver solver;
  for (const auto& [name, p] : all_toys()) {
    CAPTURE(name);
    const ParametricLP q = io::split_free(p);
    CHECK(q.nonneg);
    for (double lambda : {p.lambda_lo, 0.25, p.lambda_hi}) {
      const SimplexOutcome a = solver.solve(instantiate(p, lambda));
      const SimplexOutcome b = solver.solve(instantiate(q, lambda));
      REQUIRE(a.status == b.status);
      if (a.status == SolveStatus::Optimal)
        CHECK(b.objective ==
              doctest::Approx(a.objective).epsilon(1e-7).scale(1.0));
    }
  }
}

TEST_CASE("results JSON round-trips random quadratic segments") {
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 25; ++t) {
    io::ResultsDocument doc;
    doc.problem = "p";
    doc.method = "robust-envelope";
    doc.side = "upper";
    doc.n_splits = 1 + static_cast<int>(rng() % 10);
    double lo = uniform(rng, -5.0, 0.0);
    for (int s = 0; s < 3; ++s) {
      const double hi = lo + uniform(rng, 0.1, 2.0);
      doc.segments.push_back({lo, hi, (rng() & 1) != 0,
                              uniform(rng, -9.0, 9.0),
                              uniform(rng, -9.0, 9.0),
                              uniform(rng, -9.0, 9.0)});
      lo = hi;
    }
    doc.samples = {{0.5, uniform(rng, -3.0, 3.0)}, {1.0, kInf}};
    doc.availability = 66.0;
    doc.rmse = uniform(rng, 1.0, 4.0);
    if (rng() & 1) doc.rel_time = uniform(rng, 0.0, 2.0);
    const io::ResultsDocument back =
        io::parse_results(io::emit_results(doc));
    CHECK(back.problem == doc.problem);
    CHECK(back.n_splits == doc.n_splits);
    REQUIRE(back.segments.size() == doc.segments.size());
    for (size_t s = 0; s < doc.segments.size(); ++s) {
      CHECK(back.segments[s].lo == doc.segments[s].lo);
      CHECK(back.segments[s].hi == doc.segments[s].hi);
      CHECK(back.segments[s].c0 == doc.segments[s].c0);
      CHECK(back.segments[s].c1 == doc.segments[s].c1);
      CHECK(back.segments[s].c2 == doc.segments[s].c2);
      CHECK(back.segments[s].available == doc.segments[s].available);
    }
    CHECK(back.samples[1].second == kInf);
    CHECK(back.rmse == doc.rmse);
    CHECK(back.rel_time.has_value() == doc.rel_time.has_value());
  }
}

TEST_CASE("emit_results is deterministic") {
  io::ResultsDocument doc;
  doc.problem = "x";
  doc.method = "reuse";
  doc.side = "upper";
  doc.segments.push_back({0.0, 1.0, true, 1.5, 0.0, 0.0});
  CHECK(io::emit_results(doc) == io::emit_results(doc));
  CHECK(io::emit_results(doc).find("\"coeffs\":[1.5,0,0]") !=
        std::string::npos);
}
