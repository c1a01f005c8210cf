#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "parabound/bench.hpp"
#include "parabound/methods.hpp"
#include "parabound/mps.hpp"
#include "parabound/refine.hpp"
#include "parabound/results_io.hpp"
#include "parabound/toys.hpp"

namespace {

using namespace parabound;

int g_log_level = 0;  // 0 error, 1 info, 2 debug

void log_info(const std::string& msg) {
  if (g_log_level >= 1) std::cerr << "info: " << msg << "\n";
}

// A config file is a flat JSON object {"flag": value, ...} with flag names
// given without leading dashes. Its entries are appended to the argument
// list before parsing, so flags given on the command line win.
void merge_config_args(std::vector<std::string>& args) {
  std::string path;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0)
      path = args[i].substr(std::string("--config=").size());
  }
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("bad config file " + path + ": " + e.what());
  }
  if (!j.is_object())
    throw std::runtime_error("config file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    const std::string flag = "--" + key;
    const bool given = std::any_of(
        args.begin(), args.end(), [&](const std::string& a) {
          return a == flag || a.rfind(flag + "=", 0) == 0;
        });
    if (given) continue;
    auto push = [&](const nlohmann::json& v) {
      if (v.is_boolean()) {
        if (v.get<bool>()) args.push_back(flag);
        return;
      }
      args.push_back(flag);
      args.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    };
    if (value.is_array())
      for (const auto& e : value) push(e);
    else
      push(value);
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct LoadedProblem {
  io::FrozenLP lp;
  ParametricLP p;
};

LoadedProblem load_problem(const std::string& mps_path,
                           const std::string& perturb_path) {
  LoadedProblem out;
  out.lp = io::parse_mps(slurp(mps_path));
  const io::PerturbationSpec spec =
      io::parse_perturbation(slurp(perturb_path));
  out.p = io::assemble(out.lp, spec);
  const auto violations = validate(out.p);
  if (!violations.empty())
    throw std::runtime_error("invalid problem: " + violations.front().what);
  log_info("loaded " + mps_path + ": n=" + std::to_string(out.p.n()) +
           " m1=" + std::to_string(out.p.m1()) +
           " m2=" + std::to_string(out.p.m2()));
  return out;
}

Method parse_method(const std::string& name) {
  const auto m = method_from_name(name);
  if (!m) throw std::runtime_error("unknown method '" + name + "'");
  return *m;
}

BoundSide parse_side(const std::string& side) {
  if (side == "upper") return BoundSide::Upper;
  if (side == "lower") return BoundSide::Lower;
  throw std::runtime_error("side must be 'upper' or 'lower'");
}

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

io::ResultsDocument make_document(const ParametricLP& p,
                                  const std::string& problem,
                                  const std::string& method,
                                  const std::string& side, int n_splits,
                                  const std::vector<BoundSegment>& segments,
                                  double bound_seconds, bool timing) {
  io::ResultsDocument doc;
  doc.problem = problem;
  doc.method = method;
  doc.side = side;
  doc.n_splits = n_splits;
  doc.segments = segments;
  const bench::SampleSet samples = bench::sample_truth(p);
  for (size_t i = 0; i < samples.lambdas.size(); ++i)
    doc.samples.emplace_back(samples.lambdas[i], samples.values[i]);
  BoundFunction bf;
  bf.side = parse_side(side);
  bf.segments = segments;
  const bench::BenchmarkRecord rec = bench::metrics(
      bf, samples, bench::normalize(samples), bound_seconds, kInf);
  doc.availability = rec.availability;
  doc.rmse = rec.rmse;
  if (timing) doc.rel_time = rec.rel_time;
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* lvl = std::getenv("LB_LOG_LEVEL")) {
    const std::string s = lvl;
    g_log_level = s == "debug" ? 2 : s == "info" ? 1 : 0;
  }

  CLI::App app{
      "bounding functions for linear programs whose constraint matrix varies "
      "as A + lambda*D over an interval"};
  app.require_subcommand(1);

  auto configure = [](CLI::App* cmd) {
    cmd->add_option("--config", "JSON file supplying any flag");
  };

  std::string mps_path, perturb_path, out_path = "-";
  std::string method_name_arg, side_arg = "upper";
  int splits = 1;
  bool timing = false;

  CLI::App* bound = app.add_subcommand("bound", "compute one bounding function");
  configure(bound);
  bound->add_option("--mps", mps_path, "MPS file")->required();
  bound->add_option("--perturb", perturb_path, "perturbation JSON")->required();
  bound->add_option("--method", method_name_arg, "bounding method")->required();
  bound->add_option("--side", side_arg, "upper or lower");
  bound->add_option("--splits", splits, "uniform subinterval count");
  bound->add_option("--out", out_path, "output path, - for stdout");
  bound->add_flag("--timing", timing, "include timing in the output");

  std::string lower_arg = "robust-yzflat", upper_arg = "robust-yzflat";
  double eps_lambda = 1e-3, time_limit = 60.0;
  CLI::App* refine_cmd =
      app.add_subcommand("refine", "iteratively tighten a bound pair");
  configure(refine_cmd);
  refine_cmd->add_option("--mps", mps_path, "MPS file")->required();
  refine_cmd->add_option("--perturb", perturb_path, "perturbation JSON")
      ->required();
  refine_cmd->add_option("--lower", lower_arg, "lower bounding method");
  refine_cmd->add_option("--upper", upper_arg, "upper bounding method");
  refine_cmd->add_option("--eps-lambda", eps_lambda, "smallest interval width");
  refine_cmd->add_option("--time-limit", time_limit, "seconds");
  refine_cmd->add_option("--out", out_path, "output path, - for stdout");
  refine_cmd->add_flag("--timing", timing, "include timing in the output");

  double lambda_arg = 0.0;
  CLI::App* solve = app.add_subcommand("solve", "solve at a fixed lambda");
  configure(solve);
  solve->add_option("--mps", mps_path, "MPS file")->required();
  solve->add_option("--perturb", perturb_path, "perturbation JSON")->required();
  solve->add_option("--lambda", lambda_arg, "parameter value")->required();

  std::uint64_t seed = 0;
  std::string row_filter_arg = "any";
  CLI::App* generate =
      app.add_subcommand("generate", "derive a random perturbation from an LP");
  configure(generate);
  generate->add_option("--mps", mps_path, "MPS file")->required();
  generate->add_option("--seed", seed, "RNG seed")->required();
  generate->add_option("--row-filter", row_filter_arg,
                       "any, equality or inequality");
  generate->add_option("--out", out_path, "output path, - for stdout");

  std::string problems_dir, methods_arg = "all";
  std::string splits_arg = "1";
  double timeout = 60.0;
  int workers = 1;
  CLI::App* bench_cmd = app.add_subcommand("bench", "benchmark methods");
  configure(bench_cmd);
  bench_cmd->add_option("--problems", problems_dir, "directory of .mps/.json")
      ->required();
  bench_cmd->add_option("--methods", methods_arg, "comma list or 'all'");
  bench_cmd->add_option("--splits", splits_arg, "comma list of N values");
  bench_cmd->add_option("--timeout", timeout, "per-bound budget, seconds");
  bench_cmd->add_option("--seed", seed, "seed recorded in the CSV");
  bench_cmd->add_option("--workers", workers, "worker threads");
  bench_cmd->add_flag("--timing", timing, "report measured rel_time");
  bench_cmd->add_option("--out", out_path, "output path, - for stdout");

  std::string fixtures_dir = "fixtures";
  CLI::App* fixtures =
      app.add_subcommand("fixtures", "write the bundled toy problems");
  configure(fixtures);
  fixtures->add_option("--dir", fixtures_dir, "target directory");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    merge_config_args(args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (bound->parsed()) {
      const LoadedProblem loaded = load_problem(mps_path, perturb_path);
      const Method method = parse_method(method_name_arg);
      const BoundSide side = parse_side(side_arg);
      const double t0 = now_seconds();
      const BoundFunction bf =
          compute_split_bound(loaded.p, method, side, splits);
      const double elapsed = now_seconds() - t0;
      const io::ResultsDocument doc = make_document(
          loaded.p, loaded.lp.name, method_name_arg, side_arg, splits,
          bf.segments, elapsed, timing);
      spit(out_path, io::emit_results(doc));
      return bf.fully_unavailable() ? 2 : 0;
    }
    if (refine_cmd->parsed()) {
      const LoadedProblem loaded = load_problem(mps_path, perturb_path);
      const Method lower_m = parse_method(lower_arg);
      const Method upper_m = parse_method(upper_arg);
      RefineConfig config;
      config.epsilon_lambda = eps_lambda;
      config.time_limit = time_limit;
      config.lower_method = [&](const ParametricLP& p, LambdaInterval iv) {
        return compute_bound(p, lower_m, BoundSide::Lower, iv);
      };
      config.upper_method = [&](const ParametricLP& p, LambdaInterval iv) {
        return compute_bound(p, upper_m, BoundSide::Upper, iv);
      };
      const double t0 = now_seconds();
      const RefineResult result = refine(loaded.p, config);
      const double elapsed = now_seconds() - t0;
      // two JSON lines: the lower-side document carries the iteration trace
      auto flatten = [](const std::vector<BoundFunction>& parts) {
        std::vector<BoundSegment> segments;
        for (const BoundFunction& bf : parts)
          segments.insert(segments.end(), bf.segments.begin(),
                          bf.segments.end());
        return segments;
      };
      std::string text;
      for (const BoundSide side : {BoundSide::Lower, BoundSide::Upper}) {
        const bool is_lower = side == BoundSide::Lower;
        io::ResultsDocument doc;
        doc.problem = loaded.lp.name;
        doc.method = is_lower ? lower_arg : upper_arg;
        doc.side = is_lower ? "lower" : "upper";
        doc.n_splits = 1;
        doc.segments = flatten(is_lower ? result.lower : result.upper);
        doc.samples = result.points;
        doc.availability = 0.0;
        doc.rmse = kInf;
        if (timing) doc.rel_time = elapsed;
        if (is_lower) {
          doc.has_iterations = true;
          doc.iterations = result.trace;
        }
        text += io::emit_results(doc);
      }
      spit(out_path, text);
      return 0;
    }
    if (solve->parsed()) {
      const LoadedProblem loaded = load_problem(mps_path, perturb_path);
      const SimplexOutcome out =
          SimplexSolver().solve(instantiate(loaded.p, lambda_arg));
      std::string text = std::string("{\"status\":\"") +
                         to_string(out.status) + "\"";
      char buf[64];
      if (out.status == SolveStatus::Optimal) {
        std::snprintf(buf, sizeof(buf), "%.17g",
                      out.objective + loaded.lp.objective_constant);
        text += std::string(",\"objective\":") + buf;
      }
      if (out.status == SolveStatus::Infeasible && out.farkas.size() > 0) {
        text += ",\"farkas\":[";
        for (int i = 0; i < out.farkas.size(); ++i) {
          if (i) text += ',';
          std::snprintf(buf, sizeof(buf), "%.17g", out.farkas(i));
          text += buf;
        }
        text += ']';
      }
      text += "}\n";
      std::cout << text;
      return out.status == SolveStatus::Optimal ? 0 : 2;
    }
    if (generate->parsed()) {
      const io::FrozenLP lp = io::parse_mps(slurp(mps_path));
      bench::RowFilter filter = bench::RowFilter::Any;
      if (row_filter_arg == "equality")
        filter = bench::RowFilter::EqualityOnly;
      else if (row_filter_arg == "inequality")
        filter = bench::RowFilter::InequalityOnly;
      else if (row_filter_arg != "any")
        throw std::runtime_error("row filter must be any, equality or "
                                 "inequality");
      const bench::GeneratedInstance inst =
          bench::generate_instance(lp, seed, filter);
      std::string text = std::string("{\"accepted\":") +
                         (inst.accepted ? "true" : "false");
      if (!inst.accepted)
        text += ",\"reason\":\"" + inst.reject_reason + "\"";
      text += ",\"spec\":" +
              io::emit_perturbation(bench::generated_spec(lp, seed, filter));
      // emit_perturbation ends with a newline; fold it into the wrapper
      text.pop_back();
      text += "}\n";
      spit(out_path, text);
      return inst.accepted ? 0 : 2;
    }
    if (bench_cmd->parsed()) {
      std::vector<std::pair<std::string, ParametricLP>> problems;
      std::vector<std::filesystem::path> mps_files;
      for (const auto& entry :
           std::filesystem::directory_iterator(problems_dir))
        if (entry.path().extension() == ".mps")
          mps_files.push_back(entry.path());
      std::sort(mps_files.begin(), mps_files.end());
      for (const auto& path : mps_files) {
        std::filesystem::path sidecar = path;
        sidecar.replace_extension(".json");
        if (!std::filesystem::exists(sidecar)) continue;
        const LoadedProblem loaded =
            load_problem(path.string(), sidecar.string());
        problems.emplace_back(path.stem().string(), loaded.p);
      }
      if (problems.empty())
        throw std::runtime_error("no .mps/.json pairs in " + problems_dir);
      bench::BenchConfig config;
      config.timeout = timeout;
      config.timing = timing;
      config.workers = workers;
      if (methods_arg == "all") {
        config.methods = all_methods();
      } else {
        std::istringstream ss(methods_arg);
        std::string tok;
        while (std::getline(ss, tok, ','))
          config.methods.push_back(parse_method(tok));
      }
      config.splits.clear();
      std::istringstream ss(splits_arg);
      std::string tok;
      while (std::getline(ss, tok, ','))
        config.splits.push_back(std::stoi(tok));
      if (config.splits.empty()) config.splits.push_back(1);
      const auto records = bench::run_bench(problems, config);
      spit(out_path, bench::to_csv(records, timing, seed));
      return 0;
    }
    if (fixtures->parsed()) {
      write_toy_fixtures(fixtures_dir);
      log_info("wrote toy fixtures into " + fixtures_dir);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
