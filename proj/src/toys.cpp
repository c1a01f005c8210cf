#include "parabound/toys.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace parabound {

namespace {

ParametricLP build(std::initializer_list<double> c,
                   std::initializer_list<std::initializer_list<double>> a1,
                   std::initializer_list<double> b1,
                   std::initializer_list<std::initializer_list<double>> a2,
                   std::initializer_list<std::initializer_list<double>> d,
                   std::initializer_list<double> b2, double lo, double hi) {
  auto mat = [](std::initializer_list<std::initializer_list<double>> rows,
                int cols) {
    Matrix m(rows.size(), cols);
    int r = 0;
    for (const auto& row : rows) {
      int c = 0;
      for (double v : row) m(r, c++) = v;
      ++r;
    }
    return m;
  };
  auto vec = [](std::initializer_list<double> vals) {
    Vector v(vals.size());
    int i = 0;
    for (double x : vals) v(i++) = x;
    return v;
  };
  ParametricLP p;
  p.c = vec(c);
  const int n = p.n();
  p.a1 = mat(a1, n);
  p.b1 = vec(b1);
  p.a2 = mat(a2, n);
  p.d = mat(d, n);
  p.b2 = vec(b2);
  p.lambda_lo = lo;
  p.lambda_hi = hi;
  p.nonneg = false;
  return p;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

ParametricLP toy1() {
  return build({-1, 2},
               {{-2, -1}, {1, 2}, {-1, 1}, {1, -1}, {1, -3}, {2, 0}},
               {3, 0, 2, 1, 1, 3},
               {{3, -1}, {-3, 1}, {-2, 1}, {2, -1}, {-1, -2}, {-1, -3}},
               {{3, 3}, {3, -2}, {2, 3}, {2, -1}, {-2, 1}, {0, -2}},
               {0, 0, 0, 3, 3, 1}, -4, 4);
}

ParametricLP toy2() {
  return build({0, 1},
               {{-2, 0}, {2, 2}, {-1, 0}, {-1, -1}, {0, 1}, {-3, -2}},
               {1, 2, 2, 3, 3, 1},
               {{2, 3}, {0, 1}, {1, -3}, {0, -3}, {3, 0}, {-2, 3}},
               {{3, 3}, {0, 2}, {-2, -1}, {2, 1}, {2, 0}, {2, 2}},
               {3, 1, 2, 3, 3, 1}, -4, 4);
}

ParametricLP toy3() {
  return build({2, -2},
               {{-2, 2}, {-1, 0}},
               {4, 1},
               {{2, 1}, {-2, -3}, {2, 2}, {-1, -4}},
               {{-1, -4}, {0, 4}, {-4, -3}, {2, 4}},
               {4, 2, 0, 2}, -10, 9);
}

ParametricLP toy4() {
  return build({-2, -2},
               {{3, 1}, {0, -1}},
               {3, 3},
               {{-5, -2}, {1, 4}},
               {{-3, -2}, {-3, 0}},
               {0, -3}, -2, 2);
}

std::vector<std::pair<std::string, ParametricLP>> all_toys() {
  return {{"toy1", toy1()}, {"toy2", toy2()}, {"toy3", toy3()},
          {"toy4", toy4()}};
}

std::string to_mps(const ParametricLP& p, const std::string& name) {
  std::string out = "NAME " + name + "\nROWS\n N  COST\n";
  for (int i = 0; i < p.m1(); ++i)
    out += " L  R" + std::to_string(i + 1) + "\n";
  for (int i = 0; i < p.m2(); ++i)
    out += " L  S" + std::to_string(i + 1) + "\n";
  out += "COLUMNS\n";
  for (int j = 0; j < p.n(); ++j) {
    const std::string col = "X" + std::to_string(j + 1);
    if (p.c(j) != 0.0)
      out += "    " + col + " COST " + fmt(p.c(j)) + "\n";
    for (int i = 0; i < p.m1(); ++i)
      if (p.a1(i, j) != 0.0)
        out += "    " + col + " R" + std::to_string(i + 1) + " " +
               fmt(p.a1(i, j)) + "\n";
    for (int i = 0; i < p.m2(); ++i)
      if (p.a2(i, j) != 0.0)
        out += "    " + col + " S" + std::to_string(i + 1) + " " +
               fmt(p.a2(i, j)) + "\n";
  }
  out += "RHS\n";
  for (int i = 0; i < p.m1(); ++i)
    if (p.b1(i) != 0.0)
      out += "    RHS R" + std::to_string(i + 1) + " " + fmt(p.b1(i)) + "\n";
  for (int i = 0; i < p.m2(); ++i)
    if (p.b2(i) != 0.0)
      out += "    RHS S" + std::to_string(i + 1) + " " + fmt(p.b2(i)) + "\n";
  if (!p.nonneg) {
    out += "BOUNDS\n";
    for (int j = 0; j < p.n(); ++j)
      out += " FR BND X" + std::to_string(j + 1) + "\n";
  }
  out += "ENDATA\n";
  return out;
}

std::string to_perturbation_json(const ParametricLP& p) {
  std::string out = "{\"a2_rows\":[";
  for (int i = 0; i < p.m2(); ++i) {
    if (i) out += ',';
    out += "\"S" + std::to_string(i + 1) + "\"";
  }
  out += "],\"d\":[";
  bool first = true;
  for (int i = 0; i < p.m2(); ++i)
    for (int j = 0; j < p.n(); ++j)
      if (p.d(i, j) != 0.0) {
        if (!first) out += ',';
        first = false;
        out += "[\"S" + std::to_string(i + 1) + "\",\"X" +
               std::to_string(j + 1) + "\"," + fmt(p.d(i, j)) + "]";
      }
  out += "],\"lambda\":[" + fmt(p.lambda_lo) + "," + fmt(p.lambda_hi) + "]}\n";
  return out;
}

void write_toy_fixtures(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, p] : all_toys()) {
    std::ofstream mps(dir + "/" + name + ".mps");
    mps << to_mps(p, name);
    std::ofstream pert(dir + "/" + name + ".json");
    pert << to_perturbation_json(p);
    if (!mps || !pert)
      throw std::runtime_error("cannot write fixtures into " + dir);
  }
}

}  // namespace parabound
