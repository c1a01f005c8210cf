#include "parabound/mps.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace parabound::io {

ParseError::ParseError(int line_, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_) + ": " + what),
      line(line_) {}

namespace {

struct RawRow {
  char sense = 'L';  // 'N', 'L', 'G', 'E'
  std::map<int, double> coeffs;  // by original column index
  double rhs = 0.0;
};

struct ColBounds {
  double lo = 0.0;
  double up = kInf;
};

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

double parse_number(const std::string& tok, int line) {
  size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a number, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line, "trailing characters in number '" + tok + "'");
  return v;
}

}  // namespace

FrozenLP parse_mps(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  std::string problem_name;
  bool maximize = false;
  std::vector<std::string> row_order;
  std::map<std::string, RawRow> rows;
  std::string obj_row;
  double obj_rhs = 0.0;
  std::vector<std::string> col_order;
  std::map<std::string, int> col_index;
  std::map<int, double> obj_coeffs;
  std::vector<ColBounds> bounds;
  bool saw_endata = false;

  enum Section { None, ObjSense, Rows, Columns, Rhs, Bounds };
  Section section = None;

  auto column_of = [&](const std::string& name, bool create, int ln) {
    auto it = col_index.find(name);
    if (it != col_index.end()) return it->second;
    if (!create) throw ParseError(ln, "unknown column '" + name + "'");
    const int idx = static_cast<int>(col_order.size());
    col_index[name] = idx;
    col_order.push_back(name);
    bounds.push_back({});
    return idx;
  };

  auto apply_entry = [&](const std::string& row, int col, double v, int ln) {
    if (row == obj_row) {
      obj_coeffs[col] += v;
      return;
    }
    auto it = rows.find(row);
    if (it == rows.end()) throw ParseError(ln, "unknown row '" + row + "'");
    it->second.coeffs[col] += v;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '*') continue;

    const bool header = !std::isspace(static_cast<unsigned char>(line[0]));
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;

    if (header) {
      const std::string& kw = tok[0];
      if (kw == "NAME") {
        if (tok.size() > 1) problem_name = tok[1];
        continue;
      }
      if (kw == "OBJSENSE") {
        section = ObjSense;
        if (tok.size() > 1) {
          maximize = tok[1] == "MAX" || tok[1] == "MAXIMIZE";
          section = None;
        }
        continue;
      }
      if (kw == "ROWS") { section = Rows; continue; }
      if (kw == "COLUMNS") { section = Columns; continue; }
      if (kw == "RHS") { section = Rhs; continue; }
      if (kw == "BOUNDS") { section = Bounds; continue; }
      if (kw == "RANGES")
        throw ParseError(lineno, "RANGES section is not supported");
      if (kw == "ENDATA") { saw_endata = true; break; }
      throw ParseError(lineno, "unknown section '" + kw + "'");
    }

    switch (section) {
      case ObjSense:
        maximize = tok[0] == "MAX" || tok[0] == "MAXIMIZE";
        section = None;
        break;
      case Rows: {
        if (tok.size() != 2)
          throw ParseError(lineno, "ROWS entry needs a sense and a name");
        const char sense = std::toupper(static_cast<unsigned char>(tok[0][0]));
        if (tok[0].size() != 1 ||
            (sense != 'N' && sense != 'L' && sense != 'G' && sense != 'E'))
          throw ParseError(lineno, "bad row sense '" + tok[0] + "'");
        if (sense == 'N') {
          if (obj_row.empty()) obj_row = tok[1];
          // extra N rows are ignored, as is customary
          break;
        }
        if (rows.count(tok[1]))
          throw ParseError(lineno, "duplicate row '" + tok[1] + "'");
        rows[tok[1]].sense = sense;
        row_order.push_back(tok[1]);
        break;
      }
      case Columns: {
        if (tok.size() >= 3 && tok[1] == "'MARKER'")
          throw ParseError(lineno, "integrality markers are not supported");
        if (tok.size() != 3 && tok.size() != 5)
          throw ParseError(lineno, "COLUMNS entry needs (row, value) pairs");
        const int col = column_of(tok[0], true, lineno);
        for (size_t k = 1; k + 1 < tok.size(); k += 2)
          apply_entry(tok[k], col, parse_number(tok[k + 1], lineno), lineno);
        break;
      }
      case Rhs: {
        if (tok.size() != 3 && tok.size() != 5)
          throw ParseError(lineno, "RHS entry needs (row, value) pairs");
        for (size_t k = 1; k + 1 < tok.size(); k += 2) {
          const double v = parse_number(tok[k + 1], lineno);
          if (tok[k] == obj_row) {
            obj_rhs = v;
            continue;
          }
          auto it = rows.find(tok[k]);
          if (it == rows.end())
            throw ParseError(lineno, "unknown row '" + tok[k] + "'");
          it->second.rhs = v;
        }
        break;
      }
      case Bounds: {
        if (tok.size() < 3)
          throw ParseError(lineno, "BOUNDS entry needs a type and a column");
        const std::string& type = tok[0];
        const int col = column_of(tok[2], false, lineno);
        const bool needs_value =
            type == "UP" || type == "LO" || type == "FX";
        if (needs_value && tok.size() != 4)
          throw ParseError(lineno, "bound type " + type + " needs a value");
        const double v =
            needs_value ? parse_number(tok[3], lineno) : 0.0;
        if (type == "UP") bounds[col].up = v;
        else if (type == "LO") bounds[col].lo = v;
        else if (type == "FX") { bounds[col].lo = v; bounds[col].up = v; }
        else if (type == "FR") { bounds[col].lo = -kInf; bounds[col].up = kInf; }
        else if (type == "MI") bounds[col].lo = -kInf;
        else if (type == "PL") bounds[col].up = kInf;
        else throw ParseError(lineno, "unsupported bound type '" + type + "'");
        break;
      }
      case None:
        throw ParseError(lineno, "data outside any section");
    }
  }
  if (!saw_endata) throw ParseError(lineno, "missing ENDATA");
  if (obj_row.empty()) throw ParseError(lineno, "no objective (N) row");

  FrozenLP lp;
  lp.name = problem_name;
  lp.maximize = maximize;
  lp.objective_constant = obj_rhs;

  const int n_orig = static_cast<int>(col_order.size());
  lp.col_names = col_order;
  lp.col_plus.resize(n_orig);
  lp.col_minus.assign(n_orig, -1);
  int n_internal = 0;
  for (int j = 0; j < n_orig; ++j) {
    lp.col_plus[j] = n_internal++;
    if (bounds[j].lo == -kInf) lp.col_minus[j] = n_internal++;
  }

  // normalized rows: L as-is, G negated, E expanded into an opposite pair,
  // then synthesized bound rows
  struct Pending {
    FrozenRow meta;
    const std::map<int, double>* coeffs;
    double rhs;
  };
  std::vector<Pending> pending;
  for (const std::string& name : row_order) {
    const RawRow& r = rows.at(name);
    if (r.sense == 'L') {
      pending.push_back({{name, 'L', +1}, &r.coeffs, r.rhs});
    } else if (r.sense == 'G') {
      pending.push_back({{name, 'G', -1}, &r.coeffs, -r.rhs});
    } else {
      pending.push_back({{name, 'E', +1}, &r.coeffs, r.rhs});
      pending.push_back({{name, 'E', -1}, &r.coeffs, -r.rhs});
    }
  }
  std::vector<std::pair<FrozenRow, std::pair<std::pair<int, double>, double>>>
      bound_rows;  // (meta, ((col, coeff), rhs)) as single-entry rows
  for (int j = 0; j < n_orig; ++j) {
    const ColBounds& cb = bounds[j];
    if (cb.up != kInf)
      bound_rows.push_back(
          {{"__bnd_" + col_order[j] + "_up", 'L', +1}, {{j, 1.0}, cb.up}});
    if (cb.lo != -kInf && cb.lo != 0.0)
      bound_rows.push_back(
          {{"__bnd_" + col_order[j] + "_lo", 'G', -1}, {{j, 1.0}, -cb.lo}});
  }

  const int m = static_cast<int>(pending.size() + bound_rows.size());
  lp.a = Matrix::Zero(m, n_internal);
  lp.b.resize(m);
  lp.rows.reserve(m);
  auto put_entry = [&](int r, int orig_col, double v) {
    lp.a(r, lp.col_plus[orig_col]) += v;
    if (lp.col_minus[orig_col] >= 0) lp.a(r, lp.col_minus[orig_col]) -= v;
  };
  int r = 0;
  for (const Pending& pd : pending) {
    for (const auto& [col, v] : *pd.coeffs)
      put_entry(r, col, pd.meta.sign * v);
    lp.b(r) = pd.rhs;
    lp.rows.push_back(pd.meta);
    ++r;
  }
  for (const auto& [meta, entry] : bound_rows) {
    put_entry(r, entry.first.first, meta.sign * entry.first.second);
    lp.b(r) = entry.second;
    lp.rows.push_back(meta);
    ++r;
  }

  lp.c = Vector::Zero(n_internal);
  for (const auto& [col, v] : obj_coeffs) {
    const double cv = maximize ? -v : v;
    lp.c(lp.col_plus[col]) += cv;
    if (lp.col_minus[col] >= 0) lp.c(lp.col_minus[col]) -= cv;
  }
  return lp;
}

PerturbationSpec parse_perturbation(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("perturbation spec: ") + e.what());
  }
  PerturbationSpec spec;
  try {
    for (const auto& name : j.at("a2_rows"))
      spec.a2_rows.push_back(name.get<std::string>());
    if (j.contains("d")) {
      for (const auto& t : j.at("d")) {
        if (!t.is_array() || t.size() != 3)
          throw std::invalid_argument(
              "perturbation spec: d entries must be [row, col, value]");
        spec.d.push_back({t[0].get<std::string>(), t[1].get<std::string>(),
                          t[2].get<double>()});
      }
    }
    const auto& iv = j.at("lambda");
    if (!iv.is_array() || iv.size() != 2)
      throw std::invalid_argument("perturbation spec: lambda must be [lo, hi]");
    spec.lambda_lo = iv[0].get<double>();
    spec.lambda_hi = iv[1].get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("perturbation spec: ") + e.what());
  }
  return spec;
}

std::string emit_perturbation(const PerturbationSpec& spec) {
  auto fmt = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  std::string out = "{\"a2_rows\":[";
  for (size_t i = 0; i < spec.a2_rows.size(); ++i) {
    if (i) out += ',';
    out += '"' + spec.a2_rows[i] + '"';
  }
  out += "],\"d\":[";
  for (size_t i = 0; i < spec.d.size(); ++i) {
    if (i) out += ',';
    out += "[\"" + spec.d[i].row + "\",\"" + spec.d[i].col + "\"," +
           fmt(spec.d[i].value) + "]";
  }
  out += "],\"lambda\":[" + fmt(spec.lambda_lo) + "," + fmt(spec.lambda_hi) +
         "]}\n";
  return out;
}

ParametricLP assemble(const FrozenLP& lp, const PerturbationSpec& spec) {
  std::map<std::string, int> order;  // a2 origin name -> position in spec list
  for (size_t k = 0; k < spec.a2_rows.size(); ++k) {
    if (!order.emplace(spec.a2_rows[k], static_cast<int>(k)).second)
      throw std::invalid_argument("duplicate a2 row '" + spec.a2_rows[k] + "'");
  }

  std::set<std::string> known;
  for (const FrozenRow& row : lp.rows) known.insert(row.origin_name);
  std::vector<std::string> dangling;
  for (const std::string& name : spec.a2_rows)
    if (!known.count(name)) dangling.push_back(name);
  std::map<std::string, int> col_of;
  for (int j = 0; j < lp.n_original(); ++j) col_of[lp.col_names[j]] = j;
  for (const auto& t : spec.d) {
    if (!order.count(t.row) &&
        std::find(dangling.begin(), dangling.end(), t.row) == dangling.end())
      dangling.push_back(t.row);
    if (!col_of.count(t.col)) dangling.push_back(t.col);
  }
  if (!dangling.empty()) {
    std::string msg = "unknown names in perturbation spec:";
    for (const std::string& name : dangling) msg += " " + name;
    throw std::invalid_argument(msg);
  }

  // stable partition: a2 rows grouped by spec order, a1 rows keep file order
  std::vector<int> a1_rows, a2_rows;
  for (int k = 0; k < static_cast<int>(spec.a2_rows.size()); ++k)
    for (int r = 0; r < lp.m(); ++r)
      if (lp.rows[r].origin_name == spec.a2_rows[k]) a2_rows.push_back(r);
  {
    std::set<int> in_a2(a2_rows.begin(), a2_rows.end());
    for (int r = 0; r < lp.m(); ++r)
      if (!in_a2.count(r)) a1_rows.push_back(r);
  }

  ParametricLP p;
  p.c = lp.c;
  p.nonneg = true;
  p.lambda_lo = spec.lambda_lo;
  p.lambda_hi = spec.lambda_hi;
  p.lambda_free = spec.d.empty();
  const int n = lp.n_internal();
  p.a1.resize(a1_rows.size(), n);
  p.b1.resize(a1_rows.size());
  for (size_t i = 0; i < a1_rows.size(); ++i) {
    p.a1.row(i) = lp.a.row(a1_rows[i]);
    p.b1(i) = lp.b(a1_rows[i]);
  }
  p.a2.resize(a2_rows.size(), n);
  p.b2.resize(a2_rows.size());
  p.d = Matrix::Zero(a2_rows.size(), n);
  for (size_t i = 0; i < a2_rows.size(); ++i) {
    p.a2.row(i) = lp.a.row(a2_rows[i]);
    p.b2(i) = lp.b(a2_rows[i]);
  }
  for (const auto& t : spec.d) {
    const int col = col_of.at(t.col);
    for (size_t i = 0; i < a2_rows.size(); ++i) {
      const FrozenRow& row = lp.rows[a2_rows[i]];
      if (row.origin_name != t.row) continue;
      p.d(i, lp.col_plus[col]) += row.sign * t.value;
      if (lp.col_minus[col] >= 0)
        p.d(i, lp.col_minus[col]) -= row.sign * t.value;
    }
  }
  return p;
}

ParametricLP split_free(const ParametricLP& p) {
  if (p.nonneg) return p;
  const int n = p.n();
  auto widen = [n](const Matrix& m) {
    Matrix out(m.rows(), 2 * n);
    out.leftCols(n) = m;
    out.rightCols(n) = -m;
    return out;
  };
  ParametricLP q = p;
  q.a1 = widen(p.a1);
  q.a2 = widen(p.a2);
  q.d = widen(p.d);
  Vector c(2 * n);
  c.head(n) = p.c;
  c.tail(n) = -p.c;
  q.c = c;
  q.nonneg = true;
  return q;
}

}  // namespace parabound::io
