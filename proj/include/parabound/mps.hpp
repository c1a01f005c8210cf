#pragma once

#include <string>
#include <vector>

#include "parabound/model.hpp"

namespace parabound::io {

/// One normalized (<=) row of a parsed LP. Equality rows expand into a pair
/// sharing the same origin name with opposite signs; >= rows are negated.
struct FrozenRow {
  std::string origin_name;  // MPS row name (or synthesized __bnd_* name)
  char origin_sense = 'L';  // 'L', 'G' or 'E' as declared in ROWS
  int sign = +1;            // orientation of this normalized row vs. the origin
};

/// A fixed LP normalized to min c'x + c0, A x <= b, x >= 0. Free variables
/// (and variables with an infinite lower bound) are split into nonnegative
/// pairs; finite bounds become synthesized rows.
struct FrozenLP {
  std::string name;
  Matrix a;
  Vector b;
  Vector c;
  double objective_constant = 0.0;
  bool maximize = false;  // OBJSENSE MAX seen; c already negated to min form

  std::vector<FrozenRow> rows;
  std::vector<std::string> col_names;  // original structural columns
  std::vector<int> col_plus;           // internal column of the + part
  std::vector<int> col_minus;          // internal column of the - part, or -1

  int n_internal() const { return static_cast<int>(a.cols()); }
  int n_original() const { return static_cast<int>(col_names.size()); }
  int m() const { return static_cast<int>(b.size()); }
};

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what);
  int line;
};

/// Parse a fixed- or free-format MPS text (sections NAME, OBJSENSE, ROWS,
/// COLUMNS, RHS, BOUNDS, ENDATA). RANGES and integrality markers are rejected.
FrozenLP parse_mps(const std::string& text);

/// Which rows vary with lambda and how.
struct PerturbationSpec {
  std::vector<std::string> a2_rows;  // origin names, in output order
  struct Triplet {
    std::string row;
    std::string col;
    double value = 0.0;
  };
  std::vector<Triplet> d;
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
};

/// Parse the JSON sidecar {a2_rows:[...], d:[[row,col,value],...],
/// lambda:[lo,hi]}.
PerturbationSpec parse_perturbation(const std::string& text);

/// Deterministic JSON for the sidecar (17 significant digits).
std::string emit_perturbation(const PerturbationSpec& spec);

/// Partition the frozen rows into (a1, a2) by origin name and build D from the
/// triplets. Throws std::invalid_argument listing any dangling names.
ParametricLP assemble(const FrozenLP& lp, const PerturbationSpec& spec);

/// Sign-split every variable of a free-variable problem so that the result is
/// an equivalent problem with nonneg = true (needed before dualize).
ParametricLP split_free(const ParametricLP& p);

}  // namespace parabound::io
