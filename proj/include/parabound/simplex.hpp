#pragma once

#include <memory>
#include <vector>

#include "parabound/model.hpp"

namespace parabound {

enum class SolveStatus { Optimal, Infeasible, Unbounded, IterLimit };
const char* to_string(SolveStatus s);

/// Equality form M [x; s] = rhs with s >= 0 slack identity block. Free
/// structural variables are represented as sign-split pairs so every internal
/// column is nonnegative. Artificial columns left over from phase 1 (they
/// only survive on redundant rows) are flagged and never priced.
struct StandardForm {
  Matrix m;
  Vector rhs;
  Vector obj;
  int n_struct = 0;      // structural variables of the original LP
  bool split = false;    // structural block holds (+,-) pairs
  std::vector<bool> artificial;

  int rows() const { return static_cast<int>(rhs.size()); }
  int cols() const { return static_cast<int>(m.cols()); }
  int structural_cols() const { return split ? 2 * n_struct : n_struct; }

  /// Lift a structural-space vector into the internal column space
  /// (slacks and artificials get zero).
  Vector expand_structural(const Vector& v) const;
  /// Project an internal full solution back to structural space.
  Vector recover_structural(const Vector& full) const;
};

struct Basis {
  std::vector<int> basic;     // one column per row
  std::vector<int> nonbasic;  // complement, ascending
};

struct SimplexOutcome {
  SolveStatus status = SolveStatus::IterLimit;
  Vector x;                // structural solution
  double objective = 0.0;
  Vector duals;            // per original row, mu = -rho >= 0 for <= rows
  Vector reduced_costs;    // internal column space; basic entries are zero
  Basis basis;
  Vector farkas;           // infeasibility certificate over rows (u >= 0)
  Vector ray;              // structural unbounded ray
  int pivots = 0;

  std::shared_ptr<const StandardForm> form;
  std::shared_ptr<const Matrix> basis_inverse;
};

struct SimplexConfig {
  double feas_tol = 1e-7;
  double opt_tol = 1e-7;
  int max_pivots = 0;       // 0 -> 50 * (rows + cols)
  int bland_after = 200;    // non-improving pivots before Bland's rule
  int refresh_every = 50;   // full basis-inverse refresh cadence
};

class SimplexSolver {
 public:
  explicit SimplexSolver(SimplexConfig cfg = {}) : cfg_(cfg) {}

  SimplexOutcome solve(const DenseLP& lp) const;

  /// Re-optimise the same constraint system under a new structural objective,
  /// starting from prev's basis.
  SimplexOutcome resolve_with_objective(const SimplexOutcome& prev,
                                        const Vector& new_objective) const;

  /// Maximal interval [lambda1 + dlo, lambda1 + dhi] on which the basis of
  /// `out` keeps nonnegative reduced costs when the objective drifts at rate
  /// `structural_drift` per unit of lambda.
  LambdaInterval reduced_cost_range(const SimplexOutcome& out,
                                    const Vector& structural_drift,
                                    double lambda1) const;

  const SimplexConfig& config() const { return cfg_; }

 private:
  SimplexConfig cfg_;
};

}  // namespace parabound
