#include "parabound/simplex.hpp"

#include <algorithm>
#include <cmath>

namespace parabound {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Infeasible: return "Infeasible";
    case SolveStatus::Unbounded: return "Unbounded";
    case SolveStatus::IterLimit: return "IterLimit";
  }
  return "?";
}

Vector StandardForm::expand_structural(const Vector& v) const {
  Vector out = Vector::Zero(cols());
  if (split) {
    for (int j = 0; j < n_struct; ++j) {
      out(2 * j) = v(j);
      out(2 * j + 1) = -v(j);
    }
  } else {
    out.head(n_struct) = v;
  }
  return out;
}

Vector StandardForm::recover_structural(const Vector& full) const {
  Vector out(n_struct);
  if (split) {
    for (int j = 0; j < n_struct; ++j) out(j) = full(2 * j) - full(2 * j + 1);
  } else {
    out = full.head(n_struct);
  }
  return out;
}

namespace {

StandardForm build_form(const DenseLP& lp) {
  StandardForm f;
  const int n = lp.n();
  const int m = lp.m();
  f.n_struct = n;
  f.split = !lp.nonneg;
  const int sc = f.structural_cols();
  f.m.resize(m, sc + m);
  if (f.split) {
    for (int j = 0; j < n; ++j) {
      f.m.col(2 * j) = lp.a.col(j);
      f.m.col(2 * j + 1) = -lp.a.col(j);
    }
  } else if (n > 0) {
    f.m.leftCols(n) = lp.a;
  }
  f.m.rightCols(m) = Matrix::Identity(m, m);
  f.rhs = lp.b;
  f.obj = Vector::Zero(sc + m);
  if (f.split) {
    for (int j = 0; j < n; ++j) {
      f.obj(2 * j) = lp.c(j);
      f.obj(2 * j + 1) = -lp.c(j);
    }
  } else if (n > 0) {
    f.obj.head(n) = lp.c;
  }
  f.artificial.assign(sc + m, false);
  return f;
}

enum class RunStatus { Optimal, Unbounded, IterLimit, Singular };

// Revised simplex over an equality system with an explicit dense basis
// inverse. Dantzig pricing, falling back to Bland's rule after a stall.
struct Worker {
  const Matrix& m;
  const Vector& rhs;
  Vector obj;
  const std::vector<bool>& artificial;
  const SimplexConfig& cfg;

  std::vector<int> basic;
  std::vector<char> in_basis;
  Matrix binv;
  Vector xb;
  Vector y;  // row multipliers obj_B' * binv
  int pivots = 0;
  int since_refresh = 0;
  int non_improving = 0;
  bool bland = false;
  int unbounded_col = -1;
  double last_obj = kInf;

  Worker(const Matrix& m_, const Vector& rhs_, Vector obj_,
         const std::vector<bool>& art, const SimplexConfig& cfg_,
         std::vector<int> basic_)
      : m(m_), rhs(rhs_), obj(std::move(obj_)), artificial(art), cfg(cfg_),
        basic(std::move(basic_)) {
    in_basis.assign(m.cols(), 0);
    for (int b : basic) in_basis[b] = 1;
  }

  bool refresh_inverse() {
    const int rows = static_cast<int>(basic.size());
    Matrix mb(rows, rows);
    for (int i = 0; i < rows; ++i) mb.col(i) = m.col(basic[i]);
    Eigen::FullPivLU<Matrix> lu(mb);
    if (!lu.isInvertible()) return false;
    binv = lu.inverse();
    since_refresh = 0;
    return true;
  }

  void recompute_state() {
    xb = binv * rhs;
    const int rows = static_cast<int>(basic.size());
    Vector objb(rows);
    for (int i = 0; i < rows; ++i) objb(i) = obj(basic[i]);
    y = binv.transpose() * objb;
  }

  double reduced_cost(int j) const { return obj(j) - y.dot(m.col(j)); }

  RunStatus run(int max_pivots) {
    const int rows = static_cast<int>(basic.size());
    const int cols = static_cast<int>(m.cols());
    while (true) {
      recompute_state();
      const double cur = y.dot(rhs);
      if (cur < last_obj - 1e-12 * (1.0 + std::abs(cur))) {
        non_improving = 0;
      } else if (++non_improving > cfg.bland_after) {
        bland = true;
      }
      last_obj = cur;

      int enter = -1;
      double best = -cfg.opt_tol;
      for (int j = 0; j < cols; ++j) {
        if (in_basis[j] || artificial[j]) continue;
        const double r = reduced_cost(j);
        if (r < best) {
          enter = j;
          best = r;
          if (bland) break;
        } else if (bland && r < -cfg.opt_tol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return RunStatus::Optimal;

      const Vector w = binv * m.col(enter);
      int leave = -1;
      double best_ratio = kInf;
      for (int i = 0; i < rows; ++i) {
        if (w(i) <= 1e-10) continue;
        const double ratio = std::max(xb(i), 0.0) / w(i);
        if (ratio < best_ratio - 1e-12 ||
            (ratio < best_ratio + 1e-12 &&
             (leave < 0 ||
              (bland ? basic[i] < basic[leave] :
                       std::abs(w(i)) > std::abs(w(leave)))))) {
          best_ratio = ratio;
          leave = i;
        }
      }
      if (leave < 0) {
        unbounded_col = enter;
        return RunStatus::Unbounded;
      }

      in_basis[basic[leave]] = 0;
      in_basis[enter] = 1;
      basic[leave] = enter;
      ++pivots;
      if (++since_refresh >= cfg.refresh_every) {
        if (!refresh_inverse()) return RunStatus::Singular;
      } else {
        // product-form update of the inverse
        const double piv = w(leave);
        binv.row(leave) /= piv;
        for (int i = 0; i < rows; ++i) {
          if (i == leave) continue;
          binv.row(i) -= w(i) * binv.row(leave);
        }
      }
      if (pivots >= max_pivots) return RunStatus::IterLimit;
    }
  }

  std::vector<int> nonbasic_columns() const {
    std::vector<int> nb;
    for (int j = 0; j < static_cast<int>(m.cols()); ++j)
      if (!in_basis[j]) nb.push_back(j);
    return nb;
  }
};

int default_max_pivots(const SimplexConfig& cfg, int rows, int cols) {
  return cfg.max_pivots > 0 ? cfg.max_pivots : 50 * (rows + cols);
}

SimplexOutcome finish(const StandardForm& form, Worker& w, int extra_pivots,
                      const SimplexConfig& cfg, RunStatus rs) {
  SimplexOutcome out;
  out.pivots = w.pivots + extra_pivots;
  auto fptr = std::make_shared<StandardForm>(form);
  out.form = fptr;
  if (rs == RunStatus::IterLimit || rs == RunStatus::Singular) {
    out.status = SolveStatus::IterLimit;
    return out;
  }
  w.recompute_state();
  out.basis.basic = w.basic;
  out.basis.nonbasic = w.nonbasic_columns();
  out.basis_inverse = std::make_shared<Matrix>(w.binv);
  if (rs == RunStatus::Unbounded) {
    out.status = SolveStatus::Unbounded;
    Vector t = Vector::Zero(form.cols());
    t(w.unbounded_col) = 1.0;
    const Vector dir = w.binv * form.m.col(w.unbounded_col);
    for (int i = 0; i < form.rows(); ++i) t(w.basic[i]) -= dir(i);
    out.ray = form.recover_structural(t);
    return out;
  }
  out.status = SolveStatus::Optimal;
  Vector full = Vector::Zero(form.cols());
  for (int i = 0; i < form.rows(); ++i) full(w.basic[i]) = w.xb(i);
  out.x = form.recover_structural(full);
  out.objective = form.obj.dot(full);
  out.duals = (-w.y).cwiseMax(0.0);
  out.reduced_costs = Vector::Zero(form.cols());
  for (int j : out.basis.nonbasic)
    if (!form.artificial[j]) out.reduced_costs(j) = w.reduced_cost(j);
  return out;
}

}  // namespace

SimplexOutcome SimplexSolver::solve(const DenseLP& lp) const {
  StandardForm form = build_form(lp);
  const int rows = form.rows();
  const int sc = form.structural_cols();

  std::vector<int> neg_rows;
  for (int i = 0; i < rows; ++i)
    if (form.rhs(i) < 0.0) neg_rows.push_back(i);

  int phase1_pivots = 0;
  if (!neg_rows.empty()) {
    const int na = static_cast<int>(neg_rows.size());
    Matrix ext(rows, form.cols() + na);
    ext.leftCols(form.cols()) = form.m;
    ext.rightCols(na).setZero();
    for (int k = 0; k < na; ++k) ext(neg_rows[k], form.cols() + k) = -1.0;
    StandardForm f1 = form;
    f1.m = ext;
    f1.obj = Vector::Zero(ext.cols());
    for (int k = 0; k < na; ++k) f1.obj(form.cols() + k) = 1.0;
    f1.artificial.resize(ext.cols(), false);
    for (int k = 0; k < na; ++k) f1.artificial[form.cols() + k] = true;

    std::vector<int> basic(rows);
    {
      int k = 0;
      for (int i = 0; i < rows; ++i) {
        if (form.rhs(i) < 0.0)
          basic[i] = form.cols() + k++;
        else
          basic[i] = sc + i;
      }
    }
    Worker w1(f1.m, f1.rhs, f1.obj, f1.artificial, cfg_, basic);
    if (!w1.refresh_inverse()) {
      SimplexOutcome out;
      out.status = SolveStatus::IterLimit;
      return out;
    }
    const RunStatus rs =
        w1.run(default_max_pivots(cfg_, rows, static_cast<int>(ext.cols())));
    phase1_pivots = w1.pivots;
    if (rs == RunStatus::IterLimit || rs == RunStatus::Singular) {
      SimplexOutcome out;
      out.status = SolveStatus::IterLimit;
      out.pivots = phase1_pivots;
      return out;
    }
    w1.recompute_state();
    const double art_sum = w1.y.dot(f1.rhs);
    if (art_sum > cfg_.feas_tol * (1.0 + form.rhs.cwiseAbs().maxCoeff())) {
      SimplexOutcome out;
      out.status = SolveStatus::Infeasible;
      out.pivots = phase1_pivots;
      out.form = std::make_shared<StandardForm>(form);
      out.farkas = (-w1.y).cwiseMax(0.0);
      return out;
    }
    // Pivot basic artificials out where a real column is usable.
    for (int i = 0; i < rows; ++i) {
      if (!f1.artificial[w1.basic[i]]) continue;
      for (int j = 0; j < form.cols(); ++j) {
        if (w1.in_basis[j]) continue;
        const double piv = w1.binv.row(i).dot(f1.m.col(j));
        if (std::abs(piv) > 1e-8) {
          const Vector wcol = w1.binv * f1.m.col(j);
          w1.in_basis[w1.basic[i]] = 0;
          w1.in_basis[j] = 1;
          w1.basic[i] = j;
          w1.binv.row(i) /= wcol(i);
          for (int r = 0; r < rows; ++r) {
            if (r != i) w1.binv.row(r) -= wcol(r) * w1.binv.row(i);
          }
          break;
        }
      }
    }
    // Phase 2 on the extended form; surviving artificials stay pinned at 0.
    f1.obj = Vector::Zero(ext.cols());
    f1.obj.head(form.cols()) = form.obj;
    Worker w2(f1.m, f1.rhs, f1.obj, f1.artificial, cfg_, w1.basic);
    w2.binv = w1.binv;
    w2.since_refresh = 0;
    const RunStatus rs2 =
        w2.run(default_max_pivots(cfg_, rows, static_cast<int>(ext.cols())));
    return finish(f1, w2, phase1_pivots, cfg_, rs2);
  }

  std::vector<int> basic(rows);
  for (int i = 0; i < rows; ++i) basic[i] = sc + i;
  Worker w(form.m, form.rhs, form.obj, form.artificial, cfg_, basic);
  w.binv = Matrix::Identity(rows, rows);
  const RunStatus rs = w.run(default_max_pivots(cfg_, rows, form.cols()));
  return finish(form, w, 0, cfg_, rs);
}

SimplexOutcome SimplexSolver::resolve_with_objective(
    const SimplexOutcome& prev, const Vector& new_objective) const {
  if (prev.status != SolveStatus::Optimal || !prev.form)
    throw std::invalid_argument("resolve_with_objective needs an Optimal outcome");
  auto form = std::make_shared<StandardForm>(*prev.form);
  form->obj = form->expand_structural(new_objective);
  Worker w(form->m, form->rhs, form->obj, form->artificial, cfg_,
           prev.basis.basic);
  if (prev.basis_inverse) {
    w.binv = *prev.basis_inverse;
  } else if (!w.refresh_inverse()) {
    SimplexOutcome out;
    out.status = SolveStatus::IterLimit;
    return out;
  }
  const RunStatus rs = w.run(default_max_pivots(cfg_, form->rows(), form->cols()));
  return finish(*form, w, 0, cfg_, rs);
}

LambdaInterval SimplexSolver::reduced_cost_range(const SimplexOutcome& out,
                                                 const Vector& structural_drift,
                                                 double lambda1) const {
  if (out.status != SolveStatus::Optimal || !out.form || !out.basis_inverse)
    throw std::invalid_argument("reduced_cost_range needs an Optimal outcome");
  const StandardForm& f = *out.form;
  const Matrix& binv = *out.basis_inverse;
  const Vector drift = f.expand_structural(structural_drift);
  const int rows = f.rows();
  Vector drift_b(rows);
  for (int i = 0; i < rows; ++i) drift_b(i) = drift(out.basis.basic[i]);
  const Vector yd = binv.transpose() * drift_b;

  double dlo = -kInf, dhi = kInf;
  for (int j : out.basis.nonbasic) {
    if (f.artificial[j]) continue;
    const double v = drift(j) - yd.dot(f.m.col(j));
    const double r = std::max(out.reduced_costs(j), 0.0);
    if (v < -cfg_.opt_tol) {
      dhi = std::min(dhi, -r / v);
    } else if (v > cfg_.opt_tol) {
      dlo = std::max(dlo, -r / v);
    }
  }
  return {lambda1 + dlo, lambda1 + dhi};
}

}  // namespace parabound
