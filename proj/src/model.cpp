#include "parabound/model.hpp"

#include <sstream>

namespace parabound {

std::vector<Violation> validate(const ParametricLP& p) {
  std::vector<Violation> out;
  const int n = p.n();
  auto bad_cols = [&](const Matrix& m, const char* name) {
    if (m.cols() != n && !(m.rows() == 0 && m.cols() == 0)) {
      std::ostringstream os;
      os << name << " has " << m.cols() << " columns, expected " << n;
      out.push_back({os.str(), -1, static_cast<int>(m.cols())});
    }
  };
  bad_cols(p.a1, "a1");
  bad_cols(p.a2, "a2");
  bad_cols(p.d, "d");
  if (p.a1.rows() != p.b1.size())
    out.push_back({"a1 row count does not match |b1|",
                   static_cast<int>(p.a1.rows()), -1});
  if (p.a2.rows() != p.b2.size())
    out.push_back({"a2 row count does not match |b2|",
                   static_cast<int>(p.a2.rows()), -1});
  if (p.d.rows() != p.a2.rows())
    out.push_back({"d row count does not match a2",
                   static_cast<int>(p.d.rows()), -1});
  if (!p.lambda_free && p.d.size() > 0 && p.d.cwiseAbs().maxCoeff() == 0.0)
    out.push_back({"d is all zero but problem is not declared lambda-free", -1, -1});
  if (p.lambda_lo > p.lambda_hi)
    out.push_back({"lambda_lo exceeds lambda_hi", -1, -1});
  return out;
}

DenseLP instantiate(const ParametricLP& p, double lambda) {
  DenseLP lp;
  const int m = p.m1() + p.m2();
  lp.a.resize(m, p.n());
  lp.b.resize(m);
  if (p.m1() > 0) {
    lp.a.topRows(p.m1()) = p.a1;
    lp.b.head(p.m1()) = p.b1;
  }
  if (p.m2() > 0) {
    lp.a.bottomRows(p.m2()) = p.a2 + lambda * p.d;
    lp.b.tail(p.m2()) = p.b2;
  }
  lp.c = p.c;
  lp.nonneg = p.nonneg;
  return lp;
}

ParametricLP dualize(const ParametricLP& p) {
  if (!p.nonneg)
    throw std::invalid_argument(
        "dualize requires x >= 0; split free variables first");
  // Primal: min c'x, A x <= b, x >= 0 with A = [A1; A2 + lambda D].
  // Dual multipliers mu >= 0: max -b'mu s.t. -A'mu <= c. In min form:
  //   min b'mu s.t. -A'mu <= c, mu >= 0, with optimum -f(lambda).
  const int n = p.n();
  const int m1 = p.m1();
  const int m2 = p.m2();
  ParametricLP q;
  q.c.resize(m1 + m2);
  if (m1 > 0) q.c.head(m1) = p.b1;
  if (m2 > 0) q.c.tail(m2) = p.b2;
  q.a1.resize(0, m1 + m2);
  q.b1.resize(0);
  q.a2.resize(n, m1 + m2);
  if (m1 > 0) q.a2.leftCols(m1) = -p.a1.transpose();
  if (m2 > 0) q.a2.rightCols(m2) = -p.a2.transpose();
  q.b2 = p.c;
  q.d = Matrix::Zero(n, m1 + m2);
  if (m2 > 0) q.d.rightCols(m2) = -p.d.transpose();
  q.lambda_lo = p.lambda_lo;
  q.lambda_hi = p.lambda_hi;
  q.nonneg = true;
  q.lambda_free = p.lambda_free || p.d.size() == 0;
  return q;
}

}  // namespace parabound
