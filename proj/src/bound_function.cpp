#include "parabound/bound_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parabound {

const char* to_string(BoundSide s) {
  return s == BoundSide::Lower ? "lower" : "upper";
}

LambdaInterval BoundFunction::domain() const {
  if (segments.empty()) return {0.0, 0.0};
  return {segments.front().lo, segments.back().hi};
}

bool BoundFunction::fully_unavailable() const {
  return std::all_of(segments.begin(), segments.end(),
                     [](const BoundSegment& s) { return !s.available; });
}

bool BoundFunction::available_at(double lambda) const {
  auto v = evaluate(*this, lambda);
  return v.has_value();
}

BoundFunction BoundFunction::constant(BoundSide side, LambdaInterval iv,
                                      double value, std::string provenance) {
  BoundFunction bf;
  bf.side = side;
  bf.provenance = std::move(provenance);
  bf.segments.push_back({iv.lo, iv.hi, true, value, 0.0, 0.0});
  return bf;
}

BoundFunction BoundFunction::unavailable(BoundSide side, LambdaInterval iv,
                                         std::string provenance) {
  BoundFunction bf;
  bf.side = side;
  bf.provenance = std::move(provenance);
  bf.segments.push_back({iv.lo, iv.hi, false, 0.0, 0.0, 0.0});
  return bf;
}

BoundFunction BoundFunction::negated() const {
  BoundFunction out = *this;
  out.side = side == BoundSide::Upper ? BoundSide::Lower : BoundSide::Upper;
  for (auto& s : out.segments) {
    s.c0 = -s.c0;
    s.c1 = -s.c1;
    s.c2 = -s.c2;
  }
  return out;
}

namespace {

const BoundSegment* covering(const BoundFunction& bf, double lambda) {
  for (size_t i = 0; i < bf.segments.size(); ++i) {
    const BoundSegment& s = bf.segments[i];
    const bool last = i + 1 == bf.segments.size();
    if (s.lo == s.hi && lambda == s.lo) return &s;  // anchor-point segment
    if (lambda >= s.lo && (lambda < s.hi || (last && lambda <= s.hi)))
      return &s;
  }
  return nullptr;
}

}  // namespace

std::optional<double> evaluate(const BoundFunction& bf, double lambda) {
  const BoundSegment* s = covering(bf, lambda);
  if (!s) throw std::domain_error("lambda outside bound function domain");
  if (!s->available) return std::nullopt;
  return s->value(lambda);
}

BoundFunction merge(const std::vector<BoundFunction>& parts) {
  if (parts.empty()) throw std::invalid_argument("merge: no parts");
  BoundFunction out;
  out.side = parts.front().side;
  out.provenance = parts.front().provenance;
  for (const auto& p : parts) {
    if (p.side != out.side) throw std::invalid_argument("merge: mixed sides");
    for (const auto& s : p.segments) {
      if (!out.segments.empty()) {
        const double prev_hi = out.segments.back().hi;
        if (std::abs(s.lo - prev_hi) > 1e-9 * (1.0 + std::abs(prev_hi)))
          throw std::invalid_argument("merge: parts do not tile the interval");
      }
      out.segments.push_back(s);
      out.segments.back().lo =
          out.segments.size() == 1 ? s.lo : out.segments[out.segments.size() - 2].hi;
    }
  }
  return out;
}

GapPoint max_gap(const BoundFunction& ub, const BoundFunction& lb,
                 LambdaInterval interval) {
  std::vector<double> cuts{interval.lo, interval.hi};
  for (const auto* bf : {&ub, &lb})
    for (const auto& s : bf->segments) {
      if (s.lo > interval.lo && s.lo < interval.hi) cuts.push_back(s.lo);
      if (s.hi > interval.lo && s.hi < interval.hi) cuts.push_back(s.hi);
    }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  GapPoint best{interval.lo, -kInf};
  auto consider = [&](double lambda, double gap) {
    if (gap > best.gap) best = {lambda, gap};
  };
  for (size_t k = 0; k + 1 < cuts.size() || (k == 0 && cuts.size() == 1); ++k) {
    const double a = cuts[k];
    const double b = cuts.size() == 1 ? cuts[k] : cuts[k + 1];
    const double mid = 0.5 * (a + b);
    const BoundSegment* su = covering(ub, mid);
    const BoundSegment* sl = covering(lb, mid);
    if (!su || !sl) throw std::invalid_argument("max_gap: interval not covered");
    if (!su->available || !sl->available) {
      consider(a, kInf);
      continue;
    }
    const double d0 = su->c0 - sl->c0;
    const double d1 = su->c1 - sl->c1;
    const double d2 = su->c2 - sl->c2;
    auto gap_at = [&](double l) { return d0 + d1 * l + d2 * l * l; };
    consider(a, gap_at(a));
    if (std::abs(d2) > 0) {
      const double st = -d1 / (2.0 * d2);
      if (st > a && st < b) consider(st, gap_at(st));
    }
    consider(b, gap_at(b));
    if (cuts.size() == 1) break;
  }
  return best;
}

}  // namespace parabound
