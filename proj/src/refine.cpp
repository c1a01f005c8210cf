#include "parabound/refine.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

#include "parabound/simplex.hpp"

namespace parabound {

namespace {

struct Node {
  LambdaInterval iv;
  BoundFunction lb;
  BoundFunction ub;
  GapPoint gap;
};

// max-heap by gap; ties go to the leftmost interval
bool heap_less(const Node& a, const Node& b) {
  if (a.gap.gap != b.gap.gap) return a.gap.gap < b.gap.gap;
  return a.iv.lo > b.iv.lo;
}

}  // namespace

RefineResult refine(const ParametricLP& p, const RefineConfig& config) {
  if (!(config.epsilon_lambda > 0.0))
    throw std::invalid_argument("epsilon_lambda must be positive");
  if (!(config.time_limit > 0.0))
    throw std::invalid_argument("time_limit must be positive");
  if (!config.lower_method || !config.upper_method)
    throw std::invalid_argument("refine needs both bound methods");

  auto truth = config.truth;
  if (!truth) {
    truth = [&p](double lambda) {
      const SimplexOutcome out = SimplexSolver().solve(instantiate(p, lambda));
      if (out.status == SolveStatus::Infeasible) return kInf;
      if (out.status == SolveStatus::Unbounded) return -kInf;
      return out.objective;
    };
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&start]() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  };

  auto bound_pair = [&](LambdaInterval iv) {
    Node node;
    node.iv = iv;
    node.lb = config.lower_method(p, iv);
    node.ub = config.upper_method(p, iv);
    node.gap = max_gap(node.ub, node.lb, iv);
    return node;
  };

  RefineResult result;
  std::vector<Node> heap;
  std::vector<Node> leaves;

  heap.push_back(bound_pair(p.interval()));
  std::push_heap(heap.begin(), heap.end(), heap_less);

  while (!heap.empty()) {
    if (elapsed() >= config.time_limit) {
      result.hit_time_limit = true;
      break;
    }
    std::pop_heap(heap.begin(), heap.end(), heap_less);
    Node node = std::move(heap.back());
    heap.pop_back();

    RefineTraceEntry entry;
    entry.interval = node.iv;
    entry.priority = node.gap.gap;
    if (node.iv.width() > config.epsilon_lambda) {
      entry.split = true;
      const double mid = node.iv.mid();
      heap.push_back(bound_pair({node.iv.lo, mid}));
      std::push_heap(heap.begin(), heap.end(), heap_less);
      heap.push_back(bound_pair({mid, node.iv.hi}));
      std::push_heap(heap.begin(), heap.end(), heap_less);
    } else {
      entry.split = false;
      const double mid = node.iv.mid();
      result.points.emplace_back(mid, truth(mid));
      leaves.push_back(std::move(node));
    }
    result.trace.push_back(entry);
  }

  // remaining queue entries are still-valid leaves (anytime property)
  for (Node& node : heap) leaves.push_back(std::move(node));
  std::sort(leaves.begin(), leaves.end(),
            [](const Node& a, const Node& b) { return a.iv.lo < b.iv.lo; });
  for (Node& node : leaves) {
    result.lower.push_back(std::move(node.lb));
    result.upper.push_back(std::move(node.ub));
  }
  return result;
}

}  // namespace parabound
