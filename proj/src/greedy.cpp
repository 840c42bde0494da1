#include "icover/greedy.hpp"

#include <cassert>
#include <stdexcept>

#include "icover/exact_dp.hpp"

namespace icover {

GreedyResult greedy_permutation(const Instance& inst) {
  assert(inst.normalized());
  const auto& ivs = inst.intervals();
  const int m = inst.interval_count();
  GreedyResult result;
  std::vector<char> covered(inst.points().size(), 0);
  std::vector<char> chosen(m, 0);
  std::int64_t total = 0;
  for (int step = 0; step < m; ++step) {
    int best_pos = -1;
    std::int64_t best_gain = -1;
    // Positions run left to right, so the first maximum is the smallest-lo
    // tie-break. (After normalization left endpoints are distinct.)
    for (int pos = 0; pos < m; ++pos) {
      if (chosen[pos]) continue;
      auto [first, last] = inst.point_range(ivs[pos].lo, ivs[pos].hi);
      std::int64_t gain = 0;
      for (std::size_t p = first; p < last; ++p)
        if (!covered[p]) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best_pos = pos;
      }
    }
    chosen[best_pos] = 1;
    auto [first, last] = inst.point_range(ivs[best_pos].lo, ivs[best_pos].hi);
    for (std::size_t p = first; p < last; ++p) covered[p] = 1;
    total += best_gain;
    result.permutation.push_back(ivs[best_pos].id);
    result.gains.push_back(best_gain);
    result.prefix_values.push_back(total);
  }
  return result;
}

RatioReport ratio_report(const Instance& inst, int k_max) {
  const int m = inst.interval_count();
  if (k_max < 1 || k_max > m)
    throw std::invalid_argument("k_max out of range [1, " + std::to_string(m) + "]");
  const GreedyResult greedy = greedy_permutation(inst);
  DpSolver solver(inst);
  RatioReport report;
  for (int k = 1; k <= k_max; ++k) {
    const std::int64_t g = greedy.prefix_values[k - 1];
    const std::int64_t o = solver.resume();
    report.greedy_values.push_back(g);
    report.opt_values.push_back(o);
    const Rational ratio = o > 0 ? Rational(g, o) : Rational(1, 1);
    report.per_k.push_back(ratio);
    if (o > 0 && ratio < report.min_ratio) report.min_ratio = ratio;
  }
  return report;
}

}  // namespace icover
