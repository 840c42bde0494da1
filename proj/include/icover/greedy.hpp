#pragma once

#include <cstdint>
#include <vector>

#include "icover/instance.hpp"
#include "icover/rational.hpp"

namespace icover {

// One full greedy ordering of the intervals: every step takes the interval
// covering the most still-uncovered points, ties to the smallest left
// endpoint. All m intervals appear, including late zero-gain picks, so any
// prefix is "greedy with budget k".
struct GreedyResult {
  std::vector<int> permutation;             // interval ids in pick order
  std::vector<std::int64_t> prefix_values;  // points covered by the first i+1 picks
  std::vector<std::int64_t> gains;          // newly covered points per step
};

GreedyResult greedy_permutation(const Instance& inst);

// Greedy prefix value vs. exact optimum for every budget 1..k_max.
// A budget whose optimum is zero counts as ratio 1.
struct RatioReport {
  std::vector<std::int64_t> greedy_values;
  std::vector<std::int64_t> opt_values;
  std::vector<Rational> per_k;
  Rational min_ratio{1, 1};
};

// Throws std::invalid_argument unless 1 <= k_max <= interval count.
RatioReport ratio_report(const Instance& inst, int k_max);

}  // namespace icover
