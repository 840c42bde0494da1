#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icover/instance.hpp"
#include "icover/rational.hpp"

namespace icover {

// A finite set system: named subsets of the ground set {0, ..., ground_size-1}.
// Set order is significant — the greedy tie rule prefers the earlier set.
struct SetSystem {
  std::int64_t ground_size = 0;
  std::vector<std::pair<std::string, std::vector<int>>> sets;
};

// Parameters of the three-family system (u B-sets of mass alpha, u+1 C-sets
// of mass beta, u+2 D-sets of mass gamma) on which greedy's best-k profits
// fail to be non-increasing.
struct CounterexampleSpec {
  int u = 2;
  Rational alpha, beta, gamma;
};

// The stock instance: u=2, alpha=3/5, beta=3/4, gamma=19/20 (ground size 80).
CounterexampleSpec counterexample_preset_u2();

// Checks 2 <= u, 0 < alpha < beta < gamma < 1, beta - alpha < gamma - beta,
// and gamma/(u+2) < beta/(u+1) < alpha/u. Throws std::invalid_argument naming
// the violated inequality.
void validate_counterexample_spec(const CounterexampleSpec& spec);

// Builds the system deterministically over the smallest ground size that
// makes every family and every pairwise intersection exactly even-sized:
// B-sets are consecutive blocks; C and D membership is assigned round-robin
// inside each block, so all B∩C, B∩D, C∩D cells hit their exact target
// cardinality. Sets are listed B1..Bu, C1..C(u+1), D1..D(u+2).
SetSystem build_counterexample(const CounterexampleSpec& spec);

struct BruteResult {
  std::int64_t value = 0;
  std::vector<std::string> witness;  // lexicographically-first maximizer, in list order
};

// Exhaustive best union over exactly min(k, #sets) sets.
// Throws std::invalid_argument when the system has more than 20 sets.
BruteResult brute_opt(const SetSystem& sys, int k);

struct GreedyPick {
  std::vector<std::string> chosen;  // pick order
  std::int64_t value = 0;
};

// Standard greedy: min(k, #sets) rounds, each taking the set covering the
// most new elements, ties to the earliest set in list order.
GreedyPick generic_greedy(const SetSystem& sys, int k);

// First index i (0-based) with profits[i] < profits[i+1], if any.
std::optional<std::size_t> check_diminishing_returns(
    const std::vector<std::int64_t>& profits);

// Views an interval instance as a set system: one set per interval, named
// "I<id>", containing the indices of the points the interval covers.
SetSystem set_system_from_instance(const Instance& inst);

}  // namespace icover
