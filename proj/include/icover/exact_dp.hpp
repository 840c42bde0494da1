#pragma once

#include <cstdint>
#include <vector>

#include "icover/instance.hpp"

namespace icover {

// Sweep data for the optimal-coverage dynamic program, all indexed by
// interval position in left-endpoint order.
struct DpPrecompute {
  std::vector<std::int64_t> count;     // points inside interval i
  std::vector<int> left_overlap;       // leftmost earlier interval overlapping i, -1 if none
  std::vector<std::int64_t> residual;  // points of i right of left_overlap[i] (count[i] if none)

  // Nearest earlier interval disjoint from i, -1 if none. In a normalized
  // instance that is simply the interval before left_overlap[i].
  int disjoint_pred(int i) const {
    return left_overlap[i] >= 0 ? left_overlap[i] - 1 : i - 1;
  }
};

DpPrecompute precompute(const Instance& inst);

// Optimal coverage by at most k intervals, solved one budget unit at a time.
//
// Let in[i][t] be the best value of a selection of at most t intervals from
// the first i+1 positions that includes interval i, and dp[i][t] the best
// over all such selections. With L = left_overlap[i] and D = disjoint_pred(i):
//
//     in[i][t] = max( in[L][t-1] + residual[i],        if L exists, t >= 2
//                     count[i] + dp[D][t-1] )          dp[none][.] = 0
//     dp[i][t] = max( in[i][t], dp[i-1][t] )
//
// The first line never double-counts: everything at or before L ends at or
// below L's right endpoint, and residual[i] counts only points beyond it.
// Each resume() call fills one more t-row in O(m), so budgets can grow
// incrementally; per-row choice logs allow cover reconstruction for any
// budget reached so far. Ties prefer the in-branch and, inside it, the
// left_overlap route, making results deterministic.
class DpSolver {
 public:
  explicit DpSolver(const Instance& inst);  // budget starts at 0
  explicit DpSolver(Instance&&) = delete;   // the instance must outlive the solver

  int budget() const { return budget_; }
  std::int64_t value() const { return history_.back(); }
  std::int64_t value_at(int k) const;  // requires 0 <= k <= budget()
  const Instance& instance() const { return *inst_; }
  const DpPrecompute& tables() const { return pre_; }

  // Extends the budget by one row and returns the new optimal value.
  // Values stop growing once every interval can be taken, but calling past
  // that point stays valid.
  std::int64_t resume();

  // A cover achieving value_at(k); requires k <= budget(). Verifies the
  // rebuilt cover against the table value and throws internal_error on
  // mismatch.
  Cover reconstruct(int k) const;

 private:
  const Instance* inst_;  // non-owning; keep the instance alive
  DpPrecompute pre_;
  int budget_ = 0;
  std::vector<std::int64_t> in_prev_, dp_prev_;
  std::vector<std::int64_t> history_{0};
  // Per budget row: which in-branch won (1 = via left_overlap, 2 = via
  // disjoint_pred) and whether dp takes interval i or skips to i-1.
  std::vector<std::vector<std::uint8_t>> in_branch_;
  std::vector<std::vector<std::uint8_t>> dp_take_;
};

// Optimal value and cover for a budget of at most k intervals.
Cover solve_exact(const Instance& inst, int k);

// Marginal profits opt_t - opt_{t-1} for t = 1..min(k_max, m). Throws
// internal_error if the sequence ever increases — for interval instances it
// never may.
std::vector<std::int64_t> profit_sequence(const Instance& inst, int k_max);

}  // namespace icover
