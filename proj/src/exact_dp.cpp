#include "icover/exact_dp.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "icover/errors.hpp"

namespace icover {

DpPrecompute precompute(const Instance& inst) {
  assert(inst.normalized());
  const auto& ivs = inst.intervals();
  const int m = inst.interval_count();
  DpPrecompute pre;
  pre.count.resize(m);
  pre.left_overlap.assign(m, -1);
  pre.residual.resize(m);
  int lo_ptr = 0;  // leftmost candidate still overlapping the sweep
  for (int i = 0; i < m; ++i) {
    pre.count[i] = inst.count_in(ivs[i].lo, ivs[i].hi);
    while (lo_ptr < i && ivs[lo_ptr].hi < ivs[i].lo) ++lo_ptr;
    if (lo_ptr < i) {
      // ivs[lo_ptr].hi >= ivs[i].lo, and right endpoints increase, so this is
      // the leftmost overlapping predecessor.
      pre.left_overlap[i] = lo_ptr;
      pre.residual[i] =
          inst.count_at_most(ivs[i].hi) - inst.count_at_most(ivs[lo_ptr].hi);
    } else {
      pre.residual[i] = pre.count[i];
    }
  }
  return pre;
}

DpSolver::DpSolver(const Instance& inst)
    : inst_(&inst), pre_(precompute(inst)) {
  const int m = inst.interval_count();
  in_prev_.assign(m, 0);
  dp_prev_.assign(m, 0);
}

std::int64_t DpSolver::value_at(int k) const {
  assert(k >= 0 && k <= budget_);
  return history_[static_cast<std::size_t>(k)];
}

std::int64_t DpSolver::resume() {
  const int m = inst_->interval_count();
  const int t = budget_ + 1;
  std::vector<std::int64_t> in_cur(m), dp_cur(m);
  std::vector<std::uint8_t> branch(m), take(m);
  for (int i = 0; i < m; ++i) {
    const int L = pre_.left_overlap[i];
    const int D = pre_.disjoint_pred(i);
    std::int64_t best = pre_.count[i] + (D >= 0 ? dp_prev_[D] : 0);
    std::uint8_t br = 2;
    if (t >= 2 && L >= 0) {
      // Tie goes to the left_overlap route, listed first above.
      const std::int64_t via_overlap = in_prev_[L] + pre_.residual[i];
      if (via_overlap >= best) {
        best = via_overlap;
        br = 1;
      }
    }
    in_cur[i] = best;
    branch[i] = br;
    if (i > 0 && dp_cur[i - 1] > best) {
      dp_cur[i] = dp_cur[i - 1];
      take[i] = 0;
    } else {
      dp_cur[i] = best;
      take[i] = 1;
    }
  }
  in_prev_ = std::move(in_cur);
  dp_prev_ = std::move(dp_cur);
  in_branch_.push_back(std::move(branch));
  dp_take_.push_back(std::move(take));
  budget_ = t;
  history_.push_back(m > 0 ? dp_prev_[m - 1] : 0);
  return history_.back();
}

Cover DpSolver::reconstruct(int k) const {
  assert(k >= 0 && k <= budget_);
  Cover cover;
  const int m = inst_->interval_count();
  if (m == 0 || k == 0) return cover;
  int i = m - 1;
  int t = k;
  bool scanning = true;  // true: find the position dp takes; false: unwind in[]
  while (true) {
    if (scanning) {
      while (i >= 0 && !dp_take_[t - 1][i]) --i;
      if (i < 0) break;
      scanning = false;
    } else {
      cover.ids.push_back(inst_->intervals()[i].id);
      if (in_branch_[t - 1][i] == 1) {
        i = pre_.left_overlap[i];
        --t;  // branch 1 only appears for t >= 2, so t stays >= 1
      } else {
        const int d = pre_.disjoint_pred(i);
        --t;
        if (d < 0 || t == 0) break;
        i = d;
        scanning = true;
      }
    }
  }
  std::sort(cover.ids.begin(), cover.ids.end());
  cover.value = value_at(k);
  if (inst_->measure(cover.ids) != cover.value)
    throw internal_error("reconstructed cover (" +
                         std::to_string(cover.ids.size()) +
                         " intervals) does not reach the table value " +
                         std::to_string(cover.value));
  return cover;
}

Cover solve_exact(const Instance& inst, int k) {
  assert(k >= 0);
  DpSolver solver(inst);
  const int reach = std::min(k, inst.interval_count());
  for (int t = 0; t < reach; ++t) solver.resume();
  return solver.reconstruct(reach);
}

std::vector<std::int64_t> profit_sequence(const Instance& inst, int k_max) {
  assert(k_max >= 1);
  DpSolver solver(inst);
  const int reach = std::min(k_max, inst.interval_count());
  std::vector<std::int64_t> profits;
  profits.reserve(reach);
  for (int t = 1; t <= reach; ++t) {
    const std::int64_t prev = solver.value();
    profits.push_back(solver.resume() - prev);
    if (t >= 2 && profits[t - 1] > profits[t - 2])
      throw internal_error("optimal profits increased at budget " +
                           std::to_string(t) + ": " +
                           std::to_string(profits[t - 2]) + " then " +
                           std::to_string(profits[t - 1]));
  }
  return profits;
}

}  // namespace icover
