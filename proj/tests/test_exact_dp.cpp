#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "icover/exact_dp.hpp"
#include "icover/generators.hpp"
#include "oracle.hpp"

using icover::Cover;
using icover::DpSolver;
using icover::Instance;

namespace {

Instance mk(std::vector<std::int64_t> pts,
            std::vector<std::pair<std::int64_t, std::int64_t>> bounds) {
  return Instance::normalize(std::move(pts), bounds);
}

// Points 1..10, 21..24, 31..32 under three disjoint intervals.
Instance disjoint_triple() {
  std::vector<std::int64_t> pts;
  for (int p = 1; p <= 10; ++p) pts.push_back(p);
  for (int p = 21; p <= 24; ++p) pts.push_back(p);
  for (int p = 31; p <= 32; ++p) pts.push_back(p);
  return mk(std::move(pts), {{1, 10}, {21, 24}, {31, 32}});
}

}  // namespace

TEST_CASE("sweep tables on the three-interval family") {
  const Instance inst = icover::gen_tight(10);
  const icover::DpPrecompute pre = icover::precompute(inst);
  CHECK(pre.count == std::vector<std::int64_t>{10, 11, 10});
  CHECK(pre.left_overlap == std::vector<int>{-1, 0, 1});
  CHECK(pre.residual == std::vector<std::int64_t>{10, 6, 4});
  CHECK(pre.disjoint_pred(0) == -1);
  CHECK(pre.disjoint_pred(1) == -1);
  CHECK(pre.disjoint_pred(2) == 0);
}

TEST_CASE("optimal values and covers on the three-interval family") {
  const Instance inst = icover::gen_tight(10);
  const Cover c1 = icover::solve_exact(inst, 1);
  CHECK(c1.value == 11);
  CHECK(c1.ids == std::vector<int>{2});
  const Cover c2 = icover::solve_exact(inst, 2);
  CHECK(c2.value == 20);
  CHECK(c2.ids == std::vector<int>{0, 1});
  const Cover c3 = icover::solve_exact(inst, 3);
  CHECK(c3.value == 20);
  const Cover c0 = icover::solve_exact(inst, 0);
  CHECK(c0.value == 0);
  CHECK(c0.ids.empty());
}

TEST_CASE("budgets beyond the interval count saturate") {
  const Instance inst = icover::gen_tight(10);
  DpSolver solver(inst);
  for (int t = 0; t < 6; ++t) solver.resume();
  CHECK(solver.value_at(3) == 20);
  CHECK(solver.value_at(6) == 20);
  CHECK(icover::solve_exact(inst, 50).value == 20);
}

TEST_CASE("resumable chain on disjoint intervals") {
  const Instance inst = disjoint_triple();
  DpSolver solver(inst);
  CHECK(solver.budget() == 0);
  CHECK(solver.value() == 0);
  CHECK(solver.resume() == 10);
  CHECK(solver.resume() == 14);
  CHECK(solver.resume() == 16);
  CHECK(solver.budget() == 3);
  CHECK(solver.value_at(1) == 10);
  CHECK(solver.value_at(2) == 14);
  CHECK(solver.reconstruct(2).ids == std::vector<int>{0, 1});
  CHECK(solver.reconstruct(3).ids == std::vector<int>{0, 1, 2});
}

TEST_CASE("profit sequences") {
  CHECK(icover::profit_sequence(icover::gen_tight(10), 3) ==
        std::vector<std::int64_t>{11, 9, 0});
  CHECK(icover::profit_sequence(disjoint_triple(), 5) ==
        std::vector<std::int64_t>{10, 4, 2});  // capped at the interval count
  CHECK(icover::profit_sequence(disjoint_triple(), 2) ==
        std::vector<std::int64_t>{10, 4});
  const Instance empty = Instance::normalize({}, std::vector<icover::Interval>{});
  CHECK(icover::profit_sequence(empty, 4).empty());
}

TEST_CASE("profits never increase on random instances") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = icover::gen_random(14, 9, 36, seed);
    const auto profits = icover::profit_sequence(inst, inst.interval_count());
    for (std::size_t i = 1; i < profits.size(); ++i)
      CHECK(profits[i] <= profits[i - 1]);
  }
}

TEST_CASE("values match exhaustive search on small instances") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = icover::gen_random(12, 8, 24, seed);
    for (int k = 0; k <= inst.interval_count(); ++k) {
      const Cover cover = icover::solve_exact(inst, k);
      CHECK(cover.value == oracle::best_value(inst, k));
      CHECK(static_cast<int>(cover.ids.size()) <= k);
      CHECK(inst.measure(cover.ids) == cover.value);
    }
  }
}

TEST_CASE("a resumed solver equals fresh solves at every budget") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = icover::gen_random(10, 7, 30, seed);
    DpSolver solver(inst);
    for (int k = 1; k <= inst.interval_count(); ++k) {
      const std::int64_t resumed = solver.resume();
      CHECK(resumed == icover::solve_exact(inst, k).value);
      CHECK(solver.reconstruct(k).value == resumed);
    }
  }
}

TEST_CASE("values are monotone in the budget") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = icover::gen_random(12, 8, 30, seed);
    DpSolver solver(inst);
    std::int64_t prev = 0;
    for (int k = 1; k <= 8; ++k) {
      const std::int64_t v = solver.resume();
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("degenerate instances") {
  const Instance no_intervals = Instance::normalize({1, 2}, std::vector<icover::Interval>{});
  DpSolver solver(no_intervals);
  CHECK(solver.resume() == 0);
  CHECK(icover::solve_exact(no_intervals, 3).ids.empty());

  const Instance no_points = mk({}, {{1, 4}, {6, 9}});
  CHECK(icover::solve_exact(no_points, 2).value == 0);

  const Instance one = mk({5, 5}, {{4, 6}});
  CHECK(icover::solve_exact(one, 1).value == 2);
  CHECK(icover::solve_exact(one, 1).ids == std::vector<int>{0});
}

TEST_CASE("nested-overlap chain exercises both branches") {
  // Staircase where the best pair skips the middle interval.
  const Instance inst = mk({1, 2, 3, 4, 5, 6, 7, 8},
                           {{1, 4}, {3, 6}, {5, 8}});
  CHECK(icover::solve_exact(inst, 1).value == 4);
  const Cover c2 = icover::solve_exact(inst, 2);
  CHECK(c2.value == 8);
  CHECK(c2.ids == std::vector<int>{0, 2});
  CHECK(icover::profit_sequence(inst, 3) == std::vector<std::int64_t>{4, 4, 0});
}
