#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "icover/generators.hpp"

using icover::Instance;
using icover::Interval;

namespace {

Instance mk(std::vector<std::int64_t> pts,
            std::vector<std::pair<std::int64_t, std::int64_t>> bounds) {
  return Instance::normalize(std::move(pts), bounds);
}

}  // namespace

TEST_CASE("the three-interval family") {
  const Instance inst = icover::gen_tight(10);
  REQUIRE(inst.point_count() == 20);
  CHECK(inst.points().front() == 1);
  CHECK(inst.points().back() == 20);
  REQUIRE(inst.interval_count() == 3);
  CHECK(inst.intervals()[0] == Interval{0, 1, 10});
  CHECK(inst.intervals()[1] == Interval{2, 6, 16});
  CHECK(inst.intervals()[2] == Interval{1, 11, 20});
  const Instance big = icover::gen_tight(1000);
  CHECK(big.point_count() == 2000);
  CHECK(big.intervals()[1] == Interval{2, 501, 1501});
}

TEST_CASE("gen_tight rejects odd or tiny s") {
  CHECK_THROWS_AS(icover::gen_tight(7), std::invalid_argument);
  CHECK_THROWS_AS(icover::gen_tight(0), std::invalid_argument);
  CHECK_THROWS_AS(icover::gen_tight(-4), std::invalid_argument);
  CHECK_NOTHROW(icover::gen_tight(2));
}

TEST_CASE("gen_random is deterministic per seed") {
  const Instance a = icover::gen_random(12, 8, 40, 42);
  const Instance b = icover::gen_random(12, 8, 40, 42);
  CHECK(a == b);
  const Instance c = icover::gen_random(12, 8, 40, 43);
  bool differs = a.points() != c.points() || a.interval_count() != c.interval_count();
  for (int i = 0; !differs && i < a.interval_count(); ++i)
    differs = !(a.intervals()[i] == c.intervals()[i]);
  CHECK(differs);
}

TEST_CASE("gen_random output is normalized with dense ids") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = icover::gen_random(10, 9, 25, seed);
    CHECK(inst.normalized());
    CHECK(inst.interval_count() <= 9);
    CHECK(inst.interval_count() >= 1);
    for (int i = 0; i < inst.interval_count(); ++i)
      CHECK(inst.intervals()[i].id == i);
    for (std::int64_t p : inst.points()) {
      CHECK(p >= 0);
      CHECK(p < 25);
    }
    for (const Interval& iv : inst.intervals()) {
      CHECK(iv.lo >= 0);
      CHECK(iv.hi < 25);
    }
  }
}

TEST_CASE("gen_random respects the offset") {
  const Instance inst = icover::gen_random(6, 4, 10, 3, 1000);
  for (std::int64_t p : inst.points()) {
    CHECK(p >= 1000);
    CHECK(p < 1010);
  }
  CHECK(inst.intervals().front().lo >= 1000);
}

TEST_CASE("gen_random validates its arguments") {
  CHECK_THROWS_AS(icover::gen_random(-1, 3, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(icover::gen_random(3, 0, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(icover::gen_random(3, 3, 0, 0), std::invalid_argument);
  CHECK_NOTHROW(icover::gen_random(0, 1, 1, 0));
}

TEST_CASE("disjoint_union concatenates and renumbers") {
  const Instance left = icover::gen_random(8, 5, 40, 1, 0);
  const Instance right = icover::gen_random(8, 5, 40, 2, 100);
  const Instance u = icover::disjoint_union(left, right);
  CHECK(u.interval_count() == left.interval_count() + right.interval_count());
  CHECK(u.point_count() == left.point_count() + right.point_count());
  for (int i = 0; i < u.interval_count(); ++i) CHECK(u.intervals()[i].id == i);
  CHECK(u.measure_all() == left.measure_all() + right.measure_all());
}

TEST_CASE("disjoint_union rejects interleaving coordinates") {
  const Instance a = mk({1, 2}, {{1, 5}});
  const Instance b = mk({3, 9}, {{3, 9}});
  CHECK_THROWS_AS(icover::disjoint_union(a, b), std::invalid_argument);
  CHECK_NOTHROW(icover::disjoint_union(mk({1}, {{1, 2}}), mk({3}, {{3, 4}})));
}
