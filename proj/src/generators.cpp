#include "icover/generators.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace icover {

Instance gen_tight(std::int64_t s) {
  if (s < 2 || s % 2 != 0)
    throw std::invalid_argument("gen_tight: s must be even and at least 2");
  std::vector<std::int64_t> points(static_cast<std::size_t>(2 * s));
  for (std::int64_t i = 0; i < 2 * s; ++i) points[i] = i + 1;
  std::vector<Interval> intervals = {
      {0, 1, s},
      {1, s + 1, 2 * s},
      {2, s / 2 + 1, 3 * s / 2 + 1},
  };
  return Instance::normalize(std::move(points), std::move(intervals));
}

Instance gen_random(int n_points, int m_intervals, std::int64_t range,
                    std::uint64_t seed, std::int64_t offset,
                    std::int64_t max_len) {
  if (n_points < 0) throw std::invalid_argument("gen_random: negative point count");
  if (m_intervals < 1) throw std::invalid_argument("gen_random: need at least one interval");
  if (range < 1) throw std::invalid_argument("gen_random: empty coordinate range");
  if (max_len <= 0) max_len = std::max<std::int64_t>(range / 8, 1);
  std::mt19937_64 rng(seed);
  // Modulo draws rather than uniform_int_distribution: the distribution's
  // stream is not pinned down by the standard, and identical seeds must give
  // identical instances everywhere.
  const auto draw = [&rng](std::int64_t bound) {
    return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(bound));
  };
  std::vector<std::int64_t> points;
  points.reserve(n_points);
  for (int i = 0; i < n_points; ++i) points.push_back(offset + draw(range));
  std::vector<std::pair<std::int64_t, std::int64_t>> bounds;
  bounds.reserve(m_intervals);
  for (int i = 0; i < m_intervals; ++i) {
    const std::int64_t lo = offset + draw(range);
    const std::int64_t hi =
        std::min(lo + draw(max_len + 1), offset + range - 1);
    bounds.emplace_back(lo, hi);
  }
  return Instance::normalize(std::move(points), bounds).renumbered();
}

Instance disjoint_union(const Instance& left, const Instance& right) {
  const auto max_coord = [](const Instance& inst) {
    std::int64_t mx = std::numeric_limits<std::int64_t>::min();
    if (!inst.points().empty()) mx = std::max(mx, inst.points().back());
    if (!inst.intervals().empty()) mx = std::max(mx, inst.intervals().back().hi);
    return mx;
  };
  const auto min_coord = [](const Instance& inst) {
    std::int64_t mn = std::numeric_limits<std::int64_t>::max();
    if (!inst.points().empty()) mn = std::min(mn, inst.points().front());
    if (!inst.intervals().empty()) mn = std::min(mn, inst.intervals().front().lo);
    return mn;
  };
  if (max_coord(left) >= min_coord(right))
    throw std::invalid_argument(
        "disjoint_union: left coordinates must end before right begins");
  std::vector<std::int64_t> points(left.points());
  points.insert(points.end(), right.points().begin(), right.points().end());
  std::vector<std::pair<std::int64_t, std::int64_t>> bounds;
  bounds.reserve(left.interval_count() + right.interval_count());
  for (const Interval& iv : left.intervals()) bounds.emplace_back(iv.lo, iv.hi);
  for (const Interval& iv : right.intervals()) bounds.emplace_back(iv.lo, iv.hi);
  return Instance::normalize(std::move(points), bounds);
}

}  // namespace icover
