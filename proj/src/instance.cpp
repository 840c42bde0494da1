#include "icover/instance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace icover {

Instance Instance::normalize(std::vector<std::int64_t> points,
                             std::vector<Interval> intervals) {
  for (const Interval& iv : intervals) {
    if (iv.lo > iv.hi)
      throw std::invalid_argument("interval id " + std::to_string(iv.id) +
                                  ": lo > hi");
  }
  std::sort(points.begin(), points.end());
  // lo ascending, hi descending, id ascending: any contained interval then
  // follows some interval whose range covers it, and of two identical ranges
  // the smaller id comes first.
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) {
              if (a.lo != b.lo) return a.lo < b.lo;
              if (a.hi != b.hi) return a.hi > b.hi;
              return a.id < b.id;
            });
  std::vector<Interval> kept;
  kept.reserve(intervals.size());
  std::int64_t max_hi = 0;
  for (const Interval& iv : intervals) {
    if (!kept.empty() && iv.hi <= max_hi) continue;  // contained in an earlier one
    kept.push_back(iv);
    max_hi = iv.hi;
  }
  // Survivors are strictly increasing in lo and in hi.
  Instance inst;
  inst.points_ = std::move(points);
  inst.intervals_ = std::move(kept);
  inst.normalized_ = true;
  inst.index_ids();
  return inst;
}

Instance Instance::normalize(
    std::vector<std::int64_t> points,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& bounds) {
  std::vector<Interval> intervals;
  intervals.reserve(bounds.size());
  for (std::size_t i = 0; i < bounds.size(); ++i)
    intervals.push_back(
        {static_cast<int>(i), bounds[i].first, bounds[i].second});
  return normalize(std::move(points), std::move(intervals));
}

void Instance::index_ids() {
  pos_by_id_.clear();
  pos_by_id_.reserve(intervals_.size());
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (!pos_by_id_.emplace(intervals_[i].id, static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate interval id " +
                                  std::to_string(intervals_[i].id));
  }
}

int Instance::position_of(int id) const {
  auto it = pos_by_id_.find(id);
  if (it == pos_by_id_.end())
    throw std::invalid_argument("unknown interval id " + std::to_string(id));
  return it->second;
}

std::int64_t Instance::count_at_most(std::int64_t x) const {
  return std::upper_bound(points_.begin(), points_.end(), x) - points_.begin();
}

std::int64_t Instance::count_in(std::int64_t lo, std::int64_t hi) const {
  if (hi < lo) return 0;
  return count_at_most(hi) -
         (std::lower_bound(points_.begin(), points_.end(), lo) - points_.begin());
}

std::pair<std::size_t, std::size_t> Instance::point_range(std::int64_t lo,
                                                          std::int64_t hi) const {
  auto first = std::lower_bound(points_.begin(), points_.end(), lo);
  auto last = std::upper_bound(first, points_.end(), hi);
  return {static_cast<std::size_t>(first - points_.begin()),
          static_cast<std::size_t>(last - points_.begin())};
}

std::int64_t Instance::measure(const std::vector<int>& ids) const {
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
  ranges.reserve(ids.size());
  for (int id : ids) {
    const Interval& iv = intervals_[position_of(id)];
    ranges.emplace_back(iv.lo, iv.hi);
  }
  std::sort(ranges.begin(), ranges.end());
  std::int64_t total = 0;
  std::size_t i = 0;
  while (i < ranges.size()) {
    std::int64_t lo = ranges[i].first, hi = ranges[i].second;
    while (++i < ranges.size() && ranges[i].first <= hi)
      hi = std::max(hi, ranges[i].second);
    total += count_in(lo, hi);
  }
  return total;
}

std::int64_t Instance::measure_all() const {
  std::vector<int> ids;
  ids.reserve(intervals_.size());
  for (const Interval& iv : intervals_) ids.push_back(iv.id);
  return measure(ids);
}

Instance Instance::renumbered() const {
  Instance inst;
  inst.points_ = points_;
  inst.intervals_ = intervals_;
  for (std::size_t i = 0; i < inst.intervals_.size(); ++i)
    inst.intervals_[i].id = static_cast<int>(i);
  inst.normalized_ = normalized_;
  inst.index_ids();
  return inst;
}

}  // namespace icover
