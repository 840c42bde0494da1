#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace icover {

// Closed interval [lo, hi] on the integer line. `id` is the index the
// interval had in the original input (file line order for loaded instances);
// it survives normalization unchanged.
struct Interval {
  int id = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// A chosen set of intervals plus the number of points its union covers.
struct Cover {
  std::vector<int> ids;    // ascending, distinct
  std::int64_t value = 0;  // == measure(ids) on the owning instance
};

// A multiset of points plus a family of intervals, kept in normalized form:
// points sorted ascending, intervals sorted by left endpoint, and no interval
// contained in another. Containment-freeness makes both endpoint orders
// coincide and makes left endpoints pairwise distinct — the solvers lean on
// that, so it is the only form this class can represent.
class Instance {
 public:
  // An empty instance; not marked normalized until built by a factory.
  Instance() = default;

  // Sorts everything and drops every interval whose range lies inside another
  // interval's range; of two intervals with the identical range the smaller
  // id survives. Dropping such intervals never changes any cover value.
  // Throws std::invalid_argument for an interval with lo > hi or a duplicate id.
  static Instance normalize(std::vector<std::int64_t> points,
                            std::vector<Interval> intervals);

  // Same, with ids assigned 0, 1, ... in the order the bounds are listed.
  static Instance normalize(
      std::vector<std::int64_t> points,
      const std::vector<std::pair<std::int64_t, std::int64_t>>& bounds);

  const std::vector<std::int64_t>& points() const { return points_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  int point_count() const { return static_cast<int>(points_.size()); }
  int interval_count() const { return static_cast<int>(intervals_.size()); }
  bool normalized() const { return normalized_; }

  // Position of the id's interval in left-endpoint order.
  // Throws std::invalid_argument for an unknown id.
  int position_of(int id) const;

  // Points with value <= x.
  std::int64_t count_at_most(std::int64_t x) const;
  // Points inside [lo, hi], with multiplicity.
  std::int64_t count_in(std::int64_t lo, std::int64_t hi) const;
  // Index range [first, last) of the points inside [lo, hi].
  std::pair<std::size_t, std::size_t> point_range(std::int64_t lo,
                                                  std::int64_t hi) const;

  // Points covered by the union of the named intervals. Ids may come in any
  // order; unknown ids throw std::invalid_argument.
  std::int64_t measure(const std::vector<int>& ids) const;
  std::int64_t measure_all() const;

  // Same geometry with ids renumbered 0..m-1 in left-endpoint order.
  Instance renumbered() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.points_ == b.points_ && a.intervals_ == b.intervals_ &&
           a.normalized_ == b.normalized_;
  }

 private:
  void index_ids();

  std::vector<std::int64_t> points_;
  std::vector<Interval> intervals_;
  std::unordered_map<int, int> pos_by_id_;
  bool normalized_ = false;
};

}  // namespace icover
