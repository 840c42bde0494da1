#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "icover/exact_dp.hpp"
#include "icover/instance.hpp"
#include "icover/rational.hpp"

namespace icover {

// Budget-relaxed solving: spend up to k + floor(eps*k) intervals to reach at
// least the value of the best k intervals, in roughly (m/extra) * k DP work
// instead of m * k.
//
// With extra = floor(eps*k) and stride = ceil(m / (eps*k)), every stride-th
// interval (in left-endpoint order) is taken outright as a skeleton; the gaps
// between consecutive skeleton picks become independent sub-instances whose
// points still uncovered by the skeleton are solved exactly, one budget unit
// at a time, merging the per-gap marginal profits greedily until k are spent.
struct ApproxParams {
  int k = 1;
  Rational eps{1, 1};
  int extra = 0;          // floor(eps*k): extra budget, also # skeleton picks
  std::int64_t stride = 1;  // ceil(m / (eps*k)), at least 1

  // Throws std::invalid_argument for k < 1 or eps <= 0.
  ApproxParams(int k, Rational eps, int interval_count);
};

struct SubInstance {
  Instance instance;            // local ids are 0..g-1 in left-endpoint order
  std::vector<int> global_ids;  // local id -> id in the parent instance
};

struct PartitionResult {
  std::vector<int> skeleton_ids;    // every stride-th interval, left to right
  std::vector<SubInstance> groups;  // the gaps, left to right; may be empty
};

// Splits the instance around the skeleton picks. Group points are the parent
// points inside the group's intervals and not under any skeleton interval;
// the groups' point sets are pairwise disjoint because no interval contains
// another. Every non-skeleton interval lands in exactly one group.
PartitionResult partition(const Instance& inst, const ApproxParams& params);

// Marginal profits of one sub-instance, produced on demand: the t-th value
// pulled is opt_t - opt_{t-1}. Holds a reference to the instance.
class ProfitStream {
 public:
  explicit ProfitStream(const Instance& inst);
  explicit ProfitStream(Instance&&) = delete;  // the instance must outlive the stream

  bool exhausted() const { return !head_.has_value(); }
  std::int64_t head() const { return *head_; }
  void pop();
  int consumed() const { return consumed_; }
  // Budget rows computed so far; stays at most consumed()+1 (laziness).
  int computed() const { return solver_.budget(); }
  // Cover worth the first t pulled profits; requires t <= computed().
  Cover cover_at(int t) const { return solver_.reconstruct(t); }

 private:
  void advance();

  DpSolver solver_;
  int avail_;
  int consumed_ = 0;
  std::optional<std::int64_t> head_;
};

struct MergeResult {
  std::vector<int> take_counts;        // per stream
  std::vector<std::int64_t> profits;   // the k merged values, best first
};

// k-round best-first merge across the streams; a tie between equal heads
// pops the lower-indexed stream. Stops early when every stream runs dry.
MergeResult merge_profits(std::vector<ProfitStream>& streams, int k);

struct ApproxResult {
  std::vector<int> skeleton_ids;
  std::vector<int> take_counts;
  Cover cover;
  bool exact_fallback = false;  // set when floor(eps*k) == 0
};

// Covers at least the optimal k-interval value using at most k + extra
// intervals. When eps*k rounds down to zero the exact solver runs instead
// and the flag says so. Cross-checks the assembled cover's measured value
// against skeleton + merged profits and throws internal_error on mismatch.
ApproxResult solve_approx(const Instance& inst, const ApproxParams& params);

}  // namespace icover
