#include "icover/approx.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>
#include <string>

#include "icover/errors.hpp"

namespace icover {

ApproxParams::ApproxParams(int k_in, Rational eps_in, int interval_count)
    : k(k_in), eps(eps_in) {
  if (k < 1) throw std::invalid_argument("approx: k must be at least 1");
  if (eps.num <= 0) throw std::invalid_argument("approx: eps must be positive");
  extra = static_cast<int>(floor_mul(eps, k));
  stride = interval_count > 0 && extra > 0
               ? ceil_div_mul(interval_count, eps, k)
               : 1;
  if (stride < 1) stride = 1;
}

PartitionResult partition(const Instance& inst, const ApproxParams& params) {
  assert(inst.normalized());
  const auto& ivs = inst.intervals();
  const int m = inst.interval_count();
  PartitionResult result;
  // Skeleton positions stride, 2*stride, ... (1-based), clamped to m.
  std::vector<int> picks;
  for (int j = 1; j <= params.extra; ++j) {
    const std::int64_t pos = static_cast<std::int64_t>(j) * params.stride;
    if (pos > m) break;
    picks.push_back(static_cast<int>(pos - 1));
  }
  std::vector<char> under_skeleton(inst.points().size(), 0);
  for (int pos : picks) {
    result.skeleton_ids.push_back(ivs[pos].id);
    auto [first, last] = inst.point_range(ivs[pos].lo, ivs[pos].hi);
    for (std::size_t p = first; p < last; ++p) under_skeleton[p] = 1;
  }
  // One group per gap, including empty gaps and the tail after the last pick.
  int begin = 0;
  for (std::size_t g = 0; g <= picks.size(); ++g) {
    const int end = g < picks.size() ? picks[g] : m;  // exclusive
    SubInstance sub;
    std::vector<std::pair<std::int64_t, std::int64_t>> bounds;
    for (int pos = begin; pos < end; ++pos) {
      bounds.emplace_back(ivs[pos].lo, ivs[pos].hi);
      sub.global_ids.push_back(ivs[pos].id);
    }
    // Group points: parent points inside the union of the group's intervals,
    // minus everything the skeleton already covers.
    std::vector<std::int64_t> pts;
    int pos = begin;
    while (pos < end) {
      std::int64_t seg_hi = ivs[pos].hi;
      int next = pos + 1;
      while (next < end && ivs[next].lo <= seg_hi) {
        seg_hi = std::max(seg_hi, ivs[next].hi);
        ++next;
      }
      auto [first, last] = inst.point_range(ivs[pos].lo, seg_hi);
      for (std::size_t p = first; p < last; ++p)
        if (!under_skeleton[p]) pts.push_back(inst.points()[p]);
      pos = next;
    }
    // Bounds arrive in left-endpoint order with no containment, so
    // normalization keeps them put and local ids equal local positions.
    sub.instance = Instance::normalize(std::move(pts), bounds);
    assert(sub.instance.interval_count() == static_cast<int>(sub.global_ids.size()));
    result.groups.push_back(std::move(sub));
    begin = end + 1;
  }
  return result;
}

ProfitStream::ProfitStream(const Instance& inst)
    : solver_(inst), avail_(inst.interval_count()) {
  advance();
}

void ProfitStream::advance() {
  if (solver_.budget() < avail_) {
    const std::int64_t prev = solver_.value();
    head_ = solver_.resume() - prev;
  } else {
    head_.reset();
  }
}

void ProfitStream::pop() {
  assert(!exhausted());
  ++consumed_;
  advance();
}

MergeResult merge_profits(std::vector<ProfitStream>& streams, int k) {
  assert(k >= 0);
  MergeResult result;
  result.take_counts.assign(streams.size(), 0);
  // Max-heap on (head value, then lower stream index).
  using Entry = std::pair<std::int64_t, std::size_t>;
  const auto worse = [](const Entry& a, const Entry& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  for (std::size_t i = 0; i < streams.size(); ++i)
    if (!streams[i].exhausted()) heap.emplace(streams[i].head(), i);
  while (static_cast<int>(result.profits.size()) < k && !heap.empty()) {
    const auto [value, idx] = heap.top();
    heap.pop();
    result.profits.push_back(value);
    ++result.take_counts[idx];
    streams[idx].pop();
    if (!streams[idx].exhausted()) heap.emplace(streams[idx].head(), idx);
  }
  return result;
}

ApproxResult solve_approx(const Instance& inst, const ApproxParams& params) {
  ApproxResult result;
  if (params.extra == 0) {
    result.exact_fallback = true;
    result.cover = solve_exact(inst, params.k);
    return result;
  }
  PartitionResult part = partition(inst, params);
  std::vector<ProfitStream> streams;
  streams.reserve(part.groups.size());
  for (const SubInstance& sub : part.groups) streams.emplace_back(sub.instance);
  MergeResult merged = merge_profits(streams, params.k);

  result.skeleton_ids = part.skeleton_ids;
  result.take_counts = std::move(merged.take_counts);
  std::vector<int> ids = part.skeleton_ids;
  for (std::size_t g = 0; g < streams.size(); ++g) {
    const int t = result.take_counts[g];
    if (t == 0) continue;
    const Cover local = streams[g].cover_at(t);
    for (int local_id : local.ids)
      ids.push_back(part.groups[g].global_ids[local_id]);
  }
  std::sort(ids.begin(), ids.end());

  std::int64_t expected = inst.measure(part.skeleton_ids);
  for (std::int64_t p : merged.profits) expected += p;
  const std::int64_t measured = inst.measure(ids);
  if (measured != expected)
    throw internal_error("assembled cover measures " + std::to_string(measured) +
                         " but skeleton plus merged profits give " +
                         std::to_string(expected));
  result.cover = {std::move(ids), measured};
  return result;
}

}  // namespace icover
