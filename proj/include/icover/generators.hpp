#pragma once

#include <cstdint>

#include "icover/instance.hpp"

namespace icover {

// The three-interval family on points 1..2s (s even, >= 2):
//     id 0: [1, s]          id 1: [s+1, 2s]          id 2: [s/2+1, 3s/2+1]
// Greedy opens with the middle interval, so its best two picks cover
// 3s/2 + 1 points while the outer pair covers all 2s. The two-pick ratio
// (3s/2+1)/(2s) tends to 3/4 from above as s grows.
Instance gen_tight(std::int64_t s);

// Deterministic random instance: n points and m interval endpoints drawn from
// [offset, offset + range) with interval lengths at most max_len (0 means
// range/8). The result is normalized and its ids renumbered 0..m'-1, so m'
// can be below m when containment removal fires. Identical arguments always
// produce identical output, on every platform.
Instance gen_random(int n_points, int m_intervals, std::int64_t range,
                    std::uint64_t seed, std::int64_t offset = 0,
                    std::int64_t max_len = 0);

// Concatenates two instances whose coordinates do not interleave: every
// point and endpoint of `left` must be strictly below every one of `right`.
// Ids are reassigned 0..m-1 across the result.
Instance disjoint_union(const Instance& left, const Instance& right);

}  // namespace icover
