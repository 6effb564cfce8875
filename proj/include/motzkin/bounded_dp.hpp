#ifndef MOTZKIN_BOUNDED_DP_HPP
#define MOTZKIN_BOUNDED_DP_HPP

// Bounded-height dynamic programming. The state is the altitude, rolled
// forward one step at a time, so a single query costs O(n*h) exact-integer
// additions and O(h) space. The *_prefix variants run the same recursion
// once and report the count for every length up to n_max, which is what the
// cross-method sweeps use.
//
// dp_count_bounded counts paths that never exceed altitude h. The no_horiz
// variant additionally forbids level steps taken at altitude h, which is the
// ingredient for splitting paths of exact height h by the presence of a
// horizontal step at the top.

#include <utility>
#include <vector>

#include "motzkin/integer.hpp"
#include "motzkin/path.hpp"

namespace motzkin {

namespace detail {

inline void dp_step(std::vector<Int>& cur, std::vector<Int>& nxt, unsigned h,
                    bool forbid_level_at_ceiling) {
    for (unsigned a = 0; a <= h; ++a) {
        Int v = (forbid_level_at_ceiling && a == h) ? Int(0) : cur[a];
        if (a > 0)
            v += cur[a - 1];
        if (a < h)
            v += cur[a + 1];
        nxt[a] = std::move(v);
    }
    cur.swap(nxt);
}

inline Int dp_count(unsigned n, unsigned h, bool forbid_level_at_ceiling) {
    std::vector<Int> cur(h + 1), nxt(h + 1);
    cur[0] = 1;
    for (unsigned step = 0; step < n; ++step)
        dp_step(cur, nxt, h, forbid_level_at_ceiling);
    return cur[0];
}

inline std::vector<Int> dp_count_prefix(unsigned n_max, unsigned h,
                                        bool forbid_level_at_ceiling) {
    std::vector<Int> cur(h + 1), nxt(h + 1);
    cur[0] = 1;
    std::vector<Int> out;
    out.reserve(n_max + 1);
    out.push_back(cur[0]);
    for (unsigned step = 0; step < n_max; ++step) {
        dp_step(cur, nxt, h, forbid_level_at_ceiling);
        out.push_back(cur[0]);
    }
    return out;
}

} // namespace detail

// number of Motzkin paths of length n with height <= h
inline Int dp_count_bounded(unsigned n, unsigned h) {
    return detail::dp_count(n, h, false);
}

// same, with level steps at altitude h forbidden
inline Int dp_count_bounded_no_horiz(unsigned n, unsigned h) {
    return detail::dp_count(n, h, true);
}

// counts for every length 0..n_max in one pass
inline std::vector<Int> dp_count_bounded_prefix(unsigned n_max, unsigned h) {
    return detail::dp_count_prefix(n_max, h, false);
}

inline std::vector<Int> dp_count_bounded_no_horiz_prefix(unsigned n_max, unsigned h) {
    return detail::dp_count_prefix(n_max, h, true);
}

// Exact count of paths of length n, height h, split by the presence of a
// horizontal step at the top level. Heights below zero contribute nothing,
// so the no-horizontal class at h = 0 consists of the empty path alone.
inline ClassCount class_count_oracle(unsigned n, unsigned h, bool horizontal_at_max) {
    Int count;
    if (horizontal_at_max) {
        count = dp_count_bounded(n, h) - dp_count_bounded_no_horiz(n, h);
    } else {
        count = dp_count_bounded_no_horiz(n, h);
        if (h >= 1)
            count -= dp_count_bounded(n, h - 1);
    }
    return ClassCount{n, h, horizontal_at_max, std::move(count)};
}

} // namespace motzkin

#endif // MOTZKIN_BOUNDED_DP_HPP
