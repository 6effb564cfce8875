#ifndef MOTZKIN_MOTZKIN_NUMBERS_HPP
#define MOTZKIN_MOTZKIN_NUMBERS_HPP

// Motzkin numbers M_n via the three-term recurrence
//   (n+2) M_n = (2n+1) M_{n-1} + 3(n-1) M_{n-2},  M_0 = M_1 = 1.
// The division is provably exact; a remainder is an implementation bug.

#include <stdexcept>
#include <utility>
#include <vector>

#include "motzkin/integer.hpp"

namespace motzkin {

namespace detail {

inline Int motzkin_step(unsigned n, const Int& prev1, const Int& prev2) {
    Int num = (2 * n + 1) * prev1 + 3 * (n - 1) * prev2;
    if (num % (n + 2) != 0)
        throw std::logic_error("motzkin_number: recurrence division is not exact");
    return num / (n + 2);
}

} // namespace detail

inline Int motzkin_number(unsigned n) {
    if (n <= 1)
        return 1;
    Int prev2 = 1;
    Int prev1 = 1;
    for (unsigned k = 2; k <= n; ++k) {
        Int next = detail::motzkin_step(k, prev1, prev2);
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

inline std::vector<Int> motzkin_numbers_up_to(unsigned n_max) {
    std::vector<Int> out;
    out.reserve(n_max + 1);
    out.emplace_back(1);
    if (n_max >= 1)
        out.emplace_back(1);
    for (unsigned k = 2; k <= n_max; ++k)
        out.push_back(detail::motzkin_step(k, out[k - 1], out[k - 2]));
    return out;
}

} // namespace motzkin

#endif // MOTZKIN_MOTZKIN_NUMBERS_HPP
