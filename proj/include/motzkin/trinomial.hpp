#ifndef MOTZKIN_TRINOMIAL_HPP
#define MOTZKIN_TRINOMIAL_HPP

// Trinomial coefficients: row n holds the 2n+1 coefficients of (1+t+t^2)^n.
// Rows are built by the additive three-term recurrence and can be advanced
// in place, which is what the length sweeps rely on. A process-wide cache
// shares fully built rows between readers.

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "motzkin/integer.hpp"

namespace motzkin {

struct TrinomialRow {
    unsigned n = 0;
    std::vector<Int> values{Int(1)};

    // coefficient of t^k, zero outside 0 <= k <= 2n
    const Int& at(long long k) const {
        if (k < 0 || k >= static_cast<long long>(values.size()))
            return zero_int();
        return values[static_cast<std::size_t>(k)];
    }

    // advances the row from exponent n to n+1 in place
    void advance() {
        values.resize(values.size() + 2);
        for (std::size_t k = values.size(); k-- > 0;) {
            if (k >= 1)
                values[k] += values[k - 1];
            if (k >= 2)
                values[k] += values[k - 2];
        }
        ++n;
    }
};

inline TrinomialRow trinomial_row(unsigned n) {
    TrinomialRow row;
    while (row.n < n)
        row.advance();
    return row;
}

// Shared read-only row. Rows are extended from the closest cached exponent
// below the request; extension is serialized, readers are lock-free once
// they hold the pointer.
inline std::shared_ptr<const TrinomialRow> cached_trinomial_row(unsigned n) {
    static std::mutex mutex;
    static std::map<unsigned, std::shared_ptr<const TrinomialRow>> cache;

    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.upper_bound(n);
    if (it != cache.begin()) {
        --it;
        if (it->first == n)
            return it->second;
    }
    TrinomialRow row = (it != cache.end() && it->first <= n) ? *it->second : TrinomialRow{};
    while (row.n < n)
        row.advance();
    auto shared = std::make_shared<const TrinomialRow>(std::move(row));
    cache.emplace(n, shared);
    return shared;
}

// [t^k](1+t+t^2)^n; zero when k is out of range
inline Int trinomial(unsigned n, long long k) {
    if (k < 0 || k > 2LL * n)
        return 0;
    return cached_trinomial_row(n)->at(k);
}

} // namespace motzkin

#endif // MOTZKIN_TRINOMIAL_HPP
