#ifndef MOTZKIN_VERIFY_HPP
#define MOTZKIN_VERIFY_HPP

// Cross-method verification engine. Every class cell (length, height,
// horizontal-at-top) is computed along independent routes and compared
// exactly:
//
//   * bounded-height DP versus determinant-ratio series, at the level of
//     the bounded counts themselves;
//   * the trinomial closed form versus the series-derived cells;
//   * the consistency identity horiz + no-horiz = M^{<=h} - M^{<=h-1},
//     with the left side from the closed form and the right from the DP;
//   * cell sums against the Motzkin numbers from the three-term recurrence;
//   * brute-force enumeration for small lengths, including the per-path
//     amplitude/parity invariants.
//
// The closed-form kernel evaluation can be overridden, which is how the
// fault-injection test demonstrates that a wrong kernel is caught.

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "motzkin/bounded_dp.hpp"
#include "motzkin/closed_form.hpp"
#include "motzkin/determinant.hpp"
#include "motzkin/motzkin_numbers.hpp"
#include "motzkin/path.hpp"
#include "motzkin/series.hpp"
#include "motzkin/trinomial.hpp"

namespace motzkin {

struct VerificationOptions {
    unsigned max_length = 50;
    unsigned brute_max = 12;
    // replaces kernel_coeff in the closed-form route when set (test hook)
    std::function<Int(const TrinomialRow&, unsigned)> kernel;
    std::ostream* log = nullptr;
};

struct VerificationReport {
    bool passed = true;
    unsigned long long checks = 0;
    unsigned long long identity_checks = 0;
    std::string first_failure;
};

namespace detail {

struct VerificationFailure {
    std::string message;
};

inline std::string cell_failure(const char* what, unsigned n, long long h, const Int& got,
                                const Int& want) {
    std::ostringstream out;
    out << what << " at length " << n;
    if (h >= 0)
        out << ", height " << h;
    out << ": got " << got << ", expected " << want;
    return out.str();
}

} // namespace detail

inline VerificationReport run_verification(const VerificationOptions& options) {
    VerificationReport report;
    const unsigned max_n = options.max_length;
    const unsigned brute_n =
        std::min({options.brute_max, max_n, kMaxEnumerationLength});
    const auto kernel = options.kernel
                            ? options.kernel
                            : [](const TrinomialRow& row, unsigned a) { return kernel_coeff(row, a); };

    auto expect = [&report](bool ok, auto describe) {
        ++report.checks;
        if (!ok)
            throw detail::VerificationFailure{describe()};
    };

    try {
        const std::vector<Int> motzkin = motzkin_numbers_up_to(max_n);
        const unsigned h_max = max_n / 2;

        // cell tables, filled from the series route; horiz/nohoriz[n][h]
        std::vector<std::vector<Int>> horiz(max_n + 1), nohoriz(max_n + 1), height_slice(max_n + 1);
        for (unsigned n = 0; n <= max_n; ++n) {
            horiz[n].resize(n / 2 + 1);
            nohoriz[n].resize(n / 2 + 1);
            height_slice[n].resize(n / 2 + 1);
        }
        std::vector<Int> sums(max_n + 1);

        // phase 1, by ceiling height: DP against series for the bounded
        // counts, then the cell differences
        std::vector<Int> prev_m(max_n + 1); // [z^n] M^{<=h-1}, zero at h = 0
        for (unsigned h = 0; h <= h_max; ++h) {
            const Series m_series = series_bounded(static_cast<int>(h), max_n);
            const Series n_series = series_bounded_no_horiz(h, max_n);
            const std::vector<Int> m_dp = dp_count_bounded_prefix(max_n, h);
            const std::vector<Int> n_dp = dp_count_bounded_no_horiz_prefix(max_n, h);
            for (unsigned n = 0; n <= max_n; ++n) {
                expect(m_dp[n] == m_series.coeff(n), [&] {
                    return detail::cell_failure("bounded count, DP vs series", n, h, m_dp[n],
                                                m_series.coeff(n));
                });
                expect(n_dp[n] == n_series.coeff(n), [&] {
                    return detail::cell_failure("no-horizontal bounded count, DP vs series", n, h,
                                                n_dp[n], n_series.coeff(n));
                });
                if (h <= n / 2) {
                    horiz[n][h] = m_series.coeff(n) - n_series.coeff(n);
                    nohoriz[n][h] = n_series.coeff(n) - prev_m[n];
                    height_slice[n][h] = m_series.coeff(n) - prev_m[n];
                    sums[n] += horiz[n][h];
                    sums[n] += nohoriz[n][h];
                } else {
                    // a ceiling above floor(n/2) is inactive
                    expect(m_series.coeff(n) == n_series.coeff(n) &&
                               n_series.coeff(n) == prev_m[n],
                           [&] {
                               return detail::cell_failure("inactive ceiling added paths", n, h,
                                                           m_series.coeff(n), prev_m[n]);
                           });
                }
                if (h == h_max)
                    expect(m_series.coeff(n) == motzkin[n], [&] {
                        return detail::cell_failure(
                            "saturated bounded count vs Motzkin recurrence", n, h,
                            m_series.coeff(n), motzkin[n]);
                    });
            }
            for (unsigned n = 0; n <= max_n; ++n)
                prev_m[n] = m_series.coeff(n);
        }
        if (options.log)
            *options.log << "verify: DP and series routes agree up to length " << max_n << "\n";

        // phase 2, by length: the closed form against the table, the
        // consistency identity, and the cell sums
        TrinomialRow row;
        for (unsigned n = 0; n <= max_n; ++n) {
            if (n > 0)
                row.advance();
            Int lower = kernel(row, 2);
            for (unsigned h = 0; h <= n / 2; ++h) {
                Int mid = kernel(row, 2 * h + 3);
                Int upper = kernel(row, 2 * h + 4);
                const Int cell_horiz = upper - mid;
                const Int cell_nohoriz = mid - lower;
                expect(cell_horiz == horiz[n][h], [&] {
                    return detail::cell_failure("horizontal class, closed form vs series", n, h,
                                                cell_horiz, horiz[n][h]);
                });
                expect(cell_nohoriz == nohoriz[n][h], [&] {
                    return detail::cell_failure("no-horizontal class, closed form vs series", n, h,
                                                cell_nohoriz, nohoriz[n][h]);
                });
                ++report.identity_checks;
                expect(cell_horiz + cell_nohoriz == height_slice[n][h], [&] {
                    return detail::cell_failure(
                        "class split vs exact-height count (consistency identity)", n, h,
                        cell_horiz + cell_nohoriz, height_slice[n][h]);
                });
                lower = std::move(upper);
            }
            expect(sums[n] == motzkin[n], [&] {
                return detail::cell_failure("cell sum vs Motzkin number", n, -1, sums[n],
                                            motzkin[n]);
            });
        }
        if (options.log)
            *options.log << "verify: closed form agrees and cells sum to the Motzkin numbers\n";

        // phase 3: brute force for small lengths
        for (unsigned n = 0; n <= brute_n; ++n) {
            const std::vector<Path> paths = enumerate_paths(n);
            expect(Int(paths.size()) == motzkin[n], [&] {
                return detail::cell_failure("brute-force path count", n, -1, Int(paths.size()),
                                            motzkin[n]);
            });
            std::map<std::pair<unsigned, bool>, Int> observed;
            for (const Path& path : paths) {
                const PathProfile p = profile(path);
                expect(p.amplitude == 2 * p.height + (p.horizontal_at_max ? 1 : 0) &&
                           (p.amplitude % 2 == 1) == p.horizontal_at_max,
                       [&] {
                           std::ostringstream out;
                           out << "profile invariant violated at length " << n << " (height "
                               << p.height << ", amplitude " << p.amplitude << ")";
                           return out.str();
                       });
                observed[{p.height, p.horizontal_at_max}] += 1;
            }
            for (unsigned h = 0; h <= n / 2; ++h) {
                for (bool flag : {false, true}) {
                    const auto it = observed.find({h, flag});
                    const Int& got = it == observed.end() ? zero_int() : it->second;
                    const Int& want = flag ? horiz[n][h] : nohoriz[n][h];
                    expect(got == want, [&] {
                        return detail::cell_failure(flag ? "horizontal class, brute force"
                                                         : "no-horizontal class, brute force",
                                                    n, h, got, want);
                    });
                }
            }
        }
        if (options.log)
            *options.log << "verify: brute-force enumeration agrees up to length " << brute_n
                         << "\n";
    } catch (const detail::VerificationFailure& failure) {
        report.passed = false;
        report.first_failure = failure.message;
    }
    return report;
}

} // namespace motzkin

#endif // MOTZKIN_VERIFY_HPP
