#ifndef MOTZKIN_STATISTICS_HPP
#define MOTZKIN_STATISTICS_HPP

// Distribution-level statistics of the amplitude. Means and fractions are
// exact rationals end to end; floating point enters only in the asymptotic
// reference values and the reported ratios.

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "motzkin/closed_form.hpp"
#include "motzkin/integer.hpp"
#include "motzkin/motzkin_numbers.hpp"
#include "motzkin/trinomial.hpp"

namespace motzkin {

struct AmplitudeDistribution {
    unsigned length = 0;
    std::map<unsigned, Int> counts;
};

// Per-amplitude counts for paths of length n. The amplitude determines the
// class cell: odd 2h+1 is the height-h class with a horizontal step at the
// top, even 2h the one without.
inline AmplitudeDistribution amplitude_distribution(unsigned n) {
    const auto row = cached_trinomial_row(n);
    AmplitudeDistribution dist;
    dist.length = n;
    for (ClassCount& cell : class_cells_explicit(*row)) {
        if (cell.count == 0)
            continue;
        const unsigned amplitude = 2 * cell.height + (cell.horizontal_at_max ? 1 : 0);
        dist.counts.emplace(amplitude, std::move(cell.count));
    }
    return dist;
}

namespace detail {

template <typename Weight>
Rational cell_average(unsigned n, Weight weight) {
    const auto row = cached_trinomial_row(n);
    Int weighted = 0;
    for (const ClassCount& cell : class_cells_explicit(*row))
        weighted += weight(cell) * cell.count;
    return make_rational(std::move(weighted), motzkin_number(n));
}

} // namespace detail

inline Rational mean_amplitude(unsigned n) {
    if (n == 0)
        throw std::invalid_argument("mean_amplitude: length must be positive");
    return detail::cell_average(n, [](const ClassCount& cell) {
        return 2 * cell.height + (cell.horizontal_at_max ? 1 : 0);
    });
}

inline Rational mean_height(unsigned n) {
    return detail::cell_average(n, [](const ClassCount& cell) { return cell.height; });
}

// fraction of paths whose height is witnessed by a horizontal step
inline Rational horizontal_fraction(unsigned n) {
    return detail::cell_average(n, [](const ClassCount& cell) {
        return cell.horizontal_at_max ? 1 : 0;
    });
}

// leading-order law for the mean amplitude: 2 sqrt(pi n / 3)
inline double asymptotic_mean_amplitude(unsigned n) {
    if (n == 0)
        throw std::invalid_argument("asymptotic_mean_amplitude: length must be positive");
    return 2.0 * std::sqrt(std::numbers::pi * static_cast<double>(n) / 3.0);
}

enum class Quantity { mean_amplitude, horizontal_fraction };

struct AsymptoticReport {
    unsigned length = 0;
    Rational exact_value;
    double asymptotic_value = 0.0;
    double ratio = 0.0; // exact / asymptotic
};

inline AsymptoticReport asymptotic_report(unsigned n, Quantity quantity) {
    if (n == 0)
        throw std::invalid_argument("asymptotic_report: length must be positive");
    AsymptoticReport report;
    report.length = n;
    if (quantity == Quantity::mean_amplitude) {
        report.exact_value = mean_amplitude(n);
        report.asymptotic_value = asymptotic_mean_amplitude(n);
    } else {
        report.exact_value = horizontal_fraction(n);
        report.asymptotic_value = 0.5;
    }
    report.ratio = to_double(report.exact_value) / report.asymptotic_value;
    return report;
}

} // namespace motzkin

#endif // MOTZKIN_STATISTICS_HPP
