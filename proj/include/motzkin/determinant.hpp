#ifndef MOTZKIN_DETERMINANT_HPP
#define MOTZKIN_DETERMINANT_HPP

// Determinant polynomials of the tridiagonal transfer system for bounded
// Motzkin paths, and the bounded-height generating functions built from
// them as series ratios:
//
//   standard family  D_n :  D_0 = 1, D_1 = 1-z, D_n = (1-z) D_{n-1} - z^2 D_{n-2}
//   starred family   D*_n:  D*_0 = D*_1 = 1,    D*_n = D_{n-1} - z^2 D_{n-2}
//
//   paths of height <= h:                         M^{<=h} = D_h / D_{h+1}
//   height <= h, no level step at altitude h:     N^{<=h} = D*_h / D*_{h+1}
//
// The starred family replaces the last diagonal entry 1-z by 1, which is
// exactly the prohibition of level steps at the ceiling. Every member has
// constant term 1, so the series ratios stay integral.
//
// Both families are memoized process-wide; extension is serialized and
// previously built members stay valid for concurrent readers.

#include <deque>
#include <mutex>
#include <stdexcept>

#include "motzkin/integer.hpp"
#include "motzkin/polynomial.hpp"
#include "motzkin/series.hpp"

namespace motzkin {

class DeterminantFamily {
public:
    enum class Kind { standard, starred };

    explicit DeterminantFamily(Kind kind) : kind_(kind) {}

    Kind kind() const { return kind_; }

    // D_n or D*_n; the reference stays valid for the life of the process
    const Polynomial& poly(unsigned n) const;

private:
    Kind kind_;
};

namespace detail {

struct DeterminantTable {
    std::mutex mutex;
    std::deque<Polynomial> standard{Polynomial({1}), Polynomial({1, -1})};
    std::deque<Polynomial> starred{Polynomial({1}), Polynomial({1})};

    const Polynomial& poly(DeterminantFamily::Kind kind, unsigned n) {
        static const Polynomial one_minus_z({1, -1});
        std::lock_guard<std::mutex> lock(mutex);
        while (standard.size() <= n) {
            const std::size_t k = standard.size();
            standard.push_back(one_minus_z * standard[k - 1] - standard[k - 2].shifted(2));
        }
        if (kind == DeterminantFamily::Kind::standard)
            return standard[n];
        while (starred.size() <= n) {
            const std::size_t k = starred.size();
            starred.push_back(standard[k - 1] - standard[k - 2].shifted(2));
        }
        return starred[n];
    }
};

inline DeterminantTable& determinant_table() {
    static DeterminantTable table;
    return table;
}

} // namespace detail

inline const Polynomial& DeterminantFamily::poly(unsigned n) const {
    return detail::determinant_table().poly(kind_, n);
}

inline Polynomial det_poly(unsigned n) {
    return DeterminantFamily(DeterminantFamily::Kind::standard).poly(n);
}

inline Polynomial det_star_poly(unsigned n) {
    return DeterminantFamily(DeterminantFamily::Kind::starred).poly(n);
}

// M^{<=h}(z) truncated at the given order. h = -1 denotes the empty height
// range: no path, not even the empty one, has height below zero, so the
// series is identically zero (equivalently, the family extends to D_{-1} = 0).
inline Series series_bounded(int h, unsigned order) {
    if (h < -1)
        throw std::invalid_argument("series_bounded: height bound must be >= -1");
    if (h == -1)
        return Series(static_cast<std::size_t>(order));
    DeterminantFamily family(DeterminantFamily::Kind::standard);
    return series_div(Series::truncation_of(family.poly(static_cast<unsigned>(h)), order),
                      Series::truncation_of(family.poly(static_cast<unsigned>(h) + 1), order));
}

// N^{<=h}(z) truncated at the given order
inline Series series_bounded_no_horiz(unsigned h, unsigned order) {
    DeterminantFamily family(DeterminantFamily::Kind::starred);
    return series_div(Series::truncation_of(family.poly(h), order),
                      Series::truncation_of(family.poly(h + 1), order));
}

// Class counts as coefficients of the generating-function differences
//   with a horizontal step at the top:  [z^n] (M^{<=h} - N^{<=h})
//   without one:                        [z^n] (N^{<=h} - M^{<=h-1})
inline Int class_coeff_series(unsigned n, unsigned h, bool horizontal_at_max) {
    const Int n_coeff = series_bounded_no_horiz(h, n).coeff(n);
    if (horizontal_at_max)
        return series_bounded(static_cast<int>(h), n).coeff(n) - n_coeff;
    return n_coeff - series_bounded(static_cast<int>(h) - 1, n).coeff(n);
}

} // namespace motzkin

#endif // MOTZKIN_DETERMINANT_HPP
