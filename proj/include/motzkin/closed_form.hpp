#ifndef MOTZKIN_CLOSED_FORM_HPP
#define MOTZKIN_CLOSED_FORM_HPP

// Closed-form coefficient extraction through trinomial coefficients. Each
// class count is a short alternating sum over one shared trinomial row:
//
//   kernel_coeff(row, a) = -sum_{k >= 1, k*a <= n+2}
//       [ T(n+2-k*a) - 2 T(n-k*a) + T(n-2-k*a) ],  T(j) = [t^j](1+t+t^2)^n
//
//   with a horizontal step at the top:  kernel(2h+4) - kernel(2h+3)
//   without one:                        kernel(2h+3) - kernel(2h+2)
//   exact height h:                     kernel(2h+4) - kernel(2h+2)
//
// A full sweep over h for a fixed length reuses one row, costing
// O(n log n) big-integer additions past the row construction itself; this
// is the fast path behind the large-length statistics.

#include <stdexcept>
#include <utility>
#include <vector>

#include "motzkin/integer.hpp"
#include "motzkin/path.hpp"
#include "motzkin/trinomial.hpp"

namespace motzkin {

inline Int kernel_coeff(const TrinomialRow& row, unsigned a) {
    if (a == 0)
        throw std::invalid_argument("kernel_coeff: the exponent spacing must be positive");
    const long long n = row.n;
    Int total = 0;
    for (long long ka = a; ka <= n + 2; ka += a) {
        total -= row.at(n + 2 - ka);
        total += 2 * row.at(n - ka);
        total -= row.at(n - 2 - ka);
    }
    return total;
}

inline Int class_coeff_explicit(const TrinomialRow& row, unsigned h, bool horizontal_at_max) {
    if (horizontal_at_max)
        return kernel_coeff(row, 2 * h + 4) - kernel_coeff(row, 2 * h + 3);
    return kernel_coeff(row, 2 * h + 3) - kernel_coeff(row, 2 * h + 2);
}

inline Int class_coeff_explicit(unsigned n, unsigned h, bool horizontal_at_max) {
    return class_coeff_explicit(*cached_trinomial_row(n), h, horizontal_at_max);
}

// number of Motzkin paths of length row.n with height exactly h
inline Int height_coeff_explicit(const TrinomialRow& row, unsigned h) {
    return kernel_coeff(row, 2 * h + 4) - kernel_coeff(row, 2 * h + 2);
}

inline Int height_coeff_explicit(unsigned n, unsigned h) {
    return height_coeff_explicit(*cached_trinomial_row(n), h);
}

// All class cells for the row's length, ordered by (height, horizontal_at_max)
// with the no-horizontal cell first. Adjacent heights share a kernel value,
// so the sweep evaluates two kernels per height instead of three.
inline std::vector<ClassCount> class_cells_explicit(const TrinomialRow& row) {
    const unsigned n = row.n;
    std::vector<ClassCount> cells;
    cells.reserve(n + 2);
    Int lower = kernel_coeff(row, 2); // a = 2h+2 at h = 0
    for (unsigned h = 0; 2 * h <= n; ++h) {
        Int mid = kernel_coeff(row, 2 * h + 3);
        Int upper = kernel_coeff(row, 2 * h + 4);
        cells.push_back(ClassCount{n, h, false, mid - lower});
        cells.push_back(ClassCount{n, h, true, upper - std::move(mid)});
        lower = std::move(upper);
    }
    return cells;
}

inline std::vector<ClassCount> class_cells_explicit(unsigned n) {
    return class_cells_explicit(*cached_trinomial_row(n));
}

} // namespace motzkin

#endif // MOTZKIN_CLOSED_FORM_HPP
