#ifndef MOTZKIN_SERIES_HPP
#define MOTZKIN_SERIES_HPP

// Power series truncated at a fixed order, with exact integer coefficients.
// A series of order N stores exactly N+1 coefficients; arithmetic between
// two series truncates at the smaller of the two orders.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "motzkin/integer.hpp"
#include "motzkin/polynomial.hpp"

namespace motzkin {

class Series {
public:
    // zero series of the given order
    explicit Series(std::size_t order) : c_(order + 1) {}

    explicit Series(std::vector<Int> coefficients) : c_(std::move(coefficients)) {
        if (c_.empty())
            throw std::invalid_argument("Series: a series stores at least the constant term");
    }

    static Series truncation_of(const Polynomial& p, std::size_t order) {
        Series s(order);
        const std::size_t n = std::min(order + 1, p.coefficients().size());
        for (std::size_t i = 0; i < n; ++i)
            s.c_[i] = p.coeff(i);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }

    const Int& coeff(std::size_t i) const { return c_.at(i); }

    void set_coeff(std::size_t i, Int value) { c_.at(i) = std::move(value); }

    const std::vector<Int>& coefficients() const { return c_; }

    bool operator==(const Series&) const = default;

    friend Series operator+(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= out.order(); ++i)
            out.c_[i] = a.c_[i] + b.c_[i];
        return out;
    }

    friend Series operator-(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= out.order(); ++i)
            out.c_[i] = a.c_[i] - b.c_[i];
        return out;
    }

    friend Series operator*(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= out.order(); ++i)
            for (std::size_t j = 0; i + j <= out.order(); ++j)
                out.c_[i + j] += a.c_[i] * b.c_[j];
        return out;
    }

private:
    std::vector<Int> c_;
};

// Exact series division. The quotient q satisfies q * den == num up to the
// common truncation order. The denominator's constant term must be +1 or -1;
// this keeps every quotient coefficient an integer.
inline Series series_div(const Series& num, const Series& den) {
    const Int& lead = den.coeff(0);
    if (lead != 1 && lead != -1)
        throw std::domain_error(
            "series_div: denominator constant term must be +1 or -1 to keep coefficients exact");
    const bool negate = lead != 1;
    Series q(std::min(num.order(), den.order()));
    for (std::size_t k = 0; k <= q.order(); ++k) {
        Int acc = num.coeff(k);
        const std::size_t jmax = std::min(k, den.order());
        for (std::size_t j = 1; j <= jmax; ++j)
            acc -= den.coeff(j) * q.coeff(k - j);
        q.set_coeff(k, negate ? Int(-acc) : std::move(acc));
    }
    return q;
}

} // namespace motzkin

#endif // MOTZKIN_SERIES_HPP
