#ifndef MOTZKIN_POLYNOMIAL_HPP
#define MOTZKIN_POLYNOMIAL_HPP

// Dense polynomials in one variable over arbitrary-precision integers.
// Coefficients are stored in ascending order of the exponent; the stored
// sequence never ends in a zero, so the zero polynomial is the empty one.

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <string>
#include <sstream>
#include <utility>
#include <vector>

#include "motzkin/integer.hpp"

namespace motzkin {

class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Int> coefficients) : c_(std::move(coefficients)) {
        normalize();
    }

    Polynomial(std::initializer_list<long long> coefficients) {
        c_.reserve(coefficients.size());
        for (long long v : coefficients)
            c_.emplace_back(v);
        normalize();
    }

    bool is_zero() const { return c_.empty(); }

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Int& coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_int(); }

    const Int& constant_term() const { return coeff(0); }

    const std::vector<Int>& coefficients() const { return c_; }

    // multiplication by the monomial z^power
    Polynomial shifted(unsigned power) const {
        if (is_zero())
            return {};
        std::vector<Int> out(c_.size() + power);
        for (std::size_t i = 0; i < c_.size(); ++i)
            out[i + power] = c_[i];
        return Polynomial(std::move(out));
    }

    bool operator==(const Polynomial&) const = default;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Int> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Int> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = a.coeff(i) - b.coeff(i);
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Int> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(out));
    }

    std::string str() const {
        if (is_zero())
            return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0)
                continue;
            Int mag = c_[i];
            if (first) {
                if (mag < 0) {
                    out << "-";
                    mag = -mag;
                }
                first = false;
            } else if (mag < 0) {
                out << " - ";
                mag = -mag;
            } else {
                out << " + ";
            }
            if (i == 0)
                out << mag.str();
            else {
                if (mag != 1)
                    out << mag.str() << "*";
                out << "z";
                if (i > 1)
                    out << "^" << i;
            }
        }
        return out.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.str();
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Int> c_;
};

} // namespace motzkin

#endif // MOTZKIN_POLYNOMIAL_HPP
