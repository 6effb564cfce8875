#ifndef MOTZKIN_INTEGER_HPP
#define MOTZKIN_INTEGER_HPP

// Exact arithmetic foundation: arbitrary-precision integers and rationals,
// plus decimal rendering helpers used by the reporting layer. All counting
// arithmetic in this library is exact; floating point appears only when a
// value is formatted for output or compared against an asymptotic law.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace motzkin {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline const Int& zero_int() {
    static const Int zero;
    return zero;
}

// Builds a rational in lowest terms with a positive denominator.
inline Rational make_rational(Int num, Int den) {
    if (den == 0)
        throw std::domain_error("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

namespace detail {

inline Int pow10(unsigned long long e) {
    return boost::multiprecision::pow(Int(10), static_cast<unsigned>(e));
}

// compares p against q * 10^e for positive p, q
inline int compare_scaled(const Int& p, const Int& q, long long e) {
    Int lhs = p;
    Int rhs = q;
    if (e >= 0)
        rhs *= pow10(static_cast<unsigned long long>(e));
    else
        lhs *= pow10(static_cast<unsigned long long>(-e));
    return lhs.compare(rhs);
}

} // namespace detail

// Renders a rational in decimal with the given number of significant
// digits, rounding half away from zero. Small magnitudes come out in
// positional notation, extreme ones in scientific notation.
inline std::string decimal_string(const Rational& value, unsigned significant_digits) {
    if (significant_digits == 0)
        throw std::invalid_argument("decimal_string: need at least one significant digit");
    Int p = numerator(value);
    const Int& q = denominator(value);
    if (p == 0)
        return "0";
    std::string sign;
    if (p < 0) {
        sign = "-";
        p = -p;
    }

    // exponent e with 10^e <= p/q < 10^(e+1)
    long long e = static_cast<long long>(p.str().size()) - static_cast<long long>(q.str().size());
    if (detail::compare_scaled(p, q, e) < 0)
        --e;

    const long long shift = static_cast<long long>(significant_digits) - 1 - e;
    Int scaled; // round(p * 10^shift / q)
    if (shift >= 0)
        scaled = (2 * p * detail::pow10(static_cast<unsigned long long>(shift)) + q) / (2 * q);
    else
        scaled = (2 * p + q * detail::pow10(static_cast<unsigned long long>(-shift))) /
                 (2 * q * detail::pow10(static_cast<unsigned long long>(-shift)));
    if (scaled == detail::pow10(significant_digits)) {
        scaled = detail::pow10(significant_digits - 1);
        ++e;
    }
    std::string digits = scaled.str();

    auto strip_fraction = [](std::string text) {
        while (!text.empty() && text.back() == '0')
            text.pop_back();
        if (!text.empty() && text.back() == '.')
            text.pop_back();
        return text;
    };

    if (e >= 0 && e < 21) {
        std::string out = digits;
        if (static_cast<unsigned long long>(e) + 1 >= digits.size()) {
            out.append(static_cast<std::size_t>(e + 1 - static_cast<long long>(digits.size())), '0');
            return sign + out;
        }
        out.insert(static_cast<std::size_t>(e + 1), ".");
        return sign + strip_fraction(std::move(out));
    }
    if (e < 0 && e >= -4) {
        std::string out = "0.";
        out.append(static_cast<std::size_t>(-e - 1), '0');
        out += digits;
        return sign + strip_fraction(std::move(out));
    }
    std::string out(1, digits[0]);
    if (digits.size() > 1)
        out = strip_fraction(out + "." + digits.substr(1));
    return sign + out + "e" + std::to_string(e);
}

inline double to_double(const Rational& value) {
    return std::strtod(decimal_string(value, 17).c_str(), nullptr);
}

} // namespace motzkin

#endif // MOTZKIN_INTEGER_HPP
