#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace betafract {

// Exact arbitrary-precision rationals. cpp_rational keeps values in lowest
// terms with a positive denominator, so equality is structural.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(Rational base, unsigned n) {
    Rational acc(1);
    while (n > 0) {
        if (n & 1u) acc *= base;
        base *= base;
        n >>= 1u;
    }
    return acc;
}

// Accepts "7", "-3/4", "0.5", "-2.25" (decimals are exact).
inline Rational parse_rational(std::string_view s) {
    auto fail = [&] { throw std::invalid_argument("bad rational literal: '" + std::string(s) + "'"); };
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail();

    Integer num = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        num = num * 10 + (s[i++] - '0');

    Integer den = 1;
    if (i < s.size() && s[i] == '.') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail();
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            num = num * 10 + (s[i++] - '0');
            den *= 10;
        }
    } else if (i < s.size() && s[i] == '/') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail();
        Integer d = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            d = d * 10 + (s[i++] - '0');
        if (d == 0) fail();
        den = d;
    }
    if (i != s.size()) fail();

    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

inline std::string to_string(const Rational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) {
        out += '/';
        out += denominator(r).str();
    }
    return out;
}

}  // namespace betafract
