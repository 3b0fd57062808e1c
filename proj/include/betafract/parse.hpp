#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "betafract/laurent.hpp"

namespace betafract {

// Literal syntax: terms joined by + / -, each term "[coeff][*x[^exp]]" with a
// rational (or exact decimal) coefficient and any integer exponent, e.g.
//   2/3*x^-1 + 1 - x^2
// Whitespace is insignificant; "2x", "x", and "x^3" are accepted short forms.
inline Laurent parse_laurent(std::string_view s) {
    size_t i = 0;
    auto fail = [&] {
        throw std::invalid_argument("bad laurent literal: '" + std::string(s) + "'");
    };
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto read_digits = [&](Integer& out) {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail();
        out = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            out = out * 10 + (s[i++] - '0');
    };

    Laurent result;
    skip_ws();
    if (i >= s.size()) fail();

    bool first = true;
    while (true) {
        skip_ws();
        if (i >= s.size()) {
            if (first) fail();
            break;
        }
        bool neg = false;
        if (s[i] == '+' || s[i] == '-') {
            neg = (s[i] == '-');
            ++i;
            skip_ws();
        } else if (!first) {
            fail();
        }

        Rational coeff(1);
        bool have_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            Integer num, den = 1;
            read_digits(num);
            if (i < s.size() && s[i] == '.') {
                ++i;
                Integer frac;
                size_t before = i;
                read_digits(frac);
                for (size_t k = 0; k < i - before; ++k) {
                    num *= 10;
                    den *= 10;
                }
                num += frac;
            } else if (i < s.size() && s[i] == '/') {
                ++i;
                read_digits(den);
                if (den == 0) fail();
            }
            coeff = Rational(num, den);
            have_coeff = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
                if (i >= s.size() || s[i] != 'x') fail();
            }
        }

        int exp = 0;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            exp = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_ws();
                bool eneg = false;
                if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
                Integer e;
                read_digits(e);
                exp = static_cast<int>(e.convert_to<long long>());
                if (eneg) exp = -exp;
            }
        } else if (!have_coeff) {
            fail();
        }

        if (neg) coeff = -coeff;
        result += Laurent::monomial(coeff, exp);
        first = false;
    }
    return result;
}

// Canonical printer: ascending exponents, unit coefficients elided next to x.
// Round-trips through parse_laurent. `spaced` controls " + " vs "+" joins;
// the compact form is used wherever a literal must not contain whitespace.
inline std::string to_string(const Laurent& p, bool spaced = true) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += spaced ? (c < 0 ? " - " : " + ") : (c < 0 ? "-" : "+");
        }
        if (e == 0) {
            out += to_string(mag);
        } else {
            if (mag != 1) {
                out += to_string(mag);
                out += '*';
            }
            out += 'x';
            if (e != 1) {
                out += '^';
                out += std::to_string(e);
            }
        }
        first = false;
    }
    return out;
}

}  // namespace betafract
