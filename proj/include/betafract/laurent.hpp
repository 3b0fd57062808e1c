#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "betafract/rational.hpp"

namespace betafract {

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

// A formal Laurent polynomial over the rationals: finitely many terms
// c_k * x^k with integer exponents of either sign. The term map is canonical
// (no zero coefficients), so structural equality is value equality.
//
// The order is lexicographic from the lowest exponent up: a value is positive
// iff its lowest-exponent coefficient is positive. That makes x a positive
// infinitesimal and x^-1 infinite relative to every rational constant.
class Laurent {
public:
    Laurent() = default;
    Laurent(int c) : Laurent(Rational(c)) {}
    Laurent(Rational c) {
        if (c != 0) terms_.emplace(0, std::move(c));
    }

    static Laurent monomial(Rational c, int exp) {
        Laurent p;
        if (c != 0) p.terms_.emplace(exp, std::move(c));
        return p;
    }
    static Laurent var() { return monomial(1, 1); }

    bool is_zero() const { return terms_.empty(); }

    // Lowest exponent present; nullopt is the +infinity sentinel for zero.
    std::optional<int> valuation() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first;
    }

    // Coefficient at the valuation exponent; 0 for the zero polynomial.
    Rational lead() const {
        if (terms_.empty()) return Rational(0);
        return terms_.begin()->second;
    }

    Rational coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const std::map<int, Rational>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    // Terms with exponent < v.
    Laurent trunc_below(int v) const {
        Laurent out;
        for (const auto& [e, c] : terms_) {
            if (e >= v) break;
            out.terms_.emplace(e, c);
        }
        return out;
    }
    // Terms with exponent <= v.
    Laurent trunc_upto(int v) const { return trunc_below(v + 1); }
    // Terms with exponent > v.
    Laurent tail_above(int v) const {
        Laurent out;
        for (const auto& [e, c] : terms_)
            if (e > v) out.terms_.emplace(e, c);
        return out;
    }

    int sign() const {
        if (terms_.empty()) return 0;
        return terms_.begin()->second > 0 ? 1 : -1;
    }

    Laurent abs() const { return sign() < 0 ? -*this : *this; }

    Laurent operator-() const {
        Laurent out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, Rational(-c));
        return out;
    }

    Laurent& operator+=(const Laurent& o) {
        if (this == &o) {
            for (auto& [e, c] : terms_) c += c;  // doubling never cancels a term
            return *this;
        }
        for (const auto& [e, c] : o.terms_) {
            auto [it, fresh] = terms_.try_emplace(e, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }
    Laurent& operator-=(const Laurent& o) { return *this += -o; }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Rational prod = ca * cb;
                auto [it, fresh] = out.terms_.try_emplace(ea + eb, prod);
                if (!fresh) {
                    it->second += prod;
                    if (it->second == 0) out.terms_.erase(it);
                }
            }
        return out;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    // Exact division by the monomial c * x^k; rejects c = 0.
    Laurent div_monomial(const Rational& c, int k) const {
        if (c == 0) throw std::invalid_argument("div_monomial: zero divisor");
        Laurent out;
        for (const auto& [e, co] : terms_) out.terms_.emplace(e - k, Rational(co / c));
        return out;
    }

    Laurent pow(unsigned n) const {
        Laurent acc(1), base = *this;
        while (n > 0) {
            if (n & 1u) acc *= base;
            base *= base;
            n >>= 1u;
        }
        return acc;
    }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

    friend std::strong_ordering operator<=>(const Laurent& a, const Laurent& b) {
        int s = (a - b).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    std::map<int, Rational> terms_;
};

inline Cmp cmp(const Laurent& a, const Laurent& b) {
    auto o = a <=> b;
    if (o < 0) return Cmp::LT;
    if (o > 0) return Cmp::GT;
    return Cmp::EQ;
}

inline Laurent abs(const Laurent& a) { return a.abs(); }

}  // namespace betafract
