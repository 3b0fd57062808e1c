#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "betafract/laurent.hpp"

namespace betafract {

// A radial value: a strictly positive element of the field.
class Radius {
public:
    explicit Radius(Laurent v) : value_(std::move(v)) {
        if (value_.sign() <= 0) throw std::invalid_argument("Radius: value must be positive");
    }
    explicit Radius(Rational c) : Radius(Laurent(std::move(c))) {}

    const Laurent& value() const { return value_; }
    int valuation() const { return *value_.valuation(); }
    Rational lead() const { return value_.lead(); }

    Radius scaled(const Rational& c) const { return Radius(value_ * Laurent(c)); }
    Radius half() const { return scaled(Rational(1, 2)); }

    friend bool operator==(const Radius& a, const Radius& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Radius& a, const Radius& b) {
        return a.value_ <=> b.value_;
    }

private:
    Laurent value_;
};

inline Radius operator+(const Radius& a, const Radius& b) { return Radius(a.value() + b.value()); }
inline Radius operator*(const Radius& a, const Radius& b) { return Radius(a.value() * b.value()); }

// The open ball { y : |y - center| < radius }.
struct Ball {
    Laurent center;
    Radius radius;
};

inline bool in_ball(const Laurent& y, const Ball& b) {
    return (y - b.center).abs() < b.radius.value();
}

// A finite nonempty union of balls. The list is a representation, not a
// canonical form; semantic equality is mutual region inclusion.
class BallUnion {
public:
    explicit BallUnion(std::vector<Ball> balls) : balls_(std::move(balls)) {
        if (balls_.empty()) throw std::invalid_argument("BallUnion: empty union");
    }
    BallUnion(std::initializer_list<Ball> balls) : BallUnion(std::vector<Ball>(balls)) {}
    explicit BallUnion(Ball b) : balls_{std::move(b)} {}

    const std::vector<Ball>& balls() const { return balls_; }
    size_t size() const { return balls_.size(); }
    auto begin() const { return balls_.begin(); }
    auto end() const { return balls_.end(); }

    bool contains_point(const Laurent& y) const {
        for (const Ball& b : balls_)
            if (in_ball(y, b)) return true;
        return false;
    }

private:
    std::vector<Ball> balls_;
};

}  // namespace betafract
