#pragma once

#include <string>
#include <stdexcept>
#include "voa/rational.hpp"

namespace voa {

// Element of (1/2)Z stored as a doubled integer, so twisted half-integer
// indices stay exact without rational arithmetic in hot loops.
struct HalfInt {
    int twice = 0;

    HalfInt() = default;
    explicit constexpr HalfInt(int doubled) : twice(doubled) {}
    static constexpr HalfInt whole(int k) { return HalfInt(2 * k); }
    static constexpr HalfInt half_odd(int odd) { return HalfInt(odd); }

    bool is_integer() const { return twice % 2 == 0; }
    int as_integer() const {
        if (!is_integer()) throw std::logic_error("HalfInt: not an integer");
        return twice / 2;
    }
    Rational as_rational() const { return rat(twice, 2); }

    friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
    friend HalfInt operator-(HalfInt a) { return HalfInt(-a.twice); }
    friend bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
    friend bool operator!=(HalfInt a, HalfInt b) { return a.twice != b.twice; }
    friend bool operator<(HalfInt a, HalfInt b) { return a.twice < b.twice; }
    friend bool operator<=(HalfInt a, HalfInt b) { return a.twice <= b.twice; }
    friend bool operator>(HalfInt a, HalfInt b) { return a.twice > b.twice; }
    friend bool operator>=(HalfInt a, HalfInt b) { return a.twice >= b.twice; }

    std::string str() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

} // namespace voa
