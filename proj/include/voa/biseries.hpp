#pragma once

#include <map>
#include <utility>
#include "voa/rational.hpp"

namespace voa {

// Truncated bivariate power series over Rational: terms x^m y^n with m+n <= order.
struct BiSeries {
    int order = 0;
    std::map<std::pair<int, int>, Rational> c;

    explicit BiSeries(int ord = 0) : order(ord) {}

    Rational coeff(int m, int n) const {
        auto it = c.find({m, n});
        return it == c.end() ? Rational(0) : it->second;
    }
    void add(int m, int n, const Rational& v) {
        if (m + n > order || voa::is_zero(v)) return;
        Rational& slot = c[{m, n}];
        slot += v;
        if (voa::is_zero(slot)) c.erase({m, n});
    }
    bool is_zero() const { return c.empty(); }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
        BiSeries r(std::min(a.order, b.order));
        for (const auto& [k, v] : a.c) r.add(k.first, k.second, v);
        for (const auto& [k, v] : b.c) r.add(k.first, k.second, v);
        return r;
    }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        BiSeries r(std::min(a.order, b.order));
        for (const auto& [ka, va] : a.c)
            for (const auto& [kb, vb] : b.c)
                r.add(ka.first + kb.first, ka.second + kb.second, va * vb);
        return r;
    }
    friend BiSeries operator*(const BiSeries& a, const Rational& s) {
        BiSeries r(a.order);
        for (const auto& [k, v] : a.c) r.add(k.first, k.second, v * s);
        return r;
    }
};

// Truncation of -log((sqrt(1+x)+sqrt(1+y))/2) to total degree <= order.
// Coefficient at x^m y^n is the twisted-correction constant c_{mn}.
inline BiSeries delta_series(int order) {
    BiSeries u(order); // (sqrt(1+x)+sqrt(1+y))/2 - 1
    for (int k = 1; k <= order; ++k) {
        Rational b = gen_binomial(rat(1, 2), static_cast<unsigned>(k)) * rat(1, 2);
        u.add(k, 0, b);
        u.add(0, k, b);
    }
    // -log(1+u) = sum_{k>=1} (-1)^k u^k / k; u has no constant term so k <= order suffices
    BiSeries acc(order), upow(order);
    upow.add(0, 0, Rational(1));
    for (int k = 1; k <= order; ++k) {
        upow = upow * u;
        if (upow.is_zero()) break;
        acc = acc + upow * rat(k % 2 == 0 ? 1 : -1, k);
    }
    return acc;
}

} // namespace voa
