#pragma once

#include <vector>
#include <memory>
#include <string>
#include <stdexcept>
#include "voa/rational.hpp"

namespace voa {

// Dense univariate polynomial over Rational; degree of zero is -1.
struct UniPoly {
    std::vector<Rational> c; // c[i] = coefficient of x^i

    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rational& a) {
        UniPoly p;
        if (!voa::is_zero(a)) p.c = {a};
        return p;
    }
    static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }

    void trim() {
        while (!c.empty() && voa::is_zero(c.back())) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return Rational(0);
        return c[i];
    }
    Rational leading() const {
        if (is_zero()) throw std::logic_error("UniPoly: leading of zero");
        return c.back();
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        r.trim();
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        UniPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const Rational& s) {
        UniPoly r = a;
        for (auto& x : r.c) x *= s;
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a) { return a * Rational(-1); }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }
    UniPoly derivative() const {
        UniPoly r;
        for (size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * static_cast<long>(i));
        r.trim();
        return r;
    }
    // substitute x -> -x
    UniPoly flip_sign() const {
        UniPoly r = *this;
        for (size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
        return r;
    }
    UniPoly monic() const {
        if (is_zero()) return *this;
        UniPoly r = *this;
        Rational lead = r.c.back();
        for (auto& x : r.c) x /= lead;
        return r;
    }

    // polynomial division: returns (quotient, remainder)
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw std::invalid_argument("UniPoly: division by zero poly");
        UniPoly q, r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int shift = r.degree() - d.degree();
            Rational factor = r.leading() / d.leading();
            UniPoly term;
            term.c.assign(shift + 1, Rational(0));
            term.c[shift] = factor;
            q = q + term;
            r = r - term * d;
        }
        return {q, r};
    }
    UniPoly mod(const UniPoly& d) const { return divmod(d).second; }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c.size(); i-- > 0;) {
            if (voa::is_zero(c[i])) continue;
            if (!s.empty()) s += " + ";
            s += to_string(c[i]);
            if (i >= 1) s += "*" + var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }
};

inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline bool is_squarefree(const UniPoly& p) {
    if (p.degree() <= 1) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

// Coefficients (c_1,...,c_r) of (-1)^{r-1} 2r C(n+r-1,r-1) C(n,r) = sum c_i n^{2i-1},
// verified to be purely odd in n.
inline std::vector<Rational> odd_poly_coeffs(int r) {
    if (r < 1) throw std::invalid_argument("odd_poly_coeffs: r >= 1 required");
    UniPoly p = UniPoly::constant(rat(r % 2 == 1 ? 2L * r : -2L * r));
    // C(n+r-1, r-1) = prod_{j=1}^{r-1} (n+j) / (r-1)!
    for (int j = 1; j <= r - 1; ++j)
        p = p * UniPoly({rat(j), Rational(1)});
    for (int j = 1; j <= r - 1; ++j)
        p = p * rat(1, j);
    // C(n, r) = prod_{j=0}^{r-1} (n-j) / r!
    for (int j = 0; j <= r - 1; ++j)
        p = p * UniPoly({rat(-j), Rational(1)});
    for (int j = 1; j <= r; ++j)
        p = p * rat(1, j);
    std::vector<Rational> out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i % 2 == 0) {
            if (!voa::is_zero(p.coeff(i)))
                throw std::logic_error("odd_poly_coeffs: even-degree coefficient nonzero");
        } else {
            out.push_back(p.coeff(i));
        }
    }
    out.resize(r, Rational(0));
    return out;
}

// Lagrange interpolation through (x_i, y_i); exact.
inline UniPoly lagrange_interpolate(const std::vector<Rational>& xs,
                                    const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("lagrange: size mismatch");
    UniPoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        UniPoly term = UniPoly::constant(ys[i]);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            term = term * UniPoly({-xs[j], Rational(1)});
            term = term * (Rational(1) / (xs[i] - xs[j]));
        }
        acc = acc + term;
    }
    return acc;
}

// Ring C[t]/(modulus). Shared modulus keeps elements cheap to copy.
struct QuotientRing {
    UniPoly modulus; // monic, degree >= 1
    explicit QuotientRing(UniPoly m) : modulus(std::move(m)) {
        if (modulus.degree() < 1) throw std::invalid_argument("QuotientRing: degree >= 1 required");
        if (modulus.leading() != Rational(1)) throw std::invalid_argument("QuotientRing: modulus must be monic");
    }
};

struct QuotientRingElem {
    UniPoly rep;
    std::shared_ptr<const QuotientRing> ring;

    QuotientRingElem() = default;
    QuotientRingElem(UniPoly r, std::shared_ptr<const QuotientRing> rg)
        : rep(r.mod(rg->modulus)), ring(std::move(rg)) {}

    bool is_zero() const { return rep.is_zero(); }

    static void check(const QuotientRingElem& a, const QuotientRingElem& b) {
        if (a.ring != b.ring && !(a.ring && b.ring && a.ring->modulus == b.ring->modulus))
            throw std::logic_error("QuotientRingElem: ring mismatch");
    }
    friend QuotientRingElem operator+(const QuotientRingElem& a, const QuotientRingElem& b) {
        check(a, b);
        return {a.rep + b.rep, a.ring ? a.ring : b.ring};
    }
    friend QuotientRingElem operator-(const QuotientRingElem& a, const QuotientRingElem& b) {
        check(a, b);
        return {a.rep - b.rep, a.ring ? a.ring : b.ring};
    }
    friend QuotientRingElem operator*(const QuotientRingElem& a, const QuotientRingElem& b) {
        check(a, b);
        return {a.rep * b.rep, a.ring ? a.ring : b.ring};
    }
    friend QuotientRingElem operator*(const QuotientRingElem& a, const Rational& s) {
        QuotientRingElem r = a;
        r.rep = r.rep * s;
        return r;
    }
    friend QuotientRingElem operator-(const QuotientRingElem& a) { return a * Rational(-1); }
    QuotientRingElem& operator+=(const QuotientRingElem& b) { *this = *this + b; return *this; }
    QuotientRingElem& operator-=(const QuotientRingElem& b) { *this = *this - b; return *this; }
    QuotientRingElem& operator*=(const QuotientRingElem& b) { *this = *this * b; return *this; }
    QuotientRingElem& operator*=(const Rational& s) { *this = *this * s; return *this; }
    friend bool operator==(const QuotientRingElem& a, const QuotientRingElem& b) {
        return a.rep == b.rep;
    }
    friend bool operator!=(const QuotientRingElem& a, const QuotientRingElem& b) { return !(a == b); }
    // total order for use as a map-key component
    friend bool operator<(const QuotientRingElem& a, const QuotientRingElem& b) {
        if (a.rep.c.size() != b.rep.c.size()) return a.rep.c.size() < b.rep.c.size();
        for (size_t i = 0; i < a.rep.c.size(); ++i)
            if (a.rep.c[i] != b.rep.c[i]) return cmp(a.rep.c[i], b.rep.c[i]) < 0;
        return false;
    }
    // the automorphism t -> -t; valid when the modulus is even or odd in t
    QuotientRingElem sigma() const {
        if (!ring) return *this;
        UniPoly fm = ring->modulus.flip_sign();
        if (!(fm == ring->modulus || fm == -ring->modulus))
            throw std::logic_error("QuotientRingElem: t -> -t does not preserve the ideal");
        return {rep.flip_sign(), ring};
    }
};

inline bool is_zero(const QuotientRingElem& q) { return q.is_zero(); }

} // namespace voa
