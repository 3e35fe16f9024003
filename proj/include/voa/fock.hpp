#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>
#include "voa/halfint.hpp"
#include "voa/poly.hpp"
#include "voa/rational.hpp"

namespace voa {

// Norm (beta,beta) of the chosen Heisenberg generator: 1 for the orthonormal
// generator h, 2k for the lattice generator alpha.
struct GeneratorProfile {
    Rational norm = 1;
};

// Monomial X(-n_1)...X(-n_s) over a ground state. Mode indices are stored
// doubled (even = untwisted integer, odd = twisted half-integer), sorted
// descending. Ground is e^{c.beta} (untwisted) or 1_tw (twisted).
template <class R>
struct FockMonomial {
    std::vector<int> modes;
    bool twisted = false;
    R momentum{};

    int grade_doubled() const {
        int s = 0;
        for (int m : modes) s += m;
        return s;
    }
    Rational grade() const { return rat(grade_doubled(), 2); }
    size_t factor_count() const { return modes.size(); }

    void canonicalize() { std::sort(modes.begin(), modes.end(), std::greater<int>()); }

    friend bool operator==(const FockMonomial& a, const FockMonomial& b) {
        return a.twisted == b.twisted && a.modes == b.modes &&
               (a.twisted || a.momentum == b.momentum);
    }
    friend bool operator<(const FockMonomial& a, const FockMonomial& b) {
        if (a.twisted != b.twisted) return a.twisted < b.twisted;
        int ga = a.grade_doubled(), gb = b.grade_doubled();
        if (ga != gb) return ga < gb;
        if (a.modes != b.modes) return a.modes < b.modes;
        if (a.twisted) return false;
        return a.momentum < b.momentum;
    }
};

inline bool momentum_less(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }

// weight = grade + (lambda,lambda)/2, twisted ground contributes 1/16
inline Rational weight(const FockMonomial<Rational>& m, const GeneratorProfile& profile) {
    if (m.twisted) return m.grade() + rat(1, 16);
    return m.grade() + m.momentum * m.momentum * profile.norm / 2;
}

template <class R>
struct FockVector {
    std::map<FockMonomial<R>, R> terms;

    bool is_zero() const { return terms.empty(); }

    void add_term(const FockMonomial<R>& m, const R& coeff) {
        using voa::is_zero;
        if (is_zero(coeff)) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, coeff);
        } else {
            it->second += coeff;
            if (is_zero(it->second)) terms.erase(it);
        }
    }
    void axpy(const Rational& a, const FockVector& x) {
        if (voa::is_zero(a)) return;
        for (const auto& [m, c] : x.terms) add_term(m, c * a);
    }
    void axpy_r(const R& a, const FockVector& x) {
        using voa::is_zero;
        if (is_zero(a)) return;
        for (const auto& [m, c] : x.terms) add_term(m, c * a);
    }

    friend FockVector operator+(const FockVector& a, const FockVector& b) {
        FockVector r = a;
        for (const auto& [m, c] : b.terms) r.add_term(m, c);
        return r;
    }
    friend FockVector operator-(const FockVector& a, const FockVector& b) {
        FockVector r = a;
        r.axpy(Rational(-1), b);
        return r;
    }
    friend FockVector operator*(const FockVector& a, const Rational& s) {
        FockVector r;
        r.axpy(s, a);
        return r;
    }
    friend FockVector operator-(const FockVector& a) { return a * Rational(-1); }
    friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms == b.terms; }

    // grade of homogeneous vector by mode-sum (doubled); throws on mixed grades
    int grade_doubled() const {
        if (terms.empty()) throw std::logic_error("FockVector: grade of zero vector");
        int g = terms.begin()->first.grade_doubled();
        for (const auto& [m, c] : terms)
            if (m.grade_doubled() != g) throw std::logic_error("FockVector: not grade-homogeneous");
        return g;
    }
    int max_mode_doubled() const {
        int mx = 0;
        for (const auto& [m, c] : terms)
            if (!m.modes.empty()) mx = std::max(mx, m.modes.front());
        return mx;
    }
};

using QVector = FockVector<Rational>;
using QMonomial = FockMonomial<Rational>;

// ---- constructors ----

inline QMonomial ground_mono(const Rational& momentum = Rational(0)) {
    QMonomial m;
    m.momentum = momentum;
    return m;
}
inline QMonomial twisted_ground_mono() {
    QMonomial m;
    m.twisted = true;
    return m;
}
// modes given as undoubled positive integers (untwisted)
inline QMonomial mono(std::vector<int> modesUndoubled, const Rational& momentum = Rational(0)) {
    QMonomial m;
    m.momentum = momentum;
    for (int n : modesUndoubled) m.modes.push_back(2 * n);
    m.canonicalize();
    return m;
}
// modes given as doubled odd integers (twisted)
inline QMonomial twisted_mono(std::vector<int> modesDoubled) {
    QMonomial m;
    m.twisted = true;
    m.modes = std::move(modesDoubled);
    m.canonicalize();
    return m;
}
inline QVector state(const QMonomial& m, const Rational& c = Rational(1)) {
    QVector v;
    v.add_term(m, c);
    return v;
}

inline QVector vacuum() { return state(ground_mono()); }
inline QVector momentum_state(const Rational& c) { return state(ground_mono(c)); }
inline QVector twisted_vacuum() { return state(twisted_ground_mono()); }

// omega = (1/2) h(-1)^2 1  (orthonormal profile); for a general profile use
// (1/2N) X(-1)^2 1 with X the profile generator.
inline QVector virasoro_vector(const GeneratorProfile& profile) {
    return state(mono({1, 1}), Rational(1) / (2 * profile.norm));
}

// ---- theta ----

inline QVector theta(const QVector& v) {
    QVector out;
    for (const auto& [m, c] : v.terms) {
        QMonomial t = m;
        if (!t.twisted) t.momentum = -t.momentum;
        Rational sign = (m.factor_count() % 2 == 0) ? Rational(1) : Rational(-1);
        out.add_term(t, c * sign);
    }
    return out;
}

// Involution on the ring-parametrized module: the single ground state (whose
// zero mode acts as the ring element recorded in the momentum label) is fixed,
// the coefficients transform semilinearly over t -> -t, and each Heisenberg
// factor contributes a sign. Requires the ideal to be t -> -t stable.
inline FockVector<QuotientRingElem> theta(const FockVector<QuotientRingElem>& v) {
    FockVector<QuotientRingElem> out;
    for (const auto& [m, c] : v.terms) {
        QuotientRingElem coeff = c.sigma();
        if (m.factor_count() % 2 != 0) coeff = -coeff;
        out.add_term(m, coeff);
    }
    return out;
}

inline bool is_theta_fixed(const QVector& v) { return theta(v) == v; }

// ---- basis enumeration ----

// all monomials with doubled grade <= bound over the given ground
inline std::vector<QMonomial> enumerate_basis(bool twisted, const Rational& momentum,
                                              int gradeDoubledBound) {
    std::vector<QMonomial> out;
    std::vector<int> cur;
    int step = twisted ? 1 : 2;
    // parts descending, doubled values; smallest part is `step`
    std::function<void(int, int)> rec = [&](int remaining, int maxPart) {
        QMonomial m;
        m.twisted = twisted;
        if (!twisted) m.momentum = momentum;
        m.modes = cur;
        out.push_back(std::move(m));
        for (int p = std::min(maxPart, remaining); p >= step; --p) {
            if (twisted && p % 2 == 0) continue;
            if (!twisted && p % 2 == 1) continue;
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(gradeDoubledBound, gradeDoubledBound);
    for (auto& m : out) m.canonicalize();
    std::sort(out.begin(), out.end());
    return out;
}

// all monomials over the given ground with weight <= maxWeight
inline std::vector<QMonomial> basis_up_to_weight(bool twisted, const Rational& momentum,
                                                 const Rational& maxWeight,
                                                 const GeneratorProfile& profile) {
    Rational ground = twisted ? rat(1, 16) : momentum * momentum * profile.norm / 2;
    Rational room = (maxWeight - ground) * 2; // doubled grade budget
    if (cmp(room, Rational(0)) < 0) return {};
    mpz_class bound;
    mpz_fdiv_q(bound.get_mpz_t(), room.get_num_mpz_t(), room.get_den_mpz_t());
    return enumerate_basis(twisted, momentum, static_cast<int>(bound.get_si()));
}

// ---- serialization (Rational coefficients) ----

inline std::string mode_str(int doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

inline std::string serialize(const QVector& v) {
    std::string out;
    for (const auto& [m, c] : v.terms) {
        if (!out.empty()) out += " + ";
        out += to_string(c) + " * [";
        for (size_t i = 0; i < m.modes.size(); ++i) {
            if (i) out += ",";
            out += mode_str(m.modes[i]);
        }
        out += "] @ ";
        out += m.twisted ? "tw" : ("e^" + to_string(m.momentum));
    }
    return out;
}

QVector parse(const std::string& text); // fock.cpp

} // namespace voa
