#pragma once

#include <climits>
#include <utility>
#include <vector>
#include "voa/biseries.hpp"
#include "voa/fock.hpp"
#include "voa/halfint.hpp"

namespace voa {

// Twisted-correction constants c_{mn}; table computed once, generous order.
inline Rational delta_coeff(int m, int n) {
    constexpr int kMaxOrder = 24;
    static const BiSeries table = delta_series(kMaxOrder);
    if (m + n > kMaxOrder) throw std::logic_error("delta_coeff: order exceeds cached table");
    return table.coeff(m, n);
}

template <class R>
R pow_elem(const R& base, unsigned e) {
    R acc = base;
    if (e == 0) throw std::logic_error("pow_elem: exponent must be >= 1 here");
    for (unsigned i = 1; i < e; ++i) acc = acc * base;
    return acc;
}

namespace detail {

// One summand of e^{Delta_z} a for an operator monomial: rational coefficient
// and the surviving (doubled, even) creation indices.
struct DeltaPiece {
    Rational coeff;
    std::vector<int> modes;
};

// Full expansion of e^{sign*Delta_z} applied to an untwisted operator monomial;
// Delta_z contracts ordered pairs of factors with constants c_{mn}.
inline std::vector<DeltaPiece> expand_exp_delta(const std::vector<int>& modesDoubled,
                                                const Rational& norm, int sign) {
    std::vector<DeltaPiece> out{{Rational(1), modesDoubled}};
    std::vector<DeltaPiece> level = out;
    int k = 1;
    while (!level.empty()) {
        std::vector<DeltaPiece> nextLevel;
        for (const DeltaPiece& piece : level) {
            if (piece.modes.size() < 2) continue;
            // sum over annihilation of one factor h(n) then another h(m)
            std::vector<int> distinctN;
            for (int d : piece.modes)
                if (distinctN.empty() || distinctN.back() != d) distinctN.push_back(d);
            for (int dn : distinctN) {
                int cntN = static_cast<int>(std::count(piece.modes.begin(), piece.modes.end(), dn));
                std::vector<int> after1 = piece.modes;
                after1.erase(std::find(after1.begin(), after1.end(), dn));
                Rational f1 = piece.coeff * rat(dn, 2) * norm * cntN;
                std::vector<int> distinctM;
                for (int d : after1)
                    if (distinctM.empty() || distinctM.back() != d) distinctM.push_back(d);
                for (int dm : distinctM) {
                    int cntM = static_cast<int>(std::count(after1.begin(), after1.end(), dm));
                    Rational c = delta_coeff(dm / 2, dn / 2);
                    if (voa::is_zero(c)) continue;
                    std::vector<int> after2 = after1;
                    after2.erase(std::find(after2.begin(), after2.end(), dm));
                    Rational f2 = f1 * rat(dm, 2) * norm * cntM * c;
                    if (sign < 0) f2 = -f2;
                    nextLevel.push_back({f2, std::move(after2)});
                }
            }
        }
        ++k;
        for (DeltaPiece& p : nextLevel) {
            p.coeff /= k - 1; // accumulate 1/k! across levels
            out.push_back(p);
        }
        level = std::move(nextLevel);
        if (k > 32) throw std::logic_error("expand_exp_delta: runaway expansion");
    }
    return out;
}

// Depth-first tuple enumeration of eq.-style normal-ordered mode action for a
// single operator monomial piece on a single state monomial.
template <class R>
class TupleApplier {
public:
    TupleApplier(const std::vector<int>& opModes, HalfInt nShifted,
                 const FockMonomial<R>& vm, const GeneratorProfile& prof)
        : op_(opModes), vm_(vm), prof_(prof), remaining_(nShifted.twice) {
        work_ = vm.modes; // multiset of doubled creation indices, desc
        using voa::is_zero;
        allowZero_ = !vm.twisted && !is_zero(vm.momentum);
        parityStep_ = vm.twisted ? 1 : 2;
        maxAnn_ = work_.empty() ? INT_MIN : work_.front();
    }

    // Range form: one enumeration covering the shifted indices
    // remaining, remaining + 2, ..., remaining + 2*(weights.size()-1); the
    // contribution landing at remaining + 2*j is scaled by weights[j].
    TupleApplier(const std::vector<int>& opModes, HalfInt nLowest,
                 const std::vector<Rational>& weights, const FockMonomial<R>& vm,
                 const GeneratorProfile& prof)
        : TupleApplier(opModes, nLowest, vm, prof) {
        weights_ = &weights;
        span_ = 2 * (static_cast<int>(weights.size()) - 1);
    }

    void run(FockVector<R>& out, const R& vCoeff, const Rational& pieceCoeff) {
        outPtr_ = &out;
        vCoeff_ = &vCoeff;
        pieceCoeff_ = &pieceCoeff;
        creations_.clear();
        descend(0, remaining_ + span_, Rational(1), 0);
    }

private:
    // upper bound on any single index choice (doubled)
    int upper_bound() const {
        int u = maxAnn_;
        if (allowZero_) u = std::max(u, 0);
        if (u == INT_MIN) u = -parityStep_;
        return u;
    }

    void descend(size_t j, int rem, Rational factor, unsigned momExp) {
        if (j == op_.size()) {
            // rem is the slack below the largest covered index (0 in the
            // single-index form); odd slack cannot match any covered index
            if (rem < 0 || rem > span_ || rem % 2 != 0) return;
            Rational f = factor;
            if (weights_) {
                const Rational& wgt = (*weights_)[static_cast<size_t>((span_ - rem) / 2)];
                if (voa::is_zero(wgt)) return;
                f *= wgt;
            }
            emit(f, momExp);
            return;
        }
        int nj = op_[j] / 2; // operator factor h(-nj), nj >= 1 integer
        int k = static_cast<int>(op_.size() - j - 1);
        int U = upper_bound();
        int lo = rem - span_ - k * U;
        int hi = std::min(U, k == 0 ? rem : INT_MAX);
        // align hi to the sector parity
        int par = vm_.twisted ? 1 : 0;
        if (((hi % 2) + 2) % 2 != par) --hi;
        for (int d = hi; d >= lo; d -= 2) {
            if (k == 0 && (d > rem || d < rem - span_)) continue;
            // vanishing binomial C(-i-1, nj-1) for integer i in [-(nj-1), -1]
            if (!vm_.twisted && d < 0 && -d <= 2 * (nj - 1)) continue;
            Rational binom = gen_binomial(rat(-d - 2, 2), static_cast<unsigned>(nj - 1));
            if (voa::is_zero(binom)) continue;
            if (d > 0) {
                // annihilation: need a copy of d in the working multiset
                auto it = std::find(work_.begin(), work_.end(), d);
                if (it == work_.end()) continue;
                int cnt = static_cast<int>(std::count(work_.begin(), work_.end(), d));
                size_t pos = static_cast<size_t>(it - work_.begin());
                work_.erase(it);
                descend(j + 1, rem - d, factor * binom * rat(d, 2) * prof_.norm * cnt, momExp);
                work_.insert(work_.begin() + pos, d);
            } else if (d == 0) {
                if (!allowZero_) continue;
                descend(j + 1, rem, factor * binom * prof_.norm, momExp + 1);
            } else {
                creations_.push_back(-d);
                descend(j + 1, rem - d, factor * binom, momExp);
                creations_.pop_back();
            }
        }
    }

    void emit(const Rational& factor, unsigned momExp) {
        FockMonomial<R> m;
        m.twisted = vm_.twisted;
        m.momentum = vm_.momentum;
        m.modes = work_;
        m.modes.insert(m.modes.end(), creations_.begin(), creations_.end());
        m.canonicalize();
        R coeff = (*vCoeff_) * (factor * (*pieceCoeff_));
        if (momExp > 0) coeff = coeff * pow_elem(vm_.momentum, momExp);
        outPtr_->add_term(m, coeff);
    }

    const std::vector<int>& op_;
    const FockMonomial<R>& vm_;
    const GeneratorProfile& prof_;
    int remaining_;
    std::vector<int> work_;
    std::vector<int> creations_;
    bool allowZero_ = false;
    int parityStep_ = 2;
    int maxAnn_ = INT_MIN;
    const std::vector<Rational>* weights_ = nullptr;
    int span_ = 0;
    FockVector<R>* outPtr_ = nullptr;
    const R* vCoeff_ = nullptr;
    const Rational* pieceCoeff_ = nullptr;
};

} // namespace detail

// Shifted mode action a~(n)v for a in M(1) (momentum 0, untwisted), v in any
// supported sector. Non-homogeneous a is handled per weight component (the
// shift convention is applied monomial-wise). deltaSign selects +/-Delta_z.
template <class R>
FockVector<R> mode_apply(const QVector& a, HalfInt n, const FockVector<R>& v,
                         const GeneratorProfile& prof, int deltaSign = +1) {
    FockVector<R> out;
    for (const auto& [am, ac] : a.terms) {
        if (am.twisted || !voa::is_zero(am.momentum))
            throw std::invalid_argument("mode_apply: operator vector must lie in M(1)");
        for (const auto& [vm, vc] : v.terms) {
            if (!vm.twisted) {
                if (!n.is_integer())
                    throw std::invalid_argument("mode_apply: half-integer index on untwisted state");
                detail::TupleApplier<R> app(am.modes, n, vm, prof);
                app.run(out, vc, ac);
            } else {
                auto pieces = detail::expand_exp_delta(am.modes, prof.norm, deltaSign);
                for (const auto& piece : pieces) {
                    detail::TupleApplier<R> app(piece.modes, n, vm, prof);
                    Rational pc = piece.coeff * ac;
                    app.run(out, vc, pc);
                }
            }
        }
    }
    return out;
}

// sum_j weights[j] a(j + offset) v over unshifted modes, for grade-homogeneous
// a in M(1); a single tuple enumeration covers the whole index range, which is
// much cheaper than one mode_apply_unshifted call per index.
template <class R>
FockVector<R> mode_range_apply(const QVector& a, int offset, const std::vector<Rational>& weights,
                               const FockVector<R>& v, const GeneratorProfile& prof,
                               int deltaSign = +1) {
    FockVector<R> out;
    if (a.is_zero() || weights.empty()) return out;
    HalfInt nLow(2 * offset - a.grade_doubled() + 2);
    for (const auto& [am, ac] : a.terms) {
        if (am.twisted || !voa::is_zero(am.momentum))
            throw std::invalid_argument("mode_range_apply: operator vector must lie in M(1)");
        for (const auto& [vm, vc] : v.terms) {
            if (!vm.twisted) {
                detail::TupleApplier<R> app(am.modes, nLow, weights, vm, prof);
                app.run(out, vc, ac);
            } else {
                auto pieces = detail::expand_exp_delta(am.modes, prof.norm, deltaSign);
                for (const auto& piece : pieces) {
                    detail::TupleApplier<R> app(piece.modes, nLow, weights, vm, prof);
                    Rational pc = piece.coeff * ac;
                    app.run(out, vc, pc);
                }
            }
        }
    }
    return out;
}

// Unshifted accessor a(x) = a~(x - wt a + 1); requires grade-homogeneous a.
template <class R>
FockVector<R> mode_apply_unshifted(const QVector& a, HalfInt x, const FockVector<R>& v,
                                   const GeneratorProfile& prof, int deltaSign = +1) {
    if (a.is_zero()) return {};
    int wtDoubled = a.grade_doubled();
    HalfInt n(x.twice - wtDoubled + 2);
    return mode_apply(a, n, v, prof, deltaSign);
}

// Spec-facing wrappers with sector checks.
template <class R>
FockVector<R> heis_mode_apply(const QVector& a, HalfInt n, const FockVector<R>& v,
                              const GeneratorProfile& prof) {
    for (const auto& [vm, vc] : v.terms)
        if (vm.twisted) throw std::invalid_argument("heis_mode_apply: twisted state");
    return mode_apply(a, n, v, prof);
}
inline QVector twisted_mode_apply(const QVector& a, HalfInt n, const QVector& v,
                                  const GeneratorProfile& prof, int deltaSign = +1) {
    for (const auto& [vm, vc] : v.terms)
        if (!vm.twisted) throw std::invalid_argument("twisted_mode_apply: untwisted state");
    return mode_apply(a, n, v, prof, deltaSign);
}

// L(n) = omega~(n)
template <class R>
FockVector<R> virasoro_apply(int n, const FockVector<R>& v, const GeneratorProfile& prof) {
    return mode_apply(virasoro_vector(prof), HalfInt::whole(n), v, prof);
}

// ---- lattice exponential operators ----

struct LatticeExp {
    int m = 1; // the exponential e^{m alpha}
};

// weight of e^{m alpha} = m^2 N/2 (must be an integer for even lattices)
inline int lattice_exp_weight(const LatticeExp& e, const GeneratorProfile& prof) {
    Rational w = rat(e.m) * rat(e.m) * prof.norm / 2;
    if (w.get_den() != 1) throw std::invalid_argument("lattice_exp_weight: non-integral weight");
    return static_cast<int>(w.get_num().get_si());
}

QVector lattice_mode_apply_unshifted(const LatticeExp& e, int x, const QVector& v,
                                     const GeneratorProfile& prof); // vertex.cpp

inline QVector lattice_mode_apply(const LatticeExp& e, HalfInt n, const QVector& v,
                                  const GeneratorProfile& prof) {
    if (!n.is_integer()) throw std::invalid_argument("lattice_mode_apply: integer index required");
    return lattice_mode_apply_unshifted(e, lattice_exp_weight(e, prof) + n.as_integer() - 1, v, prof);
}

// ---- Borcherds identity oracle ----

template <class R>
bool borcherds_check(const QVector& a, const QVector& b, const FockVector<R>& u,
                     int p, HalfInt s, HalfInt t, const GeneratorProfile& prof) {
    if (a.is_zero() || b.is_zero()) return true;
    int wa = a.grade_doubled(), wb = b.grade_doubled();
    int gu = 0;
    for (const auto& [m, c] : u.terms) gu = std::max(gu, m.grade_doubled());

    FockVector<R> lhs;
    // a(p+i)b vanishes once p+i exceeds wt a + wt b - 1
    for (int i = 0; 2 * (p + i) <= wa + wb - 2; ++i) {
        Rational bi = gen_binomial(s.as_rational(), static_cast<unsigned>(i));
        if (voa::is_zero(bi)) continue;
        QVector ab = mode_apply_unshifted(a, HalfInt::whole(p + i), b, prof);
        if (ab.is_zero()) continue;
        lhs.axpy(bi, mode_apply_unshifted(ab, s + t - HalfInt::whole(i), u, prof));
    }

    FockVector<R> rhs;
    // term 1: a(p+s-i) b(t+i) u — cut when b(t+i)u dies by grading
    for (int i = 0; (t + HalfInt::whole(i)).twice <= gu + wb - 2; ++i) {
        Rational bi = gen_binomial(rat(p), static_cast<unsigned>(i));
        if (i % 2 == 1) bi = -bi;
        if (voa::is_zero(bi)) continue;
        FockVector<R> bu = mode_apply_unshifted(b, t + HalfInt::whole(i), u, prof);
        if (bu.is_zero()) continue;
        rhs.axpy(bi, mode_apply_unshifted(a, HalfInt::whole(p) + s - HalfInt::whole(i), bu, prof));
    }
    // term 2: -(-1)^p b(p+t-i) a(s+i) u
    for (int i = 0; (s + HalfInt::whole(i)).twice <= gu + wa - 2; ++i) {
        Rational bi = gen_binomial(rat(p), static_cast<unsigned>(i));
        if (i % 2 == 1) bi = -bi;
        if (p % 2 != 0) bi = -bi;
        bi = -bi;
        if (voa::is_zero(bi)) continue;
        FockVector<R> au = mode_apply_unshifted(a, s + HalfInt::whole(i), u, prof);
        if (au.is_zero()) continue;
        rhs.axpy(bi, mode_apply_unshifted(b, HalfInt::whole(p) + t - HalfInt::whole(i), au, prof));
    }
    return lhs == rhs;
}

} // namespace voa
