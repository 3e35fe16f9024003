#pragma once

#include <memory>
#include <string>
#include <vector>
#include "voa/hvectors.hpp"
#include "voa/poly.hpp"
#include "voa/report.hpp"

namespace voa {

// Weak module over C[t]/(f) in which the Heisenberg zero mode acts on the
// ground state as multiplication by the class of t. States are Fock vectors
// with quotient-ring coefficients; quotients by (t-c) recover the irreducible
// momentum-c module, (t-c)^2 its non-split self-extension, and t^2 the
// extension that mixes the theta-eigensectors.
struct ParamModule {
    std::shared_ptr<const QuotientRing> ring;

    explicit ParamModule(UniPoly modulus)
        : ring(std::make_shared<const QuotientRing>(std::move(modulus))) {}

    QuotientRingElem elem(const UniPoly& p) const { return {p, ring}; }
    QuotientRingElem scalar(const Rational& c) const { return {UniPoly::constant(c), ring}; }
    QuotientRingElem t() const { return {UniPoly::x(), ring}; }

    // coeff * X(-n_1)...X(-n_s) (ground state); modes undoubled
    FockVector<QuotientRingElem> state(const std::vector<int>& modesUndoubled,
                                       const UniPoly& coeff) const {
        FockMonomial<QuotientRingElem> m;
        m.momentum = t();
        for (int n : modesUndoubled) m.modes.push_back(2 * n);
        m.canonicalize();
        FockVector<QuotientRingElem> v;
        v.add_term(m, elem(coeff));
        return v;
    }
    FockVector<QuotientRingElem> ground(const UniPoly& coeff) const { return state({}, coeff); }
};

// Shifted mode action a~(n) on a parametrized state; the ground's zero-mode
// action is multiplication by the recorded ring element.
FockVector<QuotientRingElem> param_mode_apply(const QVector& a, HalfInt n,
                                              const FockVector<QuotientRingElem>& v);

// Matrix of a grade-preserving zero mode on one grade component, expanded over
// rational scalars, with its minimal polynomial.
struct JordanAnalysis {
    std::vector<std::string> basis;              // labels, row/column order
    std::vector<std::vector<Rational>> matrix;   // row i = image of basis element i
    UniPoly minimalPoly;                          // monic
    bool diagonalizable = false;                  // minimal polynomial squarefree
    size_t dimension = 0;
};

// op is "L(0)", "H4(0)" or "H6(0)". The grade-g component of the module over
// C[t]/(f) is expanded over the scalars via the ring basis 1, t, ...,
// t^{deg f - 1} -- except when f = (t-c)^k, where the basis 1, (t-c), ...,
// (t-c)^{k-1} is used so nilpotent off-diagonal parts appear directly as
// Jordan blocks.
JordanAnalysis jordan_analysis(const UniPoly& f, int grade, const std::string& op);

// Identities of the order-2 extension over C[t]/(t^2) with v+ = ground,
// v- = t * ground: theta eigensectors, L(-1)v+ = h(-1)v-, L(1)h(-1)v+ = v-.
VerificationReport theta_sector_identities();

// Full suite: ring action, theta-sector identities, Jordan blocks over
// (t-c)^2, diagonalizability over squarefree moduli, diagonal matching of the
// momentum-c oracle over (t-c), and the dimension exactness count.
VerificationReport verify_extension(const std::vector<Rational>& cs = {rat(1), rat(2),
                                                                       rat(1, 2)});

} // namespace voa
