#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>
#include "voa/hvectors.hpp"
#include "voa/report.hpp"

namespace voa {

// A commutator of two shifted modes, resolved into a finite combination of
// shifted modes of the quadratic generators plus a central scalar:
//   [a~(m), b~(n)] = sum coeff * H~^{2r}(index) + central * id
struct CommutatorFormula {
    std::map<std::pair<int, int>, Rational> terms; // (r, index) -> coefficient
    Rational central = 0;

    void add(const Rational& c, int r, int index) {
        if (is_zero(c)) return;
        Rational& slot = terms[{r, index}];
        slot += c;
        if (is_zero(slot)) terms.erase({r, index});
    }
    friend bool operator==(const CommutatorFormula& a, const CommutatorFormula& b) {
        return a.terms == b.terms && cmp(a.central, b.central) == 0;
    }
    std::string str() const;
};

template <class R>
FockVector<R> apply_formula(const CommutatorFormula& f, const FockVector<R>& v) {
    FockVector<R> out;
    for (const auto& [key, c] : f.terms)
        out.axpy(c, h_mode(key.first, HalfInt::whole(key.second), v));
    out.axpy(f.central, v);
    return out;
}

// all products a(i)b for 0 <= i <= wt a + wt b (higher i vanish by grading)
std::vector<std::pair<int, QVector>> ope_products(const QVector& a, const QVector& b);

// coefficients of a homogeneous v over {L(-1)^j H^{2i} : 2i + j = wt v, i >= 1},
// keyed by i; the vacuum coordinate (weight 0) is keyed by 0. Throws if v is
// outside the span.
std::map<int, Rational> decompose_S(const QVector& v);

// assemble [H~^{2ra}(m), H~^{2rb}(n)] from OPE data via the commutativity
// formula: sum_i C(wt a + m - 1, i) (a(i)b)~(m+n)
CommutatorFormula predicted_commutator(int ra, int rb, int m, int n);

// One named relation [H~^{2ra}(ia), H~^{2rb}(ib)] = expected, instantiated at
// (m, n). Ids: L-H4, H4-H4, L-H6 (two-parameter); tttt1, tttt2, tttt3,
// tttt4-printed, tttt4-corrected (one-parameter, n ignored).
struct NamedRelation {
    int ra, ia, rb, ib;
    CommutatorFormula expected;
};
NamedRelation appendix_relation(const std::string& id, int m, int n = 0);

// relation in {L-H4, H4-H4, L-H6, tttt1, tttt2, tttt3, tttt4}
VerificationReport verify_appendix(const std::string& relation, int range,
                                   const Rational& maxWeight);

} // namespace voa
