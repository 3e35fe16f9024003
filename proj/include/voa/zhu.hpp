#pragma once

#include <string>
#include <utility>
#include <vector>
#include "voa/hvectors.hpp"
#include "voa/report.hpp"

namespace voa {

// Zhu product a*b = sum_j C(wt a, j) a(j-1)b. Non-homogeneous a is split into
// weight components; both arguments must be untwisted momentum-0 states.
QVector star(const QVector& a, const QVector& b, const GeneratorProfile& prof = unit_profile());

// a o b = sum_i C(wt a, i) a(i-2)b; these products span the ideal O(V) whose
// quotient carries the associative top-level product.
QVector circ(const QVector& a, const QVector& b, const GeneratorProfile& prof = unit_profile());

// Zhu product whose left factor is the combination sum_m c_m e^{m alpha} of
// exponentials of the profile's lattice generator.
QVector lattice_star(const std::vector<std::pair<int, Rational>>& a, const QVector& b,
                     const GeneratorProfile& prof);

// Replayable witness that a vector lies in the span of the circ generators.
struct MembershipCertificate {
    bool proved = false;
    int cutoff = 0; // certifying weight bound if proved, else the last bound tried
    struct Term {
        std::string a, b; // serialized generator pair; the generator is circ(a, b)
        Rational coeff;
    };
    std::vector<Term> combination;
};

// Decide membership of v in span{circ(a,b) : wt a + wt b + 1 <= cutoff} with
// a, b running over even-factor-count monomials (the theta-fixed basis).
// Proved is definitive; an unproved outcome at one cutoff is not a disproof.
MembershipCertificate ov_membership(const QVector& v, int cutoff);

// Iterative deepening from the top weight of v in steps of 2 up to maxCutoff
// (at least one attempt is made even if the top weight exceeds maxCutoff).
MembershipCertificate ov_membership_deepening(const QVector& v, int maxCutoff);

// Recompute the certified combination and compare with v exactly.
bool replay_certificate(const MembershipCertificate& cert, const QVector& v);

// Grade-preserving action a~(0) on top-level states of any supported sector.
template <class R>
FockVector<R> o_action(const QVector& a, const FockVector<R>& u) {
    return mode_apply(a, HalfInt::whole(0), u, unit_profile());
}

// The theta-fixed weight-4 Virasoro singular vector
// h(-1)^4 1 - 2 h(-3)h(-1)1 + (3/2) h(-2)^2 1.
QVector quartic_singular_vector();

// True iff the weight-homogeneous u is a top-level state of a module with the
// given lowest weight: L(n)u and H~^4(n)u vanish for 1 <= n <= wt u - lowest.
bool omega_test(const QVector& u, const Rational& lowestWeight);

// The fifteen grade-preserving eigenvalues of L(0), H~^4(0), H~^6(0) on the
// five lowest-weight states (vacuum, h(-1)1, e^lambda, 1_tw, h(-1/2)1_tw).
VerificationReport verify_table1(const std::vector<Rational>& lambdas);

// Defining relations of the top-level algebra in the generators [omega], [J]
// and [omega], [H^4]: commutativity, the cubic annihilator, and the quadratic
// relation, each certified by circ-span membership and by vanishing top action.
VerificationReport verify_zhu_relations(int maxCutoff,
                                        const std::vector<Rational>& lambdas = {rat(1), rat(3, 2),
                                                                                rat(1, 2)});

// The three projection idempotents onto the tops of the weight-1 module and
// the two twisted modules: idempotency and absorption certified by membership,
// projection pattern checked on all five top states.
VerificationReport verify_idempotents(int maxCutoff = 18,
                                      const std::vector<Rational>& lambdas = {rat(1), rat(3, 2),
                                                                              rat(1, 2)});

// Lattice checks at norm (alpha,alpha) = 2k: the doubled exponential squares
// to four times the conformal vector (k = 1), and the fractional-momentum
// sector e^{r alpha / 2k} has lowest weight r^2/4k.
VerificationReport verify_lattice(int k);

} // namespace voa
