#pragma once

#include <vector>
#include "voa/report.hpp"
#include "voa/vertex.hpp"

namespace voa {

// H^{2r}: the unique weight-2r vector in span{1, h(-n)h(-m)1} whose zero mode
// satisfies [H~^{2r}(0), h(n)] = -n^{2r-1} h(n). H^2 = omega.
struct HVector {
    int r = 0;
    QVector vector;
    std::vector<Rational> constants; // (c_1,...,c_r)
};

// Orthonormal Heisenberg generator: the H-vector theory lives at norm 1.
inline const GeneratorProfile& unit_profile() {
    static const GeneratorProfile p{Rational(1)};
    return p;
}

// Recursive construction; results cached per r, deterministic.
const HVector& build_H(int r);

// H~^{2r}(n) applied to v (any supported sector).
template <class R>
FockVector<R> h_mode(int r, HalfInt n, const FockVector<R>& v) {
    return mode_apply(build_H(r).vector, n, v, unit_profile());
}

// eigenvalue of H~^{2r}(0) on the twisted lowest-weight state, computed by the
// engine (not a table lookup); cached
Rational q_constant(int r);

// Eigenvalue oracle for H~^{2r}(0) on a canonical basis monomial:
//   untwisted: sum n_i^{2r-1}  (plus (lambda,lambda)/2 when r = 1)
//   twisted:   q_r + sum n_i^{2r-1}
Rational h_eigenvalue(const FockMonomial<Rational>& m, int r);

// [H~^{2r}(0), h(n)]v = -n^{2r-1} h(n)v over full bases in both sectors.
VerificationReport verify_h_commutation(int r, int range, const Rational& maxWeight,
                                        const std::vector<Rational>& lambdas);

// Non-solvability of 5(h-p)(h-p-1) + 9(k-q) - 1 = 0 over the two eigenvalue
// lattices, for the three reference pairs (p,q).
VerificationReport spectral_gap_check(long bound);

// 5(H~^4(0)-h)(H~^4(0)-h-1)L(1)u + 9(H~^6(0)-k)L(1)u - L(1)u = 0 for a joint
// eigenvector u with eigenvalues (h, k); throws if u is not one.
VerificationReport lemma_yyyy_check(const QVector& u, const Rational& h, const Rational& k);

} // namespace voa
