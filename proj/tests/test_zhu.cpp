#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "voa/zhu.hpp"

using namespace voa;

namespace {
const GeneratorProfile& prof = unit_profile();
QVector omega() { return virasoro_vector(prof); }
} // namespace

TEST_CASE("unit and derivative laws of the quotient products") {
    QVector H4 = build_H(2).vector;
    CHECK(star(vacuum(), H4) == H4);
    CHECK(star(omega(), vacuum()) == omega());
    CHECK(circ(QVector{}, H4).is_zero());
    // a(-2)1 = L(-1)a and a(-1)1 = a give circ(a, 1) = L(-1)a + (wt a) a
    CHECK(circ(omega(), vacuum()) ==
          virasoro_apply(-1, omega(), prof) + omega() * rat(2));
    CHECK(circ(H4, vacuum()) == virasoro_apply(-1, H4, prof) + H4 * rat(4));
}

TEST_CASE("membership certification in the circ span") {
    QVector H4 = build_H(2).vector;
    // a generator certifies at its own weight
    QVector gen = circ(omega(), H4);
    MembershipCertificate c1 = ov_membership_deepening(gen, 14);
    CHECK(c1.proved);
    CHECK(c1.cutoff == 7);
    CHECK(replay_certificate(c1, gen));
    // L(-1)omega + 2 omega = circ(omega, 1)
    QVector v = virasoro_apply(-1, omega(), prof) + omega() * rat(2);
    MembershipCertificate c2 = ov_membership_deepening(v, 14);
    CHECK(c2.proved);
    CHECK(replay_certificate(c2, v));
    // the conformal vector is not in the span at any tested cutoff
    for (int W : {2, 4, 6, 8, 10})
        CHECK_FALSE(ov_membership(omega(), W).proved);
}

TEST_CASE("grade-preserving action on lowest-weight states") {
    CHECK(o_action(omega(), state(mono({1}))) == state(mono({1})));
    CHECK(o_action(build_H(2).vector, twisted_vacuum()) == twisted_vacuum() * rat(-1, 128));
    CHECK(o_action(build_H(3).vector, momentum_state(rat(2))).is_zero());
}

TEST_CASE("top-level criterion via positive modes") {
    CHECK(omega_test(momentum_state(rat(5, 3)), rat(25, 18)));
    CHECK(omega_test(state(mono({1})), rat(1)));
    CHECK(omega_test(twisted_vacuum(), rat(1, 16)));
    CHECK_FALSE(omega_test(state(mono({2})), rat(1)));
    CHECK_FALSE(omega_test(state(mono({1, 1})), rat(0)));
}

TEST_CASE("the fifteen top-level eigenvalues") {
    VerificationReport rep = verify_table1({rat(1), rat(3, 2), rat(1, 2)});
    CHECK(rep.all_pass());
    CHECK(rep.cases.size() == 15);
}

TEST_CASE("multiplicativity of the top-level action") {
    std::vector<QVector> gens = {omega(), build_H(2).vector, quartic_singular_vector()};
    std::vector<QVector> tops = {vacuum(), state(mono({1})), momentum_state(rat(1)),
                                 twisted_vacuum(), state(twisted_mono({1}))};
    for (const QVector& a : gens)
        for (const QVector& b : gens)
            for (const QVector& u : tops)
                CHECK(o_action(star(a, b), u) == o_action(a, o_action(b, u)));
    // the circ span acts as zero on every top
    for (const QVector& a : gens)
        for (const QVector& b : gens)
            for (const QVector& u : tops)
                CHECK(o_action(circ(a, b), u).is_zero());
}

TEST_CASE("image of the fixed-point generators in the full top-level algebra") {
    for (const Rational& c : {rat(1), rat(5, 3), rat(-2)}) {
        QVector u = momentum_state(c);
        CHECK(o_action(omega(), u) == u * (c * c / 2));
        CHECK(o_action(build_H(2).vector, u).is_zero());
    }
}

TEST_CASE("defining relations of the top-level algebra") {
    VerificationReport rep = verify_zhu_relations(14);
    CHECK(rep.all_pass());
    if (!rep.all_pass())
        for (const auto& c : rep.cases)
            if (!c.pass) MESSAGE(c.id, " : ", c.detail);
}

TEST_CASE("projection idempotents onto the three exceptional tops") {
    VerificationReport rep = verify_idempotents();
    CHECK(rep.all_pass());
    if (!rep.all_pass())
        for (const auto& c : rep.cases)
            if (!c.pass) MESSAGE(c.id, " : ", c.detail);
}

TEST_CASE("lattice profile checks") {
    for (int k : {1, 2, 3}) {
        VerificationReport rep = verify_lattice(k);
        CHECK(rep.all_pass());
        if (!rep.all_pass())
            for (const auto& c : rep.cases)
                if (!c.pass) MESSAGE("k=", k, " ", c.id, " : ", c.detail);
    }
}
