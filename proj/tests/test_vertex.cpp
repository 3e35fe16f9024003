#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include "voa/vertex.hpp"

using namespace voa;

namespace {
const GeneratorProfile prof{rat(1)};
QVector h1() { return state(mono({1})); } // h(-1)1

// unshifted h(x) as operator: h = h(-1)1 of weight 1, so h(x) = h~(x)
QVector h_mode(HalfInt x, const QVector& v) { return mode_apply(h1(), x, v, prof); }
} // namespace

TEST_CASE("untwisted mode action basics") {
    // h(1) h(-1)e^0 = e^0
    CHECK(h_mode(HalfInt::whole(1), state(mono({1}))) == vacuum());

    // L(0) e^{c} = (c^2/2) e^{c}
    Rational c = rat(5, 3);
    CHECK(virasoro_apply(0, momentum_state(c), prof) == state(ground_mono(c), c * c / 2));

    // L(-1) h(-1)1 = h(-2)1
    CHECK(virasoro_apply(-1, h1(), prof) == state(mono({2})));

    // L(0) counts weight
    QVector v = state(mono({3, 2, 1}, rat(1)));
    CHECK(virasoro_apply(0, v, prof) == v * rat(13, 2));

    // h(0) e^c = c e^c
    CHECK(h_mode(HalfInt::whole(0), momentum_state(c)) == momentum_state(c) * c);
}

TEST_CASE("twisted mode action basics") {
    // h(1/2) h(-1/2)1_tw = (1/2) 1_tw
    CHECK(h_mode(HalfInt::half_odd(1), state(twisted_mono({1}))) == twisted_vacuum() * rat(1, 2));

    // L(0) 1_tw = (1/16) 1_tw — the Delta_z correction at work
    CHECK(virasoro_apply(0, twisted_vacuum(), prof) == twisted_vacuum() * rat(1, 16));

    // L(0) h(-1/2)1_tw = (9/16) h(-1/2)1_tw
    QVector v = state(twisted_mono({1}));
    CHECK(virasoro_apply(0, v, prof) == v * rat(9, 16));
}

TEST_CASE("lattice exponential operators, k = 1") {
    GeneratorProfile lat{rat(2)};
    LatticeExp ea{1};
    CHECK(lattice_exp_weight(ea, lat) == 1);

    QVector em = momentum_state(rat(-1));
    QVector r = lattice_mode_apply_unshifted(ea, -1, em, lat);
    QVector expect = state(mono({1, 1})) * rat(1, 2) + state(mono({2})) * rat(1, 2);
    CHECK(r == expect);

    CHECK(lattice_mode_apply_unshifted(ea, 0, em, lat) == state(mono({1})));
    for (int n = -1; n <= 3; ++n)
        CHECK(lattice_mode_apply_unshifted(ea, n, momentum_state(rat(1)), lat).is_zero());
}

TEST_CASE("grading: shifted mode lowers weight by its index") {
    for (const auto& m : enumerate_basis(false, rat(1), 8)) {
        QVector v = state(m);
        for (int n = -2; n <= 2; ++n) {
            QVector r = mode_apply(virasoro_vector(prof), HalfInt::whole(n), v, prof);
            for (const auto& [rm, rc] : r.terms)
                CHECK(weight(rm, prof) == weight(m, prof) - n);
        }
    }
}

TEST_CASE("Heisenberg commutation on bases, both sectors") {
    auto commCheck = [&](const QVector& v, HalfInt m, HalfInt n) {
        QVector lhs = h_mode(m, h_mode(n, v)) - h_mode(n, h_mode(m, v));
        QVector expect;
        if (m + n == HalfInt(0)) expect = v * m.as_rational();
        CHECK(lhs == expect);
    };
    for (const auto& mb : enumerate_basis(false, rat(1, 2), 16))
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b)
                commCheck(state(mb), HalfInt::whole(a), HalfInt::whole(b));
    for (const auto& mb : enumerate_basis(true, rat(0), 15))
        for (int a = -5; a <= 5; a += 2)
            for (int b = -5; b <= 5; b += 2)
                commCheck(state(mb), HalfInt::half_odd(a), HalfInt::half_odd(b));
}

TEST_CASE("Virasoro relations with central charge 1, both sectors") {
    auto vir = [&](int n, const QVector& v) { return virasoro_apply(n, v, prof); };
    auto run = [&](const QVector& v) {
        for (int m = -3; m <= 3; ++m)
            for (int n = -3; n <= 3; ++n) {
                QVector lhs = vir(m, vir(n, v)) - vir(n, vir(m, v));
                QVector rhs = vir(m + n, v) * rat(m - n);
                if (m + n == 0) rhs.axpy(rat(m * m * m - m, 12), v);
                CHECK(lhs == rhs);
            }
    };
    for (const auto& mb : enumerate_basis(false, rat(0), 10)) run(state(mb));
    for (const auto& mb : enumerate_basis(false, rat(3, 2), 8)) run(state(mb));
    for (const auto& mb : enumerate_basis(true, rat(0), 9)) run(state(mb));
}

TEST_CASE("theta equivariance") {
    std::vector<QVector> ops = {h1(), virasoro_vector(prof), state(mono({2, 1})), state(mono({3}))};
    std::vector<QVector> states = {state(mono({2, 1}, rat(1))), state(mono({1, 1, 1}, rat(-1, 2))),
                                   state(twisted_mono({3, 1})), twisted_vacuum()};
    for (const QVector& a : ops)
        for (const QVector& v : states)
            for (int tw = -4; tw <= 4; ++tw) {
                HalfInt idx = HalfInt::whole(tw);
                QVector lhs = theta(mode_apply(a, idx, v, prof));
                QVector rhs = mode_apply(theta(a), idx, theta(v), prof);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("L(-1)-derivative property: (L(-1)a)(n) = -n a(n-1)") {
    std::vector<QVector> ops = {h1(), virasoro_vector(prof), state(mono({2, 1}))};
    std::vector<QVector> states = {state(mono({2, 1}, rat(1))), state(twisted_mono({1})),
                                   vacuum(), twisted_vacuum()};
    for (const QVector& a : ops) {
        QVector da = virasoro_apply(-1, a, prof);
        for (const QVector& v : states) {
            bool tw = v.terms.begin()->first.twisted;
            for (int step = -6; step <= 6; ++step) {
                HalfInt x = tw && a.terms.begin()->first.factor_count() % 2 == 1
                                ? HalfInt::half_odd(2 * step + 1)
                                : HalfInt::whole(step);
                QVector lhs = mode_apply_unshifted(da, x, v, prof);
                QVector rhs = mode_apply_unshifted(a, x - HalfInt::whole(1), v, prof) * (-x.as_rational());
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("Borcherds identity spot checks") {
    QVector omega = virasoro_vector(prof);
    CHECK(borcherds_check(omega, omega, vacuum(), 1, HalfInt::whole(0), HalfInt::whole(0), prof));
    CHECK(borcherds_check(h1(), h1(), momentum_state(rat(1)), 0, HalfInt::whole(1), HalfInt::whole(0), prof));
    CHECK(borcherds_check(omega, h1(), state(twisted_mono({1})), 0, HalfInt::half_odd(1), HalfInt::half_odd(1), prof));
}

TEST_CASE("Borcherds identity randomized samples") {
    std::mt19937_64 rng(20240817);
    std::vector<QVector> ops = {h1(), virasoro_vector(prof), state(mono({2, 1})),
                                state(mono({1, 1})), state(mono({3, 1}))};
    std::vector<QVector> unstates, twstates;
    for (const auto& m : enumerate_basis(false, rat(1), 6)) unstates.push_back(state(m));
    for (const auto& m : enumerate_basis(true, rat(0), 5)) twstates.push_back(state(m));
    auto pick = [&](const std::vector<QVector>& xs) { return xs[rng() % xs.size()]; };
    int unOk = 0, twOk = 0;
    for (int it = 0; it < 60; ++it) {
        QVector a = pick(ops), b = pick(ops);
        int p = static_cast<int>(rng() % 7) - 3;
        bool tw = it % 2 == 1;
        QVector u = tw ? pick(twstates) : pick(unstates);
        // in the twisted sector the mode indices of an operator live in
        // Z + (number of Heisenberg factors)/2
        int parA = static_cast<int>(a.terms.begin()->first.factor_count()) % 2;
        int parB = static_cast<int>(b.terms.begin()->first.factor_count()) % 2;
        HalfInt s = tw && parA ? HalfInt::half_odd(2 * (static_cast<int>(rng() % 5) - 2) + 1)
                               : HalfInt::whole(static_cast<int>(rng() % 5) - 2);
        HalfInt t = tw && parB ? HalfInt::half_odd(2 * (static_cast<int>(rng() % 5) - 2) + 1)
                               : HalfInt::whole(static_cast<int>(rng() % 5) - 2);
        CHECK(borcherds_check(a, b, u, p, s, t, prof));
        (tw ? twOk : unOk)++;
    }
    CHECK(unOk == 30);
    CHECK(twOk == 30);
}
