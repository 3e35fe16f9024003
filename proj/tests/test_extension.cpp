#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "voa/extension.hpp"

using namespace voa;

namespace {
UniPoly linear(const Rational& c) { return UniPoly({-c, Rational(1)}); }
} // namespace

TEST_CASE("ring action of the zero mode on ground states") {
    // over (t-c) the ground is the momentum-c state
    for (const Rational& c : {rat(1), rat(5, 3)}) {
        ParamModule pm(linear(c));
        auto g = pm.ground(UniPoly::constant(rat(1)));
        auto img = param_mode_apply(state(mono({1})), HalfInt::whole(0), g);
        CHECK(img == pm.ground(UniPoly::constant(c)));
        auto l0 = param_mode_apply(virasoro_vector(unit_profile()), HalfInt::whole(0), g);
        CHECK(l0 == pm.ground(UniPoly::constant(c * c / 2)));
    }
    // over (t-c)^2 the conformal zero mode mixes the two ground copies
    Rational c = rat(1);
    ParamModule pm(linear(c) * linear(c));
    auto vc = pm.ground(UniPoly::constant(rat(1)));
    auto uc = pm.ground(linear(c));
    auto l0 = param_mode_apply(virasoro_vector(unit_profile()), HalfInt::whole(0), vc);
    FockVector<QuotientRingElem> expect;
    expect.axpy(c * c / 2, vc);
    expect.axpy(c, uc);
    CHECK(l0 == expect);
}

TEST_CASE("Jordan analysis over a squared linear modulus") {
    for (const Rational& c : {rat(1), rat(2), rat(1, 2)}) {
        JordanAnalysis ja = jordan_analysis(linear(c) * linear(c), 0, "L(0)");
        REQUIRE(ja.dimension == 2);
        CHECK(ja.matrix[0][0] == c * c / 2);
        CHECK(ja.matrix[0][1] == c);
        CHECK(voa::is_zero(ja.matrix[1][0]));
        CHECK(ja.matrix[1][1] == c * c / 2);
        CHECK_FALSE(ja.diagonalizable);
        CHECK(ja.minimalPoly.degree() == 2);
    }
}

TEST_CASE("Jordan analysis over split and degenerate moduli") {
    JordanAnalysis split = jordan_analysis(UniPoly({rat(-1), rat(0), rat(1)}), 0, "L(0)");
    CHECK(split.diagonalizable);
    CHECK(split.matrix[0][0] == rat(1, 2));
    CHECK(split.matrix[1][1] == rat(1, 2));
    CHECK(voa::is_zero(split.matrix[0][1]));
    CHECK(voa::is_zero(split.matrix[1][0]));

    JordanAnalysis dbl = jordan_analysis(UniPoly({rat(0), rat(0), rat(1)}), 0, "L(0)");
    CHECK(dbl.diagonalizable);
    CHECK(voa::is_zero(dbl.matrix[0][0]));
    CHECK(voa::is_zero(dbl.matrix[0][1]));
    CHECK(voa::is_zero(dbl.matrix[1][0]));
    CHECK(voa::is_zero(dbl.matrix[1][1]));
}

TEST_CASE("theta sector identities over the double point at zero") {
    VerificationReport rep = theta_sector_identities();
    CHECK(rep.all_pass());
    if (!rep.all_pass())
        for (const auto& c : rep.cases)
            if (!c.pass) MESSAGE(c.id, " : ", c.detail);
}

TEST_CASE("full extension suite") {
    VerificationReport rep = verify_extension();
    CHECK(rep.all_pass());
    if (!rep.all_pass())
        for (const auto& c : rep.cases)
            if (!c.pass) MESSAGE(c.id, " : ", c.detail);
}
