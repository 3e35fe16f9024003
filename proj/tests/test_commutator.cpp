#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "voa/commutator.hpp"

using namespace voa;

namespace {
const GeneratorProfile& prof = unit_profile();
QVector omega() { return virasoro_vector(prof); }
} // namespace

TEST_CASE("products of the conformal vector with itself") {
    auto prods = ope_products(omega(), omega());
    REQUIRE(prods.size() == 5); // i = 0..4
    CHECK(prods[0].second == virasoro_apply(-1, omega(), prof)); // L(-1)omega
    CHECK(prods[1].second == omega() * rat(2));
    CHECK(prods[2].second.is_zero());
    CHECK(prods[3].second == vacuum() * rat(1, 2)); // central charge 1
    CHECK(prods[4].second.is_zero());               // beyond wt a + wt b - 1
}

TEST_CASE("derivative product rule inside the quadratic span") {
    CHECK(ope_products(omega(), build_H(2).vector)[0].second ==
          virasoro_apply(-1, build_H(2).vector, prof));
}

TEST_CASE("decomposition over the derivative-filtered basis") {
    auto dec = decompose_S(state(mono({2, 2})));
    REQUIRE(dec.size() == 2);
    CHECK(dec.at(1) == rat(1, 3)); // L(-1)^2 omega
    CHECK(dec.at(2) == rat(-2));   // H^4
    auto triv = decompose_S(build_H(3).vector);
    REQUIRE(triv.size() == 1);
    CHECK(triv.at(3) == rat(1));
    auto dOmega = decompose_S(virasoro_apply(-1, omega(), prof));
    REQUIRE(dOmega.size() == 1);
    CHECK(dOmega.at(1) == rat(1));
    auto scalar = decompose_S(vacuum() * rat(7, 3));
    CHECK(scalar.at(0) == rat(7, 3));
    CHECK_THROWS_AS(decompose_S(state(mono({1, 1, 1, 1}))), std::logic_error);
}

TEST_CASE("assembled commutators match known instances") {
    CommutatorFormula f = predicted_commutator(1, 2, 1, 0); // [L(1), H4~(0)]
    CommutatorFormula expect;
    expect.add(rat(3), 2, 1);
    expect.add(rat(1), 1, 1);
    CHECK(f == expect);

    CommutatorFormula g = predicted_commutator(1, 2, 4, -4); // [L(4), H4~(-4)]
    CommutatorFormula gexpect;
    gexpect.add(rat(16), 2, 0);
    gexpect.add(rat(80, 3), 1, 0);
    gexpect.central = rat(-1, 3);
    CHECK(g == gexpect);

    // Virasoro with central charge 1
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
            CommutatorFormula v = predicted_commutator(1, 1, m, n);
            CommutatorFormula vexpect;
            vexpect.add(rat(m - n), 1, m + n);
            if (m + n == 0) vexpect.central = rat(1L * m * m * m - m, 12);
            CHECK(v == vexpect);
        }

    // central term of [H4~(4), H4~(-4)]
    CHECK(predicted_commutator(2, 2, 4, -4).central == rat(5, 3));
}

TEST_CASE("two-parameter commutator families hold on states") {
    for (const char* rel : {"L-H4", "H4-H4", "L-H6"}) {
        VerificationReport rep = verify_appendix(rel, 2, rat(4));
        CHECK(rep.all_pass());
        if (!rep.all_pass())
            for (const auto& c : rep.cases)
                if (!c.pass) MESSAGE(rel, " ", c.id, " : ", c.detail);
    }
}

TEST_CASE("zero-mode commutator specializations hold on states") {
    for (const char* rel : {"tttt1", "tttt2", "tttt3"}) {
        VerificationReport rep = verify_appendix(rel, 3, rat(4));
        CHECK(rep.all_pass());
    }
}

TEST_CASE("the index-shift relation holds in its corrected reading") {
    VerificationReport rep = verify_appendix("tttt4", 2, rat(4));
    CHECK(rep.all_pass());
    for (const auto& c : rep.cases) {
        if (c.id == "m=1")
            CHECK(c.detail.find("both readings hold") != std::string::npos);
        else if (c.id.rfind("m=", 0) == 0)
            CHECK(c.detail.find("corrected reading holds") != std::string::npos);
    }
}
