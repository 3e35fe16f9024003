#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "voa/fock.hpp"

using namespace voa;

TEST_CASE("weights") {
    GeneratorProfile unitProf{rat(1)};
    CHECK(weight(mono({3, 1}), unitProf) == rat(4));
    GeneratorProfile latticeProf{rat(4)}; // (alpha,alpha) = 2k with k = 2
    // e^{(r/2k) alpha}: momentum r/4, weight r^2/8
    CHECK(weight(ground_mono(rat(1, 4)), latticeProf) == rat(1, 8));
    CHECK(weight(ground_mono(rat(3, 4)), latticeProf) == rat(9, 8));
    CHECK(weight(twisted_mono({1}), unitProf) == rat(9, 16));
    CHECK(weight(twisted_ground_mono(), unitProf) == rat(1, 16));
}

TEST_CASE("theta") {
    Rational lambda = rat(3, 2);
    QVector v = state(mono({1}, lambda));
    QVector tv = theta(v);
    CHECK(tv == state(mono({1}, -lambda), rat(-1)));

    GeneratorProfile prof{rat(1)};
    QVector omega = virasoro_vector(prof);
    CHECK(theta(omega) == omega);

    QVector tw = state(twisted_mono({1, 3}));
    CHECK(theta(tw) == tw);
    CHECK(theta(state(twisted_mono({5}))) == state(twisted_mono({5}), rat(-1)));
}

TEST_CASE("theta is an involution and preserves weight") {
    GeneratorProfile prof{rat(1)};
    for (const auto& m : enumerate_basis(false, rat(1, 2), 12)) {
        QVector v = state(m, rat(7, 3));
        CHECK(theta(theta(v)) == v);
        for (const auto& [tm, tc] : theta(v).terms) CHECK(weight(tm, prof) == weight(m, prof));
    }
    for (const auto& m : enumerate_basis(true, rat(0), 9)) {
        QVector v = state(m);
        CHECK(theta(theta(v)) == v);
    }
}

TEST_CASE("weight additive in added mode") {
    GeneratorProfile prof{rat(1)};
    QMonomial m = mono({4, 2, 1}, rat(1));
    for (int n = 1; n <= 5; ++n) {
        QMonomial ext = m;
        ext.modes.push_back(2 * n);
        ext.canonicalize();
        CHECK(weight(ext, prof) == weight(m, prof) + n);
    }
}

TEST_CASE("basis enumeration counts partitions") {
    // partition numbers p(0..10)
    std::vector<size_t> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int W = 0; W <= 10; ++W) {
        size_t expect = 0;
        for (int d = 0; d <= W; ++d) expect += p[d];
        CHECK(enumerate_basis(false, rat(0), 2 * W).size() == expect);
    }
}

TEST_CASE("serialize round trip") {
    GeneratorProfile prof{rat(1)};
    QVector omega = virasoro_vector(prof);
    CHECK(serialize(omega) == "1/2 * [1,1] @ e^0");
    CHECK(parse(serialize(omega)) == omega);

    QVector zero;
    CHECK(serialize(zero).empty());
    CHECK(parse("") == zero);

    QVector mixed = state(mono({3, 1}, rat(-2, 3)), rat(5, 7)) + state(mono({2, 2}, rat(-2, 3)), rat(-1));
    CHECK(parse(serialize(mixed)) == mixed);

    QVector tw = state(twisted_mono({5, 1}), rat(-3, 8)) + twisted_vacuum();
    CHECK(parse(serialize(tw)) == tw);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS(parse("1 * [1] @ tw"));            // integer mode in twisted sector
    CHECK_THROWS(parse("1 * [1/2] @ e^0"));         // half mode in untwisted sector
    CHECK_THROWS(parse("1 * [1] @ e^0 + 1 * [1/2] @ tw")); // mixed sectors
    CHECK_THROWS(parse("nonsense"));
    CHECK_THROWS(parse("1 * [0] @ e^0"));
    CHECK_THROWS(parse("1 * [1,2 @ e^0"));
}
