#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "voa/biseries.hpp"
#include "voa/linalg.hpp"
#include "voa/poly.hpp"
#include "voa/rational.hpp"

using namespace voa;

TEST_CASE("gen_binomial basics") {
    CHECK(gen_binomial(rat(5), 0) == rat(1));
    CHECK(gen_binomial(rat(-3, 2), 2) == rat(15, 8));
    CHECK(gen_binomial(rat(3), 5) == rat(0));
    CHECK(gen_binomial(rat(7), 3) == rat(35));
    CHECK(gen_binomial(rat(-1), 2) == rat(1));
    CHECK(gen_binomial(rat(-2), 1) == rat(-2));
}

TEST_CASE("gen_binomial Pascal identity") {
    std::vector<Rational> xs = {rat(0), rat(1), rat(-3), rat(7, 2), rat(-5, 3), rat(12), rat(1, 16)};
    for (const Rational& x : xs)
        for (unsigned m = 1; m <= 12; ++m)
            CHECK(gen_binomial(x, m) == gen_binomial(x - 1, m) + gen_binomial(x - 1, m - 1));
}

TEST_CASE("odd_poly_coeffs closed values") {
    CHECK(odd_poly_coeffs(1) == std::vector<Rational>{rat(2)});
    CHECK(odd_poly_coeffs(2) == std::vector<Rational>{rat(2), rat(-2)});
    CHECK(odd_poly_coeffs(3) == std::vector<Rational>{rat(2), rat(-5, 2), rat(1, 2)});
    auto c4 = odd_poly_coeffs(4);
    CHECK(c4.size() == 4);
    CHECK(!is_zero(c4[3]));
}

TEST_CASE("odd_poly_coeffs re-evaluation matches defining product") {
    for (int r = 1; r <= 5; ++r) {
        auto cs = odd_poly_coeffs(r);
        for (int n = 1; n <= 2 * r; ++n) {
            Rational lhs = 0;
            for (int i = 1; i <= r; ++i) lhs += cs[i - 1] * pow_rational(rat(n), 2 * i - 1);
            Rational rhs = rat(r % 2 == 1 ? 2 * r : -2 * r) *
                           gen_binomial(rat(n + r - 1), r - 1) * gen_binomial(rat(n), r);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("solve_in_span basics") {
    using V = std::vector<Rational>;
    auto zero = solve_in_span(V{rat(0), rat(0)}, {V{rat(1), rat(0)}});
    REQUIRE(zero.has_value());
    CHECK(*zero == V{rat(0)});

    auto both = solve_in_span(V{rat(1), rat(1)}, {V{rat(1), rat(0)}, V{rat(0), rat(1)}});
    REQUIRE(both.has_value());
    CHECK(*both == V{rat(1), rat(1)});

    CHECK(!solve_in_span(V{rat(1), rat(0)}, {V{rat(0), rat(1)}}).has_value());
}

TEST_CASE("solve_in_span round trip property") {
    using V = std::vector<Rational>;
    std::vector<V> gens = {
        V{rat(2), rat(1), rat(0), rat(-1)},
        V{rat(0), rat(3), rat(1), rat(2)},
        V{rat(2), rat(4), rat(1), rat(1)}, // dependent: gen0 + gen1
        V{rat(1), rat(0), rat(0), rat(5)},
    };
    V target(4, rat(0));
    std::vector<Rational> mix = {rat(1, 3), rat(-2), rat(5, 7), rat(4)};
    for (size_t g = 0; g < gens.size(); ++g)
        for (size_t i = 0; i < 4; ++i) target[i] += mix[g] * gens[g][i];
    auto combo = solve_in_span(target, gens);
    REQUIRE(combo.has_value());
    V back(4, rat(0));
    for (size_t g = 0; g < gens.size(); ++g)
        for (size_t i = 0; i < 4; ++i) back[i] += (*combo)[g] * gens[g][i];
    CHECK(back == target);
}

TEST_CASE("delta_series values and symmetry") {
    BiSeries d0 = delta_series(0);
    CHECK(d0.is_zero());
    BiSeries d = delta_series(8);
    CHECK(d.coeff(0, 0) == rat(0));
    CHECK(d.coeff(1, 1) == rat(1, 16));
    for (const auto& [k, v] : d.c) CHECK(v == d.coeff(k.second, k.first));
}

TEST_CASE("polynomial quotient ring arithmetic") {
    auto ring = std::make_shared<QuotientRing>(UniPoly({rat(-1), rat(0), rat(1)})); // t^2 - 1
    QuotientRingElem t(UniPoly::x(), ring);
    QuotientRingElem one(UniPoly::constant(rat(1)), ring);
    CHECK(t * t == one);
    CHECK((t + one) * (t - one) == QuotientRingElem(UniPoly(), ring));
    CHECK(t.sigma() == -t);
}

TEST_CASE("poly gcd and squarefree detection") {
    UniPoly t = UniPoly::x();
    UniPoly sq = (t - UniPoly::constant(rat(2))) * (t - UniPoly::constant(rat(2)));
    CHECK(!is_squarefree(sq));
    CHECK(is_squarefree((t - UniPoly::constant(rat(1))) * (t + UniPoly::constant(rat(1)))));
    CHECK(poly_gcd(sq, sq.derivative()) == (t - UniPoly::constant(rat(2))).monic());
}

TEST_CASE("lagrange interpolation") {
    std::vector<Rational> xs, ys;
    UniPoly p({rat(1), rat(-3), rat(0), rat(2)}); // 2x^3 - 3x + 1
    for (int i = -3; i <= 3; ++i) {
        xs.push_back(rat(i));
        ys.push_back(p.eval(rat(i)));
    }
    CHECK(lagrange_interpolate(xs, ys) == p);
}
