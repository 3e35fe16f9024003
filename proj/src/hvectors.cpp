#include "voa/hvectors.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace voa {
namespace {

Rational rat_factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

HVector make_H(int r, const std::deque<HVector>& lower) {
    std::vector<Rational> cs = odd_poly_coeffs(r);
    QVector acc = state(mono({r, r})); // h(-r)^2 1
    for (int i = 1; i < r; ++i) {
        Rational f = cs[i - 1] * rat_factorial(2 * i - 1) / rat_factorial(2 * r - 1);
        QVector w = lower[i - 1].vector;
        for (int j = 0; j < 2 * r - 2 * i; ++j) w = virasoro_apply(-1, w, unit_profile());
        acc.axpy(-f, w);
    }
    return {r, acc * (Rational(1) / cs[r - 1]), std::move(cs)};
}

} // namespace

const HVector& build_H(int r) {
    if (r < 1) throw std::invalid_argument("build_H: r must be >= 1");
    static std::mutex mu;
    static std::deque<HVector> cache; // deque: stable references across growth
    std::lock_guard<std::mutex> lk(mu);
    while (static_cast<int>(cache.size()) < r) {
        int rr = static_cast<int>(cache.size()) + 1;
        if (rr == 1)
            cache.push_back({1, virasoro_vector(unit_profile()), odd_poly_coeffs(1)});
        else
            cache.push_back(make_H(rr, cache));
    }
    return cache[static_cast<size_t>(r - 1)];
}

Rational q_constant(int r) {
    static std::mutex mu;
    static std::map<int, Rational> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(r);
        if (it != cache.end()) return it->second;
    }
    QVector v = h_mode(r, HalfInt::whole(0), twisted_vacuum());
    Rational q = 0;
    if (!v.is_zero()) {
        if (v.terms.size() != 1 || !(v.terms.begin()->first == twisted_ground_mono()))
            throw std::logic_error("q_constant: zero mode does not act as a scalar on the twisted ground state");
        q = v.terms.begin()->second;
    }
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(r, q);
    return q;
}

Rational h_eigenvalue(const FockMonomial<Rational>& m, int r) {
    if (r < 1) throw std::invalid_argument("h_eigenvalue: r must be >= 1");
    Rational acc = 0;
    for (int d : m.modes) acc += pow_rational(rat(d, 2), 2 * r - 1);
    if (m.twisted) return q_constant(r) + acc;
    if (r == 1) acc += m.momentum * m.momentum / 2;
    return acc;
}

VerificationReport verify_h_commutation(int r, int range, const Rational& maxWeight,
                                        const std::vector<Rational>& lambdas) {
    VerificationReport rep;
    rep.suite = "hcomm";
    rep.params["r"] = std::to_string(r);
    rep.params["range"] = std::to_string(range);
    rep.params["max_weight"] = to_string(maxWeight);
    const GeneratorProfile& prof = unit_profile();
    const QVector h1 = state(mono({1}));

    auto run_sector = [&](const std::string& label, const std::vector<QMonomial>& basis,
                          const std::vector<HalfInt>& indices) {
        for (HalfInt n : indices) {
            long mismatches = 0;
            std::string witness;
            for (const QMonomial& bm : basis) {
                QVector v = state(bm);
                QVector hv = mode_apply(h1, n, v, prof);
                QVector lhs = h_mode(r, HalfInt::whole(0), hv) -
                              mode_apply(h1, n, h_mode(r, HalfInt::whole(0), v), prof);
                QVector rhs = hv * (-pow_rational(n.as_rational(), 2 * r - 1));
                if (!(lhs == rhs)) {
                    ++mismatches;
                    if (witness.empty())
                        witness = "state=" + serialize(v) + " lhs=" + serialize(lhs) +
                                  " rhs=" + serialize(rhs);
                }
            }
            rep.add(label + " n=" + n.str(), mismatches == 0,
                    mismatches == 0 ? "" : std::to_string(mismatches) + " mismatches; first: " + witness);
        }
    };

    std::vector<HalfInt> whole, halves;
    for (int i = -range; i <= range; ++i) whole.push_back(HalfInt::whole(i));
    for (int d = -(2 * range - 1); d <= 2 * range - 1; d += 2) halves.push_back(HalfInt(d));

    for (const Rational& lam : lambdas)
        run_sector("momentum " + to_string(lam), basis_up_to_weight(false, lam, maxWeight, prof),
                   whole);
    run_sector("twisted", basis_up_to_weight(true, Rational(0), maxWeight, prof), halves);
    return rep;
}

namespace {

struct PairLess {
    bool operator()(const std::pair<Rational, Rational>& x,
                    const std::pair<Rational, Rational>& y) const {
        int c = cmp(x.first, y.first);
        if (c != 0) return c < 0;
        return cmp(x.second, y.second) < 0;
    }
};
using PairSet = std::set<std::pair<Rational, Rational>, PairLess>;

// all (sum n^3, sum n^5) over multisets drawn from the given mode values,
// restricted to sum n^3 <= cap
void coupled_pairs(const std::vector<Rational>& cubes, const std::vector<Rational>& fifths,
                   size_t idx, const Rational& cap, const Rational& h, const Rational& k,
                   PairSet& out) {
    out.insert({h, k});
    for (size_t i = idx; i < cubes.size(); ++i)
        if (cmp(h + cubes[i], cap) <= 0)
            coupled_pairs(cubes, fifths, i, cap, h + cubes[i], k + fifths[i], out);
}

} // namespace

VerificationReport spectral_gap_check(long bound) {
    VerificationReport rep;
    rep.suite = "gap";
    rep.params["bound"] = std::to_string(bound);

    const std::vector<std::pair<Rational, Rational>> refs = {
        {rat(0), rat(0)}, {rat(-1, 128), rat(1, 256)}, {rat(15, 128), rat(9, 256)}};
    auto gap_value = [](const Rational& h, const Rational& k, const Rational& p,
                        const Rational& q) -> Rational {
        return 5 * (h - p) * (h - p - 1) + 9 * (k - q) - 1;
    };

    struct Family {
        std::string name;
        Rational hBase, kBase;
        Rational hStep, kStep; // eigenvalue components lie in base + step*Z>=0
        bool twisted;
    };
    const std::vector<Family> families = {
        {"untwisted", rat(0), rat(0), rat(1), rat(1), false},
        {"twisted", rat(-1, 128), rat(1, 256), rat(1, 8), rat(1, 32), true},
    };

    // Joint (H~^4(0), H~^6(0)) eigenvalue pairs actually realized by states:
    // both components come from one mode multiset, (sum n^3, sum n^5).
    std::vector<PairSet> realizable(families.size());
    for (size_t fi = 0; fi < families.size(); ++fi) {
        const Family& fam = families[fi];
        Rational cap = fam.hStep * rat(bound);
        std::vector<Rational> cubes, fifths;
        for (int d = fam.twisted ? 1 : 2;; d += 2) {
            Rational n = rat(d, 2);
            Rational c3 = pow_rational(n, 3);
            if (cmp(c3, cap) > 0) break;
            cubes.push_back(c3);
            fifths.push_back(pow_rational(n, 5));
        }
        PairSet raw;
        coupled_pairs(cubes, fifths, 0, cap, rat(0), rat(0), raw);
        for (const auto& [h, k] : raw) realizable[fi].insert({fam.hBase + h, fam.kBase + k});
    }

    // the gap polynomial never vanishes on a realizable pair
    for (size_t fi = 0; fi < families.size(); ++fi)
        for (size_t ri = 0; ri < refs.size(); ++ri) {
            const auto& [p, q] = refs[ri];
            long zeros = 0;
            std::string witness;
            for (const auto& [h, k] : realizable[fi])
                if (is_zero(gap_value(h, k, p, q))) {
                    ++zeros;
                    if (witness.empty()) witness = "h=" + to_string(h) + " k=" + to_string(k);
                }
            rep.add("realizable " + families[fi].name + " ref " + std::to_string(ri), zeros == 0,
                    zeros == 0 ? "" : std::to_string(zeros) + " zeros; first: " + witness);
        }

    // Relaxed scan over the full product lattice (h, k components varied
    // independently): the polynomial may vanish, but only at the corner point
    // (p+1/2, q+1/4), which the coupled check above shows is never realized.
    for (size_t fi = 0; fi < families.size(); ++fi) {
        const Family& fam = families[fi];
        for (size_t ri = 0; ri < refs.size(); ++ri) {
            const auto& [p, q] = refs[ri];
            const std::pair<Rational, Rational> corner{p + rat(1, 2), q + rat(1, 4)};
            long stray = 0;
            std::string witness;
            for (long a = 0; a <= bound; ++a) {
                Rational h = fam.hBase + fam.hStep * rat(a);
                Rational hpart = 5 * (h - p) * (h - p - 1) - 1;
                for (long b = 0; b <= bound; ++b) {
                    Rational k = fam.kBase + fam.kStep * rat(b);
                    if (!is_zero(hpart + 9 * (k - q))) continue;
                    bool isCorner = cmp(h, corner.first) == 0 && cmp(k, corner.second) == 0 &&
                                    realizable[fi].count(corner) == 0;
                    if (!isCorner) {
                        ++stray;
                        if (witness.empty()) witness = "h=" + to_string(h) + " k=" + to_string(k);
                    }
                }
            }
            rep.add("product lattice " + families[fi].name + " ref " + std::to_string(ri),
                    stray == 0,
                    stray == 0 ? "" : std::to_string(stray) + " non-corner zeros; first: " + witness);
        }
    }
    return rep;
}

VerificationReport lemma_yyyy_check(const QVector& u, const Rational& h, const Rational& k) {
    if (u.is_zero()) throw std::invalid_argument("lemma_yyyy_check: zero vector");
    if (!(h_mode(2, HalfInt::whole(0), u) == u * h) ||
        !(h_mode(3, HalfInt::whole(0), u) == u * k))
        throw std::invalid_argument("lemma_yyyy_check: u is not a joint eigenvector for (h, k)");
    VerificationReport rep;
    rep.suite = "lemma-eigen-recursion";
    rep.params["h"] = to_string(h);
    rep.params["k"] = to_string(k);
    QVector w = virasoro_apply(1, u, unit_profile());
    QVector a = h_mode(2, HalfInt::whole(0), w) - w * (h + 1);
    QVector b = h_mode(2, HalfInt::whole(0), a) - a * h;
    QVector total = b * rat(5) + (h_mode(3, HalfInt::whole(0), w) - w * k) * rat(9) - w;
    rep.add("identity on " + serialize(u), total.is_zero(),
            total.is_zero() ? "" : "residual: " + serialize(total));
    return rep;
}

} // namespace voa
