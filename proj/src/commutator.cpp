#include "voa/commutator.hpp"

#include <mutex>
#include "voa/linalg.hpp"
#include <sstream>

namespace voa {

std::string CommutatorFormula::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c) << "*H" << 2 * key.first << "~(" << key.second << ")";
    }
    if (!is_zero(central)) {
        if (!first) os << " + ";
        first = false;
        os << to_string(central) << "*id";
    }
    if (first) os << "0";
    return os.str();
}

std::vector<std::pair<int, QVector>> ope_products(const QVector& a, const QVector& b) {
    if (a.is_zero() || b.is_zero()) return {};
    int bound = (a.grade_doubled() + b.grade_doubled()) / 2;
    std::vector<std::pair<int, QVector>> out;
    for (int i = 0; i <= bound; ++i)
        out.emplace_back(i, mode_apply_unshifted(a, HalfInt::whole(i), b, unit_profile()));
    return out;
}

std::map<int, Rational> decompose_S(const QVector& v) {
    std::map<int, Rational> out;
    if (v.is_zero()) return out;
    for (const auto& [m, c] : v.terms)
        if (m.twisted || !is_zero(m.momentum))
            throw std::invalid_argument("decompose_S: vector must lie in M(1)");
    int w2 = v.grade_doubled();
    if (w2 % 2 != 0) throw std::logic_error("decompose_S: unexpected half-integral weight");
    int w = w2 / 2;
    if (w == 0) {
        out[0] = v.terms.begin()->second;
        return out;
    }
    // basis vectors L(-1)^{w-2i} H^{2i}, i = 1..floor(w/2)
    std::vector<QVector> gens;
    std::vector<int> keys;
    for (int i = 1; 2 * i <= w; ++i) {
        QVector g = build_H(i).vector;
        for (int j = 0; j < w - 2 * i; ++j) g = virasoro_apply(-1, g, unit_profile());
        gens.push_back(std::move(g));
        keys.push_back(i);
    }
    std::map<QMonomial, size_t> index;
    for (const QVector& g : gens)
        for (const auto& [m, c] : g.terms) index.emplace(m, 0);
    for (const auto& [m, c] : v.terms) index.emplace(m, 0);
    size_t pos = 0;
    for (auto& [m, idx] : index) idx = pos++;
    auto densify = [&](const QVector& x) {
        std::vector<Rational> row(index.size(), Rational(0));
        for (const auto& [m, c] : x.terms) row[index.at(m)] = c;
        return row;
    };
    std::vector<std::vector<Rational>> genRows;
    for (const QVector& g : gens) genRows.push_back(densify(g));
    auto combo = solve_in_span(densify(v), genRows);
    if (!combo) throw std::logic_error("decompose_S: vector outside the quadratic span");
    for (size_t i = 0; i < keys.size(); ++i)
        if (!is_zero((*combo)[i])) out[keys[i]] = (*combo)[i];
    return out;
}

namespace {

// decompositions of H^{2ra}(i)H^{2rb} for all i, cached per (ra, rb)
const std::vector<std::map<int, Rational>>& ope_decompositions(int ra, int rb) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<std::map<int, Rational>>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({ra, rb});
    if (it != cache.end()) return it->second;
    std::vector<std::map<int, Rational>> decs;
    for (const auto& [i, ab] : ope_products(build_H(ra).vector, build_H(rb).vector))
        decs.push_back(decompose_S(ab));
    return cache.emplace(std::pair{ra, rb}, std::move(decs)).first->second;
}

CommutatorFormula negated(const CommutatorFormula& f) {
    CommutatorFormula out;
    for (const auto& [key, c] : f.terms) out.add(-c, key.first, key.second);
    out.central = -f.central;
    return out;
}

} // namespace

CommutatorFormula predicted_commutator(int ra, int rb, int m, int n) {
    const auto& decs = ope_decompositions(ra, rb);
    int wa = 2 * ra;
    CommutatorFormula f;
    for (size_t i = 0; i < decs.size(); ++i) {
        Rational bin = gen_binomial(rat(wa + m - 1), static_cast<unsigned>(i));
        if (is_zero(bin)) continue;
        int w = wa + 2 * rb - static_cast<int>(i) - 1; // weight of a(i)b
        for (const auto& [s, c] : decs[i]) {
            if (s == 0) {
                if (m + n == 0) f.central += bin * c;
                continue;
            }
            // (L(-1)^j c)~(p) = (-1)^j (wt c + p)(wt c + 1 + p)...(wt c + j - 1 + p) c~(p)
            int j = w - 2 * s;
            Rational tilde = 1;
            for (int t = 0; t < j; ++t) tilde *= -rat(2 * s + t + m + n);
            f.add(bin * c * tilde, s, m + n);
        }
    }
    return f;
}

NamedRelation appendix_relation(const std::string& id, int m, int n) {
    Rational M = rat(m), N = rat(n);
    NamedRelation rel{};
    if (id == "L-H4" || id == "L-H4-printed") {
        rel = {1, m, 2, n, {}};
        rel.expected.add(rat(3 * m - n), 2, m + n);
        rel.expected.add(M * (M + 1) * (3 * M + N) / 6, 1, m + n);
        // the verified central coefficient is -1/3; the -printed variant keeps
        // the displayed -5/3 so both readings can be compared
        Rational cc = id == "L-H4" ? rat(-1, 3) : rat(-5, 3);
        if (m + n == 0) rel.expected.central = cc * gen_binomial(M + 1, 5);
    } else if (id == "H4-H4") {
        rel = {2, m, 2, n, {}};
        rel.expected.add(rat(3 * (m - n)), 3, m + n);
        rel.expected.add((M - N) / 12 * (9 * M * M - 2 * M * N + 9 * N * N + 21 * M + 21 * N), 2,
                         m + n);
        Rational p = 3 * M * M * M * M + 2 * M * M * M * N + 3 * M * M * N * N +
                     2 * M * N * N * N + 3 * N * N * N * N + 12 * M * M * M + 11 * M * M * N +
                     11 * M * N * N + 12 * N * N * N + 3 * M * M + 11 * M * N + 3 * N * N -
                     18 * M - 18 * N;
        rel.expected.add((M - N) / 180 * p, 1, m + n);
        if (m + n == 0) rel.expected.central = rat(5, 3) * gen_binomial(M + 3, 7);
    } else if (id == "L-H6") {
        rel = {1, m, 3, n, {}};
        rel.expected.add(rat(5 * m - n), 3, m + n);
        rel.expected.add(3 * M * (M + 1) * (5 * M + N) / 4, 2, m + n);
        Rational p = 40 * M * M * M + 56 * M * M * N + 19 * M * N * N + N * N * N + 40 * M * M +
                     3 * M * N - 7 * N * N - 20 * M - 12 * N;
        rel.expected.add(M * (M + 1) / 120 * p, 1, m + n);
        if (m + n == 0) rel.expected.central = rat(1, 2) * gen_binomial(M + 1, 7);
    } else if (id == "tttt1") {
        rel = {2, 0, 1, m, {}};
        rel.expected.add(rat(-3 * m), 2, m);
        rel.expected.add(-M * M * (M + 1) / 2, 1, m);
    } else if (id == "tttt2" || id == "tttt2-printed") {
        rel = {2, 0, 2, m, {}};
        rel.expected.add(rat(-3 * m), 3, m);
        rel.expected.add(-M * M * (3 * M + 7) / 4, 2, m);
        // the verified denominator is 60; the -printed variant keeps the
        // displayed 180 so both readings can be compared
        rel.expected.add(-M * M * (M - 1) * (M + 2) * (M + 3) / (id == "tttt2" ? 60 : 180), 1, m);
    } else if (id == "tttt3") {
        rel = {3, 0, 1, m, {}};
        rel.expected.add(rat(-5 * m), 3, m);
        rel.expected.add(-15 * M * M * (M + 1) / 4, 2, m);
        rel.expected.add(-M * M * (M + 1) * (2 * M * M + 2 * M - 1) / 6, 1, m);
    } else if (id == "tttt4-printed") {
        rel = {2, 1, 1, m, {}};
        rel.expected.add(rat(-(3 * m - 1)), 2, 2);
        rel.expected.add(-M * (M + 1) * (3 * M + 1) / 6, 1, m + 1);
    } else if (id == "tttt4-corrected") {
        rel = {2, 1, 1, m, {}};
        rel.expected.add(rat(-(3 * m - 1)), 2, m + 1);
        rel.expected.add(-M * (M + 1) * (3 * M + 1) / 6, 1, m + 1);
    } else {
        throw std::invalid_argument("appendix_relation: unknown id " + id);
    }
    return rel;
}

namespace {

UniPoly binom_poly(int shift, int k) {
    // C(x + shift, k) as a polynomial in x
    UniPoly p = UniPoly::constant(Rational(1));
    Rational fact = 1;
    for (int t = 0; t < k; ++t) {
        p = p * UniPoly({rat(shift - t), rat(1)});
        fact *= t + 1;
    }
    return p * (Rational(1) / fact);
}

template <class R>
FockVector<R> direct_commutator(const NamedRelation& rel, const FockVector<R>& v) {
    FockVector<R> bv = h_mode(rel.rb, HalfInt::whole(rel.ib), v);
    FockVector<R> av = h_mode(rel.ra, HalfInt::whole(rel.ia), v);
    return h_mode(rel.ra, HalfInt::whole(rel.ia), bv) - h_mode(rel.rb, HalfInt::whole(rel.ib), av);
}

} // namespace

VerificationReport verify_appendix(const std::string& relation, int range,
                                   const Rational& maxWeight) {
    VerificationReport rep;
    rep.suite = relation;
    rep.params["range"] = std::to_string(range);
    rep.params["max_weight"] = to_string(maxWeight);

    // three sectors: zero momentum, a nonzero rational momentum, twisted
    std::vector<std::pair<std::string, std::vector<QMonomial>>> sectors = {
        {"e^0", basis_up_to_weight(false, rat(0), maxWeight, unit_profile())},
        {"e^3/2", basis_up_to_weight(false, rat(3, 2), maxWeight, unit_profile())},
        {"tw", basis_up_to_weight(true, rat(0), maxWeight, unit_profile())},
    };

    auto check_states = [&](const NamedRelation& rel, long& mismatches, std::string& witness) {
        for (const auto& [label, basis] : sectors)
            for (const QMonomial& bm : basis) {
                QVector v = state(bm);
                QVector lhs = direct_commutator(rel, v);
                QVector rhs = apply_formula(rel.expected, v);
                if (!(lhs == rhs)) {
                    ++mismatches;
                    if (witness.empty())
                        witness = label + " state=" + serialize(v) + " direct=" + serialize(lhs) +
                                  " formula=" + serialize(rhs);
                }
            }
    };

    bool twoParam = relation == "L-H4" || relation == "H4-H4" || relation == "L-H6";
    if (twoParam) {
        for (int m = -range; m <= range; ++m)
            for (int n = -range; n <= range; ++n) {
                NamedRelation rel = appendix_relation(relation, m, n);
                CommutatorFormula pred = predicted_commutator(rel.ra, rel.rb, rel.ia, rel.ib);
                bool formulaOk = pred == rel.expected;
                long mismatches = 0;
                std::string witness;
                check_states(rel, mismatches, witness);
                bool ok = formulaOk && mismatches == 0;
                std::string detail;
                if (!formulaOk)
                    detail = "assembled: " + pred.str() + " expected: " + rel.expected.str();
                else if (mismatches > 0)
                    detail = std::to_string(mismatches) + " state mismatches; first: " + witness;
                rep.add("m=" + std::to_string(m) + " n=" + std::to_string(n), ok, detail);
            }
        // central polynomial matched by degree-8 interpolation over m in {-4..4}
        NamedRelation probe = appendix_relation(relation, 0, 0);
        std::vector<Rational> xs, ys;
        for (int m = -4; m <= 4; ++m) {
            xs.push_back(rat(m));
            ys.push_back(predicted_commutator(probe.ra, probe.rb, m, -m).central);
        }
        UniPoly engine = lagrange_interpolate(xs, ys);
        UniPoly closed;
        if (relation == "L-H4") closed = binom_poly(1, 5) * rat(-1, 3);
        if (relation == "H4-H4") closed = binom_poly(3, 7) * rat(5, 3);
        if (relation == "L-H6") closed = binom_poly(1, 7) * rat(1, 2);
        rep.add("central polynomial", engine == closed,
                engine == closed ? "" : "interpolated central term differs from the closed form");
        if (relation == "L-H4") {
            // the displayed coefficient -5/3 vs the verified -1/3
            UniPoly printed = binom_poly(1, 5) * rat(-5, 3);
            bool correctedHolds = engine == closed && !(engine == printed);
            rep.add("central reading", correctedHolds,
                    correctedHolds
                        ? "coefficient -1/3 holds; the displayed -5/3 does not"
                        : "unexpected central coefficient: " + to_string(engine.eval(rat(5))));
        }
        return rep;
    }

    if (relation == "tttt1" || relation == "tttt2" || relation == "tttt3") {
        for (int m = -range; m <= range; ++m) {
            NamedRelation rel = appendix_relation(relation, m);
            CommutatorFormula pred = predicted_commutator(rel.ra, rel.rb, rel.ia, rel.ib);
            bool formulaOk = pred == rel.expected;
            long mismatches = 0;
            std::string witness;
            check_states(rel, mismatches, witness);
            bool ok = formulaOk && mismatches == 0;
            rep.add("m=" + std::to_string(m), ok,
                    ok ? ""
                       : (!formulaOk ? "assembled: " + pred.str() + " expected: " + rel.expected.str()
                                     : witness));
        }
        // tttt1 and tttt3 are negations of the two-parameter families at n = 0;
        // tttt2 is the (0, m) instance of H4-H4
        for (int m = -range; m <= range; ++m) {
            bool ok = true;
            if (relation == "tttt1")
                ok = appendix_relation("tttt1", m).expected ==
                     negated(appendix_relation("L-H4", m, 0).expected);
            if (relation == "tttt3")
                ok = appendix_relation("tttt3", m).expected ==
                     negated(appendix_relation("L-H6", m, 0).expected);
            if (relation == "tttt2")
                ok = appendix_relation("tttt2", m).expected ==
                     appendix_relation("H4-H4", 0, m).expected;
            rep.add("specialization m=" + std::to_string(m), ok);
        }
        if (relation == "tttt2") {
            // denominator 60 vs the displayed 180 in the L-coefficient
            bool printedFails = false;
            bool correctedHolds = true;
            for (int m = -range; m <= range; ++m) {
                CommutatorFormula pred = predicted_commutator(2, 2, 0, m);
                if (!(pred == appendix_relation("tttt2", m).expected)) correctedHolds = false;
                if (!(pred == appendix_relation("tttt2-printed", m).expected)) printedFails = true;
            }
            rep.add("coefficient reading", correctedHolds && printedFails,
                    correctedHolds && printedFails
                        ? "denominator 60 holds; the displayed 180 does not"
                        : "unexpected coefficient pattern");
        }
        return rep;
    }

    if (relation == "tttt4") {
        for (int m = -range; m <= range; ++m) {
            NamedRelation printed = appendix_relation("tttt4-printed", m);
            NamedRelation corrected = appendix_relation("tttt4-corrected", m);
            CommutatorFormula pred = predicted_commutator(printed.ra, printed.rb, printed.ia,
                                                          printed.ib);
            bool printedOk = pred == printed.expected;
            bool correctedOk = pred == corrected.expected;
            long mism = 0;
            std::string witness;
            if (correctedOk) check_states(corrected, mism, witness);
            bool ok = (printedOk || correctedOk) && mism == 0;
            std::string reading = printedOk && correctedOk ? "both readings hold"
                                  : printedOk              ? "printed reading holds"
                                  : correctedOk            ? "corrected reading holds"
                                                           : "neither reading holds";
            rep.add("m=" + std::to_string(m), ok, reading + (witness.empty() ? "" : "; " + witness));
        }
        return rep;
    }

    throw std::invalid_argument("verify_appendix: unknown relation " + relation);
}

} // namespace voa
