#include "voa/vertex.hpp"

namespace voa {
namespace {

// enumerate partitions of P (undoubled parts >= 1), calling f with each
// partition given as (part, multiplicity) pairs
void partitions(int P, int maxPart, std::vector<std::pair<int, int>>& cur,
                const std::function<void(const std::vector<std::pair<int, int>>&)>& f) {
    if (P == 0) {
        f(cur);
        return;
    }
    for (int p = std::min(P, maxPart); p >= 1; --p) {
        int maxMult = P / p;
        for (int mult = maxMult; mult >= 1; --mult) {
            cur.emplace_back(p, mult);
            partitions(P - p * mult, p - 1, cur, f);
            cur.pop_back();
        }
    }
}

Rational int_pow(const Rational& b, int e) {
    Rational acc = 1;
    for (int i = 0; i < e; ++i) acc *= b;
    return acc;
}

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

// Coefficient of z^{-x-1} in
//   exp(sum_{q>=1} (m/q) alpha(-q) z^q) exp(-sum_{q>=1} (m/q) alpha(q) z^{-q})
//   (ground shift by m*alpha) z^{(m alpha, ground)}
// applied to v.
QVector lattice_mode_apply_unshifted(const LatticeExp& e, int x, const QVector& v,
                                     const GeneratorProfile& prof) {
    QVector out;
    for (const auto& [vm, vc] : v.terms) {
        if (vm.twisted)
            throw std::invalid_argument("lattice_mode_apply: twisted state unsupported");
        Rational p0q = rat(e.m) * vm.momentum * prof.norm; // (m alpha, c alpha)
        if (p0q.get_den() != 1)
            throw std::invalid_argument("lattice_mode_apply: non-integral pairing; state not in a lattice sector");
        long p0 = p0q.get_num().get_si();

        // distinct (doubled value, multiplicity) of the state's modes
        std::vector<std::pair<int, int>> dist;
        for (int d : vm.modes) {
            if (!dist.empty() && dist.back().first == d) dist.back().second++;
            else dist.emplace_back(d, 1);
        }

        // annihilation choices: per distinct mode q with multiplicity mu remove
        // j copies, coefficient C(mu,j)(-mN)^j, z-power -q*j
        std::function<void(size_t, Rational, int, std::vector<int>&)> annih =
            [&](size_t idx, Rational coeff, int removedPowerDoubled, std::vector<int>& kept) {
                if (idx == dist.size()) {
                    long P2 = -2L * x - 2 - 2 * p0 + removedPowerDoubled; // doubled creation power
                    if (P2 < 0 || P2 % 2 != 0) return;
                    int P = static_cast<int>(P2 / 2);
                    std::vector<std::pair<int, int>> cur;
                    partitions(P, P == 0 ? 1 : P, cur,
                               [&](const std::vector<std::pair<int, int>>& parts) {
                                   Rational c2 = coeff;
                                   QMonomial nm;
                                   nm.momentum = vm.momentum + e.m;
                                   nm.modes = kept;
                                   for (auto [q, mult] : parts) {
                                       c2 *= int_pow(rat(e.m), mult);
                                       c2 /= int_pow(rat(q), mult) * factorial(mult);
                                       for (int i = 0; i < mult; ++i) nm.modes.push_back(2 * q);
                                   }
                                   nm.canonicalize();
                                   out.add_term(nm, vc * c2);
                               });
                    return;
                }
                auto [d, mu] = dist[idx];
                Rational base = rat(-e.m) * prof.norm;
                Rational binom = 1, powb = 1;
                for (int j = 0; j <= mu; ++j) {
                    for (int i = 0; i < mu - j; ++i) kept.push_back(d);
                    annih(idx + 1, coeff * binom * powb, removedPowerDoubled + d * j, kept);
                    for (int i = 0; i < mu - j; ++i) kept.pop_back();
                    binom *= rat(mu - j, j + 1);
                    powb *= base;
                }
            };
        std::vector<int> kept;
        annih(0, Rational(1), 0, kept);
    }
    return out;
}

} // namespace voa
