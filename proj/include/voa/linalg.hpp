#pragma once

#include <map>
#include <optional>
#include <vector>
#include "voa/rational.hpp"

namespace voa {

using SparseVec = std::map<int, Rational>;

inline void sparse_axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
    if (voa::is_zero(a)) return;
    for (const auto& [i, v] : x) {
        Rational& slot = y[i];
        slot += a * v;
        if (voa::is_zero(slot)) y.erase(i);
    }
}

// Incremental exact echelon basis with combination tracking: every stored row
// is a known linear combination of the generators inserted so far.
class EchelonSolver {
public:
    struct Row {
        int pivot;
        SparseVec vec;   // normalized: vec[pivot] == 1
        SparseVec combo; // expression of vec in generator indices
    };

    // Reduce v against the rows; returns residual and the combination consumed.
    std::pair<SparseVec, SparseVec> reduce(SparseVec v) const {
        SparseVec combo;
        for (const Row& r : rows_) {
            auto it = v.find(r.pivot);
            if (it == v.end()) continue;
            Rational f = it->second;
            sparse_axpy(v, -f, r.vec);
            sparse_axpy(combo, f, r.combo);
        }
        return {std::move(v), std::move(combo)};
    }

    // Insert generator with external index genIdx; returns true if it enlarged the span.
    bool insert(SparseVec v, int genIdx) {
        auto [res, combo] = reduce(std::move(v));
        if (res.empty()) return false;
        int pivot = res.begin()->first;
        Rational lead = res.begin()->second;
        SparseVec selfCombo;
        selfCombo[genIdx] = 1;
        sparse_axpy(selfCombo, Rational(-1), combo);
        // normalize
        Rational inv = Rational(1) / lead;
        for (auto& [i, x] : res) x *= inv;
        for (auto& [i, x] : selfCombo) x *= inv;
        Row nr{pivot, std::move(res), std::move(selfCombo)};
        // keep full reduced form: clear the new pivot column in existing rows,
        // so reduce() stays a single forward pass regardless of insertion order
        for (Row& r : rows_) {
            auto jt = r.vec.find(pivot);
            if (jt == r.vec.end()) continue;
            Rational f = jt->second;
            sparse_axpy(r.vec, -f, nr.vec);
            sparse_axpy(r.combo, -f, nr.combo);
        }
        auto pos = rows_.begin();
        while (pos != rows_.end() && pos->pivot < pivot) ++pos;
        rows_.insert(pos, std::move(nr));
        return true;
    }

    // If target is in the current span, return generator combination.
    std::optional<SparseVec> represent(const SparseVec& target) const {
        auto [res, combo] = reduce(target);
        if (!res.empty()) return std::nullopt;
        return combo;
    }

    size_t rank() const { return rows_.size(); }

private:
    std::vector<Row> rows_;
};

// Exact solve: coefficients expressing target in span(generators), or nullopt.
inline std::optional<std::vector<Rational>>
solve_in_span(const std::vector<Rational>& target,
              const std::vector<std::vector<Rational>>& generators) {
    EchelonSolver solver;
    for (size_t g = 0; g < generators.size(); ++g) {
        SparseVec v;
        for (size_t i = 0; i < generators[g].size(); ++i)
            if (!voa::is_zero(generators[g][i])) v[static_cast<int>(i)] = generators[g][i];
        solver.insert(std::move(v), static_cast<int>(g));
    }
    SparseVec t;
    for (size_t i = 0; i < target.size(); ++i)
        if (!voa::is_zero(target[i])) t[static_cast<int>(i)] = target[i];
    auto combo = solver.represent(t);
    if (!combo) return std::nullopt;
    std::vector<Rational> out(generators.size(), Rational(0));
    for (const auto& [g, v] : *combo) out[static_cast<size_t>(g)] = v;
    return out;
}

} // namespace voa
