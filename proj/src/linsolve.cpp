#include "forge/linsolve.hpp"

#include <algorithm>

namespace forge {

namespace {

// r -= c * p, both sorted by column.
SparseVec axpy(const SparseVec& r, const Rat& c, const SparseVec& p) {
    SparseVec out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, k = 0;
    while (i < r.size() || k < p.size()) {
        if (k == p.size() || (i < r.size() && r[i].first < p[k].first)) {
            out.push_back(r[i++]);
        } else if (i == r.size() || p[k].first < r[i].first) {
            out.emplace_back(p[k].first, -c * p[k].second);
            ++k;
        } else {
            Rat v = r[i].second - c * p[k].second;
            if (v != 0) out.emplace_back(r[i].first, v);
            ++i;
            ++k;
        }
    }
    return out;
}

}  // namespace

void LinearSystem::add_equation(SparseVec lhs, Rat rhs) {
    if (inconsistent_) return;
    while (!lhs.empty()) {
        auto it = pivots_.find(lhs.front().first);
        if (it == pivots_.end()) break;
        Rat c = lhs.front().second;
        lhs = axpy(lhs, c, it->second.a);
        rhs -= c * it->second.rhs;
    }
    if (lhs.empty()) {
        if (rhs != 0) inconsistent_ = true;
        return;
    }
    Rat lead = lhs.front().second;
    if (lead != 1) {
        for (auto& [col, v] : lhs) v /= lead;
        rhs /= lead;
    }
    int pivot = lhs.front().first;
    pivots_.emplace(pivot, Row{std::move(lhs), std::move(rhs)});
}

std::optional<std::map<int, Rat>> LinearSystem::solve() const {
    if (inconsistent_) return std::nullopt;
    std::map<int, Rat> x;
    // back substitution in descending pivot order; every non-pivot entry of a
    // pivot row sits strictly to the right of its pivot
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        Rat v = it->second.rhs;
        const SparseVec& a = it->second.a;
        for (std::size_t k = 1; k < a.size(); ++k) {
            auto found = x.find(a[k].first);
            if (found != x.end()) v -= a[k].second * found->second;
        }
        if (v != 0) x.emplace(it->first, std::move(v));
    }
    return x;
}

}  // namespace forge
