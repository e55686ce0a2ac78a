#include "forge/coboundary.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <unordered_map>

#include "forge/errors.hpp"
#include "forge/linsolve.hpp"

namespace forge {

namespace {

using Pattern = std::vector<SlotOp>;

struct PatternHash {
    std::size_t operator()(const Pattern& p) const {
        std::size_t h = 1469598103934665603ull;
        for (const auto& s : p) {
            for (auto b : s) {
                h ^= b;
                h *= 1099511628211ull;
            }
            h ^= 0xff;
            h *= 1099511628211ull;
        }
        return h;
    }
};

SlotOp total_weight(const Pattern& p, int ndirs) {
    SlotOp w(static_cast<std::size_t>(ndirs), 0);
    for (const auto& s : p)
        for (std::size_t d = 0; d < s.size(); ++d) w[d] = static_cast<std::uint8_t>(w[d] + s[d]);
    return w;
}

Pattern apply_perm(const Pattern& p, const std::vector<int>& perm) {
    Pattern out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        SlotOp s(p[i].size(), 0);
        for (std::size_t d = 0; d < p[i].size(); ++d) s[static_cast<std::size_t>(perm[d])] = p[i][d];
        out[i] = std::move(s);
    }
    return out;
}

std::vector<std::vector<int>> all_permutations(int m, bool fix_last) {
    int k = fix_last ? m - 1 : m;
    std::vector<int> base(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) base[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> g(base.begin(), base.end());
        if (fix_last) g.push_back(m - 1);
        out.push_back(std::move(g));
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

using ComponentTerms = std::map<Pattern, Rat>;

bool component_invariant(const ComponentTerms& comp, const std::vector<std::vector<int>>& group) {
    for (const auto& g : group) {
        for (const auto& [pat, c] : comp) {
            auto it = comp.find(apply_perm(pat, g));
            if (it == comp.end() || it->second != c) return false;
        }
    }
    return true;
}

// Ansatz patterns of `slots` multi-indices with the given total weight,
// per-slot order <= order_bound (and >= min_order).
void enumerate_patterns(const SlotOp& remaining, int slots_left, int order_bound, int min_order, Pattern& acc,
                        std::vector<Pattern>& out, std::size_t max_patterns) {
    int rem_order = slot_order(remaining);
    if (slots_left == 0) {
        if (rem_order == 0) {
            out.push_back(acc);
            if (out.size() > max_patterns) throw SizeLimitExceeded("coboundary ansatz space too large");
        }
        return;
    }
    if (rem_order < min_order * slots_left || rem_order > order_bound * slots_left) return;
    // choose the next slot as a sub-multi-index of `remaining`
    std::vector<SlotOp> choices;
    SlotOp cur(remaining.size(), 0);
    // iterative odometer over sub-multi-indices
    while (true) {
        int o = slot_order(cur);
        if (o >= min_order && o <= order_bound) choices.push_back(cur);
        std::size_t d = 0;
        while (d < cur.size()) {
            if (cur[d] < remaining[d]) {
                ++cur[d];
                break;
            }
            cur[d] = 0;
            ++d;
        }
        if (d == cur.size()) break;
    }
    for (const auto& s : choices) {
        SlotOp rem = remaining;
        for (std::size_t d = 0; d < rem.size(); ++d) rem[d] = static_cast<std::uint8_t>(rem[d] - s[d]);
        acc.push_back(s);
        enumerate_patterns(rem, slots_left - 1, order_bound, min_order, acc, out, max_patterns);
        acc.pop_back();
    }
}

struct ComponentKey {
    SlotOp weight;
    int texp;
    bool operator<(const ComponentKey& o) const {
        if (weight != o.weight) return weight < o.weight;
        return texp < o.texp;
    }
};

}  // namespace

std::optional<PolyDiffCochain> solve_coboundary(const PolyDiffCochain& rho, const SolverConfig& cfg) {
    const Tower tw = rho.tower();
    if (!rho.hochschild_differential().is_zero()) throw NotClosed("solve_coboundary: input is not closed");
    const int p = rho.arity();
    if (rho.is_zero()) return PolyDiffCochain(tw, p > 0 ? p - 1 : 0, rho.degree());
    if (p == 0) return std::nullopt;  // nonzero 0-cochains are never coboundaries here

    // the ansatz has constant coefficients; the differential keeps them
    // constant, so a non-constant right side is out of reach
    for (const auto& t : rho.terms())
        if (!t.coeff.is_constant()) return std::nullopt;

    std::map<ComponentKey, ComponentTerms> components;
    for (const auto& t : rho.terms()) {
        ComponentKey key{total_weight(t.slots, tw.ndirs()), t.texp};
        components[key][t.slots] = t.coeff.constant_value();
    }

    const auto full_group = all_permutations(tw.ndirs(), false);
    const auto x_group = all_permutations(tw.ndirs(), true);
    const std::vector<std::vector<int>> trivial_group = {full_group.front()};  // identity comes first

    std::vector<CochainTerm> psi_terms;
    for (const auto& [key, comp] : components) {
        if (key.texp < cfg.t_window_lo || key.texp > cfg.t_window_hi) return std::nullopt;

        bool normalized = true;
        for (const auto& [pat, c] : comp)
            for (const auto& s : pat)
                if (slot_order(s) == 0) normalized = false;

        const std::vector<std::vector<int>>* group = &trivial_group;
        if (component_invariant(comp, full_group))
            group = &full_group;
        else if (component_invariant(comp, x_group))
            group = &x_group;

        std::vector<Pattern> ansatz;
        {
            Pattern acc;
            enumerate_patterns(key.weight, p - 1, cfg.order_bound, normalized ? 1 : 0, acc, ansatz,
                               cfg.max_patterns);
        }

        auto canon = [&](const Pattern& pat) {
            Pattern best = pat;
            for (const auto& g : *group) {
                Pattern q = apply_perm(pat, g);
                if (q < best) best = q;
            }
            return best;
        };

        std::unordered_map<Pattern, int, PatternHash> col_of;
        std::vector<Pattern> col_rep;
        for (const auto& pat : ansatz) {
            Pattern c = canon(pat);
            if (col_of.emplace(c, static_cast<int>(col_rep.size())).second) col_rep.push_back(std::move(c));
        }

        std::unordered_map<Pattern, int, PatternHash> row_of;
        std::unordered_map<Pattern, Pattern, PatternHash> canon_cache;
        auto row_id = [&](const Pattern& pat) {
            auto cit = canon_cache.find(pat);
            if (cit == canon_cache.end()) cit = canon_cache.emplace(pat, canon(pat)).first;
            auto it = row_of.find(cit->second);
            if (it == row_of.end()) it = row_of.emplace(cit->second, static_cast<int>(row_of.size())).first;
            return it->second;
        };

        // column-wise differential of each orbit sum
        std::map<std::pair<int, int>, Rat> entries;  // (row, col) -> value
        for (std::size_t col = 0; col < col_rep.size(); ++col) {
            std::set<Pattern> orbit;
            for (const auto& g : *group) orbit.insert(apply_perm(col_rep[col], g));
            for (const auto& q : orbit) {
                CochainTerm t;
                t.coeff = RatFunc(tw.nvars(), Rat(1));
                t.texp = key.texp;
                t.slots = q;
                PolyDiffCochain basis(tw, p - 1, rho.degree(), {t});
                PolyDiffCochain db = basis.hochschild_differential();
                for (const auto& dt : db.terms()) {
                    Rat v = dt.coeff.constant_value();
                    entries[{row_id(dt.slots), static_cast<int>(col)}] += v;
                }
            }
        }

        std::map<int, Rat> rhs;
        for (const auto& [pat, c] : comp) rhs[row_id(pat)] += c;

        // assemble per-row equations
        std::map<int, SparseVec> rows;
        for (const auto& [rc, v] : entries) {
            if (v != 0) rows[rc.first].emplace_back(rc.second, v);
        }
        LinearSystem system;
        std::set<int> touched;
        for (auto& [r, vec] : rows) {
            std::sort(vec.begin(), vec.end());
            Rat b(0);
            auto it = rhs.find(r);
            if (it != rhs.end()) b = it->second;
            system.add_equation(std::move(vec), std::move(b));
            touched.insert(r);
        }
        for (const auto& [r, b] : rhs) {
            if (!touched.count(r) && b != 0) return std::nullopt;  // unreachable pattern
        }
        auto sol = system.solve();
        if (!sol) return std::nullopt;

        for (const auto& [col, x] : *sol) {
            std::set<Pattern> orbit;
            for (const auto& g : *group) orbit.insert(apply_perm(col_rep[static_cast<std::size_t>(col)], g));
            for (const auto& q : orbit) {
                CochainTerm t;
                t.coeff = RatFunc(tw.nvars(), x);
                t.texp = key.texp;
                t.slots = q;
                psi_terms.push_back(std::move(t));
            }
        }
    }

    PolyDiffCochain psi(tw, p - 1, rho.degree(), std::move(psi_terms));
    if (psi.hochschild_differential() != rho) throw Error("solve_coboundary: internal verification failed");
    return psi;
}

}  // namespace forge
