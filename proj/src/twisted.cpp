#include "forge/twisted.hpp"

#include <cassert>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "forge/errors.hpp"
#include "forge/parse.hpp"

namespace forge {

FElem TwistedComplex::entry(const Tower& tw, int i, int j) const {
    auto it = connection.find({i, j});
    if (it == connection.end()) return FElem(tw);
    return it->second;
}

void TwistedComplex::validate(const Tower& tw) const {
    for (const auto& [ij, v] : connection) {
        auto [i, j] = ij;
        if (i < 0 || i >= rank() || j < 0 || j >= rank()) throw Error("connection index out of range");
        if (i <= j) throw Error("connection must be strictly lower triangular");
        if (v.is_zero()) continue;
        if (v.grading_n() != tw.n) throw Error("connection entry lives in a different tower");
        if (!v.is_homogeneous()) throw NotHomogeneous("connection entries must be homogeneous");
        int want = shifts[static_cast<std::size_t>(i)] - shifts[static_cast<std::size_t>(j)] + 1;
        if (v.degree() != want)
            throw NotHomogeneous("connection entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") has degree " + std::to_string(v.degree()) + ", expected " +
                                 std::to_string(want));
    }
}

std::string TwistedComplex::to_json(const Tower&) const {
    nlohmann::json j;
    j["shifts"] = shifts;
    nlohmann::json d = nlohmann::json::array();
    for (const auto& [ij, v] : connection)
        if (!v.is_zero()) d.push_back({ij.first, ij.second, v.to_string()});
    j["delta"] = d;
    return j.dump(2);
}

TwistedComplex TwistedComplex::from_json(const Tower& tw, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("twisted complex json: ") + e.what());
    }
    TwistedComplex X;
    try {
        X.shifts = j.at("shifts").get<std::vector<int>>();
        for (const auto& row : j.at("delta")) {
            int r = row.at(0).get<int>(), c = row.at(1).get<int>();
            FElem v = parse_felem(tw, row.at(2).get<std::string>());
            if (!v.is_zero()) X.connection[{r, c}] = v;
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("twisted complex json: ") + e.what());
    }
    X.validate(tw);
    return X;
}

namespace {

bool same_complex(const TwistedComplex& a, const TwistedComplex& b) {
    return a.shifts == b.shifts && a.connection == b.connection;
}

// Arities the structure may use: nonzero ops must be inside the verified
// range (zero ops satisfy every identity trivially).
void require_verified(const AInfStructure& S, int max_needed, const char* who) {
    if (max_needed >= 3 && S.verified_arity() < 3)
        throw MCPrereqFailed(std::string(who) + ": structure has no verified identities");
    for (const auto& [d, m] : S.ops()) {
        if (d >= 3 && d <= max_needed && d > S.verified_arity())
            throw MCPrereqFailed(std::string(who) + ": m_" + std::to_string(d) +
                                 " is not covered by the verified arity " +
                                 std::to_string(S.verified_arity()));
    }
}

}  // namespace

MCReport mc_check(const TwistedComplex& X, const AInfStructure& S) {
    const Tower& tw = S.tower();
    X.validate(tw);
    const int r = X.rank();
    require_verified(S, r - 1, "mc_check");

    MCReport rep;
    rep.ok = true;
    for (int i = 0; i < r && rep.ok; ++i) {
        for (int j = 0; j < i && rep.ok; ++j) {
            FElem acc(tw);
            // strictly decreasing paths i = k_0 > ... > k_d = j
            std::vector<FElem> args;
            std::function<void(int)> walk = [&](int pos) {
                if (pos == j && !args.empty()) {
                    int d = static_cast<int>(args.size());
                    if (S.has_op(d)) acc = acc + S.op(d).evaluate(args);
                    // continuing past j is impossible: indices strictly decrease
                }
                for (int q = pos - 1; q >= j; --q) {
                    FElem e = X.entry(tw, pos, q);
                    if (e.is_zero()) continue;
                    args.push_back(e);
                    walk(q);
                    args.pop_back();
                }
            };
            walk(i);
            if (!acc.is_zero()) {
                rep.ok = false;
                rep.first_bad = {i, j};
                rep.value = acc.to_string();
            }
        }
    }
    return rep;
}

FElem MorphismElement::entry(const Tower& tw, int i, int j) const {
    auto it = entries.find({i, j});
    if (it == entries.end()) return FElem(tw);
    return it->second;
}

void MorphismElement::validate(const Tower& tw) const {
    source.validate(tw);
    target.validate(tw);
    for (const auto& [ij, v] : entries) {
        auto [i, j] = ij;
        if (i < 0 || i >= target.rank() || j < 0 || j >= source.rank())
            throw Error("morphism entry out of range");
        if (v.is_zero()) continue;
        if (!v.is_homogeneous()) throw NotHomogeneous("morphism entries must be homogeneous");
        int want = hom_degree + target.shifts[static_cast<std::size_t>(i)] -
                   source.shifts[static_cast<std::size_t>(j)];
        if (v.degree() != want)
            throw NotHomogeneous("morphism entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") violates the degree law");
    }
}

MorphismElement tw_operation(const AInfStructure& S, const std::vector<MorphismElement>& phis) {
    const Tower& tw = S.tower();
    const int d = static_cast<int>(phis.size());
    if (d == 0) throw Error("tw_operation: empty chain");
    for (int l = 0; l + 1 < d; ++l) {
        if (!same_complex(phis[static_cast<std::size_t>(l)].source,
                          phis[static_cast<std::size_t>(l) + 1].target))
            throw Error("tw_operation: chain is not composable");
    }
    // complexes X_0 (target of phi_1) .. X_d (source of phi_d)
    std::vector<const TwistedComplex*> xs;
    xs.push_back(&phis.front().target);
    for (const auto& f : phis) xs.push_back(&f.source);

    int max_rank = 0;
    for (const auto* x : xs) max_rank = std::max(max_rank, x->rank());
    int hom_out = 2 - d;
    for (const auto& f : phis) hom_out += f.hom_degree;
    require_verified(S, d + (max_rank - 1) * (d + 1), "tw_operation");

    MorphismElement out;
    out.source = phis.back().source;
    out.target = phis.front().target;
    out.hom_degree = hom_out;

    std::vector<FElem> args;
    int start_row = 0;
    // walk from the target side: delta-steps inside X_stage, then the next phi
    std::function<void(int, int)> walk = [&](int stage, int pos) {
        if (stage == d) {
            int m = static_cast<int>(args.size());
            if (m >= 2 && S.has_op(m)) {
                FElem v = S.op(m).evaluate(args) *
                          Rat(sign_of(xs.front()->shifts[static_cast<std::size_t>(start_row)]));
                if (!v.is_zero()) {
                    auto key = std::make_pair(start_row, pos);
                    auto it = out.entries.find(key);
                    if (it == out.entries.end())
                        out.entries.emplace(key, v);
                    else {
                        it->second = it->second + v;
                        if (it->second.is_zero()) out.entries.erase(it);
                    }
                }
            }
        }
        const TwistedComplex& X = *xs[static_cast<std::size_t>(stage)];
        for (int q = pos - 1; q >= 0; --q) {
            FElem e = X.entry(tw, pos, q);
            if (e.is_zero()) continue;
            args.push_back(e);
            walk(stage, q);
            args.pop_back();
        }
        if (stage < d) {
            const MorphismElement& f = phis[static_cast<std::size_t>(stage)];
            for (int q = 0; q < f.source.rank(); ++q) {
                FElem e = f.entry(tw, pos, q);
                if (e.is_zero()) continue;
                args.push_back(e);
                walk(stage + 1, q);
                args.pop_back();
            }
        }
    };
    for (start_row = 0; start_row < xs.front()->rank(); ++start_row) walk(0, start_row);
    return out;
}

HomComplex::HomComplex(const AInfStructure& S, TwistedComplex X, TwistedComplex Y)
    : s_(S), x_(std::move(X)), y_(std::move(Y)) {
    MCReport rx = mc_check(x_, s_);
    if (!rx.ok)
        throw MCPrereqFailed("source fails Maurer-Cartan at (" + std::to_string(rx.first_bad.first) + "," +
                             std::to_string(rx.first_bad.second) + "): " + rx.value);
    MCReport ry = mc_check(y_, s_);
    if (!ry.ok)
        throw MCPrereqFailed("target fails Maurer-Cartan at (" + std::to_string(ry.first_bad.first) + "," +
                             std::to_string(ry.first_bad.second) + "): " + ry.value);
}

int HomComplex::dimension(int h) const {
    const int n = s_.tower().n;
    int count = 0;
    for (int i = 0; i < y_.rank(); ++i)
        for (int j = 0; j < x_.rank(); ++j) {
            int g = h + y_.shifts[static_cast<std::size_t>(i)] - x_.shifts[static_cast<std::size_t>(j)];
            if (((g % n) + n) % n == 0) ++count;
        }
    return count;
}

MorphismElement HomComplex::differential(const MorphismElement& phi) const {
    return tw_operation(s_, {phi});
}

MorphismElement HomComplex::compose(const MorphismElement& f, const MorphismElement& g) const {
    return tw_operation(s_, {f, g});
}

TwistedComplex cone(const AInfStructure& S, const MorphismElement& f) {
    const Tower& tw = S.tower();
    f.validate(tw);
    if (f.hom_degree != 0) throw Error("cone: morphism must have degree 0");
    MorphismElement df = tw_operation(S, {f});
    if (!df.entries.empty()) throw Error("cone: morphism is not closed");

    const TwistedComplex& X = f.source;
    const TwistedComplex& Y = f.target;
    TwistedComplex C;
    const int rx = X.rank();
    C.shifts.reserve(static_cast<std::size_t>(rx + Y.rank()));
    for (int u : X.shifts) C.shifts.push_back(u + 1);
    for (int u : Y.shifts) C.shifts.push_back(u);
    for (const auto& [ij, v] : X.connection) C.connection[{ij.first, ij.second}] = v;
    for (const auto& [ij, v] : Y.connection) C.connection[{rx + ij.first, rx + ij.second}] = v;
    for (const auto& [ij, v] : f.entries)
        if (!v.is_zero()) C.connection[{rx + ij.first, ij.second}] = v;
    C.validate(tw);
    return C;
}

EndoInvariant endo_invariant(int shift, const AInfStructure& S) {
    EndoInvariant inv;
    inv.shift = shift;
    inv.conjugation_sign = sign_of(shift);
    inv.verified_arity = S.verified_arity();
    inv.strictly_associative = true;
    for (const auto& [d, m] : S.ops()) {
        if (d >= 3 && !m.is_zero()) inv.strictly_associative = false;
    }
    const int d_seed = S.tower().n + 2;
    if (S.has_op(d_seed)) {
        PolyDiffCochain m = S.op(d_seed) * Rat(inv.conjugation_sign);
        inv.seed_symbol_nonzero = !m.hkr_symbol().is_zero();
    }
    return inv;
}

}  // namespace forge
