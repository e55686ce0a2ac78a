#include "forge/smallhh.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "forge/errors.hpp"
#include "forge/linsolve.hpp"
#include "forge/signs.hpp"

namespace forge {

void SmallAlgebra::validate() const {
    if (dim <= 0) throw InvalidAlgebra("dim must be positive");
    if (static_cast<int>(degrees.size()) != dim) throw InvalidAlgebra("degrees size != dim");
    if (unit < 0 || unit >= dim) throw InvalidAlgebra("unit index out of range");
    if (table.size() != static_cast<std::size_t>(dim) * dim * dim) throw InvalidAlgebra("table size != dim^3");
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            for (int k = 0; k < dim; ++k) {
                if (c(i, j, k) != 0 && degrees[k] != degrees[i] + degrees[j])
                    throw InvalidAlgebra("multiplication does not respect the grading");
            }
            for (int l = 0; l < dim; ++l) {
                // ((e_i e_j) e_l)_m  vs  (e_i (e_j e_l))_m
                for (int m = 0; m < dim; ++m) {
                    Rat lhs(0), rhs(0);
                    for (int k = 0; k < dim; ++k) {
                        lhs += c(i, j, k) * c(k, l, m);
                        rhs += c(j, l, k) * c(i, k, m);
                    }
                    if (lhs != rhs) throw InvalidAlgebra("structure constants are not associative");
                }
            }
        }
    }
    for (int i = 0; i < dim; ++i) {
        for (int k = 0; k < dim; ++k) {
            Rat want(i == k ? 1 : 0);
            if (c(unit, i, k) != want || c(i, unit, k) != want)
                throw InvalidAlgebra("unit axioms fail");
        }
    }
    if (degrees[unit] != 0) throw InvalidAlgebra("unit must sit in degree zero");
}

std::string SmallAlgebra::to_json() const {
    nlohmann::json j;
    j["dim"] = dim;
    j["degrees"] = degrees;
    j["unit"] = unit;
    if (!name.empty()) j["name"] = name;
    nlohmann::json tbl = nlohmann::json::array();
    for (int i = 0; i < dim; ++i)
        for (int jj = 0; jj < dim; ++jj)
            for (int k = 0; k < dim; ++k)
                if (c(i, jj, k) != 0) tbl.push_back({i, jj, k, rat_to_string(c(i, jj, k))});
    j["table"] = tbl;
    return j.dump(2);
}

SmallAlgebra SmallAlgebra::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("algebra json: ") + e.what());
    }
    SmallAlgebra A;
    try {
        A.dim = j.at("dim").get<int>();
        A.degrees = j.at("degrees").get<std::vector<int>>();
        A.unit = j.at("unit").get<int>();
        if (j.contains("name")) A.name = j["name"].get<std::string>();
        if (A.dim <= 0) throw InvalidAlgebra("dim must be positive");
        A.table.assign(static_cast<std::size_t>(A.dim) * A.dim * A.dim, Rat(0));
        for (const auto& row : j.at("table")) {
            int i = row.at(0).get<int>(), jj = row.at(1).get<int>(), k = row.at(2).get<int>();
            if (i < 0 || i >= A.dim || jj < 0 || jj >= A.dim || k < 0 || k >= A.dim)
                throw InvalidAlgebra("table index out of range");
            A.c(i, jj, k) = rat_from_string(row.at(3).get<std::string>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("algebra json: ") + e.what());
    }
    A.validate();
    return A;
}

SmallAlgebra tensor_algebra(const SmallAlgebra& A, const SmallAlgebra& B) {
    SmallAlgebra T;
    T.name = A.name.empty() || B.name.empty() ? "" : A.name + "(x)" + B.name;
    T.dim = A.dim * B.dim;
    T.degrees.resize(static_cast<std::size_t>(T.dim));
    T.table.assign(static_cast<std::size_t>(T.dim) * T.dim * T.dim, Rat(0));
    auto idx = [&](int i, int j) { return i * B.dim + j; };
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < B.dim; ++j) T.degrees[static_cast<std::size_t>(idx(i, j))] = A.degrees[i] + B.degrees[j];
    T.unit = idx(A.unit, B.unit);
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < B.dim; ++j)
            for (int i2 = 0; i2 < A.dim; ++i2)
                for (int j2 = 0; j2 < B.dim; ++j2) {
                    int sgn = sign_of(static_cast<long>(B.degrees[j]) * A.degrees[i2]);
                    for (int k = 0; k < A.dim; ++k)
                        for (int l = 0; l < B.dim; ++l) {
                            Rat v = A.c(i, i2, k) * B.c(j, j2, l) * sgn;
                            if (v != 0) T.c(idx(i, j), idx(i2, j2), idx(k, l)) += v;
                        }
                }
    T.validate();
    return T;
}

namespace {

// Cochain basis element ((i_1..i_p) -> k); tuples are encoded base-dim.
struct BlockIndex {
    // per internal degree: list of (tuple code, output index), plus lookup
    std::map<int, std::vector<std::pair<long, int>>> by_degree;
    std::map<std::pair<long, int>, std::pair<int, int>> position;  // (code,k) -> (degree, index in block)
};

int tuple_degree(const SmallAlgebra& A, long code, int p) {
    int d = 0;
    for (int l = 0; l < p; ++l) {
        d += A.degrees[static_cast<std::size_t>(code % A.dim)];
        code /= A.dim;
    }
    return d;
}

BlockIndex enumerate_basis(const SmallAlgebra& A, int p) {
    BlockIndex idx;
    long count = 1;
    for (int l = 0; l < p; ++l) count *= A.dim;
    for (long code = 0; code < count; ++code) {
        int dtuple = tuple_degree(A, code, p);
        for (int k = 0; k < A.dim; ++k) {
            int s = A.degrees[static_cast<std::size_t>(k)] - dtuple;
            auto& block = idx.by_degree[s];
            idx.position[{code, k}] = {s, static_cast<int>(block.size())};
            block.emplace_back(code, k);
        }
    }
    return idx;
}

std::vector<int> decode(long code, int p, int dim) {
    std::vector<int> t(static_cast<std::size_t>(p));
    for (int l = 0; l < p; ++l) {
        t[static_cast<std::size_t>(l)] = static_cast<int>(code % dim);
        code /= dim;
    }
    return t;  // t[0] = first argument
}

long encode(const std::vector<int>& t, int dim) {
    long code = 0;
    for (std::size_t l = t.size(); l-- > 0;) code = code * dim + t[l];
    return code;
}

// Differential of the basis cochain ((I) -> k) as (output basis, coefficient)
// pairs; the signs follow the shared shifted-degree convention, with the
// suspended-product sign making odd internal degrees come out right.
void differential_of_basis(const SmallAlgebra& A, const std::vector<int>& I, int k,
                           std::vector<std::pair<std::pair<long, int>, Rat>>& out) {
    const int p = static_cast<int>(I.size());
    int s = A.degrees[static_cast<std::size_t>(k)];
    for (int i : I) s -= A.degrees[static_cast<std::size_t>(i)];
    const int g = shifted_degree(p, s);

    std::vector<int> J(static_cast<std::size_t>(p) + 1);
    // right border: (-1)^g * b2(phi(..), x_{p+1})
    for (int j = 0; j < A.dim; ++j) {
        std::copy(I.begin(), I.end(), J.begin());
        J[static_cast<std::size_t>(p)] = j;
        long codeJ = encode(J, A.dim);
        int sgn = sign_of(g) * suspended_product_sign(A.degrees[static_cast<std::size_t>(k)]);
        for (int l = 0; l < A.dim; ++l) {
            Rat v = A.c(k, j, l) * sgn;
            if (v != 0) out.push_back({{codeJ, l}, v});
        }
    }
    // left border: (-1)^{g*deg(x1)} * b2(x1, phi(..))
    for (int j = 0; j < A.dim; ++j) {
        J[0] = j;
        std::copy(I.begin(), I.end(), J.begin() + 1);
        long codeJ = encode(J, A.dim);
        int dj = A.degrees[static_cast<std::size_t>(j)];
        int sgn = sign_of(static_cast<long>(g) * dj) * suspended_product_sign(dj);
        for (int l = 0; l < A.dim; ++l) {
            Rat v = A.c(j, k, l) * sgn;
            if (v != 0) out.push_back({{codeJ, l}, v});
        }
    }
    // interior merges: -(-1)^{eps_{pos-1}} b2 inside slot pos
    for (int pos = 0; pos < p; ++pos) {
        int eps = 0;
        for (int r = 0; r < pos; ++r) eps += A.degrees[static_cast<std::size_t>(I[static_cast<std::size_t>(r)])] - 1;
        for (int u = 0; u < A.dim; ++u) {
            for (int v = 0; v < A.dim; ++v) {
                const Rat& cv = A.c(u, v, I[static_cast<std::size_t>(pos)]);
                if (cv == 0) continue;
                std::copy(I.begin(), I.begin() + pos, J.begin());
                J[static_cast<std::size_t>(pos)] = u;
                J[static_cast<std::size_t>(pos) + 1] = v;
                std::copy(I.begin() + pos + 1, I.end(), J.begin() + pos + 2);
                long codeJ = encode(J, A.dim);
                int sgn = -sign_of(eps) * suspended_product_sign(A.degrees[static_cast<std::size_t>(u)]);
                Rat val = cv * sgn;
                out.push_back({{codeJ, k}, val});
            }
        }
    }
}

// ranks of delta_p : C^p -> C^{p+1}, one per internal degree
std::map<int, std::size_t> differential_ranks(const SmallAlgebra& A, int p, const BlockIndex& domain,
                                              const BlockIndex& target) {
    std::map<int, LinearSystem> systems;
    std::vector<std::pair<std::pair<long, int>, Rat>> column;
    for (const auto& [s, block] : domain.by_degree) {
        auto& sys = systems[s];
        for (const auto& [code, k] : block) {
            column.clear();
            differential_of_basis(A, decode(code, p, A.dim), k, column);
            std::map<int, Rat> merged;
            for (const auto& [key, v] : column) {
                auto pos = target.position.find(key);
                assert(pos != target.position.end() && pos->second.first == s);
                merged[pos->second.second] += v;
            }
            SparseVec vec;
            for (const auto& [row, v] : merged)
                if (v != 0) vec.emplace_back(row, v);
            sys.add_equation(std::move(vec), Rat(0));
        }
    }
    std::map<int, std::size_t> ranks;
    for (auto& [s, sys] : systems) ranks[s] = sys.rank();
    return ranks;
}

}  // namespace

HHTable hh_bruteforce(const SmallAlgebra& A, int imax, std::size_t size_limit) {
    if (imax < 0) throw Error("imax must be nonnegative");
    A.validate();
    double cells = 1;
    for (int l = 0; l < imax + 2; ++l) cells *= A.dim;
    if (cells > static_cast<double>(size_limit))
        throw SizeLimitExceeded("bar complex needs dim^" + std::to_string(imax + 2) + " = " +
                                std::to_string(static_cast<long long>(cells)) + " cells > limit " +
                                std::to_string(size_limit));

    std::vector<BlockIndex> basis;
    basis.reserve(static_cast<std::size_t>(imax) + 2);
    for (int p = 0; p <= imax + 1; ++p) basis.push_back(enumerate_basis(A, p));

    // ranks[p][s] = rank of delta_p restricted to internal degree s
    std::vector<std::map<int, std::size_t>> ranks;
    for (int p = 0; p <= imax; ++p)
        ranks.push_back(differential_ranks(A, p, basis[static_cast<std::size_t>(p)],
                                           basis[static_cast<std::size_t>(p) + 1]));

    HHTable table;
    table.dims.assign(static_cast<std::size_t>(imax) + 1, 0);
    for (int i = 0; i <= imax; ++i) {
        for (const auto& [s, block] : basis[static_cast<std::size_t>(i)].by_degree) {
            std::size_t dim_block = block.size();
            std::size_t r_out = 0, r_in = 0;
            auto it = ranks[static_cast<std::size_t>(i)].find(s);
            if (it != ranks[static_cast<std::size_t>(i)].end()) r_out = it->second;
            if (i > 0) {
                auto it2 = ranks[static_cast<std::size_t>(i) - 1].find(s);
                if (it2 != ranks[static_cast<std::size_t>(i) - 1].end()) r_in = it2->second;
            }
            int d = static_cast<int>(dim_block - r_out - r_in);
            if (d != 0) {
                table.by_degree[i][s] = d;
                table.dims[static_cast<std::size_t>(i)] += d;
            }
        }
    }
    return table;
}

bool bar_differential_squares_to_zero(const SmallAlgebra& A, int pmax) {
    for (int p = 0; p < pmax; ++p) {
        long count = 1;
        for (int l = 0; l < p; ++l) count *= A.dim;
        for (long code = 0; code < count; ++code) {
            for (int k = 0; k < A.dim; ++k) {
                std::vector<std::pair<std::pair<long, int>, Rat>> first, second;
                differential_of_basis(A, decode(code, p, A.dim), k, first);
                std::map<std::pair<long, int>, Rat> acc;
                for (const auto& [key, v] : first) {
                    second.clear();
                    differential_of_basis(A, decode(key.first, p + 1, A.dim), key.second, second);
                    for (const auto& [key2, v2] : second) acc[key2] += v * v2;
                }
                for (const auto& [key2, v2] : acc)
                    if (v2 != 0) return false;
            }
        }
    }
    return true;
}

KunnethReport kunneth_check(const SmallAlgebra& A, const SmallAlgebra& B, int imax, std::size_t size_limit) {
    KunnethReport rep;
    HHTable ha = hh_bruteforce(A, imax, size_limit);
    HHTable hb = hh_bruteforce(B, imax, size_limit);
    HHTable ht = hh_bruteforce(tensor_algebra(A, B), imax, size_limit);
    rep.lhs = ht.dims;
    rep.rhs.assign(static_cast<std::size_t>(imax) + 1, 0);
    for (int i = 0; i <= imax; ++i)
        for (int p = 0; p <= i; ++p)
            rep.rhs[static_cast<std::size_t>(i)] +=
                ha.dims[static_cast<std::size_t>(p)] * hb.dims[static_cast<std::size_t>(i - p)];
    rep.ok = rep.lhs == rep.rhs;
    return rep;
}

namespace {

// Laurent polynomials in one and two variables, just enough for the Koszul
// resolution of k[t,t^-1].
using LP1 = std::map<int, Rat>;
using LP2 = std::map<std::pair<int, int>, Rat>;

void lp1_add(LP1& a, int e, const Rat& c) {
    if (c == 0) return;
    auto it = a.find(e);
    if (it == a.end())
        a.emplace(e, c);
    else {
        it->second += c;
        if (it->second == 0) a.erase(it);
    }
}

void lp2_add(LP2& a, std::pair<int, int> e, const Rat& c) {
    if (c == 0) return;
    auto it = a.find(e);
    if (it == a.end())
        a.emplace(e, c);
    else {
        it->second += c;
        if (it->second == 0) a.erase(it);
    }
}

LP1 lp1_mul(const LP1& a, const LP1& b) {
    LP1 r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) lp1_add(r, ea + eb, ca * cb);
    return r;
}

LP2 lp2_mul(const LP2& a, const LP2& b) {
    LP2 r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) lp2_add(r, {ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
}

LP2 lp2_sub(LP2 a, const LP2& b) {
    for (const auto& [e, c] : b) lp2_add(a, e, -c);
    return a;
}

// multiplication map E -> k[t,t^-1], t^a (x) t^b -> t^{a+b}
LP1 mu_map(const LP2& e) {
    LP1 r;
    for (const auto& [ab, c] : e) lp1_add(r, ab.first + ab.second, c);
    return r;
}

LP2 omega() {  // t (x) 1 - 1 (x) t
    LP2 w;
    lp2_add(w, {1, 0}, Rat(1));
    lp2_add(w, {0, 1}, Rat(-1));
    return w;
}

// Exact division by omega inside E; nullopt when not a multiple. Since
// t (x) 1 is a unit, shift the first exponent to be nonnegative and run
// synthetic division by (t (x) 1) - (1 (x) t) from the top.
std::optional<LP2> divide_by_omega(const LP2& e) {
    if (e.empty()) return LP2{};
    int amin = e.begin()->first.first;
    for (const auto& [ab, c] : e) amin = std::min(amin, ab.first);
    LP2 rem;
    for (const auto& [ab, c] : e) lp2_add(rem, {ab.first - amin, ab.second}, c);
    LP2 q;
    while (!rem.empty()) {
        auto it = std::prev(rem.end());  // maximal first exponent
        auto [a, b] = it->first;
        if (a == 0) break;
        Rat c = it->second;
        LP2 m;
        lp2_add(m, {a - 1, b}, c);
        rem = lp2_sub(rem, lp2_mul(omega(), m));
        for (const auto& [e2, c2] : m) lp2_add(q, e2, c2);
    }
    if (!rem.empty()) return std::nullopt;
    LP2 out;
    for (const auto& [ab, c] : q) lp2_add(out, {ab.first + amin, ab.second}, c);
    return out;
}

LP2 random_lp2(std::uint64_t& state, int terms) {
    auto next = [&state]() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    LP2 e;
    for (int k = 0; k < terms; ++k) {
        int a = static_cast<int>(next() % 7) - 3;
        int b = static_cast<int>(next() % 7) - 3;
        int c = static_cast<int>(next() % 5) - 2;
        lp2_add(e, {a, b}, Rat(c));
    }
    return e;
}

}  // namespace

LaurentReport hh_laurent(int imax, std::uint64_t seed) {
    if (imax < 2) throw Error("hh_laurent: imax must be >= 2");
    LaurentReport rep;
    rep.imax = imax;
    std::uint64_t state = seed;

    // multiplication by omega is injective (E is a domain); sampled witness
    rep.nonzerodivisor_ok = true;
    for (int trial = 0; trial < 20; ++trial) {
        LP2 g = random_lp2(state, 4);
        if (g.empty()) continue;
        if (lp2_mul(g, omega()).empty()) rep.nonzerodivisor_ok = false;
    }

    // ker(mu) = (omega): sampled kernel elements divide exactly
    rep.kernel_ok = true;
    for (int trial = 0; trial < 20; ++trial) {
        LP2 e = random_lp2(state, 5);
        // project to the kernel: e - 1 (x) mu(e)
        LP1 m = mu_map(e);
        for (const auto& [exp, c] : m) lp2_add(e, {0, exp}, -c);
        assert(mu_map(e).empty());
        auto q = divide_by_omega(e);
        if (!q || lp2_sub(lp2_mul(omega(), *q), e) != LP2{}) rep.kernel_ok = false;
    }

    // Hom_E(E, Lambda) = Lambda; the induced map is multiplication by
    // mu(omega) = t - t = 0
    rep.induced_map_zero = mu_map(omega()).empty();

    // d/dt: derivation property and non-triviality
    rep.derivation_ok = true;
    auto ddt = [](const LP1& a) {
        LP1 r;
        for (const auto& [e, c] : a)
            if (e != 0) lp1_add(r, e - 1, c * Rat(e));
        return r;
    };
    for (int trial = 0; trial < 20; ++trial) {
        LP2 pair = random_lp2(state, 3);
        LP1 a, b;
        for (const auto& [e, c] : pair) {
            lp1_add(a, e.first, c);
            lp1_add(b, e.second, c + 1);
        }
        LP1 lhs = ddt(lp1_mul(a, b));
        LP1 rhs = lp1_mul(ddt(a), b);
        for (const auto& [e, c] : lp1_mul(a, ddt(b))) lp1_add(rhs, e, c);
        if (lhs != rhs) rep.derivation_ok = false;
        // inner derivations vanish: ab - ba = 0
        if (lp1_mul(a, b) != lp1_mul(b, a)) rep.derivation_ok = false;
    }
    LP1 t;
    lp1_add(t, 1, Rat(1));
    rep.nontrivial_class = !ddt(t).empty();  // d/dt(t) = 1, and inner derivations are all zero

    rep.ranks.assign(static_cast<std::size_t>(imax) + 1, 0);
    if (rep.induced_map_zero) {
        rep.ranks[0] = 1;  // ker(0) = Lambda
        rep.ranks[1] = 1;  // coker(0) = Lambda, generated by the class of d/dt
    }
    return rep;
}

std::vector<SmallAlgebra> fixture_algebras() {
    std::vector<SmallAlgebra> out;
    {
        SmallAlgebra k;
        k.name = "q";
        k.dim = 1;
        k.degrees = {0};
        k.unit = 0;
        k.table.assign(1, Rat(1));
        out.push_back(std::move(k));
    }
    {
        SmallAlgebra d;  // k[e]/e^2, e in degree 0
        d.name = "dual_even";
        d.dim = 2;
        d.degrees = {0, 0};
        d.unit = 0;
        d.table.assign(8, Rat(0));
        d.c(0, 0, 0) = 1;
        d.c(0, 1, 1) = 1;
        d.c(1, 0, 1) = 1;
        out.push_back(std::move(d));
    }
    {
        SmallAlgebra x;  // exterior algebra on one generator in degree 1
        x.name = "exterior_odd";
        x.dim = 2;
        x.degrees = {0, 1};
        x.unit = 0;
        x.table.assign(8, Rat(0));
        x.c(0, 0, 0) = 1;
        x.c(0, 1, 1) = 1;
        x.c(1, 0, 1) = 1;
        out.push_back(std::move(x));
    }
    {
        SmallAlgebra w;  // k x k as k[w]/(w^2 - 1)
        w.name = "kxk";
        w.dim = 2;
        w.degrees = {0, 0};
        w.unit = 0;
        w.table.assign(8, Rat(0));
        w.c(0, 0, 0) = 1;
        w.c(0, 1, 1) = 1;
        w.c(1, 0, 1) = 1;
        w.c(1, 1, 0) = 1;
        out.push_back(std::move(w));
    }
    {
        SmallAlgebra e3;  // k[e]/e^3 in degree 0
        e3.name = "trunc3";
        e3.dim = 3;
        e3.degrees = {0, 0, 0};
        e3.unit = 0;
        e3.table.assign(27, Rat(0));
        e3.c(0, 0, 0) = 1;
        e3.c(0, 1, 1) = e3.c(1, 0, 1) = 1;
        e3.c(0, 2, 2) = e3.c(2, 0, 2) = 1;
        e3.c(1, 1, 2) = 1;
        out.push_back(std::move(e3));
    }
    for (const auto& a : out) a.validate();
    return out;
}

}  // namespace forge
