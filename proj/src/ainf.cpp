#include "forge/ainf.hpp"

#include <cassert>
#include <functional>
#include <sstream>

#include "forge/errors.hpp"

namespace forge {

AInfStructure::AInfStructure(const Tower& tw) : tw_(tw) {
    ops_.emplace(2, multiplication_cochain(tw));
    if (!gerstenhaber_circle(ops_.at(2), ops_.at(2)).is_zero())
        throw Error("multiplication cochain is not associative");
    verified_arity_ = 3;
}

PolyDiffCochain AInfStructure::op(int d) const {
    auto it = ops_.find(d);
    if (it != ops_.end()) return it->second;
    return PolyDiffCochain(tw_, d, 2 - d);
}

void AInfStructure::set_op(int d, PolyDiffCochain m) {
    if (d < 3) throw Error("set_op: arity must be >= 3");
    if (m.arity() != d) throw ArityMismatch("set_op: cochain arity != d");
    if (!m.is_zero() && m.degree() != 2 - d)
        throw NotHomogeneous("set_op: m_" + std::to_string(d) + " must have internal degree " +
                             std::to_string(2 - d));
    if (m.is_zero())
        ops_.erase(d);
    else
        ops_.insert_or_assign(d, std::move(m));
}

std::string AInfStructure::dump() const {
    std::ostringstream os;
    for (const auto& [d, m] : ops_) {
        os << "m" << d << ":\n" << m.to_literal();
    }
    return os.str();
}

PolyDiffCochain volume_cocycle_x(const Tower& tw) {
    std::vector<int> dirs;
    for (int d = 0; d < tw.nvars(); ++d) dirs.push_back(d);
    return antisymmetrized_partials(tw, dirs);
}

PolyDiffCochain volume_cocycle_xt(const Tower& tw) {
    std::vector<int> dirs;
    for (int d = 0; d < tw.ndirs(); ++d) dirs.push_back(d);
    return antisymmetrized_partials(tw, dirs);
}

PolyDiffCochain stasheff_defect(const AInfStructure& S, int N) {
    const Tower& tw = S.tower();
    PolyDiffCochain acc(tw, N, 3 - N);  // degree of m_a o m_b with a+b=N+1
    for (const auto& [a, ma] : S.ops()) {
        int b = N + 1 - a;
        if (b < 2 || !S.has_op(b)) continue;
        acc = acc + gerstenhaber_circle(ma, S.op(b));
    }
    return acc;
}

StasheffReport stasheff_check_symbolic(const AInfStructure& S, int N) {
    StasheffReport rep;
    rep.arity = N;
    rep.symbolic = true;
    PolyDiffCochain defect = stasheff_defect(S, N);
    rep.ok = defect.is_zero();
    if (!rep.ok) rep.detail = defect.to_literal();
    return rep;
}

StasheffReport stasheff_check_sampled(const AInfStructure& S, int N, int count, std::uint64_t seed) {
    StasheffReport rep;
    rep.arity = N;
    rep.symbolic = false;
    rep.ok = true;
    const Tower& tw = S.tower();
    Rng rng(seed);
    for (int trial = 0; trial < count && rep.ok; ++trial) {
        std::vector<FElem> args;
        args.reserve(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i) args.push_back(random_monomial(rng, tw));
        // direct nested evaluation, independent of the symbolic expansion
        FElem total(tw);
        for (const auto& [a, ma] : S.ops()) {
            int b = N + 1 - a;
            if (b < 2 || !S.has_op(b)) continue;
            const PolyDiffCochain mb = S.op(b);
            for (int i = 0; i + b <= N; ++i) {
                std::vector<FElem> inner(args.begin() + i, args.begin() + i + b);
                std::vector<FElem> outer;
                outer.reserve(static_cast<std::size_t>(a));
                outer.insert(outer.end(), args.begin(), args.begin() + i);
                outer.push_back(mb.evaluate(inner));
                outer.insert(outer.end(), args.begin() + i + b, args.end());
                total = total + ma.evaluate(outer) * Rat(insertion_sign(mb.shifted(), i));
            }
        }
        if (!total.is_zero()) {
            rep.ok = false;
            std::ostringstream os;
            os << "nonzero defect " << total.to_string() << " at sampled tuple #" << trial;
            rep.detail = os.str();
        }
    }
    return rep;
}

ExtensionOutcome extend_minimal(const PolyDiffCochain& m2, const PolyDiffCochain& seed, int max_arity,
                                const SolverConfig& solver_cfg) {
    const Tower tw = m2.tower();
    if (m2 != multiplication_cochain(tw)) throw Error("extend_minimal: m2 must be the multiplication cochain");
    const int d0 = seed.arity();
    if (!seed.is_zero() && seed.degree() != 2 - d0)
        throw NotHomogeneous("extend_minimal: seed degree violates the degree law");
    if (!seed.hochschild_differential().is_zero()) throw NotClosed("extend_minimal: seed is not closed");

    ExtensionOutcome out{AInfStructure(tw), {}, {}, true};
    if (!seed.is_zero()) out.structure.set_op(d0, seed);

    for (int d = d0 + 1; d <= max_arity; ++d) {
        // obstruction: insertion sums of strictly lower operations that feed
        // the arity-(d+1) identity; the identity then reads delta m_d = o_d
        PolyDiffCochain o(tw, d + 1, 2 - d);
        for (const auto& [a, ma] : out.structure.ops()) {
            int b = d + 2 - a;
            if (a < 3 || b < 3 || b >= d || !out.structure.has_op(b)) continue;
            o = o + gerstenhaber_circle(ma, out.structure.op(b));
        }
        if (o.is_zero()) {
            out.zero_obstruction_arities.push_back(d);
            continue;
        }
        if (!o.hochschild_differential().is_zero())
            throw ObstructionNotClosed("obstruction at arity " + std::to_string(d) + " is not closed");
        std::optional<PolyDiffCochain> md;
        try {
            md = solve_coboundary(o, solver_cfg);
        } catch (const SizeLimitExceeded& e) {
            throw ObstructionUnresolved(std::string("bounded solve at arity ") + std::to_string(d) +
                                        " exceeded the size limit: " + e.what() +
                                        "; raise order_bound/t-window limits");
        }
        if (!md)
            throw ObstructionUnresolved("no primitive for the arity-" + std::to_string(d) +
                                        " obstruction within order_bound=" + std::to_string(solver_cfg.order_bound) +
                                        ", t-window=[" + std::to_string(solver_cfg.t_window_lo) + "," +
                                        std::to_string(solver_cfg.t_window_hi) +
                                        "]; raise the bounds (a primitive exists in a large enough space)");
        assert(md->arity() == d);
        out.structure.set_op(d, *md);
        out.corrected_arities.push_back(d);
        if (d == 2 * d0 - 2) out.seed_square_vanished = false;
    }

    for (int N = 3; N <= max_arity + 1; ++N) {
        StasheffReport rep = stasheff_check_symbolic(out.structure, N);
        if (!rep.ok)
            throw StasheffViolation("identity at arity " + std::to_string(N) +
                                    " fails after extension:\n" + rep.detail);
    }
    out.structure.set_verified_arity(max_arity + 1);
    return out;
}

RatFunc jacobian_det(const Tower& tw, const AutSpec& f1) {
    const int m = tw.nvars();
    std::vector<std::vector<RatFunc>> jac(static_cast<std::size_t>(m),
                                          std::vector<RatFunc>(static_cast<std::size_t>(m), RatFunc(m)));
    for (int i = 0; i < m; ++i)
        for (int d = 0; d < m; ++d) jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] =
            f1.images_x[static_cast<std::size_t>(i)].derivative(d);

    // cofactor expansion; m is small
    std::vector<int> cols(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) cols[static_cast<std::size_t>(i)] = i;
    std::function<RatFunc(int, std::vector<int>&)> det = [&](int row, std::vector<int>& cs) -> RatFunc {
        if (cs.empty()) return RatFunc(m, Rat(1));
        RatFunc acc(m);
        for (std::size_t k = 0; k < cs.size(); ++k) {
            int c = cs[k];
            std::vector<int> rest;
            rest.reserve(cs.size() - 1);
            for (std::size_t l = 0; l < cs.size(); ++l)
                if (l != k) rest.push_back(cs[l]);
            RatFunc term = jac[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] * det(row + 1, rest);
            acc = (k % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    return det(0, cols);
}

void validate_aut(const Tower& tw, const AutSpec& f1) {
    if (static_cast<int>(f1.images_x.size()) != tw.nvars())
        throw InvalidAutomorphism("expected " + std::to_string(tw.nvars()) + " images of the x-variables");
    if (f1.t_unit.is_zero()) throw InvalidAutomorphism("t_unit must be nonzero");
    if (jacobian_det(tw, f1).is_zero()) throw InvalidAutomorphism("Jacobian determinant vanishes");
}

FElem apply_aut(const Tower& tw, const AutSpec& f1, const FElem& a) {
    FElem r(tw);
    for (const auto& [j, c] : a.coeffs()) {
        RatFunc img = c.substitute(f1.images_x);
        RatFunc upow(tw.nvars(), Rat(1));
        for (int k = 0; k < (j < 0 ? -j : j); ++k) upow = upow * f1.t_unit;
        if (j < 0) upow = upow.inverse();
        r.add_component(j, img * upow);
    }
    return r;
}

ObstructionCertificate morphism_obstruction(const Tower& tw, const AutSpec& f1, const PolyDiffCochain& seed) {
    validate_aut(tw, f1);
    std::vector<FElem> images;
    images.reserve(static_cast<std::size_t>(tw.ndirs()));
    for (int d = 0; d < tw.ndirs(); ++d) images.push_back(apply_aut(tw, f1, FElem::coordinate(tw, d)));
    ObstructionCertificate cert;
    cert.value = alternating_evaluate(seed, images);
    cert.nonzero = !cert.value.is_zero();
    cert.jacobian = jacobian_det(tw, f1);
    cert.t_unit = f1.t_unit;
    return cert;
}

AutSpec random_autspec(Rng& rng, const Tower& tw, int max_deg) {
    const int m = tw.nvars();
    AutSpec f;
    f.images_x.assign(static_cast<std::size_t>(m), RatFunc(m));
    // triangular map: x_i -> c_i x_i + p_i(x_{i+1},...,x_m), then a permutation
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = m - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)],
                                              perm[static_cast<std::size_t>(rng.range(0, i))]);
    for (int i = 0; i < m; ++i) {
        MPoly p = MPoly::variable(m, perm[static_cast<std::size_t>(i)]) * rng.nonzero_scalar();
        for (int k = i + 1; k < m; ++k) {
            if (rng.range(0, 1) == 0) continue;
            Expo e(static_cast<std::size_t>(m), 0);
            e[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = rng.range(1, max_deg);
            p = p + MPoly::monomial(m, e, rng.nonzero_scalar());
        }
        f.images_x[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = RatFunc::from_poly(p);
    }
    // t-unit: nonzero monomial in K
    Expo e(static_cast<std::size_t>(m), 0);
    for (auto& v : e) v = rng.range(0, 1);
    f.t_unit = RatFunc::from_poly(MPoly::monomial(m, e, rng.nonzero_scalar()));
    validate_aut(tw, f);
    return f;
}

}  // namespace forge
