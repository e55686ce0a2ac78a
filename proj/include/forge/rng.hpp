#pragma once

#include <cstdint>

#include "forge/felem.hpp"

namespace forge {

/// splitmix64; hand-rolled so sampled checks are reproducible across
/// platforms and standard-library versions.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi].
    int range(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rat nonzero_scalar(int bound = 3) {
        int v = range(1, bound);
        return Rat(next() & 1 ? v : -v);
    }
};

/// Random monomial c * x^e * t^j with small entries. Products and
/// derivatives of monomials stay monomial, so sampled identities evaluate
/// fast.
inline FElem random_monomial(Rng& rng, const Tower& tw, int max_exp = 2, int t_lo = -1, int t_hi = 1) {
    Expo e(static_cast<std::size_t>(tw.nvars()), 0);
    for (auto& v : e) v = rng.range(0, max_exp);
    RatFunc c = RatFunc::from_poly(MPoly::monomial(tw.nvars(), e, rng.nonzero_scalar()));
    return FElem(tw, c, rng.range(t_lo, t_hi));
}

/// Random small rational function: monomial or binomial over a monomial.
inline RatFunc random_ratfunc(Rng& rng, int nvars, int max_exp = 2) {
    auto mono = [&] {
        Expo e(static_cast<std::size_t>(nvars), 0);
        for (auto& v : e) v = rng.range(0, max_exp);
        return MPoly::monomial(nvars, e, rng.nonzero_scalar());
    };
    MPoly num = mono();
    if (rng.range(0, 1)) num = num + mono();
    if (num.is_zero()) num = MPoly(nvars, Rat(1));
    MPoly den = rng.range(0, 1) ? mono() : MPoly(nvars, Rat(1));
    return RatFunc(num, den);
}

inline FElem random_felem(Rng& rng, const Tower& tw, int components = 1, int t_lo = -1, int t_hi = 1) {
    FElem r(tw);
    for (int k = 0; k < components; ++k) {
        r.add_component(rng.range(t_lo, t_hi), random_ratfunc(rng, tw.nvars()));
    }
    return r;
}

}  // namespace forge
