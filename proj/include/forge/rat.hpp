#pragma once

#include <gmpxx.h>

#include <string>

#include "forge/errors.hpp"

namespace forge {

/// Exact rational scalar. All arithmetic in the library bottoms out here.
using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

/// Binomial coefficient as an exact integer-valued rational.
inline Rat rat_binomial(long n, long k) {
    if (k < 0 || k > n) return Rat(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(r);
}

inline Rat rat_factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(r);
}

}  // namespace forge
