#pragma once

namespace forge {

/// Sign conventions used across the whole library (cochain calculus,
/// bar-complex matrices, A-infinity identities). Everything is phrased in
/// terms of the shifted degree of a p-cochain of internal degree s,
///   shifted(p, s) = p + s - 1,
/// so every structure map m_d (internal degree 2-d) has shifted degree 1.
///
/// On elements the conventions are:
///   (f compose_i g)(a_1,...)      carries (-1)^{shifted(g) * eps_{i-1}}
///   [f,g] = f o g - (-1)^{shifted(f)*shifted(g)} g o f
///   delta f = (-1)^{shifted(f)} [mu, f]          (mu = multiplication)
/// where eps_{i-1} = sum_{j<i} (|a_j| - 1) is the shifted degree of the
/// prefix of arguments. A family {m_d} is an A-infinity structure iff
/// sum over a+b=N+1 of m_a o-bar m_b vanishes for every N.

inline int parity(long k) { return static_cast<int>(((k % 2) + 2) % 2); }

inline int shifted_degree(int arity, int internal_degree) { return parity(arity + internal_degree - 1); }

/// +1 or -1 as an integer sign from a parity exponent.
inline int sign_of(long exponent) { return parity(exponent) == 0 ? 1 : -1; }

/// Koszul sign for inserting an operation of shifted degree `g_shifted`
/// past a prefix of arguments of total shifted degree `prefix_shifted`.
inline int insertion_sign(int g_shifted, int prefix_shifted) { return sign_of(long(g_shifted) * prefix_shifted); }

/// Sign relating the two orders in the Gerstenhaber bracket.
inline int bracket_flip_sign(int f_shifted, int g_shifted) { return sign_of(long(f_shifted) * g_shifted); }

/// delta f = delta_vs_bracket_sign(f) * [mu, f].
inline int delta_vs_bracket_sign(int f_shifted) { return sign_of(f_shifted); }

/// Suspension sign of the product on shifted elements:
/// b2(x, y) = (-1)^{deg x} x*y. Collapses to +1 in the all-even setting.
inline int suspended_product_sign(int deg_first) { return sign_of(deg_first); }

}  // namespace forge
