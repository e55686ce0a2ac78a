#pragma once

#include <cstddef>
#include <optional>

#include "forge/cochain.hpp"

namespace forge {

/// Search space for solve_coboundary: slot orders bounded per slot,
/// coefficients restricted to q * t^j with q rational and j in the window.
struct SolverConfig {
    int order_bound = 3;
    int t_window_lo = -2;
    int t_window_hi = 2;
    std::size_t max_patterns = 50'000'000;  // raw enumeration guard
};

/// Find psi with delta(psi) = rho inside the bounded search space, or
/// nullopt when no solution exists there (which is not a proof of
/// non-existence outside the space). Throws NotClosed when delta(rho) != 0.
///
/// The search decomposes by (total derivative multi-index, coefficient
/// t-power), which the differential preserves, and when rho is invariant
/// under permutations of the derivative directions the solve runs on orbit
/// sums, which keeps the arity-7 systems small.
std::optional<PolyDiffCochain> solve_coboundary(const PolyDiffCochain& rho, const SolverConfig& cfg = {});

}  // namespace forge
