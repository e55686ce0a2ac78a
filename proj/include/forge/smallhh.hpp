#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "forge/rat.hpp"

namespace forge {

/// Finite-dimensional graded algebra over Q given by structure constants:
/// e_i * e_j = sum_k c(i,j,k) e_k. Loading validates associativity, the unit
/// axioms and grading multiplicativity.
struct SmallAlgebra {
    std::string name;
    int dim = 0;
    std::vector<int> degrees;
    int unit = 0;
    std::vector<Rat> table;  // dim^3, index (i*dim + j)*dim + k

    const Rat& c(int i, int j, int k) const {
        return table[static_cast<std::size_t>((i * dim + j) * dim + k)];
    }
    Rat& c(int i, int j, int k) { return table[static_cast<std::size_t>((i * dim + j) * dim + k)]; }

    void validate() const;  // throws InvalidAlgebra

    std::string to_json() const;
    static SmallAlgebra from_json(const std::string& text);
};

/// Graded tensor product with Koszul signs:
/// (a (x) b)(a' (x) b') = (-1)^{deg b * deg a'} aa' (x) bb'.
SmallAlgebra tensor_algebra(const SmallAlgebra& A, const SmallAlgebra& B);

/// Hochschild dimensions dim HH^i for i = 0..imax, with the refinement by
/// internal degree (the bar differential preserves it, so each internal
/// degree is an independent block).
struct HHTable {
    std::vector<int> dims;
    std::map<int, std::map<int, int>> by_degree;  // i -> (internal degree -> dim)
};

/// Bar-complex brute force with exact ranks. `size_limit` bounds
/// dim^(imax+2); exceeding it throws SizeLimitExceeded.
HHTable hh_bruteforce(const SmallAlgebra& A, int imax, std::size_t size_limit = 2'000'000);

/// Exact matrix identity delta_{p+1} o delta_p = 0 for p < pmax.
bool bar_differential_squares_to_zero(const SmallAlgebra& A, int pmax);

struct KunnethReport {
    std::vector<int> lhs;  // dim HH^i(A (x) B)
    std::vector<int> rhs;  // convolution of the factors
    bool ok = false;
};

KunnethReport kunneth_check(const SmallAlgebra& A, const SmallAlgebra& B, int imax,
                            std::size_t size_limit = 2'000'000);

/// Hochschild cohomology of k[t,t^-1] through the two-term Koszul bimodule
/// resolution  0 -> E -> E -> k[t,t^-1] -> 0,  E = k[t,t^-1] (x) k[t,t^-1],
/// with the middle map multiplication by t(x)1 - 1(x)t. The checks are
/// exact; the sampled ones use the given seed.
struct LaurentReport {
    int imax = 0;
    std::vector<int> ranks;        // module ranks of HH^i, i = 0..imax
    bool nonzerodivisor_ok = false;  // multiplication by t(x)1 - 1(x)t is injective on samples
    bool kernel_ok = false;          // sampled kernel elements are multiples of t(x)1 - 1(x)t
    bool induced_map_zero = false;   // Hom(E, .) turns the middle map into 0
    bool derivation_ok = false;      // d/dt satisfies Leibniz / the cocycle identity on samples
    bool nontrivial_class = false;   // d/dt is nonzero while every inner derivation vanishes
    bool ok() const {
        return nonzerodivisor_ok && kernel_ok && induced_map_zero && derivation_ok && nontrivial_class;
    }
};

LaurentReport hh_laurent(int imax, std::uint64_t seed = 17);

/// Built-in fixture algebras (ground field, dual numbers in even and odd
/// degree, k x k, a 3-dimensional truncated polynomial algebra).
std::vector<SmallAlgebra> fixture_algebras();

}  // namespace forge
