#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "forge/felem.hpp"
#include "forge/signs.hpp"

namespace forge {

/// Commuting composition of partial derivatives, stored as a multi-index
/// over the n+2 directions (x1..x_{n+1}, t). Internal degree is
/// -n * (t-component).
using SlotOp = std::vector<std::uint8_t>;

inline SlotOp slot_identity(const Tower& tw) { return SlotOp(static_cast<std::size_t>(tw.ndirs()), 0); }
inline int slot_order(const SlotOp& a) {
    int t = 0;
    for (auto v : a) t += v;
    return t;
}
inline int slot_t_order(const SlotOp& a) { return a.empty() ? 0 : static_cast<int>(a.back()); }

/// Apply the operator to an element of F.
FElem slot_apply(const SlotOp& a, const FElem& arg);

std::string slot_to_string(const SlotOp& a);
SlotOp slot_from_string(const Tower& tw, const std::string& text);

/// One summand of a polydifferential cochain: coeff * t^texp tensor slots.
struct CochainTerm {
    RatFunc coeff;
    int texp = 0;
    std::vector<SlotOp> slots;
};

class PolyVector;

/// Hochschild p-cochain on F in polydifferential normal form: terms are
/// sorted by (slots, texp), merged, zero-free, and each term satisfies the
/// homogeneity law n*(texp - sum of slot t-orders) == internal degree.
class PolyDiffCochain {
public:
    PolyDiffCochain() = default;
    PolyDiffCochain(const Tower& tw, int arity, int degree);  // zero cochain
    PolyDiffCochain(const Tower& tw, int arity, int degree, std::vector<CochainTerm> terms);

    const Tower& tower() const { return tw_; }
    int arity() const { return arity_; }
    int degree() const { return degree_; }
    int shifted() const { return shifted_degree(arity_, degree_); }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<CochainTerm>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const PolyDiffCochain& o) const;
    bool operator!=(const PolyDiffCochain& o) const { return !(*this == o); }

    PolyDiffCochain operator+(const PolyDiffCochain& o) const;
    PolyDiffCochain operator-(const PolyDiffCochain& o) const;
    PolyDiffCochain operator*(const Rat& c) const;
    PolyDiffCochain operator-() const { return *this * Rat(-1); }

    /// Multilinear evaluation; throws ArityMismatch.
    FElem evaluate(const std::vector<FElem>& args) const;

    /// Hochschild differential (arity p+1, same internal degree).
    PolyDiffCochain hochschild_differential() const;

    /// HKR symbol: antisymmetrized order-(1,...,1) component, without a
    /// 1/p! factor. Nonzero output certifies a nonzero class.
    PolyVector hkr_symbol() const;

    std::string to_literal() const;
    static PolyDiffCochain from_literal(const std::string& text);

private:
    void normalize();
    Tower tw_;
    int arity_ = 0;
    int degree_ = 0;
    std::vector<CochainTerm> terms_;
};

/// Gerstenhaber insertion composition with Getzler-style shifted signs:
/// phi o psi = sum_i (-1)^{shifted(psi)*(i-1)} phi o_i psi (the element
/// Koszul factors collapse to position signs because every internal degree
/// in F is even).
PolyDiffCochain gerstenhaber_circle(const PolyDiffCochain& phi, const PolyDiffCochain& psi);

/// [phi, psi] = phi o psi - (-1)^{shifted(phi)*shifted(psi)} psi o phi.
PolyDiffCochain gerstenhaber_bracket(const PolyDiffCochain& phi, const PolyDiffCochain& psi);

/// The multiplication 2-cochain of F.
PolyDiffCochain multiplication_cochain(const Tower& tw);

/// Alternating-weight tensor of the first-order partials along `dirs`
/// (sum over permutations with signs, integer weights, no 1/p!).
PolyDiffCochain antisymmetrized_partials(const Tower& tw, const std::vector<int>& dirs);

/// Evaluate the alternating sum  sum_{pi in S_p} sgn(pi) phi(args[pi(1)],...).
FElem alternating_evaluate(const PolyDiffCochain& phi, const std::vector<FElem>& args);

/// Antisymmetric polyvector table: keys are strictly increasing direction
/// tuples; the value at an arbitrary tuple is recovered with the sign of the
/// sorting permutation.
class PolyVector {
public:
    PolyVector() = default;
    PolyVector(const Tower& tw, int arity) : tw_(tw), arity_(arity) {}

    int arity() const { return arity_; }
    bool is_zero() const { return table_.empty(); }
    const std::map<std::vector<int>, FElem>& table() const { return table_; }

    void accumulate(const std::vector<int>& sorted_dirs, const FElem& value);
    FElem coefficient(const std::vector<int>& dirs) const;  // signed lookup

    std::string to_string() const;

private:
    Tower tw_;
    int arity_ = 0;
    std::map<std::vector<int>, FElem> table_;
};

}  // namespace forge
