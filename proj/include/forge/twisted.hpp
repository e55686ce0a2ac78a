#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forge/ainf.hpp"

namespace forge {

/// One-sided twisted complex over a minimal structure on F: a finite sum of
/// shifted copies of F with a strictly lower-triangular connection. Entry
/// (i,j) maps summand j into summand i and is homogeneous of internal degree
/// shifts[i] - shifts[j] + 1.
struct TwistedComplex {
    std::vector<int> shifts;
    std::map<std::pair<int, int>, FElem> connection;

    int rank() const { return static_cast<int>(shifts.size()); }
    FElem entry(const Tower& tw, int i, int j) const;

    /// Structural validation (triangularity, entry degrees); throws Error.
    void validate(const Tower& tw) const;

    std::string to_json(const Tower& tw) const;
    static TwistedComplex from_json(const Tower& tw, const std::string& text);
};

struct MCReport {
    bool ok = false;
    std::pair<int, int> first_bad{-1, -1};
    std::string value;  // offending entry, printed exactly
};

/// Generalized Maurer-Cartan check: sum over d >= 2 of m_d applied along all
/// strictly decreasing index paths vanishes entrywise. Requires S verified
/// far enough for the rank (paths have length <= rank-1).
MCReport mc_check(const TwistedComplex& X, const AInfStructure& S);

/// Degree-h morphism between twisted complexes, stored entrywise: entry
/// (i,j) has internal degree h + shifts_Y[i] - shifts_X[j].
struct MorphismElement {
    TwistedComplex source;  // X
    TwistedComplex target;  // Y
    int hom_degree = 0;
    std::map<std::pair<int, int>, FElem> entries;

    FElem entry(const Tower& tw, int i, int j) const;
    void validate(const Tower& tw) const;
};

/// Twisted-complex operation m_d^{tw}(phi_1,...,phi_d) for a composable
/// chain phi_l : X_l -> X_{l-1}: the connection-insertion sum
///   sum m_{d+k_0+...+k_d}(delta^{k_0}, phi_1, delta^{k_1}, ..., phi_d, delta^{k_d})
/// along matrix paths, with the row-shift gauge sign (-1)^{shift of the
/// output row}. Finite by one-sidedness.
MorphismElement tw_operation(const AInfStructure& S, const std::vector<MorphismElement>& phis);

/// Hom-complex of two MC-passing twisted complexes: graded dimensions (over
/// K, per hom degree) plus the operations above. Throws MCPrereqFailed.
class HomComplex {
public:
    HomComplex(const AInfStructure& S, TwistedComplex X, TwistedComplex Y);

    const TwistedComplex& source() const { return x_; }
    const TwistedComplex& target() const { return y_; }

    /// Dimension over K of the degree-h piece (count of entry slots whose
    /// forced internal degree is a multiple of n).
    int dimension(int h) const;

    MorphismElement differential(const MorphismElement& phi) const;  // m_1^{tw}
    MorphismElement compose(const MorphismElement& f, const MorphismElement& g) const;  // m_2^{tw}(f,g)

private:
    const AInfStructure& s_;
    TwistedComplex x_, y_;
};

/// Cone of a degree-0 closed morphism f : X -> Y, as a new twisted complex:
/// summands are (shifted X, then Y), connection [[delta_X, 0], [f, delta_Y]].
TwistedComplex cone(const AInfStructure& S, const MorphismElement& f);

/// Endomorphism structure of the one-object twisted complex Sigma^u(A): the
/// operations are the shift-conjugated m_d. Reports whether every stored
/// m_{d>=3} vanishes and whether m_{n+2} has nonzero HKR symbol.
struct EndoInvariant {
    int shift = 0;
    int conjugation_sign = 1;     // m_d^{tw} = sign * m_d on the rank-1 object
    bool strictly_associative = false;  // all m_{d>=3} vanish (up to the verified arity)
    bool seed_symbol_nonzero = false;   // HKR symbol of m_{n+2}^{tw} is nonzero
    int verified_arity = 0;
};

EndoInvariant endo_invariant(int shift, const AInfStructure& S);

}  // namespace forge
