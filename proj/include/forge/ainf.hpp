#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forge/coboundary.hpp"
#include "forge/cochain.hpp"
#include "forge/rng.hpp"

namespace forge {

/// Minimal A-infinity structure on F: m_1 = 0 (absent), m_2 = multiplication,
/// m_d of internal degree 2-d. `verified_arity` records how far the Stasheff
/// identities have been checked symbolically.
class AInfStructure {
public:
    explicit AInfStructure(const Tower& tw);

    const Tower& tower() const { return tw_; }
    /// Stored nonzero operations (always contains arity 2).
    const std::map<int, PolyDiffCochain>& ops() const { return ops_; }
    /// m_d, materialized as the zero cochain when absent.
    PolyDiffCochain op(int d) const;
    bool has_op(int d) const { return ops_.count(d) != 0; }
    void set_op(int d, PolyDiffCochain m);  // enforces arity/degree law, d >= 3

    int verified_arity() const { return verified_arity_; }
    void set_verified_arity(int a) { verified_arity_ = a; }

    bool is_strict() const { return ops_.size() == 1; }
    int max_stored_arity() const { return ops_.rbegin()->first; }

    std::string dump() const;  // cochain literals for every stored m_d

private:
    Tower tw_;
    std::map<int, PolyDiffCochain> ops_;
    int verified_arity_ = 0;
};

/// The alternating cochain dx1 ^ ... ^ dx_{n+1} on K (arity n+1, degree 0).
PolyDiffCochain volume_cocycle_x(const Tower& tw);

/// The alternating cochain dx1 ^ ... ^ dx_{n+1} ^ dt (arity n+2, degree -n);
/// the seed operation m_{n+2} of the deformed structure.
PolyDiffCochain volume_cocycle_xt(const Tower& tw);

/// Full Stasheff sum  sum_{a+b=N+1} m_a o-bar m_b  at arity N.
PolyDiffCochain stasheff_defect(const AInfStructure& S, int N);

struct StasheffReport {
    int arity = 0;
    bool symbolic = true;
    bool ok = false;
    std::string detail;  // offending cochain / tuple when not ok
};

StasheffReport stasheff_check_symbolic(const AInfStructure& S, int N);
/// Evaluates the defect on `count` pseudo-random monomial tuples with the
/// given seed, without materializing the symbolic normal form.
StasheffReport stasheff_check_sampled(const AInfStructure& S, int N, int count, std::uint64_t seed);

struct ExtensionOutcome {
    AInfStructure structure;
    std::vector<int> zero_obstruction_arities;
    std::vector<int> corrected_arities;  // arities whose obstruction needed a primitive
    bool seed_square_vanished = true;    // whether m_{n+2} o-bar m_{n+2} was already zero
};

/// Degreewise construction of a minimal structure with the given m_2 and
/// m_{n+2}: for each arity d up to max_arity the obstruction (insertion sums
/// of lower operations) is checked closed and killed, either trivially or by
/// a bounded primitive solve. Throws ObstructionNotClosed (internal
/// inconsistency) or ObstructionUnresolved (solver bounds too small).
ExtensionOutcome extend_minimal(const PolyDiffCochain& m2, const PolyDiffCochain& seed, int max_arity,
                                const SolverConfig& solver_cfg);

/// Degree-zero automorphism data of F: x_i -> images_x[i], t -> t_unit * t.
struct AutSpec {
    std::vector<RatFunc> images_x;
    RatFunc t_unit;
};

RatFunc jacobian_det(const Tower& tw, const AutSpec& f1);
/// Throws InvalidAutomorphism unless the Jacobian determinant and t_unit are
/// nonzero (formal invertibility; every true automorphism satisfies it).
void validate_aut(const Tower& tw, const AutSpec& f1);
FElem apply_aut(const Tower& tw, const AutSpec& f1, const FElem& a);

struct ObstructionCertificate {
    FElem value;       // alternating evaluation of seed(f1 -, ..., f1 -) at the coordinates
    bool nonzero = false;
    RatFunc jacobian;  // det of the x-Jacobian of f1
    RatFunc t_unit;
};

/// First obstruction against extending f1 to an A-infinity isomorphism from
/// the strict structure to the deformed one; nonzero for every valid spec.
ObstructionCertificate morphism_obstruction(const Tower& tw, const AutSpec& f1, const PolyDiffCochain& seed);

/// Seeded generator of valid automorphism specs (triangular polynomial
/// images composed with a variable permutation, so the Jacobian determinant
/// is structurally nonzero; it is still computed and checked).
AutSpec random_autspec(Rng& rng, const Tower& tw, int max_deg = 2);

}  // namespace forge
