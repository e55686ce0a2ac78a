#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "forge/rat.hpp"

namespace forge {

/// Sparse vector over Q: (column, value) pairs sorted by column, values nonzero.
using SparseVec = std::vector<std::pair<int, Rat>>;

/// Incremental exact row-echelon over Q. Equations are reduced against the
/// pivots seen so far; a vanishing left side with nonzero right side marks
/// the system inconsistent.
class LinearSystem {
public:
    void add_equation(SparseVec lhs, Rat rhs);
    bool inconsistent() const { return inconsistent_; }
    /// Number of pivots; feeding the columns of a matrix as equations makes
    /// this the exact rank.
    std::size_t rank() const { return pivots_.size(); }

    /// One exact solution with all free variables set to zero, or nullopt
    /// when the system is inconsistent. Keys are the nonzero variables.
    std::optional<std::map<int, Rat>> solve() const;

private:
    struct Row {
        SparseVec a;  // a.front() is the pivot, normalized to 1
        Rat rhs;
    };
    std::map<int, Row> pivots_;  // pivot column -> row
    bool inconsistent_ = false;
};

}  // namespace forge
