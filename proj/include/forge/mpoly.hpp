#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forge/rat.hpp"

namespace forge {

/// Exponent vector of fixed length (one entry per variable).
using Expo = std::vector<int>;

inline int expo_total(const Expo& e) {
    int t = 0;
    for (int v : e) t += v;
    return t;
}

/// Graded lexicographic order with x1 most significant. This is the module-wide
/// monomial order; canonical denominators depend on it.
struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = expo_total(a), db = expo_total(b);
        if (da != db) return da < db;
        return a < b;  // lexicographic, x1 first
    }
};

/// Multivariate polynomial over Q with a fixed number of variables.
/// Invariant: no zero coefficients are stored.
class MPoly {
public:
    using TermMap = std::map<Expo, Rat, GrlexLess>;

    MPoly() : nv_(0) {}
    explicit MPoly(int nv) : nv_(nv) {}
    MPoly(int nv, const Rat& c);                       // constant
    static MPoly variable(int nv, int index);          // x_{index+1}
    static MPoly monomial(int nv, Expo e, const Rat& c);

    int nvars() const { return nv_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    Rat constant_value() const;  // requires is_constant()
    int total_degree() const;    // -1 for zero
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const Expo& leading_expo() const;  // grlex-largest monomial
    const Rat& leading_coeff() const;

    void add_term(const Expo& e, const Rat& c);

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rat& c) const;
    bool operator==(const MPoly& o) const { return nv_ == o.nv_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    /// Exact division; returns nullopt when o does not divide *this.
    std::optional<MPoly> divided_by(const MPoly& o) const;

    MPoly derivative(int var) const;

    /// Monic (leading coefficient 1) multivariate gcd, computed by
    /// content/primitive-part recursion with a primitive PRS.
    static MPoly gcd(const MPoly& a, const MPoly& b);

    std::string to_string() const;  // canonical; see parse.hpp for the grammar

private:
    int nv_;
    TermMap terms_;
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

}  // namespace forge
