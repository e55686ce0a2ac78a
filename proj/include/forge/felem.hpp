#pragma once

#include <map>
#include <optional>
#include <string>

#include "forge/ratfunc.hpp"

namespace forge {

/// Ambient graded field data: F = K[t,t^-1] with K = Q(x1,...,x_{n+1}),
/// t in internal degree n (n > 0 even). Directions 0..n are the x's,
/// direction n+1 is t.
struct Tower {
    int n = 2;

    int nvars() const { return n + 1; }       // variables of K
    int ndirs() const { return n + 2; }       // derivation directions incl. t
    int t_dir() const { return n + 1; }
    bool valid() const { return n > 0 && n % 2 == 0; }
};

/// Element of F = K[t,t^-1]: finite map t-exponent -> nonzero RatFunc.
/// The j-component is homogeneous of internal degree n*j.
class FElem {
public:
    FElem() : n_(0) {}
    explicit FElem(const Tower& tw) : n_(tw.n) {}
    FElem(const Tower& tw, const RatFunc& c, int texp = 0);
    static FElem t_power(const Tower& tw, int j) { return FElem(tw, RatFunc(tw.nvars(), Rat(1)), j); }
    static FElem variable(const Tower& tw, int index) {
        return FElem(tw, RatFunc::variable(tw.nvars(), index), 0);
    }
    /// Coordinate element for a derivation direction: x_{i+1} or t.
    static FElem coordinate(const Tower& tw, int dir) {
        return dir == tw.t_dir() ? t_power(tw, 1) : variable(tw, dir);
    }

    int grading_n() const { return n_; }
    Tower tower() const { return Tower{n_}; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, RatFunc>& coeffs() const { return coeffs_; }
    std::size_t component_count() const { return coeffs_.size(); }

    bool is_homogeneous() const { return coeffs_.size() <= 1; }
    /// Internal degree of a nonzero homogeneous element.
    int degree() const;
    /// t-exponent of a nonzero homogeneous element.
    int t_exponent() const;
    RatFunc coeff_at(int j) const;

    void add_component(int j, const RatFunc& c);

    FElem operator-() const;
    FElem operator+(const FElem& o) const;
    FElem operator-(const FElem& o) const;
    FElem operator*(const FElem& o) const;
    FElem operator*(const Rat& c) const;
    bool operator==(const FElem& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }
    bool operator!=(const FElem& o) const { return !(*this == o); }

    /// Inverse of a nonzero homogeneous element c*t^j, i.e. c^-1 * t^-j.
    /// Throws NotHomogeneous / ZeroInverse.
    FElem invert_homogeneous() const;

    /// Partial derivative along direction 0..n (the x's) or n+1 (t).
    FElem partial(int dir) const;

    std::string to_string() const;

private:
    int n_;
    std::map<int, RatFunc> coeffs_;
};

inline FElem operator*(const Rat& c, const FElem& a) { return a * c; }

}  // namespace forge
