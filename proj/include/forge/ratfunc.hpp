#pragma once

#include <string>
#include <vector>

#include "forge/mpoly.hpp"

namespace forge {

/// Element of K = Q(x1,...,xm) as a normalized fraction:
/// gcd(num, den) = 1 and den monic in grlex order, so equal values have
/// identical representations.
class RatFunc {
public:
    RatFunc() : num_(0), den_(0, Rat(1)) {}
    explicit RatFunc(int nv) : num_(nv), den_(nv, Rat(1)) {}
    RatFunc(int nv, const Rat& c) : num_(nv, c), den_(nv, Rat(1)) {}
    RatFunc(MPoly num, MPoly den);
    static RatFunc variable(int nv, int index) { return RatFunc(MPoly::variable(nv, index), MPoly(nv, Rat(1))); }
    static RatFunc from_poly(MPoly p) {
        int nv = p.nvars();
        return RatFunc(std::move(p), MPoly(nv, Rat(1)));
    }

    int nvars() const { return num_.nvars(); }
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    Rat constant_value() const { return num_.constant_value(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;  // throws DivisionByZero
    RatFunc inverse() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    bool operator<(const RatFunc& o) const;  // arbitrary total order for canonical sorting

    RatFunc derivative(int var) const;  // quotient rule, normalized

    /// Exact composition a(images). Throws SubstitutionPole when the
    /// substituted denominator vanishes identically.
    RatFunc substitute(const std::vector<RatFunc>& images) const;

    std::string to_string() const;

private:
    void normalize();
    MPoly num_, den_;
};

inline RatFunc operator*(const Rat& c, const RatFunc& f) { return RatFunc(f.nvars(), c) * f; }

}  // namespace forge
