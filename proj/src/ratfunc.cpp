#include "forge/ratfunc.hpp"

#include <cassert>
#include <sstream>

#include "forge/errors.hpp"

namespace forge {

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = MPoly(num_.nvars(), Rat(1));
        return;
    }
    MPoly g = MPoly::gcd(num_, den_);
    if (!g.is_one()) {
        auto qn = num_.divided_by(g);
        auto qd = den_.divided_by(g);
        assert(qn && qd);
        num_ = *qn;
        den_ = *qd;
    }
    Rat lc = den_.leading_coeff();
    if (lc != 1) {
        Rat inv = Rat(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    assert(nvars() == o.nvars());
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    assert(nvars() == o.nvars());
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    assert(nvars() == o.nvars());
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return RatFunc(den_, num_);
}

bool RatFunc::operator<(const RatFunc& o) const {
    auto key = [](const MPoly& p) {
        std::vector<std::pair<Expo, Rat>> v(p.terms().begin(), p.terms().end());
        return v;
    };
    auto a = std::make_pair(key(num_), key(den_));
    auto b = std::make_pair(key(o.num_), key(o.den_));
    return a < b;
}

RatFunc RatFunc::derivative(int var) const {
    // (n/d)' = (n'd - nd')/d^2
    return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

namespace {

RatFunc eval_poly(const MPoly& p, const std::vector<RatFunc>& images, int nv_out) {
    RatFunc acc(nv_out);
    for (const auto& [e, c] : p.terms()) {
        RatFunc term(nv_out, c);
        for (std::size_t v = 0; v < images.size(); ++v) {
            for (int k = 0; k < e[static_cast<int>(v)]; ++k) term = term * images[v];
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace

RatFunc RatFunc::substitute(const std::vector<RatFunc>& images) const {
    assert(static_cast<int>(images.size()) == nvars());
    int nv_out = images.empty() ? nvars() : images.front().nvars();
    RatFunc n = eval_poly(num_, images, nv_out);
    RatFunc d = eval_poly(den_, images, nv_out);
    if (d.is_zero()) throw SubstitutionPole();
    return n / d;
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) {
        if (num_.term_count() <= 1) return num_.to_string();
        return "(" + num_.to_string() + ")";
    }
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(" << den_.to_string() << ")";
    return os.str();
}

}  // namespace forge
