#include "forge/felem.hpp"

#include <cassert>
#include <sstream>

#include "forge/errors.hpp"

namespace forge {

FElem::FElem(const Tower& tw, const RatFunc& c, int texp) : n_(tw.n) {
    assert(c.nvars() == tw.nvars());
    if (!c.is_zero()) coeffs_.emplace(texp, c);
}

int FElem::degree() const {
    if (is_zero()) throw NotHomogeneous("degree of zero element");
    if (!is_homogeneous()) throw NotHomogeneous();
    return n_ * coeffs_.begin()->first;
}

int FElem::t_exponent() const {
    if (is_zero() || !is_homogeneous()) throw NotHomogeneous();
    return coeffs_.begin()->first;
}

RatFunc FElem::coeff_at(int j) const {
    auto it = coeffs_.find(j);
    if (it == coeffs_.end()) return RatFunc(n_ + 1);
    return it->second;
}

void FElem::add_component(int j, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(j);
    if (it == coeffs_.end()) {
        coeffs_.emplace(j, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

FElem FElem::operator-() const {
    FElem r(tower());
    for (const auto& [j, c] : coeffs_) r.coeffs_.emplace(j, -c);
    return r;
}

FElem FElem::operator+(const FElem& o) const {
    assert(n_ == o.n_ || is_zero() || o.is_zero());
    FElem r = is_zero() ? FElem(o.tower()) : *this;
    for (const auto& [j, c] : o.coeffs_) r.add_component(j, c);
    return r;
}

FElem FElem::operator-(const FElem& o) const { return *this + (-o); }

FElem FElem::operator*(const FElem& o) const {
    assert(n_ == o.n_);
    FElem r(tower());
    for (const auto& [ja, ca] : coeffs_) {
        for (const auto& [jb, cb] : o.coeffs_) {
            r.add_component(ja + jb, ca * cb);
        }
    }
    return r;
}

FElem FElem::operator*(const Rat& c) const {
    FElem r(tower());
    if (c == 0) return r;
    for (const auto& [j, cf] : coeffs_) r.coeffs_.emplace(j, RatFunc(n_ + 1, c) * cf);
    return r;
}

FElem FElem::invert_homogeneous() const {
    if (is_zero()) throw ZeroInverse();
    if (!is_homogeneous()) throw NotHomogeneous("only homogeneous elements of F are invertible");
    int j = coeffs_.begin()->first;
    return FElem(tower(), coeffs_.begin()->second.inverse(), -j);
}

FElem FElem::partial(int dir) const {
    Tower tw = tower();
    assert(dir >= 0 && dir < tw.ndirs());
    FElem r(tw);
    if (dir == tw.t_dir()) {
        for (const auto& [j, c] : coeffs_) {
            if (j == 0) continue;
            r.add_component(j - 1, RatFunc(tw.nvars(), Rat(j)) * c);
        }
    } else {
        for (const auto& [j, c] : coeffs_) r.add_component(j, c.derivative(dir));
    }
    return r;
}

std::string FElem::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [j, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        if (j == 0) {
            os << c.to_string();
        } else {
            if (c.is_one()) {
                os << "t";
            } else {
                os << c.to_string() << "*t";
            }
            if (j != 1) os << "^" << j;
        }
    }
    return os.str();
}

}  // namespace forge
