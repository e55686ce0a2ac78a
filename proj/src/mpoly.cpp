#include "forge/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "forge/errors.hpp"

namespace forge {

MPoly::MPoly(int nv, const Rat& c) : nv_(nv) {
    if (c != 0) terms_.emplace(Expo(nv, 0), c);
}

MPoly MPoly::variable(int nv, int index) {
    assert(index >= 0 && index < nv);
    Expo e(nv, 0);
    e[index] = 1;
    return monomial(nv, e, Rat(1));
}

MPoly MPoly::monomial(int nv, Expo e, const Rat& c) {
    assert(static_cast<int>(e.size()) == nv);
    MPoly p(nv);
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && expo_total(terms_.begin()->first) == 0;
}

bool MPoly::is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second == 1; }

Rat MPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    assert(is_constant());
    return terms_.begin()->second;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return expo_total(terms_.rbegin()->first);
}

const Expo& MPoly::leading_expo() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

const Rat& MPoly::leading_coeff() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

void MPoly::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(nv_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    assert(nv_ == o.nv_);
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    assert(nv_ == o.nv_);
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    assert(nv_ == o.nv_);
    MPoly r(nv_);
    Expo e(nv_, 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nv_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::operator*(const Rat& c) const {
    MPoly r(nv_);
    if (c == 0) return r;
    for (const auto& [e, cf] : terms_) r.terms_.emplace(e, cf * c);
    return r;
}

std::optional<MPoly> MPoly::divided_by(const MPoly& o) const {
    if (o.is_zero()) throw DivisionByZero("polynomial division by zero");
    MPoly rem = *this;
    MPoly quot(nv_);
    const Expo& lo = o.leading_expo();
    const Rat& lc = o.leading_coeff();
    while (!rem.is_zero()) {
        const Expo& lr = rem.leading_expo();
        Expo q(nv_);
        for (int i = 0; i < nv_; ++i) {
            q[i] = lr[i] - lo[i];
            if (q[i] < 0) return std::nullopt;
        }
        Rat qc = rem.leading_coeff() / lc;
        MPoly qm = monomial(nv_, q, qc);
        quot = quot + qm;
        rem = rem - qm * o;
    }
    return quot;
}

MPoly MPoly::derivative(int var) const {
    assert(var >= 0 && var < nv_);
    MPoly r(nv_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expo d = e;
        d[var] -= 1;
        r.add_term(d, c * Rat(e[var]));
    }
    return r;
}

namespace {

// Univariate view: coefficients of v^k, each an MPoly not involving v.
std::vector<MPoly> as_univariate(const MPoly& p, int v) {
    int dv = 0;
    for (const auto& [e, c] : p.terms()) dv = std::max(dv, e[v]);
    std::vector<MPoly> coeffs(static_cast<std::size_t>(dv) + 1, MPoly(p.nvars()));
    for (const auto& [e, c] : p.terms()) {
        Expo r = e;
        int k = r[v];
        r[v] = 0;
        coeffs[static_cast<std::size_t>(k)].add_term(r, c);
    }
    return coeffs;
}

MPoly from_univariate(const std::vector<MPoly>& coeffs, int v, int nv) {
    MPoly p(nv);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, c] : coeffs[k].terms()) {
            Expo r = e;
            r[v] += static_cast<int>(k);
            p.add_term(r, c);
        }
    }
    return p;
}

int degree_in(const MPoly& p, int v) {
    int d = -1;
    for (const auto& [e, c] : p.terms()) d = std::max(d, e[v]);
    return d;
}

MPoly leading_coeff_in(const MPoly& p, int v) {
    auto u = as_univariate(p, v);
    return u.back();
}

int first_variable(const MPoly& a, const MPoly& b) {
    for (int v = 0; v < a.nvars(); ++v) {
        if (degree_in(a, v) > 0 || degree_in(b, v) > 0) return v;
    }
    return -1;
}

MPoly gcd_list(const std::vector<MPoly>& ps);

MPoly make_monic(const MPoly& p) {
    if (p.is_zero()) return p;
    Rat inv = Rat(1) / p.leading_coeff();
    return p * inv;
}

// Pseudo-remainder of f by g in the variable v.
MPoly prem(MPoly f, const MPoly& g, int v) {
    int dg = degree_in(g, v);
    MPoly lg = leading_coeff_in(g, v);
    while (true) {
        int df = degree_in(f, v);
        if (f.is_zero() || df < dg) return f;
        MPoly lf = leading_coeff_in(f, v);
        Expo shift(f.nvars(), 0);
        shift[v] = df - dg;
        MPoly m = MPoly::monomial(f.nvars(), shift, Rat(1));
        f = f * lg - g * (lf * m);
    }
}

MPoly gcd_impl(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    int v = first_variable(a, b);
    if (v < 0) return MPoly(a.nvars(), Rat(1));  // both constant

    auto ua = as_univariate(a, v);
    auto ub = as_univariate(b, v);
    MPoly ca = gcd_list(ua);
    MPoly cb = gcd_list(ub);
    auto strip = [&](const std::vector<MPoly>& u, const MPoly& cont) {
        std::vector<MPoly> pp;
        pp.reserve(u.size());
        for (const auto& c : u) {
            auto q = c.divided_by(cont);
            assert(q.has_value());
            pp.push_back(*q);
        }
        return pp;
    };
    MPoly f = from_univariate(strip(ua, ca), v, a.nvars());
    MPoly g = from_univariate(strip(ub, cb), v, a.nvars());
    if (degree_in(f, v) < degree_in(g, v)) std::swap(f, g);

    // primitive PRS
    while (!g.is_zero()) {
        MPoly r = prem(f, g, v);
        if (!r.is_zero()) {
            MPoly cr = gcd_list(as_univariate(r, v));
            auto q = r.divided_by(cr);
            assert(q.has_value());
            r = *q;
        }
        f = g;
        g = r;
    }
    return make_monic(gcd_impl(ca, cb) * f);
}

MPoly gcd_list(const std::vector<MPoly>& ps) {
    MPoly g(ps.empty() ? 0 : ps.front().nvars());
    for (const auto& p : ps) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? make_monic(p) : gcd_impl(g, p);
        if (g.is_one()) break;
    }
    if (g.is_zero()) g = MPoly(g.nvars(), Rat(1));
    return g;
}

}  // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
    assert(a.nvars() == b.nvars());
    return gcd_impl(a, b);
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print grlex-descending so the leading term comes first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Expo& e = it->first;
        Rat c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) c = -c;
        bool has_vars = expo_total(e) > 0;
        if (!has_vars || c != 1) {
            os << rat_to_string(c);
            if (has_vars) os << "*";
        }
        bool firstv = true;
        for (int v = 0; v < nv_; ++v) {
            if (e[v] == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << "x" << (v + 1);
            if (e[v] != 1) os << "^" << e[v];
        }
        first = false;
    }
    return os.str();
}

}  // namespace forge
