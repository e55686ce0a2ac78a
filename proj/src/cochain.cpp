#include "forge/cochain.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "forge/errors.hpp"
#include "forge/parse.hpp"

namespace forge {

FElem slot_apply(const SlotOp& a, const FElem& arg) {
    FElem r = arg;
    for (std::size_t d = 0; d < a.size(); ++d) {
        for (int k = 0; k < a[d]; ++k) {
            if (r.is_zero()) return r;
            r = r.partial(static_cast<int>(d));
        }
    }
    return r;
}

std::string slot_to_string(const SlotOp& a) {
    if (slot_order(a) == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < a.size(); ++d) {
        for (int k = 0; k < a[d]; ++k) {
            if (!first) os << ".";
            first = false;
            if (d + 1 == a.size())
                os << "dt";
            else
                os << "dx" << (d + 1);
        }
    }
    return os.str();
}

SlotOp slot_from_string(const Tower& tw, const std::string& text) {
    SlotOp a = slot_identity(tw);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos < text.size() && text[pos] == '1') {
        ++pos;
        skip_ws();
        if (pos != text.size()) throw ParseError("bad slot '" + text + "'");
        return a;
    }
    while (pos < text.size()) {
        skip_ws();
        if (text.compare(pos, 2, "dt") == 0) {
            a[static_cast<std::size_t>(tw.t_dir())] += 1;
            pos += 2;
        } else if (text.compare(pos, 2, "dx") == 0) {
            pos += 2;
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw ParseError("bad slot '" + text + "'");
            int idx = std::stoi(text.substr(start, pos - start));
            if (idx < 1 || idx > tw.nvars()) throw ParseError("slot variable out of range in '" + text + "'");
            a[static_cast<std::size_t>(idx - 1)] += 1;
        } else {
            throw ParseError("bad slot '" + text + "'");
        }
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != '.') throw ParseError("bad slot '" + text + "'");
            ++pos;
        }
    }
    return a;
}

namespace {

bool term_key_less(const CochainTerm& a, const CochainTerm& b) {
    if (a.slots != b.slots) return a.slots < b.slots;
    return a.texp < b.texp;
}

int term_degree(const Tower& tw, const CochainTerm& t) {
    int tord = 0;
    for (const auto& s : t.slots) tord += slot_t_order(s);
    return tw.n * (t.texp - tord);
}

}  // namespace

PolyDiffCochain::PolyDiffCochain(const Tower& tw, int arity, int degree)
    : tw_(tw), arity_(arity), degree_(degree) {}

PolyDiffCochain::PolyDiffCochain(const Tower& tw, int arity, int degree, std::vector<CochainTerm> terms)
    : tw_(tw), arity_(arity), degree_(degree), terms_(std::move(terms)) {
    for (const auto& t : terms_) {
        if (static_cast<int>(t.slots.size()) != arity_) throw ArityMismatch("term slot count != arity");
        for (const auto& s : t.slots)
            if (static_cast<int>(s.size()) != tw_.ndirs()) throw Error("slot has wrong direction count");
        if (!t.coeff.is_zero() && term_degree(tw_, t) != degree_)
            throw NotHomogeneous("cochain term of internal degree " + std::to_string(term_degree(tw_, t)) +
                                 " in a cochain declared of degree " + std::to_string(degree_));
    }
    normalize();
}

void PolyDiffCochain::normalize() {
    std::sort(terms_.begin(), terms_.end(), term_key_less);
    std::vector<CochainTerm> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (t.coeff.is_zero()) continue;
        if (!merged.empty() && merged.back().slots == t.slots && merged.back().texp == t.texp) {
            merged.back().coeff = merged.back().coeff + t.coeff;
            if (merged.back().coeff.is_zero()) merged.pop_back();
        } else {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
}

bool PolyDiffCochain::operator==(const PolyDiffCochain& o) const {
    if (is_zero() && o.is_zero()) return arity_ == o.arity_;
    if (arity_ != o.arity_ || degree_ != o.degree_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].slots != o.terms_[i].slots || terms_[i].texp != o.terms_[i].texp ||
            terms_[i].coeff != o.terms_[i].coeff)
            return false;
    }
    return true;
}

PolyDiffCochain PolyDiffCochain::operator+(const PolyDiffCochain& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    assert(arity_ == o.arity_ && degree_ == o.degree_);
    std::vector<CochainTerm> ts = terms_;
    ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
    return PolyDiffCochain(tw_, arity_, degree_, std::move(ts));
}

PolyDiffCochain PolyDiffCochain::operator-(const PolyDiffCochain& o) const { return *this + (o * Rat(-1)); }

PolyDiffCochain PolyDiffCochain::operator*(const Rat& c) const {
    if (c == 0) return PolyDiffCochain(tw_, arity_, degree_);
    std::vector<CochainTerm> ts = terms_;
    for (auto& t : ts) t.coeff = t.coeff * RatFunc(tw_.nvars(), c);
    PolyDiffCochain r;
    r.tw_ = tw_;
    r.arity_ = arity_;
    r.degree_ = degree_;
    r.terms_ = std::move(ts);
    return r;  // scaling preserves normal form
}

FElem PolyDiffCochain::evaluate(const std::vector<FElem>& args) const {
    if (static_cast<int>(args.size()) != arity_)
        throw ArityMismatch("evaluate: got " + std::to_string(args.size()) + " arguments for arity " +
                            std::to_string(arity_));
    FElem acc(tw_);
    for (const auto& t : terms_) {
        FElem prod(tw_, t.coeff, t.texp);
        for (int i = 0; i < arity_ && !prod.is_zero(); ++i) {
            prod = prod * slot_apply(t.slots[static_cast<std::size_t>(i)], args[static_cast<std::size_t>(i)]);
        }
        acc = acc + prod;
    }
    return acc;
}

namespace {

// All beta <= alpha componentwise, with product-of-binomials weight.
void enumerate_subindices(const SlotOp& alpha, std::size_t d, SlotOp& beta, Rat weight,
                          std::vector<std::pair<SlotOp, Rat>>& out) {
    if (d == alpha.size()) {
        out.emplace_back(beta, weight);
        return;
    }
    for (int k = 0; k <= alpha[d]; ++k) {
        beta[d] = static_cast<std::uint8_t>(k);
        enumerate_subindices(alpha, d + 1, beta, weight * rat_binomial(alpha[d], k), out);
    }
    beta[d] = 0;
}

std::vector<std::pair<SlotOp, Rat>> subindices(const SlotOp& alpha) {
    std::vector<std::pair<SlotOp, Rat>> out;
    SlotOp beta(alpha.size(), 0);
    enumerate_subindices(alpha, 0, beta, Rat(1), out);
    return out;
}

// Splits of alpha into `parts` ordered multi-indices with multinomial weights.
void enumerate_splits(const SlotOp& alpha, std::size_t part, std::size_t parts, SlotOp rest,
                      std::vector<SlotOp>& acc, Rat weight, std::vector<std::pair<std::vector<SlotOp>, Rat>>& out) {
    if (part + 1 == parts) {
        acc.push_back(rest);
        out.emplace_back(acc, weight);
        acc.pop_back();
        return;
    }
    for (const auto& [beta, w] : subindices(rest)) {
        SlotOp rem = rest;
        for (std::size_t d = 0; d < rem.size(); ++d) rem[d] = static_cast<std::uint8_t>(rem[d] - beta[d]);
        acc.push_back(beta);
        enumerate_splits(alpha, part + 1, parts, rem, acc, weight * w, out);
        acc.pop_back();
    }
}

std::vector<std::pair<std::vector<SlotOp>, Rat>> multinomial_splits(const SlotOp& alpha, std::size_t parts) {
    std::vector<std::pair<std::vector<SlotOp>, Rat>> out;
    std::vector<SlotOp> acc;
    enumerate_splits(alpha, 0, parts, alpha, acc, Rat(1), out);
    return out;
}

Rat falling_factorial(int j, int k) {
    Rat r(1);
    for (int i = 0; i < k; ++i) r *= Rat(j - i);
    return r;
}

// d^gamma applied to the one-component element c * t^j; returns (c', j')
// with zero signalled by c'.is_zero().
std::pair<RatFunc, int> derive_coefficient(const Tower& tw, const RatFunc& c, int j, const SlotOp& gamma) {
    int tk = slot_t_order(gamma);
    Rat f = falling_factorial(j, tk);
    if (f == 0) return {RatFunc(tw.nvars()), 0};
    RatFunc r = c * RatFunc(tw.nvars(), f);
    for (int d = 0; d < tw.nvars() && !r.is_zero(); ++d) {
        for (int k = 0; k < gamma[static_cast<std::size_t>(d)]; ++k) r = r.derivative(d);
    }
    return {r, j - tk};
}

}  // namespace

PolyDiffCochain PolyDiffCochain::hochschild_differential() const {
    const int p = arity_;
    std::vector<CochainTerm> out;
    out.reserve(terms_.size() * static_cast<std::size_t>(p + 2));
    const int right_sign = sign_of(shifted());
    for (const auto& t : terms_) {
        // a1 * phi(a2,...): identity slot on the left
        {
            CochainTerm nt;
            nt.coeff = t.coeff;
            nt.texp = t.texp;
            nt.slots.reserve(static_cast<std::size_t>(p) + 1);
            nt.slots.push_back(slot_identity(tw_));
            nt.slots.insert(nt.slots.end(), t.slots.begin(), t.slots.end());
            out.push_back(std::move(nt));
        }
        // interior Leibniz splits
        for (int i = 0; i < p; ++i) {
            const int sgn = sign_of(i + 1);
            for (const auto& [beta, w] : subindices(t.slots[static_cast<std::size_t>(i)])) {
                SlotOp rem = t.slots[static_cast<std::size_t>(i)];
                for (std::size_t d = 0; d < rem.size(); ++d)
                    rem[d] = static_cast<std::uint8_t>(rem[d] - beta[d]);
                CochainTerm nt;
                nt.coeff = t.coeff * RatFunc(tw_.nvars(), w * sgn);
                nt.texp = t.texp;
                nt.slots.reserve(static_cast<std::size_t>(p) + 1);
                nt.slots.insert(nt.slots.end(), t.slots.begin(), t.slots.begin() + i);
                nt.slots.push_back(beta);
                nt.slots.push_back(rem);
                nt.slots.insert(nt.slots.end(), t.slots.begin() + i + 1, t.slots.end());
                out.push_back(std::move(nt));
            }
        }
        // phi(...) * a_{p+1}: identity slot on the right
        {
            CochainTerm nt;
            nt.coeff = t.coeff * RatFunc(tw_.nvars(), Rat(right_sign));
            nt.texp = t.texp;
            nt.slots = t.slots;
            nt.slots.push_back(slot_identity(tw_));
            out.push_back(std::move(nt));
        }
    }
    return PolyDiffCochain(tw_, p + 1, degree_, std::move(out));
}

PolyDiffCochain gerstenhaber_circle(const PolyDiffCochain& phi, const PolyDiffCochain& psi) {
    const Tower tw = phi.tower();
    const int p = phi.arity(), q = psi.arity();
    if (p == 0) return PolyDiffCochain(tw, q > 0 ? q - 1 : 0, phi.degree() + psi.degree());
    const int out_arity = p + q - 1;
    const int out_degree = phi.degree() + psi.degree();
    const int gpsi = psi.shifted();
    std::vector<CochainTerm> out;
    for (int i = 0; i < p; ++i) {
        const int pos_sign = insertion_sign(gpsi, i);
        for (const auto& ot : phi.terms()) {
            const SlotOp& alpha = ot.slots[static_cast<std::size_t>(i)];
            for (const auto& [gamma, w] : multinomial_splits(alpha, static_cast<std::size_t>(q) + 1)) {
                for (const auto& it : psi.terms()) {
                    auto [c2, j2] = derive_coefficient(tw, it.coeff, it.texp, gamma[0]);
                    if (c2.is_zero()) continue;
                    CochainTerm nt;
                    nt.coeff = ot.coeff * c2 * RatFunc(tw.nvars(), w * pos_sign);
                    if (nt.coeff.is_zero()) continue;
                    nt.texp = ot.texp + j2;
                    nt.slots.reserve(static_cast<std::size_t>(out_arity));
                    nt.slots.insert(nt.slots.end(), ot.slots.begin(), ot.slots.begin() + i);
                    for (int l = 0; l < q; ++l) {
                        SlotOp s = it.slots[static_cast<std::size_t>(l)];
                        const SlotOp& g = gamma[static_cast<std::size_t>(l) + 1];
                        for (std::size_t d = 0; d < s.size(); ++d)
                            s[d] = static_cast<std::uint8_t>(s[d] + g[d]);
                        nt.slots.push_back(std::move(s));
                    }
                    nt.slots.insert(nt.slots.end(), ot.slots.begin() + i + 1, ot.slots.end());
                    out.push_back(std::move(nt));
                }
            }
        }
    }
    return PolyDiffCochain(tw, out_arity, out_degree, std::move(out));
}

PolyDiffCochain gerstenhaber_bracket(const PolyDiffCochain& phi, const PolyDiffCochain& psi) {
    PolyDiffCochain a = gerstenhaber_circle(phi, psi);
    PolyDiffCochain b = gerstenhaber_circle(psi, phi);
    const int flip = bracket_flip_sign(phi.shifted(), psi.shifted());
    return a - b * Rat(flip);
}

PolyDiffCochain multiplication_cochain(const Tower& tw) {
    CochainTerm t;
    t.coeff = RatFunc(tw.nvars(), Rat(1));
    t.texp = 0;
    t.slots = {slot_identity(tw), slot_identity(tw)};
    return PolyDiffCochain(tw, 2, 0, {t});
}

namespace {

int permutation_sign(std::vector<int> v) {
    int sgn = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t k = i + 1; k < v.size(); ++k) {
            if (v[i] == v[k]) return 0;
            if (v[i] > v[k]) sgn = -sgn;
        }
    }
    return sgn;
}

}  // namespace

PolyDiffCochain antisymmetrized_partials(const Tower& tw, const std::vector<int>& dirs) {
    const int p = static_cast<int>(dirs.size());
    int deg = 0;
    for (int d : dirs)
        if (d == tw.t_dir()) deg -= tw.n;
    std::vector<int> perm(dirs.begin(), dirs.end());
    std::sort(perm.begin(), perm.end());
    std::vector<CochainTerm> terms;
    do {
        int sgn = permutation_sign(perm);
        CochainTerm t;
        t.coeff = RatFunc(tw.nvars(), Rat(sgn));
        t.texp = 0;
        t.slots.reserve(static_cast<std::size_t>(p));
        for (int d : perm) {
            SlotOp s = slot_identity(tw);
            s[static_cast<std::size_t>(d)] = 1;
            t.slots.push_back(std::move(s));
        }
        terms.push_back(std::move(t));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return PolyDiffCochain(tw, p, deg, std::move(terms));
}

FElem alternating_evaluate(const PolyDiffCochain& phi, const std::vector<FElem>& args) {
    if (static_cast<int>(args.size()) != phi.arity()) throw ArityMismatch("alternating_evaluate");
    std::vector<int> idx(args.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    FElem acc(phi.tower());
    std::vector<FElem> perm_args(args.size(), FElem(phi.tower()));
    do {
        int sgn = permutation_sign(idx);
        for (std::size_t i = 0; i < idx.size(); ++i) perm_args[i] = args[static_cast<std::size_t>(idx[i])];
        acc = acc + phi.evaluate(perm_args) * Rat(sgn);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return acc;
}

PolyVector PolyDiffCochain::hkr_symbol() const {
    PolyVector pv(tw_, arity_);
    for (const auto& t : terms_) {
        std::vector<int> dirs;
        dirs.reserve(t.slots.size());
        bool order_one = true;
        for (const auto& s : t.slots) {
            if (slot_order(s) != 1) {
                order_one = false;
                break;
            }
            for (std::size_t d = 0; d < s.size(); ++d)
                if (s[d] == 1) dirs.push_back(static_cast<int>(d));
        }
        if (!order_one) continue;
        int sgn = permutation_sign(dirs);
        if (sgn == 0) continue;  // repeated direction dies under antisymmetrization
        std::vector<int> sorted = dirs;
        std::sort(sorted.begin(), sorted.end());
        pv.accumulate(sorted, FElem(tw_, t.coeff, t.texp) * Rat(sgn));
    }
    return pv;
}

void PolyVector::accumulate(const std::vector<int>& sorted_dirs, const FElem& value) {
    if (value.is_zero()) return;
    auto it = table_.find(sorted_dirs);
    if (it == table_.end()) {
        table_.emplace(sorted_dirs, value);
    } else {
        it->second = it->second + value;
        if (it->second.is_zero()) table_.erase(it);
    }
}

FElem PolyVector::coefficient(const std::vector<int>& dirs) const {
    std::vector<int> sorted = dirs;
    int sgn = permutation_sign(sorted);
    if (sgn == 0) return FElem(tw_);
    std::sort(sorted.begin(), sorted.end());
    auto it = table_.find(sorted);
    if (it == table_.end()) return FElem(tw_);
    return it->second * Rat(sgn);
}

std::string PolyVector::to_string() const {
    if (table_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [dirs, val] : table_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << val.to_string() << ")*";
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            if (i) os << "^";
            if (dirs[i] == tw_.t_dir())
                os << "dt";
            else
                os << "dx" << (dirs[i] + 1);
        }
    }
    return os.str();
}

std::string PolyDiffCochain::to_literal() const {
    std::ostringstream os;
    os << "cochain n=" << tw_.n << " arity=" << arity_ << " degree=" << degree_ << "\n";
    for (const auto& t : terms_) {
        os << FElem(tw_, t.coeff, t.texp).to_string() << " |";
        for (std::size_t i = 0; i < t.slots.size(); ++i) {
            os << (i ? ", " : " ") << slot_to_string(t.slots[i]);
        }
        os << "\n";
    }
    return os.str();
}

PolyDiffCochain PolyDiffCochain::from_literal(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty cochain literal");
    int n = -1, arity = -1, degree = 0;
    {
        std::istringstream hs(line);
        std::string word;
        hs >> word;
        if (word != "cochain") throw ParseError("cochain literal must start with 'cochain'");
        while (hs >> word) {
            auto eq = word.find('=');
            if (eq == std::string::npos) throw ParseError("bad header field '" + word + "'");
            std::string key = word.substr(0, eq);
            int val = std::stoi(word.substr(eq + 1));
            if (key == "n")
                n = val;
            else if (key == "arity")
                arity = val;
            else if (key == "degree")
                degree = val;
            else
                throw ParseError("unknown header field '" + key + "'");
        }
    }
    if (n < 0 || arity < 0) throw ParseError("cochain literal header must set n and arity");
    Tower tw{n};
    std::vector<CochainTerm> terms;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        auto bar = line.find('|');
        if (bar == std::string::npos) throw ParseError("cochain term missing '|': " + line);
        CochainTerm t;
        FElem c = parse_felem(tw, line.substr(0, bar));
        if (c.is_zero()) continue;
        if (!c.is_homogeneous()) throw NotHomogeneous("cochain term coefficient must be homogeneous");
        t.texp = c.t_exponent();
        t.coeff = c.coeff_at(t.texp);
        std::string rest = line.substr(bar + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            auto comma = rest.find(',', pos);
            std::string piece = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (piece.find_first_not_of(" \t\r\n") != std::string::npos)
                t.slots.push_back(slot_from_string(tw, piece));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        terms.push_back(std::move(t));
    }
    return PolyDiffCochain(tw, arity, degree, std::move(terms));
}

}  // namespace forge
