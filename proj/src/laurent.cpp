#include "fours/laurent.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fours {

LaurentPoly LaurentPoly::scalar(const Field &f, const Scalar &s) {
    LaurentPoly p(f);
    p.add_term(Exp3{}, s);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Field &f, const Exp3 &e, const Scalar &s) {
    LaurentPoly p(f);
    p.add_term(e, s);
    return p;
}

LaurentPoly LaurentPoly::variable(const Field &f, Var v, long exp) {
    Exp3 e;
    switch (v) {
    case Var::A: e.i = exp; break;
    case Var::B: e.j = exp; break;
    case Var::C: e.k = exp; break;
    }
    return monomial(f, e, Scalar::one(f));
}

Scalar LaurentPoly::coeff(const Exp3 &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void LaurentPoly::set_coeff(const Exp3 &e, const Scalar &s) {
    if (s.is_zero())
        terms_.erase(e);
    else
        terms_[e] = s;
}

void LaurentPoly::add_term(const Exp3 &e, const Scalar &s) {
    if (s.is_zero())
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, s);
        return;
    }
    it->second += s;
    if (it->second.is_zero())
        terms_.erase(it);
}

void LaurentPoly::check_same_field(const LaurentPoly &o) const {
    if (field_ != o.field_)
        throw std::invalid_argument("polynomial field mismatch: " + field_.name() + " vs " + o.field_.name());
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly &o) const {
    check_same_field(o);
    LaurentPoly r = *this;
    for (const auto &[e, s] : o.terms_)
        r.add_term(e, s);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly &o) const {
    check_same_field(o);
    LaurentPoly r = *this;
    for (const auto &[e, s] : o.terms_)
        r.add_term(e, -s);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(field_);
    for (const auto &[e, s] : terms_)
        r.terms_.emplace(e, -s);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly &o) const {
    check_same_field(o);
    LaurentPoly r(field_);
    for (const auto &[e1, s1] : terms_)
        for (const auto &[e2, s2] : o.terms_)
            r.add_term(e1 + e2, s1 * s2);
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly &o) const {
    return field_ == o.field_ && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::scaled(const Scalar &s) const {
    LaurentPoly r(field_);
    if (s.is_zero())
        return r;
    for (const auto &[e, c] : terms_)
        r.terms_.emplace(e, c * s);
    return r;
}

LaurentPoly LaurentPoly::shifted(const Exp3 &d) const {
    LaurentPoly r(field_);
    for (const auto &[e, c] : terms_)
        r.terms_.emplace(e + d, c);
    return r;
}

LaurentPoly LaurentPoly::conj(Tv g) const {
    if (g == Tv::E)
        return *this;
    LaurentPoly r(field_);
    for (const auto &[e, c] : terms_)
        r.terms_.emplace(conj_exp(e, g), c);
    return r;
}

LaurentPoly LaurentPoly::inv_exponents() const {
    LaurentPoly r(field_);
    for (const auto &[e, c] : terms_)
        r.terms_.emplace(-e, c);
    return r;
}

bool LaurentPoly::in_KN() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto &t) { return t.first.k == 0; });
}

bool LaurentPoly::is_unit_KH() const {
    return terms_.size() == 1;
}

bool LaurentPoly::is_scalar() const {
    return terms_.size() == 1 && terms_.begin()->first == Exp3{};
}

Scalar LaurentPoly::scalar_value() const {
    return coeff(Exp3{});
}

namespace {

Scalar scalar_pow(const Scalar &s, long e) {
    Scalar base = e < 0 ? s.inv() : s;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Scalar r = Scalar::one(s.field());
    while (n) {
        if (n & 1)
            r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

} // namespace

LaurentPoly LaurentPoly::specialize(Var v, const Scalar &value) const {
    if (value.is_zero())
        throw std::invalid_argument("specialize: value must be nonzero");
    LaurentPoly r(field_);
    for (const auto &[e, c] : terms_) {
        Exp3 e2 = e;
        long exp = 0;
        switch (v) {
        case Var::A: exp = e.i; e2.i = 0; break;
        case Var::B: exp = e.j; e2.j = 0; break;
        case Var::C: exp = e.k; e2.k = 0; break;
        }
        r.add_term(e2, c * scalar_pow(value, exp));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Divisibility and gcd in KN.
//
// Laurent units are monomials, so both problems reduce to ordinary bivariate
// polynomials after shifting the minimum exponent of each variable to zero.
// Gcd uses Gauss's lemma over K[a][b]: split off univariate contents and run a
// primitive pseudo-remainder sequence on the primitive parts.
// ---------------------------------------------------------------------------

namespace {

void require_KN(const LaurentPoly &p, const char *who) {
    if (!p.in_KN())
        throw std::invalid_argument(std::string(who) + ": input not in KN");
}

struct Exp2 {
    long i = 0, j = 0;
    friend auto operator<=>(const Exp2 &, const Exp2 &) = default;
};

using BivMap = std::map<Exp2, Scalar>;

/// Shift a nonzero KN element so min exponents are 0; returns the shifted map.
BivMap to_shifted(const LaurentPoly &p) {
    long imin = 0, jmin = 0;
    bool first = true;
    for (const auto &[e, c] : p.terms()) {
        if (first) {
            imin = e.i;
            jmin = e.j;
            first = false;
        } else {
            imin = std::min(imin, e.i);
            jmin = std::min(jmin, e.j);
        }
    }
    BivMap m;
    for (const auto &[e, c] : p.terms())
        m.emplace(Exp2{e.i - imin, e.j - jmin}, c);
    return m;
}

LaurentPoly from_biv(const Field &f, const BivMap &m) {
    LaurentPoly p(f);
    for (const auto &[e, c] : m)
        p.add_term(Exp3{e.i, e.j, 0}, c);
    return p;
}

// Dense univariate polynomial over K (coefficients of a^0, a^1, ...).
using UniPoly = std::vector<Scalar>;

void uni_trim(UniPoly &u) {
    while (!u.empty() && u.back().is_zero())
        u.pop_back();
}

UniPoly uni_scaled(const UniPoly &u, const Scalar &s) {
    UniPoly r;
    r.reserve(u.size());
    for (const auto &c : u)
        r.push_back(c * s);
    uni_trim(r);
    return r;
}

UniPoly uni_mul(const UniPoly &u, const UniPoly &v, const Field &f) {
    if (u.empty() || v.empty())
        return {};
    UniPoly r(u.size() + v.size() - 1, Scalar::zero(f));
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            r[i + j] += u[i] * v[j];
    uni_trim(r);
    return r;
}

UniPoly uni_sub(const UniPoly &u, const UniPoly &v, const Field &f) {
    UniPoly r = u;
    if (r.size() < v.size())
        r.resize(v.size(), Scalar::zero(f));
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] -= v[i];
    uni_trim(r);
    return r;
}

/// Exact division u / v; throws if the division is not exact.
UniPoly uni_div_exact(const UniPoly &u, const UniPoly &v, const Field &f) {
    if (v.empty())
        throw std::domain_error("uni_div_exact: division by zero");
    UniPoly rem = u, q;
    if (u.size() >= v.size())
        q.assign(u.size() - v.size() + 1, Scalar::zero(f));
    Scalar lcv = v.back();
    while (rem.size() >= v.size()) {
        Scalar c = rem.back() / lcv;
        std::size_t shift = rem.size() - v.size();
        q[shift] = c;
        for (std::size_t i = 0; i < v.size(); ++i)
            rem[shift + i] -= v[i] * c;
        uni_trim(rem);
        if (rem.size() > shift + v.size() - 1)
            throw std::logic_error("uni_div_exact: no progress");
    }
    if (!rem.empty())
        throw std::domain_error("uni_div_exact: inexact division");
    uni_trim(q);
    return q;
}

UniPoly uni_gcd(UniPoly u, UniPoly v) {
    while (!v.empty()) {
        // u mod v
        Scalar lcv = v.back();
        while (u.size() >= v.size()) {
            Scalar c = u.back() / lcv;
            std::size_t shift = u.size() - v.size();
            for (std::size_t i = 0; i < v.size(); ++i)
                u[shift + i] -= v[i] * c;
            uni_trim(u);
        }
        std::swap(u, v);
    }
    if (!u.empty())
        u = uni_scaled(u, u.back().inv()); // monic
    return u;
}

// Dense-in-b bivariate polynomial: element m of the vector is the coefficient
// of b^m, a univariate polynomial in a.
using BiPoly = std::vector<UniPoly>;

void bi_trim(BiPoly &p) {
    while (!p.empty() && p.back().empty())
        p.pop_back();
}

bool bi_is_zero(const BiPoly &p) { return p.empty(); }

BiPoly bi_from_map(const BivMap &m, const Field &f) {
    long jmax = -1;
    for (const auto &[e, c] : m)
        jmax = std::max(jmax, e.j);
    BiPoly p(static_cast<std::size_t>(jmax + 1));
    for (const auto &[e, c] : m) {
        UniPoly &u = p[static_cast<std::size_t>(e.j)];
        if (u.size() <= static_cast<std::size_t>(e.i))
            u.resize(static_cast<std::size_t>(e.i) + 1, Scalar::zero(f));
        u[static_cast<std::size_t>(e.i)] = c;
    }
    for (auto &u : p)
        uni_trim(u);
    bi_trim(p);
    return p;
}

BivMap bi_to_map(const BiPoly &p) {
    BivMap m;
    for (std::size_t j = 0; j < p.size(); ++j)
        for (std::size_t i = 0; i < p[j].size(); ++i)
            if (!p[j][i].is_zero())
                m.emplace(Exp2{static_cast<long>(i), static_cast<long>(j)}, p[j][i]);
    return m;
}

UniPoly bi_content(const BiPoly &p) {
    UniPoly c;
    for (const auto &u : p)
        c = uni_gcd(c, u);
    return c;
}

BiPoly bi_div_content(const BiPoly &p, const UniPoly &c, const Field &f) {
    BiPoly r;
    r.reserve(p.size());
    for (const auto &u : p)
        r.push_back(u.empty() ? UniPoly{} : uni_div_exact(u, c, f));
    return r;
}

/// One pseudo-reduction pass: repeatedly scale by lc(G) and cancel the lead.
BiPoly bi_prem(BiPoly r, const BiPoly &g, const Field &f) {
    const UniPoly &lcg = g.back();
    while (!bi_is_zero(r) && r.size() >= g.size()) {
        UniPoly lcr = r.back();
        std::size_t shift = r.size() - g.size();
        BiPoly next(std::max(r.size(), std::size_t{0}));
        next.resize(r.size());
        for (std::size_t m = 0; m < r.size(); ++m)
            next[m] = uni_mul(r[m], lcg, f);
        for (std::size_t m = 0; m < g.size(); ++m)
            next[m + shift] = uni_sub(next[m + shift], uni_mul(g[m], lcr, f), f);
        next.pop_back(); // leading b-coefficient cancels by construction
        bi_trim(next);
        r = std::move(next);
    }
    return r;
}

BiPoly bi_primitive_gcd(BiPoly f1, BiPoly f2, const Field &f) {
    if (f1.size() < f2.size())
        std::swap(f1, f2);
    while (!bi_is_zero(f2)) {
        BiPoly r = bi_prem(f1, f2, f);
        f1 = std::move(f2);
        if (bi_is_zero(r)) {
            f2 = {};
        } else {
            UniPoly c = bi_content(r);
            f2 = bi_div_content(r, c, f);
        }
    }
    return f1;
}

} // namespace

LaurentPoly canonical_KN(const LaurentPoly &p) {
    require_KN(p, "canonical_KN");
    if (p.is_zero())
        throw std::domain_error("canonical_KN: zero has no canonical associate");
    BivMap m = to_shifted(p);
    Scalar lead = m.rbegin()->second; // lex-largest exponent pair
    LaurentPoly r = from_biv(p.field(), m);
    return r.scaled(lead.inv());
}

bool divides(const LaurentPoly &p, const LaurentPoly &q) {
    require_KN(p, "divides");
    require_KN(q, "divides");
    if (p.is_zero())
        throw std::invalid_argument("divides: divisor is zero");
    if (q.is_zero())
        return true;
    BivMap P = to_shifted(p), R = to_shifted(q);
    const auto &[ltp, lcp] = *P.rbegin();
    while (!R.empty()) {
        auto [ltr, lcr] = *R.rbegin();
        if (ltr.i < ltp.i || ltr.j < ltp.j)
            return false; // this term could only land in the remainder
        Exp2 d{ltr.i - ltp.i, ltr.j - ltp.j};
        Scalar c = lcr / lcp;
        for (const auto &[e, s] : P) {
            Exp2 e2{e.i + d.i, e.j + d.j};
            auto it = R.find(e2);
            Scalar v = (it == R.end() ? Scalar::zero(p.field()) : it->second) - s * c;
            if (v.is_zero()) {
                if (it != R.end())
                    R.erase(it);
            } else {
                R[e2] = v;
            }
        }
    }
    return true;
}

LaurentPoly gcd_KN(const LaurentPoly &p, const LaurentPoly &q) {
    require_KN(p, "gcd_KN");
    require_KN(q, "gcd_KN");
    if (p.is_zero() && q.is_zero())
        throw std::domain_error("gcd_KN(0, 0) is undefined");
    if (p.is_zero())
        return canonical_KN(q);
    if (q.is_zero())
        return canonical_KN(p);
    const Field &f = p.field();
    if (f != q.field())
        throw std::invalid_argument("gcd_KN: field mismatch");

    BiPoly F = bi_from_map(to_shifted(p), f);
    BiPoly G = bi_from_map(to_shifted(q), f);
    UniPoly cf = bi_content(F), cg = bi_content(G);
    BiPoly gp = bi_primitive_gcd(bi_div_content(F, cf, f), bi_div_content(G, cg, f), f);
    UniPoly cc = uni_gcd(cf, cg);
    {
        UniPoly c = bi_content(gp);
        gp = bi_div_content(gp, c, f);
    }
    BiPoly prod(gp.size());
    for (std::size_t m = 0; m < gp.size(); ++m)
        prod[m] = uni_mul(gp[m], cc, f);
    return canonical_KN(from_biv(f, bi_to_map(prod)));
}

} // namespace fours
