#include "fours/algebra.hpp"

#include <stdexcept>

namespace fours {

AlgebraElement AlgebraElement::scalar(const Field &f, const Scalar &s) {
    AlgebraElement r(f);
    r.comp_[0] = LaurentPoly::scalar(f, s);
    return r;
}

AlgebraElement AlgebraElement::basis(const Field &f, Tv t) {
    AlgebraElement r(f);
    r.comp_[static_cast<int>(t)] = LaurentPoly::one(f);
    return r;
}

AlgebraElement AlgebraElement::of_group(const Field &f, const GroupElement &g, const Scalar &lambda) {
    AlgebraElement r(f);
    r.comp_[static_cast<int>(g.t)] = LaurentPoly::monomial(f, g.h, lambda);
    return r;
}

AlgebraElement AlgebraElement::of_poly(const LaurentPoly &h, Tv t) {
    AlgebraElement r(h.field());
    r.comp_[static_cast<int>(t)] = h;
    return r;
}

bool AlgebraElement::is_zero() const {
    for (const auto &c : comp_)
        if (!c.is_zero())
            return false;
    return true;
}

bool AlgebraElement::in_KH() const {
    return comp_[1].is_zero() && comp_[2].is_zero() && comp_[3].is_zero();
}

bool AlgebraElement::in_KN() const {
    return in_KH() && comp_[0].in_KN();
}

Scalar AlgebraElement::coeff(const GroupElement &g) const {
    return comp_[static_cast<int>(g.t)].coeff(g.h);
}

void AlgebraElement::add_term(const GroupElement &g, const Scalar &s) {
    comp_[static_cast<int>(g.t)].add_term(g.h, s);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement &o) const {
    AlgebraElement r(field_);
    for (int t = 0; t < 4; ++t)
        r.comp_[t] = comp_[t] + o.comp_[t];
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement &o) const {
    AlgebraElement r(field_);
    for (int t = 0; t < 4; ++t)
        r.comp_[t] = comp_[t] - o.comp_[t];
    return r;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r(field_);
    for (int t = 0; t < 4; ++t)
        r.comp_[t] = -comp_[t];
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement &o) const {
    if (field_ != o.field_)
        throw std::invalid_argument("amul: field mismatch");
    AlgebraElement r(field_);
    for (int s = 0; s < 4; ++s) {
        if (comp_[s].is_zero())
            continue;
        Tv ts = static_cast<Tv>(s);
        for (int t = 0; t < 4; ++t) {
            if (o.comp_[t].is_zero())
                continue;
            Tv tt = static_cast<Tv>(t);
            // (P s)(Q t) = P * Q^s * shift(s,t) * klein(s,t)
            LaurentPoly piece = comp_[s] * o.comp_[t].conj(ts);
            piece = piece.shifted(transversal_shift(ts, tt));
            int u = static_cast<int>(klein_mul(ts, tt));
            r.comp_[u] += piece;
        }
    }
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement &o) const {
    return field_ == o.field_ && comp_ == o.comp_;
}

AlgebraElement AlgebraElement::scaled(const Scalar &s) const {
    AlgebraElement r(field_);
    for (int t = 0; t < 4; ++t)
        r.comp_[t] = comp_[t].scaled(s);
    return r;
}

std::vector<GroupElement> AlgebraElement::support() const {
    std::vector<GroupElement> out;
    for (int t = 0; t < 4; ++t)
        for (const auto &[e, s] : comp_[t].terms())
            out.push_back(GroupElement{e, static_cast<Tv>(t)});
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t AlgebraElement::support_size() const {
    std::size_t n = 0;
    for (const auto &c : comp_)
        n += c.term_count();
    return n;
}

AlgebraElement AlgebraElement::star() const {
    // (n t)^-1 = (n^-1)^t * u_t * t with u_x = a^-1, u_y = b^-1, u_z = c^-1.
    AlgebraElement r(field_);
    r.comp_[0] = comp_[0].inv_exponents();
    r.comp_[1] = comp_[1].inv_exponents().conj(Tv::X).shifted(Exp3{-1, 0, 0});
    r.comp_[2] = comp_[2].inv_exponents().conj(Tv::Y).shifted(Exp3{0, -1, 0});
    r.comp_[3] = comp_[3].inv_exponents().conj(Tv::Z).shifted(Exp3{0, 0, -1});
    return r;
}

AlgebraElement apply_automorphism(const GroupAutomorphism &phi, const AlgebraElement &alpha) {
    AlgebraElement r(alpha.field());
    for (int t = 0; t < 4; ++t)
        for (const auto &[e, s] : alpha.component(static_cast<Tv>(t)).terms())
            r.add_term(phi.apply(GroupElement{e, static_cast<Tv>(t)}), s);
    return r;
}

} // namespace fours
