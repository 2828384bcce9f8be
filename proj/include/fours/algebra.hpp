#pragma once

#include <array>
#include <vector>

#include "fours/group.hpp"
#include "fours/laurent.hpp"

namespace fours {

/**
 * Element of the group algebra K\Gamma, stored as A x + B y + C + D z with
 * A, B, C, D in KH. Components are indexed by the transversal letter.
 */
class AlgebraElement {
public:
    explicit AlgebraElement(const Field &f)
        : field_(f), comp_{LaurentPoly(f), LaurentPoly(f), LaurentPoly(f), LaurentPoly(f)} {}

    static AlgebraElement zero(const Field &f) { return AlgebraElement(f); }
    static AlgebraElement one(const Field &f) { return scalar(f, Scalar::one(f)); }
    static AlgebraElement scalar(const Field &f, const Scalar &s);
    static AlgebraElement basis(const Field &f, Tv t);
    /// lambda * g as an algebra element.
    static AlgebraElement of_group(const Field &f, const GroupElement &g,
                                   const Scalar &lambda);
    static AlgebraElement of_poly(const LaurentPoly &h, Tv t = Tv::E);

    const Field &field() const { return field_; }
    const LaurentPoly &component(Tv t) const { return comp_[static_cast<int>(t)]; }
    LaurentPoly &component(Tv t) { return comp_[static_cast<int>(t)]; }

    bool is_zero() const;
    bool in_KH() const;  // supported on H
    bool in_KN() const;  // supported on N = <a, b>

    Scalar coeff(const GroupElement &g) const;
    void add_term(const GroupElement &g, const Scalar &s);

    AlgebraElement operator+(const AlgebraElement &o) const;
    AlgebraElement operator-(const AlgebraElement &o) const;
    AlgebraElement operator-() const;
    AlgebraElement operator*(const AlgebraElement &o) const; // amul
    AlgebraElement &operator+=(const AlgebraElement &o) { return *this = *this + o; }
    AlgebraElement &operator*=(const AlgebraElement &o) { return *this = *this * o; }
    bool operator==(const AlgebraElement &o) const;
    bool operator!=(const AlgebraElement &o) const { return !(*this == o); }

    AlgebraElement scaled(const Scalar &s) const;

    /// Support as sorted group elements.
    std::vector<GroupElement> support() const;
    std::size_t support_size() const;

    /// The anti-automorphism extending g -> g^-1.
    AlgebraElement star() const;

private:
    Field field_;
    std::array<LaurentPoly, 4> comp_; // order e, x, y, z = C, A, B, D
};

/// Ring automorphism of K\Gamma extending a group automorphism.
AlgebraElement apply_automorphism(const GroupAutomorphism &phi, const AlgebraElement &alpha);

} // namespace fours
