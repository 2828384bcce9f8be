#pragma once

#include <string>
#include <string_view>

#include "fours/klein.hpp"

namespace fours {

/**
 * Element of the fours group Gamma = <x,y | y^-1 x^2 y = x^-2, x^-1 y^2 x = y^-2>
 * in normal form a^i b^j c^k t, where a = x^2, b = y^2, c = (xy)^2 generate
 * the free abelian normal subgroup H and t runs over the transversal
 * {e, x, y, z} with z = xy.
 */
struct GroupElement {
    Exp3 h;
    Tv t = Tv::E;

    static GroupElement identity() { return {}; }
    static GroupElement gen_x() { return {Exp3{}, Tv::X}; }
    static GroupElement gen_y() { return {Exp3{}, Tv::Y}; }
    static GroupElement gen_z() { return {Exp3{}, Tv::Z}; }
    static GroupElement h_element(long i, long j, long k) { return {Exp3{i, j, k}, Tv::E}; }

    bool is_identity() const { return h == Exp3{} && t == Tv::E; }
    bool in_H() const { return t == Tv::E; }

    friend auto operator<=>(const GroupElement &, const GroupElement &) = default;
};

/// Normal-form product in Gamma.
GroupElement gmul(const GroupElement &g, const GroupElement &h);
GroupElement ginv(const GroupElement &g);
GroupElement gpow(const GroupElement &g, long n);

/**
 * Product of generator letters, left to right. Letters a, b, c, x, y, z
 * denote the named elements; uppercase letters denote their inverses.
 */
GroupElement from_word(std::string_view word);

/**
 * The H-translation h(s, t) in the transversal relation s * t = h(s,t) * u
 * with u = klein_mul(s, t). Derived once from the defining relations; the
 * test suite certifies it against multiplicativity of the matrix embedding.
 */
Exp3 transversal_shift(Tv s, Tv t);

/**
 * Automorphism of Gamma given by images of the generators x and y. The
 * constructor verifies both defining relations on the images and that the
 * images generate Gamma.
 */
class GroupAutomorphism {
public:
    GroupAutomorphism(const GroupElement &image_x, const GroupElement &image_y);

    const GroupElement &image_x() const { return img_[1]; }
    const GroupElement &image_y() const { return img_[2]; }

    GroupElement apply(const GroupElement &g) const;

    /// phi o psi (apply psi first).
    GroupAutomorphism compose(const GroupAutomorphism &psi) const;

    // The named automorphisms used throughout: conjugation by x and y, the
    // generator swap x <-> y, the quotient 3-cycle x -> z, y -> x and its
    // inverse, and the Promislow-set map x -> xy, y -> y.
    static const GroupAutomorphism &conj_x();
    static const GroupAutomorphism &conj_y();
    static const GroupAutomorphism &swap_xy();
    static const GroupAutomorphism &cycle();
    static const GroupAutomorphism &cycle_inv();
    static const GroupAutomorphism &swap_a_c();

private:
    GroupElement img_[4];  // images of e, x, y, z
    GroupElement img_a_, img_b_, img_c_;
};

} // namespace fours
