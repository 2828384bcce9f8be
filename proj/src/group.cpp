#include "fours/group.hpp"

#include <array>
#include <stdexcept>

namespace fours {

namespace {

// Transversal product table: s * t = shift * klein_mul(s,t), written in the
// exponents of a, b, c. Row = s, column = t. Derived from the relations via
// x*x = a, y*y = b, z*z = c, x*y = z, x*z = a*y, y*x = a^-1 b c^-1 z,
// y*z = a^-1 c^-1 x, z*x = b^-1 c y, z*y = b^-1 x.
constexpr Exp3 kShift[4][4] = {
    /* e */ {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
    /* x */ {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}, {1, 0, 0}},
    /* y */ {{0, 0, 0}, {-1, 1, -1}, {0, 1, 0}, {-1, 0, -1}},
    /* z */ {{0, 0, 0}, {0, -1, 1}, {0, -1, 0}, {0, 0, 1}},
};

} // namespace

Exp3 transversal_shift(Tv s, Tv t) {
    return kShift[static_cast<int>(s)][static_cast<int>(t)];
}

GroupElement gmul(const GroupElement &g, const GroupElement &h) {
    GroupElement r;
    r.h = g.h + conj_exp(h.h, g.t) + transversal_shift(g.t, h.t);
    r.t = klein_mul(g.t, h.t);
    return r;
}

GroupElement ginv(const GroupElement &g) {
    // (n t)^-1 = (n^-1)^t * t^-1, and t^-1 = u_t * t with u_x = a^-1, etc.
    GroupElement r;
    r.t = g.t;
    r.h = conj_exp(-g.h, g.t);
    switch (g.t) {
    case Tv::E: break;
    case Tv::X: r.h.i -= 1; break;
    case Tv::Y: r.h.j -= 1; break;
    case Tv::Z: r.h.k -= 1; break;
    }
    return r;
}

GroupElement gpow(const GroupElement &g, long n) {
    GroupElement base = n < 0 ? ginv(g) : g;
    unsigned long m = static_cast<unsigned long>(n < 0 ? -n : n);
    GroupElement r = GroupElement::identity();
    while (m) {
        if (m & 1)
            r = gmul(r, base);
        base = gmul(base, base);
        m >>= 1;
    }
    return r;
}

GroupElement from_word(std::string_view word) {
    GroupElement r = GroupElement::identity();
    for (char ch : word) {
        GroupElement g;
        switch (ch) {
        case 'a': g = GroupElement::h_element(1, 0, 0); break;
        case 'A': g = GroupElement::h_element(-1, 0, 0); break;
        case 'b': g = GroupElement::h_element(0, 1, 0); break;
        case 'B': g = GroupElement::h_element(0, -1, 0); break;
        case 'c': g = GroupElement::h_element(0, 0, 1); break;
        case 'C': g = GroupElement::h_element(0, 0, -1); break;
        case 'x': g = GroupElement::gen_x(); break;
        case 'X': g = ginv(GroupElement::gen_x()); break;
        case 'y': g = GroupElement::gen_y(); break;
        case 'Y': g = ginv(GroupElement::gen_y()); break;
        case 'z': g = GroupElement::gen_z(); break;
        case 'Z': g = ginv(GroupElement::gen_z()); break;
        case ' ': continue;
        default:
            throw std::invalid_argument(std::string("from_word: unknown letter '") + ch + "'");
        }
        r = gmul(r, g);
    }
    return r;
}

GroupAutomorphism::GroupAutomorphism(const GroupElement &image_x, const GroupElement &image_y) {
    img_[0] = GroupElement::identity();
    img_[1] = image_x;
    img_[2] = image_y;
    img_[3] = gmul(image_x, image_y);

    GroupElement u2 = gmul(image_x, image_x);
    GroupElement v2 = gmul(image_y, image_y);
    // y^-1 x^2 y = x^-2 and x^-1 y^2 x = y^-2 on the images.
    if (gmul(gmul(ginv(image_y), u2), image_y) != ginv(u2) ||
        gmul(gmul(ginv(image_x), v2), image_x) != ginv(v2))
        throw std::invalid_argument("GroupAutomorphism: images violate the defining relations");

    img_a_ = u2;
    img_b_ = v2;
    img_c_ = gmul(img_[3], img_[3]);

    // Surjectivity: the images of a, b, c must span H (Gamma is Hopfian, so a
    // surjective endomorphism is an automorphism), and the transversal parts
    // of the images of x and y must generate the Klein quotient.
    long det = img_a_.h.i * (img_b_.h.j * img_c_.h.k - img_b_.h.k * img_c_.h.j) -
               img_a_.h.j * (img_b_.h.i * img_c_.h.k - img_b_.h.k * img_c_.h.i) +
               img_a_.h.k * (img_b_.h.i * img_c_.h.j - img_b_.h.j * img_c_.h.i);
    if (det != 1 && det != -1)
        throw std::invalid_argument("GroupAutomorphism: images do not generate H");
    if (image_x.t == Tv::E || image_y.t == Tv::E || image_x.t == image_y.t)
        throw std::invalid_argument("GroupAutomorphism: images do not generate the Klein quotient");
}

GroupElement GroupAutomorphism::apply(const GroupElement &g) const {
    GroupElement r = gpow(img_a_, g.h.i);
    r = gmul(r, gpow(img_b_, g.h.j));
    r = gmul(r, gpow(img_c_, g.h.k));
    return gmul(r, img_[static_cast<int>(g.t)]);
}

GroupAutomorphism GroupAutomorphism::compose(const GroupAutomorphism &psi) const {
    return GroupAutomorphism(apply(psi.image_x()), apply(psi.image_y()));
}

const GroupAutomorphism &GroupAutomorphism::conj_x() {
    static const GroupAutomorphism phi(
        GroupElement::gen_x(),
        gmul(gmul(GroupElement::gen_x(), GroupElement::gen_y()), ginv(GroupElement::gen_x())));
    return phi;
}

const GroupAutomorphism &GroupAutomorphism::conj_y() {
    static const GroupAutomorphism phi(
        gmul(gmul(GroupElement::gen_y(), GroupElement::gen_x()), ginv(GroupElement::gen_y())),
        GroupElement::gen_y());
    return phi;
}

const GroupAutomorphism &GroupAutomorphism::swap_xy() {
    static const GroupAutomorphism phi(GroupElement::gen_y(), GroupElement::gen_x());
    return phi;
}

const GroupAutomorphism &GroupAutomorphism::cycle() {
    static const GroupAutomorphism phi(GroupElement::gen_z(), GroupElement::gen_x());
    return phi;
}

const GroupAutomorphism &GroupAutomorphism::cycle_inv() {
    // Inverse of cycle(): x -> y, y -> a^-1 c^-1 z.
    static const GroupAutomorphism phi(GroupElement::gen_y(),
                                       GroupElement{Exp3{-1, 0, -1}, Tv::Z});
    return phi;
}

const GroupAutomorphism &GroupAutomorphism::swap_a_c() {
    static const GroupAutomorphism phi(GroupElement::gen_z(), GroupElement::gen_y());
    return phi;
}

} // namespace fours
