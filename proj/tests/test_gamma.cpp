#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fours/io.hpp"
#include "fours/matrix.hpp"
#include "fours/search.hpp"
#include "fours/selftest.hpp"
#include "test_util.hpp"

using namespace fours;
using namespace fours::test;

namespace {

const Field Q = Field::rationals();

// Independent oracle: the faithful affine action on R^3 with
// x: v -> (v1 + 1/2, -v2, -v3) and y: v -> (-v1, v2 + 1/2, -v3 + 1/2).
// Translations are stored doubled to stay integral.
struct Affine {
    int s[3] = {1, 1, 1};
    long t[3] = {0, 0, 0};
    friend bool operator==(const Affine &, const Affine &) = default;
};

Affine aff_compose(const Affine &f, const Affine &g) {
    Affine r;
    for (int i = 0; i < 3; ++i) {
        r.s[i] = f.s[i] * g.s[i];
        r.t[i] = f.t[i] + f.s[i] * g.t[i];
    }
    return r;
}

Affine aff_of(const GroupElement &g) {
    const Affine ax{{1, -1, -1}, {1, 0, 0}};
    const Affine ay{{-1, 1, -1}, {0, 1, 1}};
    const Affine az{{-1, -1, 1}, {1, -1, -1}};
    Affine r{{1, 1, 1}, {2 * g.h.i, 2 * g.h.j, -2 * g.h.k}};
    switch (g.t) {
    case Tv::E: break;
    case Tv::X: r = aff_compose(r, ax); break;
    case Tv::Y: r = aff_compose(r, ay); break;
    case Tv::Z: r = aff_compose(r, az); break;
    }
    return r;
}

} // namespace

TEST_CASE("group law against the affine oracle") {
    // the generators themselves satisfy the defining relations in the oracle
    Affine ax = aff_of(GroupElement::gen_x()), ay = aff_of(GroupElement::gen_y());
    Affine a2 = aff_compose(ax, ax), b2 = aff_compose(ay, ay);
    CHECK(a2 == aff_of(GroupElement::h_element(1, 0, 0)));
    CHECK(b2 == aff_of(GroupElement::h_element(0, 1, 0)));
    // a y = y a^-1 and b x = x b^-1
    CHECK(aff_compose(a2, ay) == aff_compose(ay, aff_of(GroupElement::h_element(-1, 0, 0))));
    CHECK(aff_compose(b2, ax) == aff_compose(ax, aff_of(GroupElement::h_element(0, -1, 0))));

    for (int trial = 0; trial < 300; ++trial) {
        GroupElement g = rnd_group(), h = rnd_group();
        CHECK(aff_of(gmul(g, h)) == aff_compose(aff_of(g), aff_of(h)));
    }
}

TEST_CASE("transversal products") {
    CHECK(gmul(GroupElement::gen_x(), GroupElement::gen_x()) == GroupElement::h_element(1, 0, 0));
    CHECK(gmul(GroupElement::gen_z(), GroupElement::gen_x()) ==
          GroupElement{Exp3{0, -1, 1}, Tv::Y});
    // c^-1 * (x*y) = a b^-1 * (y*x)
    GroupElement lhs = gmul(GroupElement::h_element(0, 0, -1),
                            gmul(GroupElement::gen_x(), GroupElement::gen_y()));
    GroupElement rhs = gmul(GroupElement::h_element(1, -1, 0),
                            gmul(GroupElement::gen_y(), GroupElement::gen_x()));
    CHECK(lhs == rhs);
}

TEST_CASE("inverses and words") {
    CHECK(ginv(GroupElement::gen_x()) == GroupElement{Exp3{-1, 0, 0}, Tv::X});
    CHECK(ginv(GroupElement::h_element(2, -1, 3)) == GroupElement::h_element(-2, 1, -3));
    GroupElement zx = gmul(GroupElement::gen_z(), GroupElement::gen_x());
    CHECK(ginv(zx) == gmul(ginv(GroupElement::gen_x()), ginv(GroupElement::gen_z())));
    for (int trial = 0; trial < 100; ++trial) {
        GroupElement g = rnd_group();
        CHECK(gmul(g, ginv(g)).is_identity());
    }

    CHECK(from_word("xyxy") == GroupElement::h_element(0, 0, 1));
    CHECK(from_word("xx") == GroupElement::h_element(1, 0, 0));
    CHECK(from_word("yx") == GroupElement{Exp3{-1, 1, -1}, Tv::Z});
    CHECK(from_word("xX").is_identity());
}

TEST_CASE("algebra multiplication") {
    AlgebraElement one = AlgebraElement::one(Q);
    AlgebraElement e = parse_element("(1+x)*(1+(1-a)*y)*(1-a*x)", Q);
    CHECK(e == parse_element(
                   "1 - a^2 + (1-a)*x + (1-a)*y - (1-a)*a^-1*b^-1*c*y + (1-a)*z - (1-a)*a^-2*b*c^-1*z",
                   Q));
    CHECK(e * one == e);

    for (const Field &f : {Q, Field::prime(2)}) {
        for (int trial = 0; trial < 40; ++trial) {
            LaurentPoly al = rnd_poly(f, 3, 2, true), be = rnd_poly(f, 3, 2, true);
            AlgebraElement lhs = (AlgebraElement::of_poly(al) + AlgebraElement::of_poly(be, Tv::X)) *
                                 (AlgebraElement::of_poly(al.conj(Tv::X)) -
                                  AlgebraElement::of_poly(be, Tv::X));
            LaurentPoly expect =
                al * al.conj(Tv::X) - (be * be.conj(Tv::X)).shifted(Exp3{1, 0, 0});
            CHECK(lhs == AlgebraElement::of_poly(expect));
        }
        for (int trial = 0; trial < 25; ++trial) {
            AlgebraElement a = rnd_alg(f), b = rnd_alg(f), c = rnd_alg(f);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("support") {
    CHECK(parse_element("1+x", Q).support() ==
          std::vector<GroupElement>{GroupElement::identity(), GroupElement::gen_x()});
    CHECK(AlgebraElement::zero(Q).support().empty());

    AlgebraElement p(Q);
    for (const GroupElement &g : promislow_set())
        p.add_term(g, Scalar::one(Q));
    auto supp = p.support();
    CHECK(supp.size() == 14);
    auto pset = promislow_set();
    std::sort(pset.begin(), pset.end());
    CHECK(supp == pset);
}

TEST_CASE("star anti-automorphism") {
    CHECK(parse_element("x", Q).star() == parse_element("a^-1*x", Q));
    CHECK(parse_element("7", Q).star() == parse_element("7", Q));
    for (int trial = 0; trial < 40; ++trial) {
        AlgebraElement a = rnd_alg(Q), b = rnd_alg(Q);
        CHECK((a * b).star() == b.star() * a.star());
        CHECK(a.star().star() == a);
    }
    // on KN, star agrees with conjugation by z
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPoly nu = rnd_kn_nonzero(Q);
        CHECK(AlgebraElement::of_poly(nu).star() == AlgebraElement::of_poly(nu.conj(Tv::Z)));
    }
}

TEST_CASE("automorphisms") {
    const auto &psi = GroupAutomorphism::swap_a_c(); // x -> xy, y -> y
    CHECK(psi.apply(GroupElement::h_element(1, 0, 0)) == GroupElement::h_element(0, 0, 1));
    CHECK(psi.apply(GroupElement::h_element(0, 0, 1)) == GroupElement::h_element(1, 0, 0));
    CHECK(psi.apply(GroupElement::h_element(0, 1, 0)) == GroupElement::h_element(0, 1, 0));

    const auto &sw = GroupAutomorphism::swap_xy();
    CHECK(sw.apply(GroupElement::h_element(1, 0, 0)) == GroupElement::h_element(0, 1, 0));

    // conjugation automorphisms agree with inner conjugation through amul
    for (int trial = 0; trial < 20; ++trial) {
        AlgebraElement a = rnd_alg(Q);
        AlgebraElement x = AlgebraElement::basis(Q, Tv::X);
        AlgebraElement xinv = AlgebraElement::of_group(Q, ginv(GroupElement::gen_x()), Scalar::one(Q));
        CHECK(apply_automorphism(GroupAutomorphism::conj_x(), a) == x * a * xinv);
        AlgebraElement y = AlgebraElement::basis(Q, Tv::Y);
        AlgebraElement yinv = AlgebraElement::of_group(Q, ginv(GroupElement::gen_y()), Scalar::one(Q));
        CHECK(apply_automorphism(GroupAutomorphism::conj_y(), a) == y * a * yinv);
    }

    // invalid images are rejected
    CHECK_THROWS_AS(GroupAutomorphism(GroupElement::gen_x(), GroupElement::gen_x()),
                    std::invalid_argument);
    CHECK_THROWS_AS(GroupAutomorphism(GroupElement::gen_x(), GroupElement::h_element(0, 1, 0)),
                    std::invalid_argument);

    // ring automorphism property
    for (int trial = 0; trial < 20; ++trial) {
        AlgebraElement a = rnd_alg(Q), b = rnd_alg(Q);
        const auto &phi = GroupAutomorphism::cycle();
        CHECK(apply_automorphism(phi, a * b) ==
              apply_automorphism(phi, a) * apply_automorphism(phi, b));
    }

    // cycle() and cycle_inv() invert each other
    for (int trial = 0; trial < 50; ++trial) {
        GroupElement g = rnd_group();
        CHECK(GroupAutomorphism::cycle().apply(GroupAutomorphism::cycle_inv().apply(g)) == g);
    }
}

TEST_CASE("eta certifies amul") {
    for (const Field &f : {Q, Field::prime(3)}) {
        for (int trial = 0; trial < 25; ++trial) {
            AlgebraElement a = rnd_alg(f), b = rnd_alg(f);
            CHECK(embed(a * b) == embed(a) * embed(b));
        }
    }
}

TEST_CASE("a corrupted transversal table fails certification") {
    Exp3 table[4][4];
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t)
            table[s][t] = transversal_shift(static_cast<Tv>(s), static_cast<Tv>(t));
    CHECK(certify_table(Q, table));
    table[2][1].i += 1; // pretend y*x = b c^-1 z
    CHECK_FALSE(certify_table(Q, table));
}

TEST_CASE("star of a split form matches the factorwise image") {
    // (a_n + b_n g_n)...(a_1 + b_1 g_1) maps to
    // (a_1^z + b_1^{z g_1} u_{g_1} g_1) ... (a_n^z + b_n^{z g_n} u_{g_n} g_n)
    // with u_x = a^-1 and u_y = b^-1 making the letter inverses exact.
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::pair<AlgebraElement, Tv>> factors; // index 1 first
        Tv gamma = Tv::Y;
        for (int i = 1; i <= 4; ++i) {
            LaurentPoly al = rnd_poly(Q, 2, 1, true), be = rnd_poly(Q, 2, 1, true);
            AlgebraElement fac = AlgebraElement::of_poly(al);
            fac.component(gamma) = be;
            factors.emplace_back(fac, gamma);
            gamma = gamma == Tv::X ? Tv::Y : Tv::X;
        }
        AlgebraElement prod =
            factors[3].first * factors[2].first * factors[1].first * factors[0].first;

        AlgebraElement starred = AlgebraElement::one(Q);
        for (const auto &[fac, g] : factors) {
            Exp3 unit = g == Tv::X ? Exp3{-1, 0, 0} : Exp3{0, -1, 0};
            AlgebraElement im = AlgebraElement::of_poly(fac.component(Tv::E).conj(Tv::Z));
            im.component(g) = fac.component(g).conj(klein_mul(Tv::Z, g)).shifted(unit);
            starred *= im;
        }
        CHECK(prod.star() == starred);
    }
}
