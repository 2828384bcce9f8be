#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fours/io.hpp"
#include "fours/matrix.hpp"
#include "fours/splitting.hpp"
#include "test_util.hpp"

using namespace fours;
using namespace fours::test;

namespace {

const Field Q = Field::rationals();

LaurentPoly kn(const std::string &s, const Field &f = Q) {
    return parse_element(s, f).component(Tv::E);
}

LinearFactor rnd_factor(const Field &f, Tv gamma) {
    for (;;) {
        LaurentPoly a = rnd_poly(f, 3, 2, true), b = rnd_poly(f, 3, 2, true);
        if (!a.is_zero() || !b.is_zero())
            return LinearFactor(a, b, gamma);
    }
}

SplitForm example_form(const Field &f) {
    // (1+x)(1+(1-a)y)(1-ax), rightmost factor first
    std::vector<LinearFactor> fs = {LinearFactor(kn("1", f), kn("-a", f), Tv::X),
                                    LinearFactor(kn("1", f), kn("1-a", f), Tv::Y),
                                    LinearFactor(kn("1", f), kn("1", f), Tv::X)};
    return SplitForm(fs, f);
}

} // namespace

TEST_CASE("factor validation") {
    CHECK_THROWS_AS(LinearFactor(kn("0"), kn("0"), Tv::X), std::invalid_argument);
    CHECK_THROWS_AS(LinearFactor(kn("1"), kn("1"), Tv::Z), std::invalid_argument);
    CHECK_THROWS_AS(LinearFactor(parse_element("c", Q).component(Tv::E), kn("1"), Tv::X),
                    std::invalid_argument);
    std::vector<LinearFactor> same = {LinearFactor(kn("1"), kn("1"), Tv::X),
                                      LinearFactor(kn("1"), kn("1"), Tv::X)};
    CHECK_THROWS_AS(SplitForm(same, Q), std::invalid_argument);
}

TEST_CASE("expansion") {
    AlgebraElement e = expand(example_form(Q));
    CHECK(e == parse_element("(1+x)*(1+(1-a)*y)*(1-a*x)", Q));

    SplitForm unit_form({LinearFactor(kn("1"), kn("0"), Tv::X)}, Q);
    CHECK(expand(unit_form) == AlgebraElement::one(Q));

    // symbolic n=3 coefficient-table identities on random inputs
    for (int trial = 0; trial < 20; ++trial) {
        LinearFactor f1 = rnd_factor(Q, Tv::X), f2 = rnd_factor(Q, Tv::Y), f3 = rnd_factor(Q, Tv::X);
        SplitForm s({f1, f2, f3}, Q);
        auto table = coefficient_table(s);
        auto at = [&](Tv start, long len) {
            auto it = table.find(DihedralWord::of(start, len));
            return it == table.end() ? LaurentPoly::zero(Q) : it->second;
        };
        CHECK(at(Tv::Y, 1) == f3.alpha * f2.beta * f1.alpha.conj(Tv::Y));
        CHECK(at(Tv::X, 3) == f3.beta * f2.beta.conj(Tv::X) * f1.beta.conj(Tv::Z));
        CHECK(at(Tv::E, 0) ==
              f3.alpha * f2.alpha * f1.alpha +
                  (f3.beta * f2.alpha.conj(Tv::X) * f1.beta.conj(Tv::X)).shifted(Exp3{1, 0, 0}));
    }
}

TEST_CASE("single factor table") {
    SplitForm s({LinearFactor(kn("1+a"), kn("b"), Tv::X)}, Q);
    auto table = coefficient_table(s);
    CHECK(table.size() == 2);
    CHECK(table.at(DihedralWord::empty()) == kn("1+a"));
    CHECK(table.at(DihedralWord::of(Tv::X, 1)) == kn("b"));
}

TEST_CASE("determinant factorization of linear factors") {
    auto [d1, d2] = det_linear(LinearFactor(kn("1"), kn("0"), Tv::X));
    CHECK(d1 == kn("1"));
    CHECK(d2 == kn("1"));
    auto [e1, e2] = det_linear(LinearFactor(kn("1"), kn("1"), Tv::X));
    CHECK(e1 == kn("1-a"));
    CHECK(e2 == kn("1-a^-1"));

    for (const Field &f : {Q, Field::prime(2), Field::prime(5)}) {
        for (int trial = 0; trial < 40; ++trial) {
            LinearFactor fac = rnd_factor(f, trial % 2 ? Tv::X : Tv::Y);
            auto [a, b] = det_linear(fac);
            CHECK(a * b == det4(embed(fac.as_element())));
        }
    }
}

TEST_CASE("partner factors") {
    LinearFactor f(kn("1"), kn("1"), Tv::X);
    LinearFactor p = partner(f);
    CHECK(p.alpha == kn("1"));
    CHECK(p.beta == kn("-1"));
    CHECK(f.as_element() * p.as_element() == AlgebraElement::of_poly(kn("1-a")));

    LinearFactor g(kn("1+b"), kn("0"), Tv::X);
    CHECK(partner(g).alpha == kn("1+b^-1"));
    CHECK(g.as_element() * partner(g).as_element() ==
          AlgebraElement::of_poly(kn("(1+b)*(1+b^-1)")));

    for (int trial = 0; trial < 30; ++trial) {
        LinearFactor fac = rnd_factor(Q, trial % 2 ? Tv::X : Tv::Y);
        AlgebraElement prod = fac.as_element() * partner(fac).as_element();
        CHECK(prod == AlgebraElement::of_poly(det_linear(fac).first));
        CHECK(prod.in_KN());
        auto l = length_alg(prod);
        if (l)
            CHECK(*l == 0);
    }
}

TEST_CASE("length symmetry for products with a KN partner") {
    // u = lambda*g * (alpha + beta*gamma) and tau = partner * (lambda*g)^-1
    // satisfy u*tau in KN, so both sides have equal length.
    for (int trial = 0; trial < 40; ++trial) {
        LinearFactor fac = rnd_factor(Q, trial % 2 ? Tv::X : Tv::Y);
        GroupElement g = rnd_group(2);
        Scalar lam = rnd_scalar(Q, true);
        AlgebraElement u = AlgebraElement::of_group(Q, g, lam) * fac.as_element();
        AlgebraElement tau =
            partner(fac).as_element() * AlgebraElement::of_group(Q, ginv(g), lam.inv());
        AlgebraElement prod = u * tau;
        REQUIRE(prod.in_KN());
        if (!prod.is_zero())
            CHECK(length_alg(u) == length_alg(tau));
    }
}

TEST_CASE("symmetrized product") {
    CHECK(symmetrized_product(kn("1")) == kn("1"));
    CHECK(symmetrized_product(kn("a")) == kn("1"));
    CHECK(symmetrized_product(kn("1+a")) == kn("(1+a)*(1+a^-1)") * kn("(1+a)*(1+a^-1)"));

    for (const Field &f : {Q, Field::prime(2)}) {
        AlgebraElement x = AlgebraElement::basis(f, Tv::X), y = AlgebraElement::basis(f, Tv::Y);
        for (int trial = 0; trial < 30; ++trial) {
            LaurentPoly nu = rnd_poly(f, 3, 2);
            AlgebraElement e = AlgebraElement::of_poly(symmetrized_product(nu));
            CHECK(e * x == x * e);
            CHECK(e * y == y * e);
            if (!nu.is_zero())
                CHECK_FALSE(e.is_zero());
        }
    }
}

TEST_CASE("coefficient gcd") {
    AlgebraElement ex = parse_element("(1+x)*(1+(1-a)*y)*(1-a*x)", Q);
    CHECK(coeff_gcd(ex) == canonical_KN(kn("a-1")));
    CHECK(coeff_gcd(parse_element("5*a^2*b^-1*x", Q)) == kn("1"));

    // two-factor products with coprime coefficients have coprime word coefficients
    int done = 0;
    while (done < 20) {
        LinearFactor f2 = rnd_factor(Q, Tv::X), f1 = rnd_factor(Q, Tv::Y);
        if (f2.alpha.is_zero() || f2.beta.is_zero() || f1.alpha.is_zero() || f1.beta.is_zero())
            continue;
        if (gcd_KN(f2.alpha, f2.beta) != kn("1") || gcd_KN(f1.alpha, f1.beta) != kn("1"))
            continue;
        AlgebraElement e = expand(SplitForm({f1, f2}, Q));
        CHECK(coeff_gcd(e) == kn("1"));
        ++done;
    }
}

TEST_CASE("primes dividing a full table divide beta_2 both ways") {
    // planting (1-a) in beta_2 divides every coefficient; planting it in
    // alpha_2 instead does not
    for (int trial = 0; trial < 25; ++trial) {
        LaurentPoly h = rnd_kn_nonzero(Q, 3, 1);
        LaurentPoly p = kn("1-a");
        SplitForm planted({LinearFactor(kn("1"), kn("-a"), Tv::X),
                           LinearFactor(kn("1"), p * h, Tv::Y),
                           LinearFactor(kn("1"), kn("1"), Tv::X)},
                          Q);
        bool all = true;
        for (const auto &[w, coeff] : coefficient_table(planted))
            all = all && divides(p, coeff);
        CHECK(all);

        SplitForm planted_alpha({LinearFactor(kn("1"), kn("-a"), Tv::X),
                                 LinearFactor(p * h, kn("1"), Tv::Y),
                                 LinearFactor(kn("1"), kn("1"), Tv::X)},
                                Q);
        bool all2 = true;
        for (const auto &[w, coeff] : coefficient_table(planted_alpha))
            all2 = all2 && divides(p, coeff);
        CHECK_FALSE(all2);
    }
}

TEST_CASE("alpha alpha^y - beta beta^y b is never a unit") {
    for (const Field &f : {Q, Field::prime(2)}) {
        for (int trial = 0; trial < 60; ++trial) {
            LaurentPoly al = rnd_kn_nonzero(f), be = rnd_kn_nonzero(f);
            LaurentPoly d = al * al.conj(Tv::Y) - (be * be.conj(Tv::Y)).shifted(Exp3{0, 1, 0});
            CHECK_FALSE(d.is_unit_KH());
        }
    }
}
