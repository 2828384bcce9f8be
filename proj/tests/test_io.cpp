#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fours/io.hpp"
#include "test_util.hpp"

using namespace fours;
using namespace fours::test;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("parsing basics") {
    CHECK(parse_element("1+x", Q) ==
          AlgebraElement::one(Q) + AlgebraElement::basis(Q, Tv::X));
    CHECK(parse_element("a^2*b^-1*z", Q) ==
          AlgebraElement::of_group(Q, GroupElement{Exp3{2, -1, 0}, Tv::Z}, Scalar::one(Q)));
    CHECK(parse_element("xyx", Q) ==
          AlgebraElement::of_group(Q, from_word("xyx"), Scalar::one(Q)));
    CHECK(parse_element("x*y", Q) == parse_element("z", Q));
    CHECK(parse_element("2/3", Q) ==
          AlgebraElement::scalar(Q, Scalar::of_mpq(Q, mpq_class(2, 3))));
    CHECK(parse_element("x^-2", Q) == parse_element("a^-1", Q));
    CHECK(parse_element(" 1 + a * x ", Q) == parse_element("1+a*x", Q));

    Field f5 = Field::prime(5);
    CHECK(parse_element("7", f5) == AlgebraElement::scalar(f5, Scalar::of_int(f5, 2)));
    CHECK(parse_element("1/2", f5) == AlgebraElement::scalar(f5, Scalar::of_int(f5, 3)));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_element("1+", Q), ParseError);
    CHECK_THROWS_AS(parse_element("(1+x", Q), ParseError);
    CHECK_THROWS_AS(parse_element("1+q", Q), ParseError);
    CHECK_THROWS_AS(parse_element("(1+x)^-1", Q), ParseError);
    CHECK_THROWS_AS(parse_group_element("1+x"), ParseError);
    CHECK_THROWS_AS(parse_group_element("2*x"), ParseError);
}

TEST_CASE("printing") {
    CHECK(to_string(AlgebraElement::zero(Q)) == "0");
    CHECK(to_string(parse_element("1+x", Q)) == "1 + x");
    CHECK(to_string(parse_element("(1-a)*(1-a^-1)", Q)) == "-a^-1 + 2 - a");
    CHECK(to_string(parse_element("a^2*b^-1*z", Q)) == "a^2*b^-1*z");
    CHECK(to_string(parse_element("-x + 2*y", Q)) == "-x + 2*y");
    CHECK(to_string(GroupElement::identity()) == "1");
    CHECK(to_string(from_word("yx")) == "a^-1*b*c^-1*z");
    CHECK(to_string(DihedralWord::of(Tv::X, 3)) == "xyx");
    CHECK(to_string(DihedralWord::empty()) == "1");

    Field f2 = Field::prime(2);
    CHECK(to_string(parse_element("1+a+x", f2)) == "1 + a + x");
}

TEST_CASE("round trips") {
    for (const Field &f : {Q, Field::prime(2), Field::prime(7)}) {
        for (int trial = 0; trial < 60; ++trial) {
            AlgebraElement e = rnd_alg(f, 3, 2);
            CHECK(parse_element(to_string(e), f) == e); // parse . print = id on values
            std::string s = to_string(e);
            CHECK(to_string(parse_element(s, f)) == s); // print . parse = id on canonical text
        }
    }
}
