#include "fours/selftest.hpp"

#include "fours/io.hpp"
#include "fours/splitting.hpp"

namespace fours {

namespace {

AlgebraElement basis_of(const Field &f, Tv t) { return AlgebraElement::basis(f, t); }

/// Entry (r, c) of the embedding straight from its definition pi_H(x_r alpha x_c^-1).
LaurentPoly embed_entry_by_definition(const AlgebraElement &alpha, int r, int c) {
    const Field &f = alpha.field();
    const GroupElement xs[4] = {GroupElement::identity(), GroupElement::gen_x(),
                                GroupElement::gen_y(), GroupElement::gen_z()};
    AlgebraElement left = AlgebraElement::of_group(f, xs[r], Scalar::one(f));
    AlgebraElement right = AlgebraElement::of_group(f, ginv(xs[c]), Scalar::one(f));
    AlgebraElement prod = left * alpha * right;
    return prod.component(Tv::E);
}

bool check_embed_definition(const Field &f) {
    for (Tv t : {Tv::E, Tv::X, Tv::Y, Tv::Z}) {
        AlgebraElement alpha = basis_of(f, t);
        // a stray KH coefficient exercises the conjugation in every entry
        alpha = alpha * AlgebraElement::of_poly(LaurentPoly::monomial(
                    f, Exp3{1, -1, 1}, Scalar::one(f)));
        Matrix4 m = embed(alpha);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (m.at(r, c) != embed_entry_by_definition(alpha, r, c))
                    return false;
    }
    return true;
}

Monomial mono(std::initializer_list<Token> ts) { return Monomial(ts); }

Token tok(TokenKind k, int i, Tv g = Tv::E) { return Token{i, k, g}; }

bool rows_match(const TokenTable &table, const DihedralWord &w, std::vector<Monomial> expected) {
    auto it = table.rows.find(w);
    if (it == table.rows.end())
        return false;
    auto got = it->second;
    auto norm = [](std::vector<Monomial> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    return norm(got) == norm(expected);
}

bool check_table3() {
    const auto A = TokenKind::Alpha, B = TokenKind::Beta;
    TokenTable t = build_table(3, Tv::X);
    if (t.rows.size() != 6)
        return false;
    return rows_match(t, DihedralWord::of(Tv::X, 3), {mono({tok(B, 3), tok(B, 2, Tv::X), tok(B, 1, Tv::Z)})}) &&
           rows_match(t, DihedralWord::of(Tv::Y, 2), {mono({tok(A, 3), tok(B, 2), tok(B, 1, Tv::Y)})}) &&
           rows_match(t, DihedralWord::of(Tv::X, 2), {mono({tok(B, 3), tok(B, 2, Tv::X), tok(A, 1, Tv::Z)})}) &&
           rows_match(t, DihedralWord::of(Tv::Y, 1), {mono({tok(A, 3), tok(B, 2), tok(A, 1, Tv::Y)})}) &&
           rows_match(t, DihedralWord::of(Tv::X, 1),
                      {mono({tok(A, 3), tok(A, 2), tok(B, 1)}),
                       mono({tok(B, 3), tok(A, 2, Tv::X), tok(A, 1, Tv::X)})}) &&
           rows_match(t, DihedralWord::empty(),
                      {mono({tok(A, 3), tok(A, 2), tok(A, 1)}),
                       mono({tok(B, 3), tok(A, 2, Tv::X), tok(B, 1, Tv::X)})});
}

bool check_table45() {
    const auto A = TokenKind::Alpha, B = TokenKind::Beta;
    TokenTable t4 = build_table(4, Tv::X);
    bool ok4 =
        rows_match(t4, DihedralWord::of(Tv::X, 4),
                   {mono({tok(B, 4), tok(B, 3, Tv::X), tok(B, 2, Tv::Z), tok(B, 1, Tv::Y)})}) &&
        rows_match(t4, DihedralWord::of(Tv::Y, 3),
                   {mono({tok(A, 4), tok(B, 3), tok(B, 2, Tv::Y), tok(B, 1, Tv::Z)})}) &&
        rows_match(t4, DihedralWord::of(Tv::X, 3),
                   {mono({tok(B, 4), tok(B, 3, Tv::X), tok(B, 2, Tv::Z), tok(A, 1, Tv::Y)})}) &&
        rows_match(t4, DihedralWord::of(Tv::Y, 2),
                   {mono({tok(A, 4), tok(B, 3), tok(B, 2, Tv::Y), tok(A, 1, Tv::Z)})});
    TokenTable t5 = build_table(5, Tv::X);
    bool ok5 =
        rows_match(t5, DihedralWord::of(Tv::X, 5),
                   {mono({tok(B, 5), tok(B, 4, Tv::X), tok(B, 3, Tv::Z), tok(B, 2, Tv::Y), tok(B, 1)})}) &&
        rows_match(t5, DihedralWord::of(Tv::Y, 4),
                   {mono({tok(A, 5), tok(B, 4), tok(B, 3, Tv::Y), tok(B, 2, Tv::Z), tok(B, 1, Tv::X)})}) &&
        rows_match(t5, DihedralWord::of(Tv::X, 4),
                   {mono({tok(B, 5), tok(B, 4, Tv::X), tok(B, 3, Tv::Z), tok(B, 2, Tv::Y), tok(A, 1)})}) &&
        rows_match(t5, DihedralWord::of(Tv::Y, 3),
                   {mono({tok(A, 5), tok(B, 4), tok(B, 3, Tv::Y), tok(B, 2, Tv::Z), tok(A, 1, Tv::X)})});
    return ok4 && ok5;
}

/// The worked product (1+x)(1+(1-a)y)(1-ax). Both routes through the table
/// and through direct multiplication give constant coefficient 1 - a^2.
bool check_example(const Field &f) {
    AlgebraElement e = parse_element("(1+x)*(1+(1-a)*y)*(1-a*x)", f);

    AlgebraElement expected = parse_element(
        "1 - a^2 + (1-a)*x + (1-a)*y - (1-a)*a^-1*b^-1*c*y + (1-a)*z - (1-a)*a^-2*b*c^-1*z", f);
    if (e != expected)
        return false;
    LaurentPoly g = coeff_gcd(e);
    LaurentPoly a_minus_1 =
        canonical_KN(LaurentPoly::variable(f, Var::A) - LaurentPoly::one(f));
    if (g != a_minus_1)
        return false;
    return !is_unit(e).is_unit;
}

bool check_promislow() {
    PromislowReport rep = promislow_check();
    if (!rep.ok)
        return false;
    auto p = promislow_set();
    return !unique_product_check(p, p).has_value();
}

bool check_chains() {
    const auto B = TokenKind::Beta;
    auto m3 = minimal_chains(build_table(3, Tv::X), 3);
    std::set<Chain> want3 = {Chain{tok(B, 2), tok(B, 2, Tv::X)}};
    if (m3 != want3)
        return false;
    auto m4 = minimal_chains(build_table(4, Tv::X), 4);
    if (m4 != recursive_minimal_chains(4, Tv::X))
        return false;

    std::vector<SidedChain> family;
    for (Tv side : {Tv::X, Tv::Y})
        for (const Chain &c : recursive_minimal_chains(4, side))
            family.push_back(SidedChain{side, c});
    return chain_orbits(family, 4).size() == 2;
}

} // namespace

bool certify_table(const Field &field, const Exp3 (&table)[4][4]) {
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t) {
            Tv ts = static_cast<Tv>(s), tt = static_cast<Tv>(t);
            Matrix4 lhs = embed(basis_of(field, ts)) * embed(basis_of(field, tt));
            GroupElement prod{table[s][t], klein_mul(ts, tt)};
            Matrix4 rhs = embed(AlgebraElement::of_group(field, prod, Scalar::one(field)));
            if (lhs != rhs)
                return false;
        }
    return true;
}

std::vector<SelfTestItem> selftest(const Field &field) {
    std::vector<SelfTestItem> items;
    auto run = [&](const std::string &name, bool ok, const std::string &detail = "") {
        items.push_back(SelfTestItem{name, ok, detail});
    };

    run("embedding matches its definition", check_embed_definition(field));

    Exp3 table[4][4];
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t)
            table[s][t] = transversal_shift(static_cast<Tv>(s), static_cast<Tv>(t));
    run("transversal table certified by the embedding", certify_table(field, table));

    run("three-factor coefficient table", check_table3());
    run("four- and five-factor monomial rows", check_table45());
    run("worked three-factor example", check_example(field));
    run("Promislow set verification", check_promislow());
    run("minimal chain lists and orbits", check_chains());
    return items;
}

} // namespace fours
