// Acceptance suite: one pass/fail line per criterion, all tolerances exact.
// Returns nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <thread>

#include "fours/chains.hpp"
#include "fours/io.hpp"
#include "fours/selftest.hpp"
#include "fours/splitting.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace fours;
using namespace fours::test;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

LaurentPoly kn(const std::string &s, const Field &f = Q) {
    return parse_element(s, f).component(Tv::E);
}

int failures = 0;

void report(int idx, const char *name, bool ok, double seconds) {
    std::printf("[%2d] %s  %s (%.2fs)\n", idx, ok ? "PASS" : "FAIL", name, seconds);
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

template <typename Fn> void criterion(int idx, const char *name, Fn &&fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = fn();
    } catch (const std::exception &e) {
        std::printf("     exception: %s\n", e.what());
        ok = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(idx, name, ok, secs);
}

// 1. eta is a homomorphism: 500 random pairs over Q, F2, F3, exponents in [-2,2].
bool c1_eta_homomorphism() {
    for (const Field &f : {Q, F2, F3}) {
        if (embed(AlgebraElement::one(f)) != Matrix4::identity(f))
            return false;
        for (int trial = 0; trial < 500; ++trial) {
            AlgebraElement a = rnd_alg(f, 2, 2), b = rnd_alg(f, 2, 2);
            if (embed(a * b) != embed(a) * embed(b))
                return false;
        }
    }
    return true;
}

// 2. The worked three-factor example, exactly.
bool c2_worked_example() {
    AlgebraElement e = parse_element("(1+x)*(1+(1-a)*y)*(1-a*x)", Q);
    SplitForm s({LinearFactor(kn("1"), kn("-a"), Tv::X),
                 LinearFactor(kn("1"), kn("1-a"), Tv::Y),
                 LinearFactor(kn("1"), kn("1"), Tv::X)},
                Q);
    if (expand(s) != e)
        return false;
    AlgebraElement expected = parse_element(
        "1 - a^2 + (1-a)*x + (1-a)*y - (1-a)*a^-1*b^-1*c*y + (1-a)*z - (1-a)*a^-2*b*c^-1*z", Q);
    if (e != expected)
        return false;
    if (coeff_gcd(e) != canonical_KN(kn("a-1")))
        return false;
    return !is_unit(e).is_unit;
}

// 3. Determinant criterion on trivial units; det(eta(x)) = 1.
bool c3_trivial_units() {
    if (det4(embed(parse_element("x", Q))) != LaurentPoly::one(Q))
        return false;
    for (int trial = 0; trial < 100; ++trial) {
        const Field &f = trial % 2 ? Q : F3;
        AlgebraElement u = AlgebraElement::of_group(f, rnd_group(), rnd_scalar(f, true));
        UnitVerdict v = is_unit(u);
        if (!v.is_unit || !v.det.is_scalar())
            return false;
        if (u * try_invert(u) != AlgebraElement::one(f))
            return false;
    }
    return true;
}

// 4. det_linear factors the embedding determinant: 200 random factors per field.
bool c4_linear_factor_det() {
    for (const Field &f : {Q, F2, F3}) {
        for (int trial = 0; trial < 200; ++trial) {
            LaurentPoly a = rnd_poly(f, 3, 2, true), b = rnd_poly(f, 3, 2, true);
            if (a.is_zero() && b.is_zero())
                b = LaurentPoly::one(f);
            LinearFactor fac(a, b, trial % 2 ? Tv::X : Tv::Y);
            auto [d1, d2] = det_linear(fac);
            if (d1 * d2 != det4(embed(fac.as_element())))
                return false;
        }
    }
    return true;
}

// 5. Promislow verification and the 196-pair unique-product check.
bool c5_promislow() {
    PromislowReport rep = promislow_check();
    if (!rep.ok)
        return false;
    auto p = promislow_set();
    return !unique_product_check(p, p).has_value();
}

// 6. Minimal consistent chains: exact lists, recursion vs brute force, orbits.
bool c6_chains() {
    auto tok = [](TokenKind k, int i, Tv g = Tv::E) { return Token{i, k, g}; };
    const auto A = TokenKind::Alpha, B = TokenKind::Beta;
    if (minimal_chains(build_table(3, Tv::X), 3) !=
        std::set<Chain>{Chain{tok(B, 2), tok(B, 2, Tv::X)}})
        return false;
    std::set<Chain> want4 = {Chain{tok(B, 3), tok(B, 3, Tv::X)},
                             Chain{tok(B, 3), tok(B, 2, Tv::Z)},
                             Chain{tok(B, 2, Tv::Y), tok(B, 3, Tv::X)},
                             Chain{tok(B, 2, Tv::Y), tok(B, 2, Tv::Z)},
                             Chain{tok(B, 4), tok(B, 2), tok(B, 2, Tv::Y)},
                             Chain{tok(A, 4), tok(B, 2, Tv::X), tok(B, 2, Tv::Z)}};
    if (minimal_chains(build_table(4, Tv::X), 4) != want4)
        return false;
    for (int n = 3; n <= 6; ++n) // n = 6 is the optional budgeted case
        for (Tv s : {Tv::X, Tv::Y})
            if (recursive_minimal_chains(n, s) != minimal_chains(build_table(n, s), n))
                return false;
    std::vector<SidedChain> m4;
    for (Tv s : {Tv::X, Tv::Y})
        for (const Chain &c : recursive_minimal_chains(4, s))
            m4.push_back(SidedChain{s, c});
    return chain_orbits(m4, 4).size() == 2;
}

// 7. Symbolic tables reproduce the golden rows for n = 3, 4, 5.
bool c7_symbolic_tables() {
    for (const SelfTestItem &item : selftest(Q))
        if (item.name == "three-factor coefficient table" ||
            item.name == "four- and five-factor monomial rows")
            if (!item.passed)
                return false;
    return true;
}

// 8. Bounded no-unit scans over F2. Budgets are pinned here.
bool c8_scans() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    int jobs = std::max(1, hw);

    SearchSpace a;
    a.words = {GroupElement::identity(), GroupElement::gen_x()};
    a.box = ExpBox{-1, 1, -1, 1};
    a.field = F2;
    a.budget = 1ull << 20; // 2^18 candidates
    a.jobs = jobs;
    ScanResult ra = unit_scan(a);
    if (ra.nontrivial != 0 || ra.units.empty())
        return false;

    SearchSpace b;
    b.words = words_up_to_length(2);
    b.box = ExpBox{-1, 1, -1, 1};
    b.field = F2;
    b.support_cap = 5;      // full enumeration of 2^45 is out of reach
    b.budget = 3'000'000;   // ~1.39M candidates with the cap
    ScanResult rb = unit_scan(b);
    if (rb.nontrivial != 0 || rb.units.empty())
        return false;

    SearchSpace c;
    c.words = words_up_to_length(3);
    c.box = ExpBox{0, 1, 0, 1};
    c.field = F2;
    c.budget = 1ull << 29; // 2^28 candidates
    c.jobs = jobs;
    ScanResult rc = unit_scan(c);
    if (rc.nontrivial != 0 || rc.units.empty())
        return false;

    // every unit found is trivial and satisfies L(u) = L(u^-1)
    for (const ScanResult *r : {&ra, &rb, &rc})
        for (const AlgebraElement &u : r->units) {
            if (u.support_size() != 1)
                return false;
            if (length_alg(u) != length_alg(try_invert(u)))
                return false;
        }
    return true;
}

// 9. alpha alpha^y - beta beta^y b is never a unit of KN.
bool c9_no_unit_form() {
    for (const Field &f : {Q, F2}) {
        for (int trial = 0; trial < 200; ++trial) {
            LaurentPoly a = rnd_kn_nonzero(f, 4, 2), b = rnd_kn_nonzero(f, 4, 2);
            LaurentPoly d = a * a.conj(Tv::Y) - (b * b.conj(Tv::Y)).shifted(Exp3{0, 1, 0});
            if (d.is_unit_KH())
                return false;
        }
    }
    return true;
}

// 10. Symmetrized products are central; equal to 1 on the generators of H.
bool c10_centrality() {
    for (const char *s : {"1", "a", "b", "c"})
        if (symmetrized_product(parse_element(s, Q).component(Tv::E)) != kn("1"))
            return false;
    AlgebraElement x = AlgebraElement::basis(Q, Tv::X), y = AlgebraElement::basis(Q, Tv::Y);
    for (int trial = 0; trial < 100; ++trial) {
        AlgebraElement e = AlgebraElement::of_poly(symmetrized_product(rnd_poly(Q, 3, 2)));
        if (e * x != x * e || e * y != y * e)
            return false;
    }
    return true;
}

// 11. Length function: closed forms vs the free-reduction oracle; invariances.
bool c11_lengths() {
    for (long k = -50; k <= 50; ++k)
        for (Tv t : {Tv::E, Tv::X, Tv::Y, Tv::Z})
            if (project(GroupElement{Exp3{1, -2, k}, t}) != reduce_oracle(k, t))
                return false;
    for (int trial = 0; trial < 100; ++trial) {
        AlgebraElement a = rnd_alg(Q);
        LaurentPoly nu = rnd_kn_nonzero(Q);
        auto la = length_alg(a);
        if (length_alg(a * AlgebraElement::of_poly(nu)) != la)
            return false;
        if (length_alg(a.star()) != la)
            return false;
    }
    return true;
}

} // namespace

int main() {
    criterion(1, "eta homomorphism, 500 random pairs over Q, F2, F3", c1_eta_homomorphism);
    criterion(2, "three-factor worked example, exact", c2_worked_example);
    criterion(3, "determinant criterion on trivial units", c3_trivial_units);
    criterion(4, "linear-factor determinant factorization, 200 per field", c4_linear_factor_det);
    criterion(5, "Promislow image, lengths, and unique-product check", c5_promislow);
    criterion(6, "consistent chains: lists, recursion = brute force (n<=6), orbits", c6_chains);
    criterion(7, "symbolic tables reproduce the golden rows", c7_symbolic_tables);
    criterion(8, "bounded no-unit scans over F2 (three spaces)", c8_scans);
    criterion(9, "alpha alpha^y - beta beta^y b never a unit, 200 per field", c9_no_unit_form);
    criterion(10, "symmetrized products are central", c10_centrality);
    criterion(11, "length closed forms vs oracle; multiplicative invariances", c11_lengths);

    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
