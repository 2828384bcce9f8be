#pragma once

#include <optional>
#include <string>
#include <utility>

#include "fours/algebra.hpp"

namespace fours {

/**
 * Reduced alternating word in the two involution letters of an infinite
 * dihedral quotient; determined by its start letter and length. The letters
 * are named x and y after the N_1 = <a,b> quotient; for the other two
 * quotients they stand for the transported generator pair.
 */
struct DihedralWord {
    long len = 0;
    Tv start = Tv::E; // X or Y when len > 0, E for the empty word

    static DihedralWord empty() { return {}; }
    static DihedralWord of(Tv start, long len) { return {len, len > 0 ? start : Tv::E}; }

    bool is_empty() const { return len == 0; }
    Tv letter(long pos) const; // 0-based
    Tv end() const { return len == 0 ? Tv::E : letter(len - 1); }

    std::string str() const;

    friend auto operator<=>(const DihedralWord &, const DihedralWord &) = default;
};

/**
 * Choice of one of the three normal subgroups with infinite dihedral
 * quotient: N_1 = <a,b>, N_2 = <a,c>, N_3 = <b,c>. Lengths for N_2 and N_3
 * are transported through the automorphism x -> z, y -> x, which cycles the
 * three subgroups.
 */
struct QuotientChoice {
    int index = 1;

    static QuotientChoice n1() { return {1}; }
    static QuotientChoice n2() { return {2}; }
    static QuotientChoice n3() { return {3}; }
    static QuotientChoice of(int i);

    bool contains(const GroupElement &g) const; // membership in N_index
    /// Lifts of the quotient's involution pair (the "x" and "y" roles).
    std::pair<GroupElement, GroupElement> generator_pair() const;
};

/// Image of g in Gamma/N_q as a reduced alternating word.
DihedralWord project(const GroupElement &g, QuotientChoice q = QuotientChoice::n1());

long length(const GroupElement &g, QuotientChoice q = QuotientChoice::n1());

/// Max length over the support; nullopt encodes L(0) = -infinity.
std::optional<long> length_alg(const AlgebraElement &alpha, QuotientChoice q = QuotientChoice::n1());

/// g = n * lift(w) with n in N_q.
std::pair<GroupElement, DihedralWord> decompose(const GroupElement &g,
                                                QuotientChoice q = QuotientChoice::n1());

/// The element of Gamma obtained by multiplying out the word's letters.
GroupElement lift(const DihedralWord &w, QuotientChoice q = QuotientChoice::n1());

/// (start, end) letters, Tv::E for the empty word.
std::pair<Tv, Tv> starts_ends(const DihedralWord &w);

/// True iff no cancellation occurs in w1 * w2, i.e. L(w1 w2) = L(w1) + L(w2).
bool non_overlapping(const DihedralWord &w1, const DihedralWord &w2);

} // namespace fours
