#include "fours/dihedral.hpp"

#include <stdexcept>

namespace fours {

Tv DihedralWord::letter(long pos) const {
    if (pos < 0 || pos >= len)
        throw std::out_of_range("DihedralWord::letter");
    bool even = (pos % 2) == 0;
    Tv other = start == Tv::X ? Tv::Y : Tv::X;
    return even ? start : other;
}

std::string DihedralWord::str() const {
    if (len == 0)
        return "1";
    std::string s;
    s.reserve(static_cast<std::size_t>(len));
    for (long p = 0; p < len; ++p)
        s.push_back(tv_char(letter(p)));
    return s;
}

QuotientChoice QuotientChoice::of(int i) {
    if (i < 1 || i > 3)
        throw std::invalid_argument("QuotientChoice: index must be 1, 2, or 3");
    return {i};
}

bool QuotientChoice::contains(const GroupElement &g) const {
    if (g.t != Tv::E)
        return false;
    switch (index) {
    case 1: return g.h.k == 0;
    case 2: return g.h.j == 0;
    default: return g.h.i == 0;
    }
}

std::pair<GroupElement, GroupElement> QuotientChoice::generator_pair() const {
    const auto &psi = GroupAutomorphism::cycle();
    GroupElement gx = GroupElement::gen_x(), gy = GroupElement::gen_y();
    for (int r = 1; r < index; ++r) {
        GroupElement nx = psi.apply(gx), ny = psi.apply(gy);
        gx = nx;
        gy = ny;
    }
    return {gx, gy};
}

namespace {

/// Closed-form reduction of (xy)^{2k} tbar in C2 * C2.
DihedralWord project_n1(long k, Tv t) {
    switch (t) {
    case Tv::E:
        if (k == 0)
            return DihedralWord::empty();
        return DihedralWord::of(k > 0 ? Tv::X : Tv::Y, 4 * std::abs(k));
    case Tv::X:
        return k >= 0 ? DihedralWord::of(Tv::X, 4 * k + 1)
                      : DihedralWord::of(Tv::Y, 4 * (-k) - 1);
    case Tv::Y:
        return k > 0 ? DihedralWord::of(Tv::X, 4 * k - 1)
                     : DihedralWord::of(Tv::Y, 4 * (-k) + 1);
    case Tv::Z:
        return k >= 0 ? DihedralWord::of(Tv::X, 4 * k + 2)
                      : DihedralWord::of(Tv::Y, 4 * (-k) - 2);
    }
    return DihedralWord::empty();
}

GroupElement transport_in(const GroupElement &g, int index) {
    GroupElement r = g;
    const auto &inv = GroupAutomorphism::cycle_inv();
    for (int i = 1; i < index; ++i)
        r = inv.apply(r);
    return r;
}

GroupElement transport_out(const GroupElement &g, int index) {
    GroupElement r = g;
    const auto &psi = GroupAutomorphism::cycle();
    for (int i = 1; i < index; ++i)
        r = psi.apply(r);
    return r;
}

} // namespace

DihedralWord project(const GroupElement &g, QuotientChoice q) {
    GroupElement h = q.index == 1 ? g : transport_in(g, q.index);
    return project_n1(h.h.k, h.t);
}

long length(const GroupElement &g, QuotientChoice q) {
    return project(g, q).len;
}

std::optional<long> length_alg(const AlgebraElement &alpha, QuotientChoice q) {
    std::optional<long> best;
    for (int t = 0; t < 4; ++t)
        for (const auto &[e, s] : alpha.component(static_cast<Tv>(t)).terms()) {
            long l = length(GroupElement{e, static_cast<Tv>(t)}, q);
            if (!best || l > *best)
                best = l;
        }
    return best;
}

GroupElement lift(const DihedralWord &w, QuotientChoice q) {
    auto [lx, ly] = q.generator_pair();
    GroupElement r = GroupElement::identity();
    for (long p = 0; p < w.len; ++p)
        r = gmul(r, w.letter(p) == Tv::X ? lx : ly);
    return r;
}

std::pair<GroupElement, DihedralWord> decompose(const GroupElement &g, QuotientChoice q) {
    if (q.index == 1) {
        DihedralWord w = project(g);
        GroupElement n = gmul(g, ginv(lift(w)));
        if (!QuotientChoice::n1().contains(n))
            throw std::logic_error("decompose: residue not in N");
        return {n, w};
    }
    GroupElement h = transport_in(g, q.index);
    auto [n1, w] = decompose(h, QuotientChoice::n1());
    GroupElement n = transport_out(n1, q.index);
    if (!q.contains(n) || gmul(n, lift(w, q)) != g)
        throw std::logic_error("decompose: transported residue mismatch");
    return {n, w};
}

std::pair<Tv, Tv> starts_ends(const DihedralWord &w) {
    return {w.start, w.end()};
}

bool non_overlapping(const DihedralWord &w1, const DihedralWord &w2) {
    if (w1.is_empty() || w2.is_empty())
        return true;
    return w1.end() != w2.start;
}

} // namespace fours
