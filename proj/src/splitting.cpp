#include "fours/splitting.hpp"

#include <stdexcept>

namespace fours {

LinearFactor::LinearFactor(LaurentPoly a, LaurentPoly b, Tv g)
    : alpha(std::move(a)), beta(std::move(b)), gamma(g) {
    if (gamma != Tv::X && gamma != Tv::Y)
        throw std::invalid_argument("LinearFactor: gamma must be x or y");
    if (!alpha.in_KN() || !beta.in_KN())
        throw std::invalid_argument("LinearFactor: coefficients must lie in KN");
    if (alpha.is_zero() && beta.is_zero())
        throw std::invalid_argument("LinearFactor: alpha and beta cannot both vanish");
}

AlgebraElement LinearFactor::as_element() const {
    AlgebraElement e = AlgebraElement::of_poly(alpha);
    e.component(gamma) = beta;
    return e;
}

SplitForm::SplitForm(std::vector<LinearFactor> fs, const Field &f)
    : SplitForm(std::move(fs), LaurentPoly::one(f)) {}

SplitForm::SplitForm(std::vector<LinearFactor> fs, LaurentPoly sc)
    : factors(std::move(fs)), scale(std::move(sc)) {
    if (factors.empty())
        throw std::invalid_argument("SplitForm: needs at least one factor");
    if (!scale.in_KN())
        throw std::invalid_argument("SplitForm: scale must lie in KN");
    for (std::size_t i = 1; i < factors.size(); ++i)
        if (factors[i].gamma == factors[i - 1].gamma)
            throw std::invalid_argument("SplitForm: gamma letters must alternate");
}

AlgebraElement expand(const SplitForm &s) {
    AlgebraElement acc = AlgebraElement::of_poly(s.scale);
    for (auto it = s.factors.rbegin(); it != s.factors.rend(); ++it)
        acc *= it->as_element();
    return acc;
}

namespace {

std::map<DihedralWord, LaurentPoly> word_coefficients(const AlgebraElement &e) {
    std::map<DihedralWord, LaurentPoly> table;
    for (const GroupElement &g : e.support()) {
        auto [n, w] = decompose(g);
        auto it = table.find(w);
        if (it == table.end())
            it = table.emplace(w, LaurentPoly(e.field())).first;
        it->second.add_term(n.h, e.coeff(g));
    }
    return table;
}

} // namespace

std::map<DihedralWord, LaurentPoly> coefficient_table(const SplitForm &s) {
    return word_coefficients(expand(s));
}

std::pair<LaurentPoly, LaurentPoly> det_linear(const LinearFactor &f) {
    const LaurentPoly &al = f.alpha, &be = f.beta;
    if (f.gamma == Tv::X) {
        LaurentPoly first = al * al.conj(Tv::X) - (be * be.conj(Tv::X)).shifted(Exp3{1, 0, 0});
        LaurentPoly second =
            al.conj(Tv::Y) * al.conj(Tv::Z) - (be.conj(Tv::Y) * be.conj(Tv::Z)).shifted(Exp3{-1, 0, 0});
        return {first, second};
    }
    LaurentPoly first = al * al.conj(Tv::Y) - (be * be.conj(Tv::Y)).shifted(Exp3{0, 1, 0});
    LaurentPoly second =
        al.conj(Tv::X) * al.conj(Tv::Z) - (be.conj(Tv::X) * be.conj(Tv::Z)).shifted(Exp3{0, -1, 0});
    return {first, second};
}

LinearFactor partner(const LinearFactor &f) {
    return LinearFactor(f.alpha.conj(f.gamma), -f.beta, f.gamma);
}

LaurentPoly symmetrized_product(const LaurentPoly &nu) {
    return nu * nu.conj(Tv::X) * nu.conj(Tv::Y) * nu.conj(Tv::Z);
}

LaurentPoly coeff_gcd(const AlgebraElement &alpha) {
    if (alpha.is_zero())
        throw std::domain_error("coeff_gcd: zero element");
    LaurentPoly g(alpha.field());
    for (const auto &[w, coeff] : word_coefficients(alpha))
        g = g.is_zero() ? coeff : gcd_KN(g, coeff);
    return canonical_KN(g);
}

} // namespace fours
