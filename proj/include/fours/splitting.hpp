#pragma once

#include <map>
#include <vector>

#include "fours/dihedral.hpp"

namespace fours {

/// Linear factor alpha + beta*gamma with alpha, beta in KN and gamma in {x, y}.
struct LinearFactor {
    LaurentPoly alpha;
    LaurentPoly beta;
    Tv gamma;

    LinearFactor(LaurentPoly a, LaurentPoly b, Tv g);
    AlgebraElement as_element() const;
};

/**
 * Product of linear factors with alternating gamma letters, optionally scaled
 * by an element of KN. factors[0] is the rightmost factor (index 1); the
 * factor at index n comes first in the product.
 */
struct SplitForm {
    std::vector<LinearFactor> factors;
    LaurentPoly scale;

    explicit SplitForm(std::vector<LinearFactor> fs, const Field &f);
    SplitForm(std::vector<LinearFactor> fs, LaurentPoly sc);

    int size() const { return static_cast<int>(factors.size()); }
    Tv start() const { return factors.back().gamma; } // letter of the leftmost factor
};

/// Exact product of the factors (highest index leftmost), times the scale.
AlgebraElement expand(const SplitForm &s);

/// KN coefficient in front of each transversal word of the expansion.
std::map<DihedralWord, LaurentPoly> coefficient_table(const SplitForm &s);

/**
 * The two KN factors of det(embed(factor)): for gamma = x these are
 * (alpha alpha^x - beta beta^x a, alpha^y alpha^z - beta^y beta^z a^-1),
 * and the gamma = y pair swaps the roles of x and y (and a and b).
 */
std::pair<LaurentPoly, LaurentPoly> det_linear(const LinearFactor &f);

/**
 * The factor (alpha^gamma, -beta, gamma); multiplying f by its partner gives
 * the first det_linear component, an element of KN.
 */
LinearFactor partner(const LinearFactor &f);

/// nu * nu^x * nu^y * nu^z; central in K\Gamma, nonzero when nu is.
LaurentPoly symmetrized_product(const LaurentPoly &nu);

/// Canonical gcd of all transversal-word coefficients of a nonzero element.
LaurentPoly coeff_gcd(const AlgebraElement &alpha);

} // namespace fours
