#pragma once

#include <map>
#include <string>

#include "fours/field.hpp"
#include "fours/klein.hpp"

namespace fours {

enum class Var : std::uint8_t { A = 0, B = 1, C = 2 };

/**
 * Element of KH = K[a^±1, b^±1, c^±1], stored as a finite support map from
 * exponent triples to nonzero scalars. KN = K[a^±1, b^±1] is the subring
 * with k == 0 everywhere.
 */
class LaurentPoly {
public:
    explicit LaurentPoly(const Field &f) : field_(f) {}

    static LaurentPoly zero(const Field &f) { return LaurentPoly(f); }
    static LaurentPoly scalar(const Field &f, const Scalar &s);
    static LaurentPoly monomial(const Field &f, const Exp3 &e, const Scalar &s);
    static LaurentPoly one(const Field &f) { return scalar(f, Scalar::one(f)); }
    static LaurentPoly variable(const Field &f, Var v, long exp = 1);

    const Field &field() const { return field_; }
    const std::map<Exp3, Scalar> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of a^i b^j c^k (zero scalar if absent).
    Scalar coeff(const Exp3 &e) const;
    void set_coeff(const Exp3 &e, const Scalar &s);
    void add_term(const Exp3 &e, const Scalar &s);

    LaurentPoly operator+(const LaurentPoly &o) const;
    LaurentPoly operator-(const LaurentPoly &o) const;
    LaurentPoly operator*(const LaurentPoly &o) const;
    LaurentPoly operator-() const;
    LaurentPoly &operator+=(const LaurentPoly &o) { return *this = *this + o; }
    LaurentPoly &operator-=(const LaurentPoly &o) { return *this = *this - o; }
    LaurentPoly &operator*=(const LaurentPoly &o) { return *this = *this * o; }
    bool operator==(const LaurentPoly &o) const;
    bool operator!=(const LaurentPoly &o) const { return !(*this == o); }

    LaurentPoly scaled(const Scalar &s) const;
    LaurentPoly shifted(const Exp3 &e) const; // multiply by the monomial a^i b^j c^k

    /// Ring automorphism induced by conjugation with the transversal letter g.
    LaurentPoly conj(Tv g) const;
    /// (i,j,k) -> (-i,-j,-k); the restriction of * to KH.
    LaurentPoly inv_exponents() const;

    bool in_KN() const;               // every exponent triple has k == 0
    bool is_unit_KH() const;          // exactly one term
    bool is_scalar() const;           // nonzero multiple of a^0 b^0 c^0
    Scalar scalar_value() const;      // value at exponent (0,0,0)

    /// Substitute var := value (value != 0), re-collect.
    LaurentPoly specialize(Var v, const Scalar &value) const;

private:
    Field field_;
    std::map<Exp3, Scalar> terms_;

    void check_same_field(const LaurentPoly &o) const;
};

/// Exact divisibility in KN (monomial units divide everything).
bool divides(const LaurentPoly &p, const LaurentPoly &q);

/**
 * A gcd of p and q in the UFD KN, in canonical form: exponents shifted so the
 * minimum exponent of each variable is 0 and the lex-leading coefficient is 1.
 * gcd(0, 0) is an error.
 */
LaurentPoly gcd_KN(const LaurentPoly &p, const LaurentPoly &q);

/// Canonical associate of a nonzero element of KN (see gcd_KN).
LaurentPoly canonical_KN(const LaurentPoly &p);

} // namespace fours
