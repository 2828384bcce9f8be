#pragma once

#include <array>

#include "fours/algebra.hpp"

namespace fours {

/// 4x4 matrix over KH, basis order (1, x, y, xy).
class Matrix4 {
public:
    explicit Matrix4(const Field &f);
    static Matrix4 identity(const Field &f);

    const Field &field() const { return field_; }
    const LaurentPoly &at(int r, int c) const { return m_[static_cast<std::size_t>(r * 4 + c)]; }
    LaurentPoly &at(int r, int c) { return m_[static_cast<std::size_t>(r * 4 + c)]; }

    Matrix4 operator+(const Matrix4 &o) const;
    Matrix4 operator*(const Matrix4 &o) const;
    bool operator==(const Matrix4 &o) const;
    bool operator!=(const Matrix4 &o) const { return !(*this == o); }

private:
    Field field_;
    std::array<LaurentPoly, 16> m_;
};

/**
 * The faithful K-algebra embedding of K\Gamma into M_4(KH) given by
 * alpha -> (pi_H(x_i alpha x_j^-1)) over the transversal (1, x, y, xy).
 */
Matrix4 embed(const AlgebraElement &alpha);

/// Exact determinant by cofactor expansion with memoized 2x2 and 3x3 minors.
LaurentPoly det4(const Matrix4 &m);

/// Determinant criterion: alpha is a unit iff det(embed(alpha)) is a nonzero scalar.
struct UnitVerdict {
    bool is_unit = false;
    LaurentPoly det;
};
UnitVerdict is_unit(const AlgebraElement &alpha);

/**
 * Inverse via the adjugate of the embedding; throws NotAUnit otherwise.
 * The result is verified by multiplying back before being returned.
 */
struct NotAUnit : std::domain_error {
    NotAUnit() : std::domain_error("element is not a unit") {}
};
AlgebraElement try_invert(const AlgebraElement &alpha);

} // namespace fours
