#include "fours/matrix.hpp"

namespace fours {

Matrix4::Matrix4(const Field &f)
    : field_(f),
      m_{LaurentPoly(f), LaurentPoly(f), LaurentPoly(f), LaurentPoly(f),
         LaurentPoly(f), LaurentPoly(f), LaurentPoly(f), LaurentPoly(f),
         LaurentPoly(f), LaurentPoly(f), LaurentPoly(f), LaurentPoly(f),
         LaurentPoly(f), LaurentPoly(f), LaurentPoly(f), LaurentPoly(f)} {}

Matrix4 Matrix4::identity(const Field &f) {
    Matrix4 m(f);
    for (int d = 0; d < 4; ++d)
        m.at(d, d) = LaurentPoly::one(f);
    return m;
}

Matrix4 Matrix4::operator+(const Matrix4 &o) const {
    Matrix4 r(field_);
    for (int i = 0; i < 16; ++i)
        r.m_[i] = m_[i] + o.m_[i];
    return r;
}

Matrix4 Matrix4::operator*(const Matrix4 &o) const {
    Matrix4 r(field_);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            LaurentPoly s(field_);
            for (int k = 0; k < 4; ++k)
                s += at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

bool Matrix4::operator==(const Matrix4 &o) const {
    return field_ == o.field_ && m_ == o.m_;
}

Matrix4 embed(const AlgebraElement &alpha) {
    const Field &f = alpha.field();
    const LaurentPoly &C = alpha.component(Tv::E);
    const LaurentPoly &A = alpha.component(Tv::X);
    const LaurentPoly &B = alpha.component(Tv::Y);
    const LaurentPoly &D = alpha.component(Tv::Z);

    Matrix4 m(f);
    m.at(0, 0) = C;
    m.at(0, 1) = A;
    m.at(0, 2) = B;
    m.at(0, 3) = D;

    m.at(1, 0) = A.conj(Tv::X).shifted(Exp3{1, 0, 0});
    m.at(1, 1) = C.conj(Tv::X);
    m.at(1, 2) = D.conj(Tv::X).shifted(Exp3{1, 0, 0});
    m.at(1, 3) = B.conj(Tv::X);

    m.at(2, 0) = B.conj(Tv::Y).shifted(Exp3{0, 1, 0});
    m.at(2, 1) = D.conj(Tv::Y).shifted(Exp3{-1, 0, -1});
    m.at(2, 2) = C.conj(Tv::Y);
    m.at(2, 3) = A.conj(Tv::Y).shifted(Exp3{-1, 1, -1});

    m.at(3, 0) = D.conj(Tv::Z).shifted(Exp3{0, 0, 1});
    m.at(3, 1) = B.conj(Tv::Z).shifted(Exp3{0, -1, 0});
    m.at(3, 2) = A.conj(Tv::Z).shifted(Exp3{0, -1, 1});
    m.at(3, 3) = C.conj(Tv::Z);
    return m;
}

namespace {

/// 2x2 minors of rows (2,3), then 3x3 minors of rows (1,2,3), then expand.
LaurentPoly det_rows(const Matrix4 &m, const int rows[4]) {
    const Field &f = m.field();
    // minor2[p][q] = 2x2 determinant of rows (rows[2], rows[3]), columns (p, q), p < q.
    LaurentPoly minor2[4][4] = {
        {LaurentPoly(f), LaurentPoly(f), LaurentPoly(f), LaurentPoly(f)},
        {LaurentPoly(f), LaurentPoly(f), LaurentPoly(f), LaurentPoly(f)},
        {LaurentPoly(f), LaurentPoly(f), LaurentPoly(f), LaurentPoly(f)},
        {LaurentPoly(f), LaurentPoly(f), LaurentPoly(f), LaurentPoly(f)}};
    for (int p = 0; p < 4; ++p)
        for (int q = p + 1; q < 4; ++q)
            minor2[p][q] = m.at(rows[2], p) * m.at(rows[3], q) - m.at(rows[2], q) * m.at(rows[3], p);

    LaurentPoly det(f);
    for (int c0 = 0; c0 < 4; ++c0) {
        if (m.at(rows[0], c0).is_zero())
            continue;
        // 3x3 minor of rows (rows[1..3]), columns != c0, expanded along rows[1].
        LaurentPoly minor3(f);
        int sign = 1;
        for (int c1 = 0; c1 < 4; ++c1) {
            if (c1 == c0)
                continue;
            int rest[2], n = 0;
            for (int c = 0; c < 4; ++c)
                if (c != c0 && c != c1)
                    rest[n++] = c;
            LaurentPoly contrib = m.at(rows[1], c1) * minor2[rest[0]][rest[1]];
            minor3 += sign > 0 ? contrib : -contrib;
            sign = -sign;
        }
        LaurentPoly term = m.at(rows[0], c0) * minor3;
        det += (c0 % 2 == 0) ? term : -term;
    }
    return det;
}

} // namespace

LaurentPoly det4(const Matrix4 &m) {
    const int rows[4] = {0, 1, 2, 3};
    return det_rows(m, rows);
}

UnitVerdict is_unit(const AlgebraElement &alpha) {
    LaurentPoly det = det4(embed(alpha));
    return UnitVerdict{det.is_scalar(), det};
}

AlgebraElement try_invert(const AlgebraElement &alpha) {
    Matrix4 m = embed(alpha);
    LaurentPoly det = det4(m);
    if (!det.is_scalar())
        throw NotAUnit();
    Scalar inv_det = det.scalar_value().inv();

    // Row 1 of the matrix inverse is (C', A', B', D') of alpha^-1; entry j is
    // (-1)^(1+j) * minor(j, 1) / det with row j and column 1 deleted.
    AlgebraElement result(alpha.field());
    for (int j = 0; j < 4; ++j) {
        // 3x3 minor from rows != j, columns (1, 2, 3).
        const Field &f = alpha.field();
        int rows[3], n = 0;
        for (int r = 0; r < 4; ++r)
            if (r != j)
                rows[n++] = r;
        LaurentPoly minor3(f);
        int sign = 1;
        for (int c = 1; c < 4; ++c) {
            int rest[2], k = 0;
            for (int cc = 1; cc < 4; ++cc)
                if (cc != c)
                    rest[k++] = cc;
            LaurentPoly m2 = m.at(rows[1], rest[0]) * m.at(rows[2], rest[1]) -
                             m.at(rows[1], rest[1]) * m.at(rows[2], rest[0]);
            LaurentPoly contrib = m.at(rows[0], c) * m2;
            minor3 += sign > 0 ? contrib : -contrib;
            sign = -sign;
        }
        LaurentPoly entry = minor3.scaled(j % 2 == 0 ? inv_det : -inv_det);
        result.component(static_cast<Tv>(j)) = entry;
    }

    if (alpha * result != AlgebraElement::one(alpha.field()))
        throw std::logic_error("try_invert: inverse verification failed");
    return result;
}

} // namespace fours
