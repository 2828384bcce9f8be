#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fours/dihedral.hpp"
#include "fours/matrix.hpp"

namespace fours {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string &msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/**
 * Element grammar shared by the CLI and file formats. Terms are scalars,
 * monomials in a, b, c and the basis letters x, y, z, combined with + - * ^
 * and parentheses; juxtaposed letters multiply, so group words like "xyx"
 * parse directly. Exponents may be negative on monomial atoms.
 */
AlgebraElement parse_element(const std::string &text, const Field &field);

/// Parses an element that must be a single group element with coefficient 1.
GroupElement parse_group_element(const std::string &text);

/// Canonical form: terms sorted by (i,j,k) lex, zero exponents omitted.
std::string to_string(const LaurentPoly &p);
/// Canonical form: components in basis order 1, x, y, z.
std::string to_string(const AlgebraElement &a);
std::string to_string(const GroupElement &g);
std::string to_string(const DihedralWord &w);
std::string to_string(const Matrix4 &m);
std::string to_string(const Scalar &s);

std::ostream &operator<<(std::ostream &os, const LaurentPoly &p);
std::ostream &operator<<(std::ostream &os, const AlgebraElement &a);
std::ostream &operator<<(std::ostream &os, const GroupElement &g);
std::ostream &operator<<(std::ostream &os, const DihedralWord &w);

} // namespace fours
