#pragma once

#include <array>
#include <compare>
#include <cstdint>

namespace fours {

/// Transversal letter for H in Gamma; doubles as the Klein four group
/// Gamma/H = {e, x, y, z} with z = xy.
enum class Tv : std::uint8_t { E = 0, X = 1, Y = 2, Z = 3 };

constexpr Tv klein_mul(Tv a, Tv b) {
    // Klein four: xor of the underlying 2-bit codes.
    return static_cast<Tv>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr char tv_char(Tv t) {
    constexpr std::array<char, 4> c = {'e', 'x', 'y', 'z'};
    return c[static_cast<std::uint8_t>(t)];
}

/// Exponent triple of a monomial a^i b^j c^k in KH.
struct Exp3 {
    long i = 0, j = 0, k = 0;
    friend auto operator<=>(const Exp3 &, const Exp3 &) = default;
    Exp3 operator+(const Exp3 &o) const { return {i + o.i, j + o.j, k + o.k}; }
    Exp3 operator-() const { return {-i, -j, -k}; }
};

/// The Klein four action on H: x fixes a, y fixes b, z fixes c, each
/// inverting the other two generators.
constexpr Exp3 conj_exp(const Exp3 &e, Tv g) {
    switch (g) {
    case Tv::E: return e;
    case Tv::X: return {e.i, -e.j, -e.k};
    case Tv::Y: return {-e.i, e.j, -e.k};
    case Tv::Z: return {-e.i, -e.j, e.k};
    }
    return e;
}

} // namespace fours
