#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace fours {

/**
 * Coefficient domain for all exact arithmetic: the rationals (p == 0) or a
 * prime field F_p with p chosen at runtime.
 */
struct Field {
    std::uint64_t p = 0; // 0 means Q

    static Field rationals() { return Field{0}; }
    static Field prime(std::uint64_t p); // throws std::invalid_argument if p is not prime

    bool is_rational() const { return p == 0; }
    std::string name() const;

    friend bool operator==(const Field &, const Field &) = default;
};

bool is_prime_u64(std::uint64_t n);

/// Exact scalar: a reduced rational, or a residue in [0, p).
class Scalar {
public:
    Scalar() : field_{0}, q_(0) {}

    static Scalar zero(const Field &f) { return of_int(f, 0); }
    static Scalar one(const Field &f) { return of_int(f, 1); }
    static Scalar of_int(const Field &f, long v);
    static Scalar of_mpq(const Field &f, const mpq_class &q);
    /// Residue constructor; v is reduced mod p.
    static Scalar of_residue(const Field &f, std::uint64_t v);

    const Field &field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar &o) const;
    Scalar operator-(const Scalar &o) const;
    Scalar operator*(const Scalar &o) const;
    Scalar operator/(const Scalar &o) const; // throws std::domain_error on zero divisor
    Scalar operator-() const;
    Scalar inv() const;

    Scalar &operator+=(const Scalar &o) { return *this = *this + o; }
    Scalar &operator-=(const Scalar &o) { return *this = *this - o; }
    Scalar &operator*=(const Scalar &o) { return *this = *this * o; }

    bool operator==(const Scalar &o) const;
    bool operator!=(const Scalar &o) const { return !(*this == o); }

    /// Rational value; only valid over Q.
    const mpq_class &rational() const { return q_; }
    /// Residue value; only valid over F_p.
    std::uint64_t residue() const { return r_; }

    std::string str() const;

private:
    Field field_;
    mpq_class q_;
    std::uint64_t r_ = 0;

    void check_same_field(const Scalar &o) const;
};

} // namespace fours
