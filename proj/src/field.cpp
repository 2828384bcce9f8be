#include "fours/field.hpp"

#include <stdexcept>

namespace fours {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

// Deterministic Miller-Rabin; this witness set decides 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q)
            return true;
        if (n % q == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw std::invalid_argument("Field::prime: " + std::to_string(p) + " is not prime");
    return Field{p};
}

std::string Field::name() const {
    return is_rational() ? "Q" : "F" + std::to_string(p);
}

Scalar Scalar::of_int(const Field &f, long v) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational()) {
        s.q_ = mpq_class(v);
    } else {
        long long m = static_cast<long long>(f.p);
        long long r = static_cast<long long>(v % m);
        if (r < 0)
            r += m;
        s.r_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::of_mpq(const Field &f, const mpq_class &q) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational()) {
        s.q_ = q;
        s.q_.canonicalize();
    } else {
        mpz_class p(static_cast<unsigned long>(f.p));
        mpz_class num = q.get_num() % p;
        if (num < 0)
            num += p;
        mpz_class den = q.get_den() % p;
        Scalar n = of_residue(f, num.get_ui());
        Scalar d = of_residue(f, den.get_ui());
        s = n / d;
    }
    return s;
}

Scalar Scalar::of_residue(const Field &f, std::uint64_t v) {
    if (f.is_rational())
        throw std::invalid_argument("Scalar::of_residue: field is not F_p");
    Scalar s;
    s.field_ = f;
    s.r_ = v % f.p;
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.p;
}

void Scalar::check_same_field(const Scalar &o) const {
    if (field_ != o.field_)
        throw std::invalid_argument("scalar field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar &o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational())
        s.q_ = q_ + o.q_;
    else
        s.r_ = (r_ + o.r_) % field_.p;
    return s;
}

Scalar Scalar::operator-(const Scalar &o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational())
        s.q_ = q_ - o.q_;
    else
        s.r_ = (r_ + field_.p - o.r_) % field_.p;
    return s;
}

Scalar Scalar::operator*(const Scalar &o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational())
        s.q_ = q_ * o.q_;
    else
        s.r_ = mulmod_u64(r_, o.r_, field_.p);
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational())
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : field_.p - r_;
    return s;
}

Scalar Scalar::inv() const {
    if (is_zero())
        throw std::domain_error("Scalar::inv: division by zero");
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational())
        s.q_ = 1 / q_;
    else
        s.r_ = powmod_u64(r_, field_.p - 2, field_.p); // Fermat
    return s;
}

Scalar Scalar::operator/(const Scalar &o) const {
    check_same_field(o);
    return *this * o.inv();
}

bool Scalar::operator==(const Scalar &o) const {
    if (field_ != o.field_)
        return false;
    return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (field_.is_rational())
        return q_.get_str();
    return std::to_string(r_);
}

} // namespace fours
