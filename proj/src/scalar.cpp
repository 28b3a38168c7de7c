#include "divmod/scalar.hpp"

namespace divmod {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    unsigned __int128 acc = 1, base = b % p;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t mod_inv(std::uint64_t v, std::uint64_t p) {
    if (v == 0) throw MathError("division by zero in F_p");
    return mod_pow(v, p - 2, p);
}

}  // namespace

Scalar Scalar::zero(const Field& f) { return integer(0, f); }
Scalar Scalar::one(const Field& f) { return integer(1, f); }

Scalar Scalar::integer(long n, const Field& f) {
    if (f.is_rational()) return rational(mpq_class(n));
    long r = n % static_cast<long>(f.p);
    if (r < 0) r += static_cast<long>(f.p);
    return residue(static_cast<std::uint64_t>(r), f.p);
}

Scalar Scalar::rational(const mpq_class& q) {
    Scalar s;
    s.field_ = Field{0};
    // copy-construct (limb-level) before canonicalizing: this platform's
    // mpq_set faults on sources with a negative denominator
    mpq_class tmp(q);
    tmp.canonicalize();
    s.q_ = std::move(tmp);
    return s;
}

Scalar Scalar::residue(std::uint64_t v, std::uint64_t p) {
    Scalar s;
    s.field_ = Field{p};
    s.r_ = v % p;
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? q_ == 1 : r_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_)) throw InternalError("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational()) return rational(q_ + o.q_);
    return residue(r_ + o.r_, field_.p);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational()) return rational(q_ - o.q_);
    return residue(r_ + field_.p - o.r_, field_.p);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational()) return rational(q_ * o.q_);
    unsigned __int128 prod = static_cast<unsigned __int128>(r_) * o.r_;
    return residue(static_cast<std::uint64_t>(prod % field_.p), field_.p);
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    if (field_.is_rational()) return rational(-q_);
    return residue(field_.p - r_, field_.p);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw MathError("division by zero scalar");
    if (field_.is_rational()) return rational(1 / q_);
    return residue(mod_inv(r_, field_.p), field_.p);
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

bool Scalar::is_negative() const {
    return field_.is_rational() && q_ < 0;
}

Scalar Scalar::abs() const {
    if (field_.is_rational() && q_ < 0) return rational(-q_);
    return *this;
}

std::string Scalar::str() const {
    if (field_.is_rational()) return q_.get_str();
    return std::to_string(r_);
}

const mpq_class& Scalar::rational_value() const {
    if (!field_.is_rational()) throw InternalError("not a rational scalar");
    return q_;
}

std::uint64_t Scalar::residue_value() const {
    if (field_.is_rational()) throw InternalError("not a prime-field scalar");
    return r_;
}

}  // namespace divmod
