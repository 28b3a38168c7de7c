#ifndef DIVMOD_SCALAR_HPP
#define DIVMOD_SCALAR_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "divmod/errors.hpp"

namespace divmod {

// Coefficient field: the rationals (p == 0) or the prime field F_p.
struct Field {
    std::uint64_t p = 0;

    bool is_rational() const noexcept { return p == 0; }
    bool operator==(const Field&) const = default;
};

bool is_prime(std::uint64_t n);

// Exact field element. Rationals are kept in lowest terms with positive
// denominator (mpq canonical form); prime-field residues live in [0, p).
class Scalar {
public:
    Scalar() = default;  // rational zero

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar integer(long n, const Field& f);
    static Scalar rational(const mpq_class& q);            // field Q
    static Scalar residue(std::uint64_t v, std::uint64_t p);  // field F_p

    const Field& field() const noexcept { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws MathError on zero divisor
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Negative only meaningful over Q; residues are never negative.
    bool is_negative() const;
    Scalar abs() const;

    // Canonical printing: "a/b" or "a" over Q, the residue digits over F_p.
    std::string str() const;

    const mpq_class& rational_value() const;
    std::uint64_t residue_value() const;

private:
    Field field_;
    mpq_class q_;           // valid when field_.p == 0
    std::uint64_t r_ = 0;   // valid when field_.p != 0

    void check_same_field(const Scalar& o) const;
};

}  // namespace divmod

#endif
