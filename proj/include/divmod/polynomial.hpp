#pragma once

#include <string>
#include <vector>

#include "divmod/ring.hpp"

namespace divmod {

struct Term {
    Monomial mono;
    Scalar coeff;
};

// Immutable-by-convention polynomial: terms kept sorted descending in the
// ring's monomial order, no zero coefficients, like monomials merged.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(RingPtr ring, std::vector<Term> terms);

    static Polynomial zero(RingPtr ring);
    static Polynomial constant(const Scalar& c, RingPtr ring);
    static Polynomial from_integer(long n, RingPtr ring);
    static Polynomial variable(std::size_t index, RingPtr ring);
    static Polynomial term(const Monomial& m, const Scalar& c, RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Scalar& leading_coeff() const { return leading_term().coeff; }

    // Total degree; -1 for the zero polynomial.
    long degree() const;
    bool is_homogeneous() const;
    bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }
    Scalar constant_term() const;
    Scalar coeff_of(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial times_term(const Monomial& m, const Scalar& c) const;
    Polynomial monic() const;

    // Exact division; throws MathError if the quotient is not polynomial.
    Polynomial exact_divide(const Polynomial& divisor) const;

    Scalar evaluate(const std::vector<Scalar>& point) const;

    // Rewrites this polynomial in `target`, sending variable i of the source
    // ring to variable var_map[i] of the target ring.
    Polynomial map_to(RingPtr target, const std::vector<std::size_t>& var_map) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_ring(const Polynomial& o) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

}  // namespace divmod
