#include "divmod/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace divmod {

namespace {

std::vector<Term> normalize(const Ring& ring, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [&ring](const Term& a, const Term& b) {
        return ring.compare(a.mono, b.mono) > 0;
    });
    std::vector<Term> out;
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = out.back().coeff + t.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else {
            out.push_back(std::move(t));
        }
    }
    return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    if (!ring_) throw InternalError("polynomial without ring");
    for (const auto& t : terms) {
        if (t.mono.nvars() != ring_->nvars())
            throw InternalError("term arity does not match ring");
        if (!(t.coeff.field() == ring_->field()))
            throw InternalError("term coefficient field does not match ring");
    }
    terms_ = normalize(*ring_, std::move(terms));
}

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(const Scalar& c, RingPtr ring) {
    std::size_t n = ring->nvars();
    return Polynomial(std::move(ring), {Term{Monomial::one(n), c}});
}

Polynomial Polynomial::from_integer(long n, RingPtr ring) {
    Scalar c = Scalar::integer(n, ring->field());
    return constant(c, std::move(ring));
}

Polynomial Polynomial::variable(std::size_t index, RingPtr ring) {
    if (index >= ring->nvars()) throw InternalError("variable index out of range");
    std::vector<std::uint32_t> e(ring->nvars(), 0);
    e[index] = 1;
    Scalar one = Scalar::one(ring->field());
    return Polynomial(std::move(ring), {Term{Monomial(std::move(e)), one}});
}

Polynomial Polynomial::term(const Monomial& m, const Scalar& c, RingPtr ring) {
    return Polynomial(std::move(ring), {Term{m, c}});
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw MathError("zero polynomial has no leading term");
    return terms_[0];
}

long Polynomial::degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.mono.degree()));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    auto d = terms_[0].mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

Scalar Polynomial::constant_term() const {
    return coeff_of(Monomial::one(ring_->nvars()));
}

Scalar Polynomial::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Scalar::zero(ring_->field());
}

void Polynomial::check_ring(const Polynomial& o) const {
    if (!ring_ || !o.ring_) throw InternalError("polynomial without ring");
    if (ring_ != o.ring_ && !(ring_->same_vars(*o.ring_) && ring_->order() == o.ring_->order()))
        throw InternalError("polynomial ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_ring(o);
    std::vector<Term> t = terms_;
    t.insert(t.end(), o.terms_.begin(), o.terms_.end());
    return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coeff = -x.coeff;
    Polynomial r;
    r.ring_ = ring_;
    r.terms_ = std::move(t);
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return zero(ring_);
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coeff = x.coeff * c;
    Polynomial r;
    r.ring_ = ring_;
    r.terms_ = std::move(t);
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return zero(ring_);
    std::vector<Term> t = terms_;
    for (auto& x : t) {
        x.mono = x.mono * m;
        x.coeff = x.coeff * c;
    }
    // multiplying by a monomial preserves strict descending order
    Polynomial r;
    r.ring_ = ring_;
    r.terms_ = std::move(t);
    return r;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_ring(o);
    std::vector<Term> t;
    t.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            t.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
    return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::exact_divide(const Polynomial& divisor) const {
    check_ring(divisor);
    if (divisor.is_zero()) throw MathError("division by zero polynomial");
    Polynomial rem = *this;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        const Term& dt = divisor.leading_term();
        if (!dt.mono.divides(lt.mono)) throw MathError("polynomial division is not exact");
        Monomial m = dt.mono.quotient_of(lt.mono);
        Scalar c = lt.coeff / dt.coeff;
        quot.push_back(Term{m, c});
        rem = rem - divisor.times_term(m, c);
    }
    return Polynomial(ring_, std::move(quot));
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != ring_->nvars()) throw InternalError("evaluation point arity mismatch");
    Scalar acc = Scalar::zero(ring_->field());
    for (const auto& t : terms_) {
        Scalar v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (std::uint32_t e = 0; e < t.mono.exp(i); ++e) v = v * point[i];
        }
        acc = acc + v;
    }
    return acc;
}

Polynomial Polynomial::map_to(RingPtr target, const std::vector<std::size_t>& var_map) const {
    if (var_map.size() != ring_->nvars()) throw InternalError("variable map arity mismatch");
    if (!(target->field() == ring_->field())) throw InternalError("field mismatch in ring map");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::uint32_t> e(target->nvars(), 0);
        for (std::size_t i = 0; i < var_map.size(); ++i) {
            if (t.mono.exp(i) == 0) continue;
            if (var_map[i] >= target->nvars()) throw InternalError("variable map out of range");
            e[var_map[i]] += t.mono.exp(i);
        }
        out.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial(std::move(target), std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
    check_ring(o);
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].mono != o.terms_[i].mono) return false;
        if (!(terms_[i].coeff == o.terms_[i].coeff)) return false;
    }
    return true;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool rational = ring_->field().is_rational();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        Scalar c = t.coeff;
        if (i == 0) {
            if (rational && c.is_negative()) {
                os << "-";
                c = c.abs();
            }
        } else {
            if (rational && c.is_negative()) {
                os << " - ";
                c = c.abs();
            } else {
                os << " + ";
            }
        }
        bool wrote_coeff = false;
        if (t.mono.is_one()) {
            os << c.str();
            wrote_coeff = true;
        } else if (!c.is_one()) {
            os << c.str() << "*";
            wrote_coeff = true;
        }
        (void)wrote_coeff;
        bool first_var = true;
        for (std::size_t v = 0; v < ring_->nvars(); ++v) {
            std::uint32_t e = t.mono.exp(v);
            if (e == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << ring_->var(v);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace divmod
