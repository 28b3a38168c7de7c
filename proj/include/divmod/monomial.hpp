#pragma once

#include <cstdint>
#include <vector>

#include "divmod/errors.hpp"

namespace divmod {

// Exponent vector over a fixed variable list; the ring supplies the ordering.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
        for (auto e : exps_) deg_ += e;
    }

    static Monomial one(std::size_t nvars) {
        return Monomial(std::vector<std::uint32_t>(nvars, 0));
    }

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t exp(std::size_t i) const { return exps_[i]; }
    std::uint64_t degree() const { return deg_; }
    const std::vector<std::uint32_t>& exps() const { return exps_; }

    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        check_size(o);
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + o.exps_[i];
        return Monomial(std::move(e));
    }

    bool divides(const Monomial& o) const {
        check_size(o);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    // Quotient o / this; caller must ensure divisibility.
    Monomial quotient_of(const Monomial& o) const {
        check_size(o);
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (exps_[i] > o.exps_[i]) throw InternalError("monomial quotient not divisible");
            e[i] = o.exps_[i] - exps_[i];
        }
        return Monomial(std::move(e));
    }

    Monomial lcm(const Monomial& o) const {
        check_size(o);
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = exps_[i] > o.exps_[i] ? exps_[i] : o.exps_[i];
        return Monomial(std::move(e));
    }

    Monomial gcd(const Monomial& o) const {
        check_size(o);
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = exps_[i] < o.exps_[i] ? exps_[i] : o.exps_[i];
        return Monomial(std::move(e));
    }

    bool coprime_with(const Monomial& o) const {
        check_size(o);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0 && o.exps_[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    void check_size(const Monomial& o) const {
        if (exps_.size() != o.exps_.size()) throw InternalError("monomial arity mismatch");
    }

    std::vector<std::uint32_t> exps_;
    std::uint64_t deg_ = 0;
};

}  // namespace divmod
