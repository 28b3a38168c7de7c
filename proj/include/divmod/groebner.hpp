#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "divmod/matrix.hpp"
#include "divmod/polynomial.hpp"

namespace divmod {

// Element of a free module S^g, stored componentwise.
class FreeModuleElement {
public:
    FreeModuleElement(RingPtr ring, std::vector<Polynomial> comps);
    static FreeModuleElement zero(RingPtr ring, std::size_t rank);
    static FreeModuleElement unit(RingPtr ring, std::size_t rank, std::size_t pos);
    static FreeModuleElement single(RingPtr ring, std::size_t rank, std::size_t pos,
                                    Polynomial p);

    const RingPtr& ring() const { return ring_; }
    std::size_t rank() const { return comps_.size(); }
    const Polynomial& comp(std::size_t i) const { return comps_[i]; }
    const std::vector<Polynomial>& comps() const { return comps_; }

    bool is_zero() const;

    FreeModuleElement operator+(const FreeModuleElement& o) const;
    FreeModuleElement operator-(const FreeModuleElement& o) const;
    FreeModuleElement operator-() const;
    FreeModuleElement scaled(const Scalar& c) const;
    FreeModuleElement times_term(const Monomial& m, const Scalar& c) const;
    FreeModuleElement times(const Polynomial& p) const;

    bool operator==(const FreeModuleElement& o) const { return comps_ == o.comps_; }

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> comps_;
};

// Ideal of the polynomial ring with a per-order cache of reduced bases.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> gens);
    static Ideal zero(RingPtr ring);
    static Ideal unit(RingPtr ring);
    static Ideal principal(Polynomial p);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    // Reduced basis under the ring's own order, cached.
    const std::vector<Polynomial>& groebner() const;
    // Reduced basis under an arbitrary order, expressed back in this ring.
    std::vector<Polynomial> groebner(const OrderSpec& order) const;

    Ideal map_to(RingPtr target, const std::vector<std::size_t>& var_map) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    struct Cache {
        std::mutex mu;
        std::map<std::pair<int, std::size_t>, std::vector<Polynomial>> by_order;
    };
    std::shared_ptr<Cache> cache_;
};

// Submodule of S^g with a cached reduced module basis (position-over-term
// order, lower positions dominating).
class Submodule {
public:
    Submodule(RingPtr ring, std::size_t ambient_rank,
              std::vector<FreeModuleElement> gens);
    static Submodule from_columns(const PolyMatrix& m);

    const RingPtr& ring() const { return ring_; }
    std::size_t ambient_rank() const { return rank_; }
    const std::vector<FreeModuleElement>& generators() const { return gens_; }

    const std::vector<FreeModuleElement>& groebner() const;

private:
    RingPtr ring_;
    std::size_t rank_;
    std::vector<FreeModuleElement> gens_;
    struct Cache {
        std::mutex mu;
        bool ready = false;
        std::vector<FreeModuleElement> basis;
    };
    std::shared_ptr<Cache> cache_;
};

Polynomial normal_form(const Polynomial& f, const Ideal& i);
bool ideal_contains(const Ideal& i, const Polynomial& f);
bool ideal_contains(const Ideal& i, const Ideal& j);
bool ideal_equal(const Ideal& i, const Ideal& j);
bool is_zero_ideal(const Ideal& i);
bool is_unit_ideal(const Ideal& i);

Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_product(const Ideal& i, const Ideal& j);

// i ∩ k[keep-variables], computed under a block elimination order.
Ideal eliminate(const Ideal& i, const std::vector<std::size_t>& keep);
Ideal intersect(const Ideal& i, const Ideal& j);
Ideal quotient(const Ideal& i, const Ideal& j);
Ideal saturate(const Ideal& i, const Polynomial& f);

// Krull dimension of S/i; throws MathError for the unit ideal.
std::size_t dimension(const Ideal& i);
std::pair<std::size_t, std::size_t> height_and_grade(const Ideal& i);

// Presentation matrix of the relations among gens: columns generate the full
// syzygy module, [gens]·phi = 0.
PolyMatrix syzygies(const std::vector<FreeModuleElement>& gens);

FreeModuleElement module_normal_form(const FreeModuleElement& v, const Submodule& m);
bool submodule_membership(const FreeModuleElement& v, const Submodule& m);

}  // namespace divmod
