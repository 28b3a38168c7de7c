#pragma once

#include <optional>
#include <string>

#include "divmod/groebner.hpp"
#include "divmod/matrix.hpp"

namespace divmod {

// Submodule of a free module S^e, generated by the columns of an e x n
// matrix.  The generic rank of the generator matrix is recorded at
// construction.
class EmbeddedModule {
public:
    explicit EmbeddedModule(PolyMatrix generators, std::string label = "");

    const RingPtr& ring() const { return gens_.ring(); }
    const PolyMatrix& generators() const { return gens_; }
    std::size_t ambient_rank() const { return gens_.rows(); }
    std::size_t generator_count() const { return gens_.cols(); }
    std::size_t rank() const { return rank_; }
    const std::string& label() const { return label_; }

    // Column j as an element of S^e.
    FreeModuleElement generator(std::size_t j) const;
    std::vector<FreeModuleElement> generator_list() const;

private:
    PolyMatrix gens_;
    std::size_t rank_;
    std::string label_;
};

// Cokernel of an n x m relation matrix phi whose columns are relations among
// n abstract generators.  Optionally carries an embedding witness: an e x n
// matrix sending generator i to its column in S^e, with witness * phi == 0.
class PresentedModule {
public:
    PresentedModule(RingPtr ring, std::size_t generator_count, PolyMatrix relations);
    PresentedModule(PolyMatrix witness, PolyMatrix relations);

    const RingPtr& ring() const { return phi_.ring(); }
    std::size_t generator_count() const { return n_; }
    const PolyMatrix& relations() const { return phi_; }
    std::size_t rank() const { return rank_; }
    bool has_witness() const { return witness_.has_value(); }
    const PolyMatrix& witness() const;

private:
    std::size_t n_;
    PolyMatrix phi_;
    std::optional<PolyMatrix> witness_;
    std::size_t rank_;
};

// Presentation with relations = syzygies of the generator columns and the
// generator matrix itself as embedding witness.
PresentedModule presentation_of_embedded(const EmbeddedModule& e);

// Ideal of (n-i) x (n-i) minors of the relation matrix; (1) when i >= n,
// (0) when the required minor size exceeds the matrix.
Ideal fitting_ideal(const PresentedModule& m, std::size_t i);

// Minimal number of generators at the origin: n - rank_k(phi(0)).
std::size_t mu_local(const PresentedModule& m);

// Presentation of the quotient by the generators with the given indices.
PresentedModule quotient_by_generators(const PresentedModule& m,
                                       std::vector<std::size_t> kill);

// Presentation of the k-th exterior power on the basis of k-subsets of the
// generators, in lexicographic subset order.
PresentedModule exterior_power(const PresentedModule& m, std::size_t k);

// Ideal of maximal minors of psi (rows >= cols), produced by wedging the
// columns and pairing with complementary basis multivectors; cross-checked
// entry by entry against Laplace-expansion minors.
Ideal theta_image(const PolyMatrix& psi);

// The embedded module generated by the witness columns.
EmbeddedModule image_in_free(const PresentedModule& m);

}  // namespace divmod
