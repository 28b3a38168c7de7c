#pragma once

#include "divmod/presmod.hpp"

namespace divmod {

// (1/denominator) * numerator with a fixed nonzero denominator.
struct FractionalIdeal {
    Ideal numerator;
    Polynomial denominator;
};

// Column selection rho of the relation matrix with generic rank n - e,
// together with its cokernel and the ideal of maximal minors.
struct NormCertificate {
    PolyMatrix rho;
    PresentedModule e1;
    Ideal ideal;
    std::vector<std::size_t> columns;
};

struct ZakReport {
    std::size_t spread_det0 = 0;  // analytic spread of the order determinant
    std::size_t ht_det0 = 0;      // height of det0 = F_0 of the cokernel
    std::size_t ht_norm = 0;      // height of the norm representative ideal
    std::size_t ht_fitting = 0;   // height of F_e of the module itself
    bool pd1 = false;             // relation matrix is injective of full size
    bool det0_bound_ok = false;   // spread >= ht_det0
    bool norm_bound_ok = false;   // spread >= ht_norm
    bool fitting_bound_ok = false;  // spread >= ht_fitting (needs pd1)
};

// Ideal of e x e minors of the generator matrix; requires full rank e.
Ideal det0(const EmbeddedModule& e);

// Lexicographically first column subset of the relations with generic rank
// n - e; free modules (n = e) get the empty selection with unit ideal.
NormCertificate norm_representative(const PresentedModule& m, std::uint64_t seed = 0);

// First (rows-1)-column subset of the relation rows below the excluded block
// whose maximal minors are not all zero.
PolyMatrix find_psi(const PresentedModule& m, std::size_t first_rows_excluded);

// i^{-1} = (1/a)(aS : i) with a the first reduced-basis element.
FractionalIdeal fractional_inverse(const Ideal& i);

// Ideal cutting out the locus where the module fails to be locally free:
// generated by g*h/a over generators g of det0 and h of its inverse numerator.
Ideal nonfree_locus_ideal(const EmbeddedModule& e);

// True iff the non-free locus misses the origin.
bool is_free_local(const EmbeddedModule& e);

// True iff grade(det0) >= 2; the full ambient module reports false.
bool is_ideal_module(const EmbeddedModule& e);

// Spread-versus-height inequalities for the divisor ideals of a non-free
// module.
ZakReport zak_report(const EmbeddedModule& e);

}  // namespace divmod
