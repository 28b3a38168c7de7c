#pragma once

#include "divmod/divisors.hpp"
#include "divmod/rees.hpp"

namespace divmod {

enum class CheckOutcome { passed, failed, not_applicable };

struct BourbakiCertificates {
    bool mu_formula = false;  // mu of the quotient drops by exactly e - 1
    bool rank_one = false;    // the quotient has rank one
    bool grade_psi = false;   // the minor ideal of psi has grade >= 2
    CheckOutcome hilbert_burch = CheckOutcome::not_applicable;
};

// Outcome of the generic free-submodule construction: e - 1 random elements
// x_1..x_{e-1} span a free summand F generically, and the quotient E/F is
// isomorphic to an ideal whose generators come from the maximal minors of the
// lower block psi of the reordered presentation.
struct BourbakiResult {
    std::uint64_t seed = 0;  // seed of the accepted draw
    // Per generic element, the coefficient of each original generator
    // (zero outside the selected column subset).
    std::vector<std::vector<Scalar>> coefficients;
    PolyMatrix generic_elements;      // e x (e-1), columns x_1..x_{e-1}
    EmbeddedModule reordered;         // generic elements first, then kept originals
    std::vector<std::size_t> kept;    // original generator indices kept by the
                                      // greedy extension, in ascending order
    PresentedModule presentation;     // syzygies of the reordered generators
    PolyMatrix psi;                   // relation rows below the generic block
    Ideal ideal;                      // maximal minors of psi (det0 when e == 1)
    BourbakiCertificates certificates;
};

struct BourbakiReport {
    bool mu_ok = false;      // mu(E/F) == mu(E) - e + 1
    bool rank_ok = false;    // E/F has rank one
    bool spread_ok = false;  // spread(E) == spread(ideal) + e - 1
    bool pd_applicable = false;  // relation matrix has exactly mu - e columns
    bool pd_ok = false;          // when applicable: the ideal passes Hilbert-Burch
};

// Builds the construction from a seeded draw with coefficients uniform in
// 1..10^4 over Q and uniform nonzero over F_p.  Degenerate draws (coordinate
// collapse, failed generation, mu or rank certificate failure, no qualifying
// psi block) retry with seed + 1 up to eight attempts.  grade_psi and the
// Hilbert-Burch outcome are recorded but never trigger retries: they do not
// depend on the draw.  Requires grade(det0) >= 2; locally free modules are
// rejected.
BourbakiResult generic_bourbaki(const EmbeddedModule& e, std::uint64_t seed = 0);

// Same construction with the generic elements drawn from the given column
// subset, which must be a reduction (verified up to degree bound five unless
// it is the whole set).
BourbakiResult generic_bourbaki(const EmbeddedModule& e,
                                const std::vector<std::size_t>& u_columns,
                                std::uint64_t seed = 0);

// Exactness test for 0 -> S^t -> S^(t+1) -> ideal -> 0 with the middle map
// psi and the outer map the signed maximal minors of psi.  Not applicable
// when the minor ideal has grade below two.
CheckOutcome hilbert_burch_check(const BourbakiResult& r);

// Independent re-derivation of the headline equalities from the module.
BourbakiReport verify_bourbaki(const BourbakiResult& r, const EmbeddedModule& e);

}  // namespace divmod
