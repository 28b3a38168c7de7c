#pragma once

#include "divmod/presmod.hpp"

namespace divmod {

// Defining ideal of the subalgebra S[l_1..l_n] of S[t_1..t_e] generated by
// the linear forms l_i = (column i of A) . (t_1..t_e), presented on one
// marker variable per generator.
struct ReesPresentation {
    RingPtr source;       // ring of the module
    RingPtr marker_ring;  // source variables followed by the markers
    std::size_t targets = 0;  // number of t-forms (ambient rank)
    std::size_t markers = 0;  // number of generators
    Ideal defining;           // kernel of marker -> form substitution
    bool equigenerated = false;
};

struct FiberCone {
    RingPtr fiber_ring;  // one variable per generator
    Ideal defining;
    std::size_t dim = 0;
};

struct ReductionOutcome {
    bool known = false;
    std::size_t r = 0;  // meaningful when known
};

struct Classification {
    std::size_t mu = 0;      // minimal generators at the origin
    std::size_t spread = 0;  // analytic spread
    std::size_t height = 0;  // height of F_e
    std::size_t grade = 0;   // grade of F_e
    std::size_t deviation = 0;  // spread - rank + 1 - height
    bool equimultiple = false;
    bool principal_class = false;
    bool complete_intersection = false;
};

ReesPresentation rees_presentation(const EmbeddedModule& e);
FiberCone fiber_cone(const EmbeddedModule& e);
std::size_t analytic_spread(const EmbeddedModule& e);

// The same constructions applied to an ideal viewed as a rank-one module.
FiberCone fiber_cone_of_ideal(const Ideal& i);
std::size_t analytic_spread_of_ideal(const Ideal& i);

// Least r <= rmax with degree-(r+1) forms spanned by the selected columns
// times degree-r forms, or unknown when the bound is exhausted.
ReductionOutcome reduction_number(const EmbeddedModule& e,
                                  const std::vector<std::size_t>& u_columns,
                                  std::size_t rmax);

Classification classify_module(const EmbeddedModule& e);

}  // namespace divmod
