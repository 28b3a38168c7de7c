#include "divmod/rees.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "divmod/divisors.hpp"
#include "divmod/errors.hpp"

namespace divmod {

namespace {

// Marker names are prefix + 1-based number; extend the prefix until no ring
// variable could collide.
std::string safe_prefix(const Ring& r, std::string base) {
    for (;;) {
        bool clash = false;
        for (const auto& v : r.vars()) {
            if (v.size() <= base.size() || v.compare(0, base.size(), base) != 0) continue;
            if (v.find_first_not_of("0123456789", base.size()) == std::string::npos) {
                clash = true;
                break;
            }
        }
        if (!clash) return base;
        base += "_";
    }
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
    std::vector<std::string> out;
    out.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

// Generators share one degree for some grading shift of the ambient rows.
// That holds exactly when, within each row, every nonzero entry is
// homogeneous of one row-specific degree.
bool equigenerated_columns(const PolyMatrix& a) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
        long rowdeg = -1;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const Polynomial& p = a.at(r, c);
            if (p.is_zero()) continue;
            if (!p.is_homogeneous()) return false;
            if (rowdeg < 0)
                rowdeg = p.degree();
            else if (rowdeg != p.degree())
                return false;
        }
    }
    return true;
}

// exponent vectors of the given total degree, first position filled greedily
void degree_exponents(std::size_t vars, std::uint32_t degree,
                      std::vector<std::uint32_t>& cur,
                      std::vector<std::vector<std::uint32_t>>& out) {
    if (cur.size() + 1 == vars) {
        cur.push_back(degree);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (std::uint32_t d = degree + 1; d-- > 0;) {
        cur.push_back(d);
        degree_exponents(vars, degree - d, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::uint32_t>> t_monomials(std::size_t vars,
                                                    std::uint32_t degree) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur;
    degree_exponents(vars, degree, cur, out);
    return out;
}

}  // namespace

ReesPresentation rees_presentation(const EmbeddedModule& em) {
    if (em.rank() != em.ambient_rank())
        throw MathError("module does not have full rank in its ambient free module");
    const RingPtr& s = em.ring();
    std::size_t e = em.ambient_rank(), n = em.generator_count(), d = s->nvars();

    std::string tp = safe_prefix(*s, "t"), yp = safe_prefix(*s, "y");
    // eliminate the t-block: [t..., x..., y...]
    std::vector<std::string> big_vars = numbered(tp, e);
    for (const auto& v : s->vars()) big_vars.push_back(v);
    for (const auto& v : numbered(yp, n)) big_vars.push_back(v);
    RingPtr big = Ring::make(s->field(), big_vars, OrderSpec{OrderKind::block, e});

    std::vector<std::size_t> x_map(d);
    for (std::size_t i = 0; i < d; ++i) x_map[i] = e + i;

    std::vector<Polynomial> graph;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial form = Polynomial::zero(big);
        for (std::size_t j = 0; j < e; ++j)
            form = form + em.generators().at(j, i).map_to(big, x_map) *
                              Polynomial::variable(j, big);
        graph.push_back(Polynomial::variable(e + d + i, big) - form);
    }
    Ideal graph_ideal(big, graph);

    std::vector<std::size_t> keep(d + n);
    std::iota(keep.begin(), keep.end(), e);
    Ideal k_big = eliminate(graph_ideal, keep);

    // every kernel generator must vanish when markers are substituted back
    for (const auto& g : k_big.generators())
        if (!normal_form(g, graph_ideal).is_zero())
            throw InternalError("kernel generator survives back-substitution");

    std::vector<std::string> xy_vars(s->vars());
    for (const auto& v : numbered(yp, n)) xy_vars.push_back(v);
    RingPtr xy = Ring::make(s->field(), xy_vars, OrderSpec{});
    std::vector<std::size_t> down(e + d + n, 0);
    for (std::size_t i = 0; i < d + n; ++i) down[e + i] = i;

    return ReesPresentation{s,
                            xy,
                            e,
                            n,
                            k_big.map_to(xy, down),
                            equigenerated_columns(em.generators())};
}

FiberCone fiber_cone(const EmbeddedModule& em) {
    ReesPresentation rp = rees_presentation(em);
    std::size_t d = rp.source->nvars(), n = rp.markers;

    std::vector<Polynomial> gens = rp.defining.generators();
    for (std::size_t i = 0; i < d; ++i)
        gens.push_back(Polynomial::variable(i, rp.marker_ring));
    std::vector<std::size_t> keep(n);
    std::iota(keep.begin(), keep.end(), d);
    Ideal collapsed = eliminate(Ideal(rp.marker_ring, std::move(gens)), keep);

    std::vector<std::string> y_vars(rp.marker_ring->vars().begin() + d,
                                    rp.marker_ring->vars().end());
    RingPtr fiber = Ring::make(rp.source->field(), y_vars, OrderSpec{});
    std::vector<std::size_t> down(d + n, 0);
    for (std::size_t i = 0; i < n; ++i) down[d + i] = i;

    Ideal def = collapsed.map_to(fiber, down);
    std::size_t dim = is_unit_ideal(def) ? 0 : dimension(def);
    return FiberCone{fiber, std::move(def), dim};
}

std::size_t analytic_spread(const EmbeddedModule& em) { return fiber_cone(em).dim; }

FiberCone fiber_cone_of_ideal(const Ideal& i) {
    if (is_zero_ideal(i)) throw MathError("fiber cone of the zero ideal");
    std::vector<Polynomial> gens;
    for (const auto& g : i.generators())
        if (!g.is_zero()) gens.push_back(g);
    PolyMatrix a(i.ring(), 1, gens.size());
    for (std::size_t c = 0; c < gens.size(); ++c) a.set(0, c, gens[c]);
    return fiber_cone(EmbeddedModule(std::move(a)));
}

std::size_t analytic_spread_of_ideal(const Ideal& i) {
    return fiber_cone_of_ideal(i).dim;
}

namespace {

constexpr std::size_t product_cap = 20000;

// all products of `degree` forms drawn with repetition, deduplicated
std::vector<Polynomial> form_products(const std::vector<Polynomial>& forms,
                                      std::size_t degree) {
    std::vector<Polynomial> out;
    if (forms.empty()) return out;
    auto rec = [&](auto&& self, std::size_t start, std::size_t left,
                   const Polynomial& acc) -> void {
        if (left == 0) {
            if (out.size() >= product_cap)
                throw BudgetError("degree product count exceeds the reduction-test cap");
            if (std::find(out.begin(), out.end(), acc) == out.end()) out.push_back(acc);
            return;
        }
        for (std::size_t i = start; i < forms.size(); ++i)
            self(self, i, left - 1, acc * forms[i]);
    };
    rec(rec, 0, degree, Polynomial::from_integer(1, forms.front().ring()));
    return out;
}

// split a polynomial in [x..., t...] into components over the t-monomials of
// one fixed degree
FreeModuleElement split_by_t(const Polynomial& p, const RingPtr& s, std::size_t d,
                             std::size_t e,
                             const std::map<std::vector<std::uint32_t>, std::size_t>& slot,
                             std::size_t rank) {
    std::vector<Polynomial> comps(rank, Polynomial::zero(s));
    for (const auto& term : p.terms()) {
        std::vector<std::uint32_t> xpart(d), tpart(e);
        for (std::size_t i = 0; i < d; ++i) xpart[i] = term.mono.exp(i);
        for (std::size_t i = 0; i < e; ++i) tpart[i] = term.mono.exp(d + i);
        auto it = slot.find(tpart);
        if (it == slot.end())
            throw InternalError("product has unexpected degree in the t-forms");
        comps[it->second] =
            comps[it->second] +
            Polynomial::term(Monomial(std::move(xpart)), term.coeff, s);
    }
    return FreeModuleElement(s, std::move(comps));
}

}  // namespace

ReductionOutcome reduction_number(const EmbeddedModule& em,
                                  const std::vector<std::size_t>& u_columns,
                                  std::size_t rmax) {
    const RingPtr& s = em.ring();
    std::size_t e = em.ambient_rank(), n = em.generator_count(), d = s->nvars();
    std::vector<std::size_t> u = u_columns;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    if (!u.empty() && u.back() >= n) throw MathError("column index out of range");
    if (generic_rank(em.generators().select_columns(u), 0) != em.rank())
        throw MathError("selected columns have smaller rank than the module");

    std::string tp = safe_prefix(*s, "t");
    std::vector<std::string> vars(s->vars());
    for (const auto& v : numbered(tp, e)) vars.push_back(v);
    RingPtr st = Ring::make(s->field(), vars, OrderSpec{});
    std::vector<std::size_t> x_map(d);
    std::iota(x_map.begin(), x_map.end(), 0);

    std::vector<Polynomial> forms, u_forms;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial form = Polynomial::zero(st);
        for (std::size_t j = 0; j < e; ++j)
            form = form + em.generators().at(j, i).map_to(st, x_map) *
                              Polynomial::variable(d + j, st);
        forms.push_back(form);
        if (std::binary_search(u.begin(), u.end(), i)) u_forms.push_back(form);
    }

    for (std::size_t r = 0; r <= rmax; ++r) {
        auto top = form_products(forms, r + 1);
        std::vector<Polynomial> span;
        for (const auto& w : form_products(forms, r))
            for (const auto& uf : u_forms) {
                Polynomial p = uf * w;
                if (std::find(span.begin(), span.end(), p) == span.end())
                    span.push_back(std::move(p));
            }

        auto basis = t_monomials(e, static_cast<std::uint32_t>(r + 1));
        std::map<std::vector<std::uint32_t>, std::size_t> slot;
        for (std::size_t i = 0; i < basis.size(); ++i) slot[basis[i]] = i;

        std::vector<FreeModuleElement> span_elems;
        for (const auto& p : span)
            span_elems.push_back(split_by_t(p, s, d, e, slot, basis.size()));
        Submodule sub(s, basis.size(), std::move(span_elems));

        bool all = true;
        for (const auto& p : top) {
            if (!submodule_membership(split_by_t(p, s, d, e, slot, basis.size()), sub)) {
                all = false;
                break;
            }
        }
        if (all) return {true, r};
    }
    return {false, 0};
}

Classification classify_module(const EmbeddedModule& em) {
    if (!is_ideal_module(em)) throw MathError("classification requires an ideal module");
    PresentedModule p = presentation_of_embedded(em);
    std::size_t mu = mu_local(p);
    std::size_t ell = analytic_spread(em);
    std::size_t rk = em.rank();
    auto [ht, gr] = height_and_grade(fitting_ideal(p, rk));
    if (!(mu >= ell && ell + 1 >= ht + rk))
        throw InternalError("generator/spread/height chain violated");

    Classification c;
    c.mu = mu;
    c.spread = ell;
    c.height = ht;
    c.grade = gr;
    c.deviation = ell + 1 - ht - rk;
    c.equimultiple = c.deviation == 0;
    c.principal_class = mu + 1 == ht + rk;
    c.complete_intersection = mu + 1 == gr + rk;
    return c;
}

}  // namespace divmod
