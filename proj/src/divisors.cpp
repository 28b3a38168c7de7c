#include "divmod/divisors.hpp"

#include <numeric>

#include "divmod/errors.hpp"
#include "divmod/rees.hpp"

namespace divmod {

Ideal det0(const EmbeddedModule& e) {
    if (e.rank() != e.ambient_rank())
        throw MathError("module does not have full rank in its ambient free module");
    return Ideal(e.ring(), e.generators().minors(e.ambient_rank()));
}

NormCertificate norm_representative(const PresentedModule& m, std::uint64_t seed) {
    std::size_t n = m.generator_count();
    std::size_t e = m.rank();
    if (e < 1) throw MathError("module must have positive rank");
    std::size_t need = n - e;
    const PolyMatrix& phi = m.relations();

    PolyMatrix rho(m.ring(), n, 0);
    std::vector<std::size_t> chosen;
    bool found = (need == 0);
    if (!found) {
        for (const auto& cols : k_subsets(phi.cols(), need)) {
            PolyMatrix cand = phi.select_columns(cols);
            if (generic_rank(cand, seed) != need) continue;
            rho = std::move(cand);
            chosen = cols;
            found = true;
            break;
        }
    }
    if (!found) throw MathError("no full-rank column subset in the relation matrix");

    PresentedModule e1 = m.has_witness() ? PresentedModule(m.witness(), rho)
                                         : PresentedModule(m.ring(), n, rho);
    Ideal ideal(m.ring(), rho.minors(need));
    return NormCertificate{std::move(rho), std::move(e1), std::move(ideal),
                           std::move(chosen)};
}

PolyMatrix find_psi(const PresentedModule& m, std::size_t first_rows_excluded) {
    std::size_t n = m.generator_count();
    if (first_rows_excluded >= n) throw MathError("row exclusion leaves no rows");
    std::size_t rows = n - first_rows_excluded;
    std::size_t cols = rows - 1;
    std::vector<std::size_t> rsel(rows);
    std::iota(rsel.begin(), rsel.end(), first_rows_excluded);
    const PolyMatrix& phi = m.relations();
    for (const auto& csel : k_subsets(phi.cols(), cols)) {
        PolyMatrix cand = phi.submatrix(rsel, csel);
        for (const auto& d : cand.minors(cols))
            if (!d.is_zero()) return cand;
    }
    throw MathError("no column subset with nonzero maximal minors");
}

FractionalIdeal fractional_inverse(const Ideal& i) {
    if (is_zero_ideal(i)) throw MathError("inverse of the zero ideal");
    std::vector<Polynomial> gb = i.groebner(OrderSpec{});
    Polynomial a = gb.front();
    Ideal num = quotient(Ideal::principal(a), i);
    return {std::move(num), std::move(a)};
}

Ideal nonfree_locus_ideal(const EmbeddedModule& e) {
    Ideal i = det0(e);
    FractionalIdeal inv = fractional_inverse(i);
    std::vector<Polynomial> gens;
    for (const auto& g : i.generators())
        for (const auto& h : inv.numerator.generators()) {
            Polynomial p = g * h;
            gens.push_back(p.is_zero() ? std::move(p) : p.exact_divide(inv.denominator));
        }
    return Ideal(e.ring(), std::move(gens));
}

bool is_free_local(const EmbeddedModule& e) {
    Ideal locus = nonfree_locus_ideal(e);
    for (const auto& g : locus.groebner())
        if (!g.constant_term().is_zero()) return true;
    return false;
}

bool is_ideal_module(const EmbeddedModule& e) {
    Ideal i = det0(e);
    if (is_zero_ideal(i)) throw MathError("order determinant is zero");
    if (is_unit_ideal(i)) return false;  // the module fills its ambient free module
    return height_and_grade(i).second >= 2;
}

ZakReport zak_report(const EmbeddedModule& e) {
    if (is_free_local(e)) throw MathError("module is free; divisor bounds are trivial");
    Ideal d0 = det0(e);
    PresentedModule p = presentation_of_embedded(e);
    NormCertificate nc = norm_representative(p);
    Ideal fe = fitting_ideal(p, e.rank());

    ZakReport z;
    z.spread_det0 = analytic_spread_of_ideal(d0);
    z.ht_det0 = height_and_grade(d0).first;
    z.ht_norm = height_and_grade(nc.ideal).first;
    z.ht_fitting = height_and_grade(fe).first;
    // an injective relation matrix of full size certifies projective dim 1
    z.pd1 = p.relations().cols() == p.generator_count() - e.rank();
    z.det0_bound_ok = z.spread_det0 >= z.ht_det0;
    z.norm_bound_ok = z.spread_det0 >= z.ht_norm;
    z.fitting_bound_ok = !z.pd1 || z.spread_det0 >= z.ht_fitting;
    return z;
}

}  // namespace divmod
