#include "divmod/bourbaki.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>

#include "divmod/errors.hpp"

namespace divmod {

namespace {

// Internal signal: the draw collapsed, try the next seed.
struct DegenerateDraw {};

Scalar draw_coefficient(std::mt19937_64& rng, const Field& field) {
    if (field.is_rational()) {
        std::uniform_int_distribution<long> d(1, 10000);
        return Scalar::integer(d(rng), field);
    }
    std::uniform_int_distribution<std::uint64_t> d(1, field.p - 1);
    return Scalar::residue(d(rng), field.p);
}

// Rank over k of a list of coordinate columns of length n.
std::size_t span_rank(const std::vector<std::vector<Scalar>>& cols, std::size_t n,
                      const Field& field) {
    if (cols.empty() || n == 0) return 0;
    std::vector<std::vector<Scalar>> rows(
        n, std::vector<Scalar>(cols.size(), Scalar::zero(field)));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) rows[r][c] = cols[c][r];
    return scalar_rank(rows, field);
}

CheckOutcome hilbert_burch_outcome(const PolyMatrix& psi, const Ideal& ideal) {
    const RingPtr& ring = psi.ring();
    std::size_t t = psi.cols();
    if (t == 0 || psi.rows() != t + 1) return CheckOutcome::not_applicable;

    std::vector<std::size_t> all_cols(t);
    std::iota(all_cols.begin(), all_cols.end(), 0);
    std::vector<Polynomial> theta;
    theta.reserve(t + 1);
    for (std::size_t i = 0; i <= t; ++i) {
        std::vector<std::size_t> rows;
        rows.reserve(t);
        for (std::size_t r = 0; r <= t; ++r)
            if (r != i) rows.push_back(r);
        Polynomial d = psi.submatrix(rows, all_cols).determinant();
        theta.push_back(i % 2 == 0 ? d : -d);
    }

    Ideal minor_ideal(ring, theta);
    if (is_zero_ideal(minor_ideal)) return CheckOutcome::not_applicable;
    if (!is_unit_ideal(minor_ideal) && height_and_grade(minor_ideal).second < 2)
        return CheckOutcome::not_applicable;

    for (std::size_t j = 0; j < t; ++j) {
        Polynomial acc = Polynomial::zero(ring);
        for (std::size_t i = 0; i <= t; ++i) acc = acc + theta[i] * psi.at(i, j);
        if (!acc.is_zero())
            throw InternalError("cofactor expansion fails to annihilate psi");
    }
    if (!ideal_equal(ideal, minor_ideal)) return CheckOutcome::failed;

    std::vector<FreeModuleElement> theta_gens;
    theta_gens.reserve(t + 1);
    for (const auto& th : theta) theta_gens.push_back(FreeModuleElement(ring, {th}));
    PolyMatrix z = syzygies(theta_gens);
    Submodule image = Submodule::from_columns(psi);
    Submodule kernel = Submodule::from_columns(z);
    for (std::size_t c = 0; c < z.cols(); ++c)
        if (!submodule_membership(FreeModuleElement(ring, z.column(c)), image))
            return CheckOutcome::failed;
    for (std::size_t c = 0; c < t; ++c)
        if (!submodule_membership(FreeModuleElement(ring, psi.column(c)), kernel))
            throw InternalError("relation columns escape the syzygies of their minors");
    return CheckOutcome::passed;
}

BourbakiResult attempt(const EmbeddedModule& em, const std::vector<std::size_t>& u,
                       std::uint64_t seed_value) {
    const RingPtr& ring = em.ring();
    const Field& field = ring->field();
    std::size_t e = em.rank();
    std::size_t n = em.generator_count();
    std::size_t ambient = em.ambient_rank();
    std::size_t gcount = e - 1;

    PresentedModule base = presentation_of_embedded(em);
    auto phi0 = base.relations().evaluate_at_origin();
    std::size_t mu = mu_local(base);

    // Coordinates modulo the maximal ideal: relation columns first, then the
    // generic elements, then candidates for the greedy extension.
    std::vector<std::vector<Scalar>> span;
    for (std::size_t c = 0; c < base.relations().cols(); ++c) {
        std::vector<Scalar> col(n, Scalar::zero(field));
        for (std::size_t r = 0; r < n; ++r) col[r] = phi0[r][c];
        span.push_back(std::move(col));
    }
    std::size_t base_rank = span_rank(span, n, field);

    std::mt19937_64 rng(seed_value);
    std::vector<std::vector<Scalar>> coeffs;
    coeffs.reserve(gcount);
    PolyMatrix xcols(ring, ambient, gcount);
    for (std::size_t j = 0; j < gcount; ++j) {
        std::vector<Scalar> crow(n, Scalar::zero(field));
        FreeModuleElement acc = FreeModuleElement::zero(ring, ambient);
        for (std::size_t i : u) {
            Scalar c = draw_coefficient(rng, field);
            crow[i] = c;
            acc = acc + em.generator(i).scaled(c);
        }
        for (std::size_t r = 0; r < ambient; ++r) xcols.set(r, j, acc.comp(r));
        span.push_back(crow);
        coeffs.push_back(std::move(crow));
    }
    if (span_rank(span, n, field) != base_rank + gcount) throw DegenerateDraw{};

    // Greedy extension to a minimal generating set by original generators.
    std::vector<std::size_t> kept;
    std::size_t have = gcount;
    std::size_t current = base_rank + gcount;
    for (std::size_t i = 0; i < n && have < mu; ++i) {
        std::vector<Scalar> unit(n, Scalar::zero(field));
        unit[i] = Scalar::one(field);
        span.push_back(std::move(unit));
        std::size_t grown = span_rank(span, n, field);
        if (grown > current) {
            current = grown;
            kept.push_back(i);
            ++have;
        } else {
            span.pop_back();
        }
    }
    if (have != mu) throw DegenerateDraw{};

    PolyMatrix reordered_m(ring, ambient, mu);
    for (std::size_t j = 0; j < gcount; ++j)
        for (std::size_t r = 0; r < ambient; ++r) reordered_m.set(r, j, xcols.at(r, j));
    for (std::size_t j = 0; j < kept.size(); ++j)
        for (std::size_t r = 0; r < ambient; ++r)
            reordered_m.set(r, gcount + j, em.generators().at(r, kept[j]));

    // The reordered set must still generate the module.
    Submodule span_mod = Submodule::from_columns(reordered_m);
    for (std::size_t i = 0; i < n; ++i)
        if (!submodule_membership(em.generator(i), span_mod)) throw DegenerateDraw{};

    EmbeddedModule reordered(reordered_m);
    if (reordered.rank() != e) throw DegenerateDraw{};
    PresentedModule pres = presentation_of_embedded(reordered);
    if (mu_local(pres) != mu) throw DegenerateDraw{};

    std::vector<std::size_t> kill(gcount);
    std::iota(kill.begin(), kill.end(), 0);
    PresentedModule pruned = quotient_by_generators(pres, kill);
    bool mu_cert = (mu_local(pruned) + gcount == mu);
    bool rank_cert = (pruned.rank() == 1);
    if (!mu_cert || !rank_cert) throw DegenerateDraw{};

    PolyMatrix psi = [&]() -> PolyMatrix {
        try {
            return find_psi(pres, gcount);
        } catch (const MathError&) {
            throw DegenerateDraw{};
        }
    }();

    Ideal ideal = (e == 1) ? det0(em) : Ideal(ring, psi.minors(psi.cols()));
    bool grade_cert = is_unit_ideal(ideal) ||
                      (!is_zero_ideal(ideal) && height_and_grade(ideal).second >= 2);
    CheckOutcome hb = hilbert_burch_outcome(psi, ideal);

    return BourbakiResult{seed_value,
                          std::move(coeffs),
                          std::move(xcols),
                          std::move(reordered),
                          std::move(kept),
                          std::move(pres),
                          std::move(psi),
                          std::move(ideal),
                          BourbakiCertificates{mu_cert, rank_cert, grade_cert, hb}};
}

}  // namespace

BourbakiResult generic_bourbaki(const EmbeddedModule& e, std::uint64_t seed) {
    std::vector<std::size_t> all(e.generator_count());
    std::iota(all.begin(), all.end(), 0);
    return generic_bourbaki(e, all, seed);
}

BourbakiResult generic_bourbaki(const EmbeddedModule& e,
                                const std::vector<std::size_t>& u_columns,
                                std::uint64_t seed) {
    if (e.rank() == 0) throw MathError("module must have positive rank");
    if (is_free_local(e))
        throw MathError("free module has no proper Bourbaki construction");
    Ideal d0 = det0(e);
    if (!is_unit_ideal(d0) && height_and_grade(d0).second < 2)
        throw MathError("order determinant grade is below two");

    std::vector<std::size_t> u = u_columns;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    if (u.empty()) throw MathError("column selection is empty");
    if (u.back() >= e.generator_count()) throw MathError("column index out of range");
    if (u.size() < e.generator_count()) {
        ReductionOutcome check = reduction_number(e, u, 5);
        if (!check.known)
            throw MathError("selected columns are not a verified reduction");
    }

    for (std::uint64_t a = 0; a < 8; ++a) {
        try {
            return attempt(e, u, seed + a);
        } catch (const DegenerateDraw&) {
        }
    }
    throw MathError("no valid generic specialization within the retry budget");
}

CheckOutcome hilbert_burch_check(const BourbakiResult& r) {
    return hilbert_burch_outcome(r.psi, r.ideal);
}

BourbakiReport verify_bourbaki(const BourbakiResult& r, const EmbeddedModule& e) {
    BourbakiReport rep;
    std::size_t rank = e.rank();
    if (rank == 0) return rep;
    std::size_t gcount = rank - 1;
    std::size_t mu = mu_local(presentation_of_embedded(e));

    std::vector<std::size_t> kill(gcount);
    std::iota(kill.begin(), kill.end(), 0);
    PresentedModule pruned = quotient_by_generators(r.presentation, kill);
    rep.mu_ok = (mu_local(pruned) + gcount == mu);
    rep.rank_ok = (pruned.rank() == 1);
    rep.spread_ok =
        (analytic_spread(e) == analytic_spread_of_ideal(r.ideal) + gcount);
    rep.pd_applicable = (r.presentation.relations().cols() + rank ==
                         r.presentation.generator_count());
    rep.pd_ok = rep.pd_applicable && hilbert_burch_check(r) == CheckOutcome::passed;
    return rep;
}

}  // namespace divmod
