#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divmod/divisors.hpp"
#include "divmod/parser.hpp"
#include "divmod/rees.hpp"

using namespace divmod;

namespace {

RingPtr qxy() { return Ring::make(Field{0}, {"x", "y"}, {}); }

Polynomial pp(const std::string& s, RingPtr r) { return parse_polynomial(s, r); }

PolyMatrix mat(RingPtr r, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Polynomial>> ps;
    for (const auto& row : rows) {
        ps.emplace_back();
        for (const auto& s : row) ps.back().push_back(pp(s, r));
    }
    return PolyMatrix::from_rows(r, ps);
}

Ideal idl(RingPtr r, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(pp(s, r));
    return Ideal(r, std::move(ps));
}

EmbeddedModule m_plus_free(RingPtr r) {
    return EmbeddedModule(mat(r, {{"x", "y", "0"}, {"0", "0", "1"}}), "m-plus-free");
}

EmbeddedModule m_squared(RingPtr r) {
    return EmbeddedModule(mat(r, {{"x^2", "x*y", "y^2"}}), "m-squared");
}

}  // namespace

TEST_CASE("rees presentation of the two-generator-block module") {
    auto r = qxy();
    ReesPresentation rp = rees_presentation(m_plus_free(r));
    CHECK(rp.targets == 2);
    CHECK(rp.markers == 3);
    CHECK(rp.equigenerated);
    CHECK(rp.marker_ring->vars() ==
          std::vector<std::string>{"x", "y", "y1", "y2", "y3"});
    const auto& gb = rp.defining.groebner();
    REQUIRE(gb.size() == 1);
    CHECK(gb[0].str() == "y*y1 - x*y2");
}

TEST_CASE("rees presentation of the squared maximal ideal") {
    auto r = qxy();
    ReesPresentation rp = rees_presentation(m_squared(r));
    CHECK(rp.targets == 1);
    CHECK(rp.markers == 3);
    CHECK(rp.equigenerated);
    auto m = rp.marker_ring;
    CHECK(ideal_contains(rp.defining, pp("y*y1 - x*y2", m)));
    CHECK(ideal_contains(rp.defining, pp("y*y2 - x*y3", m)));
    CHECK(ideal_contains(rp.defining, pp("y1*y3 - y2^2", m)));
    // the blow-up algebra has dimension d + 1
    CHECK(dimension(rp.defining) == 3);
}

TEST_CASE("rees presentation of a free module is a polynomial extension") {
    auto r = qxy();
    ReesPresentation rp = rees_presentation(EmbeddedModule(PolyMatrix::identity(r, 2)));
    CHECK(is_zero_ideal(rp.defining));
    CHECK(rp.equigenerated);
}

TEST_CASE("non-equigenerated generators are flagged") {
    auto r = qxy();
    ReesPresentation rp =
        rees_presentation(EmbeddedModule(mat(r, {{"x", "y^2"}, {"y", "0"}})));
    CHECK_FALSE(rp.equigenerated);
}

TEST_CASE("fiber cones and analytic spread") {
    auto r = qxy();

    FiberCone a = fiber_cone(m_plus_free(r));
    CHECK(a.fiber_ring->vars() == std::vector<std::string>{"y1", "y2", "y3"});
    CHECK(is_zero_ideal(a.defining));
    CHECK(a.dim == 3);
    CHECK(analytic_spread(m_plus_free(r)) == 3);

    FiberCone b = fiber_cone(m_squared(r));
    const auto& gb = b.defining.groebner();
    REQUIRE(gb.size() == 1);
    CHECK(gb[0].str() == "y2^2 - y1*y3");
    CHECK(b.dim == 2);

    CHECK(analytic_spread(EmbeddedModule(PolyMatrix::identity(r, 2))) == 2);

    CHECK(analytic_spread_of_ideal(idl(r, {"x", "y"})) == 2);
    CHECK(analytic_spread_of_ideal(idl(r, {"x^2", "x*y", "y^2"})) == 2);
    CHECK(analytic_spread_of_ideal(idl(r, {"x"})) == 1);
    CHECK_THROWS_AS(analytic_spread_of_ideal(Ideal::zero(r)), MathError);
}

TEST_CASE("module spread equals ideal spread shifted by the rank") {
    auto r = qxy();
    EmbeddedModule e = m_plus_free(r);
    CHECK(analytic_spread(e) ==
          analytic_spread_of_ideal(det0(e)) + e.rank() - 1);
    EmbeddedModule q = m_squared(r);
    CHECK(analytic_spread(q) ==
          analytic_spread_of_ideal(det0(q)) + q.rank() - 1);
}

TEST_CASE("spread of the top exterior image matches the order determinant") {
    auto r = qxy();
    for (const auto& e : {m_plus_free(r), m_squared(r)}) {
        // image of the top wedge inside the top wedge of the ambient module:
        // generated by the maximal minors of the generator columns
        std::vector<Polynomial> image;
        for (const auto& g : e.generators().minors(e.ambient_rank()))
            if (!g.is_zero()) image.push_back(g);
        PolyMatrix row(r, 1, image.size());
        for (std::size_t c = 0; c < image.size(); ++c) row.set(0, c, image[c]);
        CHECK(analytic_spread(EmbeddedModule(std::move(row))) ==
              analytic_spread_of_ideal(det0(e)));
    }
}

TEST_CASE("reduction numbers") {
    auto r = qxy();
    EmbeddedModule e = m_squared(r);

    ReductionOutcome a = reduction_number(e, {0, 2}, 5);
    CHECK(a.known);
    CHECK(a.r == 1);

    ReductionOutcome b = reduction_number(e, {0, 1, 2}, 5);
    CHECK(b.known);
    CHECK(b.r == 0);

    // rank condition holds but the column is never a reduction
    ReductionOutcome c = reduction_number(e, {0}, 3);
    CHECK_FALSE(c.known);
    ReductionOutcome d = reduction_number(e, {1}, 2);
    CHECK_FALSE(d.known);

    EmbeddedModule mp = m_plus_free(r);
    ReductionOutcome f = reduction_number(mp, {0, 1, 2}, 4);
    CHECK(f.known);
    CHECK(f.r == 0);
    // full-rank column pair that still fails to be a reduction
    ReductionOutcome g = reduction_number(mp, {0, 2}, 2);
    CHECK_FALSE(g.known);

    // dropping the rank is rejected outright
    CHECK_THROWS_AS(reduction_number(mp, {0, 1}, 3), MathError);
    CHECK_THROWS_AS(reduction_number(mp, {9}, 3), MathError);
}

TEST_CASE("reduction testing ignores redundant generators inside m times the module") {
    auto r = qxy();
    // same module with x^3 = x * x^2 appended; both tests agree with the
    // original reduction number 1
    EmbeddedModule bigger(mat(r, {{"x^2", "x*y", "y^2", "x^3"}}));
    ReductionOutcome with_extra = reduction_number(bigger, {0, 2, 3}, 5);
    CHECK(with_extra.known);
    CHECK(with_extra.r == 1);
    ReductionOutcome same_u = reduction_number(bigger, {0, 2}, 5);
    CHECK(same_u.known);
    CHECK(same_u.r == 1);
}

TEST_CASE("reduction generators dominate the spread") {
    auto r = qxy();
    EmbeddedModule e = m_squared(r);
    // mu of the reduction (x^2, y^2) is 2, equal to the spread (minimal case)
    EmbeddedModule u(e.generators().select_columns({0, 2}));
    PresentedModule pu = presentation_of_embedded(u);
    CHECK(mu_local(pu) == 2);
    CHECK(mu_local(pu) >= analytic_spread(e));
    CHECK(mu_local(pu) == analytic_spread(e));
}

TEST_CASE("classification of the corpus modules") {
    auto r = qxy();

    Classification a = classify_module(m_plus_free(r));
    CHECK(a.mu == 3);
    CHECK(a.spread == 3);
    CHECK(a.height == 2);
    CHECK(a.grade == 2);
    CHECK(a.deviation == 0);
    CHECK(a.equimultiple);
    CHECK(a.principal_class);
    CHECK(a.complete_intersection);

    Classification b = classify_module(m_squared(r));
    CHECK(b.mu == 3);
    CHECK(b.spread == 2);
    CHECK(b.height == 2);
    CHECK(b.grade == 2);
    CHECK(b.deviation == 0);
    CHECK(b.equimultiple);
    CHECK_FALSE(b.principal_class);
    CHECK_FALSE(b.complete_intersection);

    Classification c = classify_module(EmbeddedModule(mat(r, {{"x", "y"}})));
    CHECK(c.mu == 2);
    CHECK(c.spread == 2);
    CHECK(c.height == 2);
    CHECK(c.deviation == 0);
    CHECK(c.principal_class);
    CHECK(c.complete_intersection);

    CHECK_THROWS_AS(classify_module(EmbeddedModule(mat(r, {{"x", "0"}, {"0", "1"}}))),
                    MathError);
    CHECK_THROWS_AS(classify_module(EmbeddedModule(PolyMatrix::identity(r, 2))),
                    MathError);
}

TEST_CASE("three-variable module over a prime field") {
    auto r = Ring::make(Field{32003}, {"x", "y", "z"}, {});
    EmbeddedModule e(mat(r, {{"x", "y", "z", "0"}, {"0", "0", "0", "1"}}), "m3-plus-free");

    CHECK(analytic_spread(e) == 4);
    CHECK(analytic_spread_of_ideal(det0(e)) == 3);

    Classification c = classify_module(e);
    CHECK(c.mu == 4);
    CHECK(c.spread == 4);
    CHECK(c.height == 3);
    CHECK(c.grade == 3);
    CHECK(c.deviation == 0);
    CHECK(c.equimultiple);
    CHECK(c.principal_class);
    CHECK(c.complete_intersection);

    ReductionOutcome full = reduction_number(e, {0, 1, 2, 3}, 3);
    CHECK(full.known);
    CHECK(full.r == 0);
}

TEST_CASE("marker names avoid capture by ring variables") {
    auto r = Ring::make(Field{0}, {"t1", "y1"}, {});
    EmbeddedModule e(mat(r, {{"t1", "y1"}}));
    ReesPresentation rp = rees_presentation(e);
    // markers must not collide with the ring's own t1/y1
    for (const auto& v : rp.marker_ring->vars())
        CHECK((v == "t1" || v == "y1" || v.substr(0, 2) == "y_"));
    FiberCone fc = fiber_cone(e);
    CHECK(fc.dim == 2);
}
