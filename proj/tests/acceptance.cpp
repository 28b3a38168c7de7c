// Release gate: one line per criterion, nonzero exit when any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "divmod/bourbaki.hpp"
#include "divmod/corpus.hpp"
#include "divmod/divisors.hpp"
#include "divmod/errors.hpp"
#include "divmod/parser.hpp"
#include "divmod/rees.hpp"

using namespace divmod;

namespace {

const std::vector<CorpusEntry>& corpus() {
    static std::vector<CorpusEntry> entries = load_corpus(DIVMOD_CORPUS_DIR);
    return entries;
}

const CorpusEntry& entry(const std::string& name) {
    for (const auto& e : corpus())
        if (e.name == name) return e;
    throw InternalError("missing corpus entry " + name);
}

Ideal make_ideal(const RingPtr& ring, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(parse_polynomial(s, ring));
    return Ideal(ring, std::move(ps));
}

bool gb_equal(const Ideal& a, const Ideal& b, std::string& why) {
    if (a.groebner() != b.groebner()) {
        why = render_ideal(a) + " vs " + render_ideal(b);
        return false;
    }
    return true;
}

std::size_t mu_of_ideal(const Ideal& i) {
    const auto& gb = i.groebner();
    PolyMatrix row(i.ring(), 1, gb.size());
    for (std::size_t k = 0; k < gb.size(); ++k) row.set(0, k, gb[k]);
    return mu_local(presentation_of_embedded(EmbeddedModule(row)));
}

// Buchberger self-consistency: every S-pair of the reduced basis and every
// original generator reduces to zero against the basis.
bool audit_groebner(const Ideal& i, std::string& why) {
    const auto& gb = i.groebner();
    for (const auto& g : i.generators())
        if (!normal_form(g, i).is_zero()) {
            why = "generator " + g.str() + " escapes its own basis";
            return false;
        }
    Scalar one = Scalar::one(i.ring()->field());
    for (std::size_t a = 0; a < gb.size(); ++a)
        for (std::size_t b = a + 1; b < gb.size(); ++b) {
            Monomial l = gb[a].leading_monomial().lcm(gb[b].leading_monomial());
            Polynomial s =
                gb[a].times_term(gb[a].leading_monomial().quotient_of(l), one) -
                gb[b].times_term(gb[b].leading_monomial().quotient_of(l), one);
            if (!normal_form(s, i).is_zero()) {
                why = "S-pair (" + gb[a].str() + ", " + gb[b].str() +
                      ") does not reduce to zero";
                return false;
            }
        }
    return true;
}

// Largest variable subset meeting no leading-monomial support, by exhaustive
// enumeration.
std::size_t brute_force_dimension(const Ideal& i) {
    const auto& gb = i.groebner();
    std::size_t n = i.ring()->nvars();
    std::vector<std::vector<bool>> supports;
    for (const auto& g : gb) {
        std::vector<bool> s(n, false);
        for (std::size_t v = 0; v < n; ++v)
            if (g.leading_monomial().exp(v) > 0) s[v] = true;
        supports.push_back(std::move(s));
    }
    std::size_t best = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        bool independent = true;
        for (const auto& s : supports) {
            bool inside = true;
            for (std::size_t v = 0; v < n && inside; ++v)
                if (s[v] && !(mask >> v & 1)) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) {
            std::size_t size = 0;
            for (std::size_t v = 0; v < n; ++v) size += mask >> v & 1;
            best = std::max(best, size);
        }
    }
    return best;
}

// Divisor ideals whose bases feed the soundness audits.
std::vector<Ideal> audited_ideals() {
    std::vector<Ideal> out;
    for (const auto& e : corpus()) {
        PresentedModule pres = presentation_of_embedded(e.module);
        out.push_back(det0(e.module));
        out.push_back(fitting_ideal(pres, e.module.rank()));
        out.push_back(norm_representative(pres, e.seed).ideal);
        out.push_back(nonfree_locus_ideal(e.module));
        out.push_back(fiber_cone(e.module).defining);
        out.push_back(rees_presentation(e.module).defining);
    }
    return out;
}

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    std::string cmd = std::string(DIVMOD_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    CliRun r;
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int failures = 0;

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string why;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(why);
    } catch (const std::exception& ex) {
        why = std::string("exception: ") + ex.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
    if (ok && secs > budget_seconds) {
        ok = false;
        why = "over time budget";
    }
    std::ostringstream line;
    line << (number < 10 ? " " : "") << number << " " << (ok ? "PASS" : "FAIL")
         << "  " << title;
    char timing[32];
    std::snprintf(timing, sizeof timing, " (%.2fs)", secs);
    line << timing;
    if (!ok) {
        line << " -- " << (why.empty() ? "criterion not satisfied" : why);
        ++failures;
    }
    std::cout << line.str() << "\n";
}

}  // namespace

int main() {
    const std::vector<std::string> pd1_entries = {"ci-pair", "m-plus-free",
                                                  "m-squared"};
    const std::vector<std::string> nonfree_entries = {"ci-pair", "m-plus-free",
                                                      "m-squared", "m3-plus-free"};

    criterion(1, "order determinant equals F_0 of the ambient quotient", 5.0,
              [&](std::string& why) {
                  for (const auto& e : corpus()) {
                      Ideal d = det0(e.module);
                      PresentedModule quo(e.ring, e.module.ambient_rank(),
                                          e.module.generators());
                      Ideal f0 = fitting_ideal(quo, 0);
                      if (!gb_equal(d, f0, why)) {
                          why = e.name + ": " + why;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(2, "norm representative sits inside the top Fitting ideal", 30.0,
              [&](std::string& why) {
                  for (const auto& e : corpus()) {
                      PresentedModule pres = presentation_of_embedded(e.module);
                      NormCertificate nc = norm_representative(pres, e.seed);
                      Ideal fe = fitting_ideal(pres, e.module.rank());
                      if (!ideal_contains(fe, nc.ideal)) {
                          why = e.name + ": containment fails";
                          return false;
                      }
                  }
                  for (const auto& name : {"m-plus-free", "m-squared"}) {
                      const CorpusEntry& e = entry(name);
                      PresentedModule pres = presentation_of_embedded(e.module);
                      NormCertificate nc = norm_representative(pres, e.seed);
                      Ideal fe = fitting_ideal(pres, e.module.rank());
                      if (!gb_equal(nc.ideal, fe, why)) {
                          why = std::string(name) + ": " + why;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(3, "generic Bourbaki ideal of m-plus-free across seeds", 10.0,
              [&](std::string& why) {
                  const CorpusEntry& e = entry("m-plus-free");
                  std::size_t mu_e =
                      mu_local(presentation_of_embedded(e.module));
                  for (std::uint64_t seed : {std::uint64_t{0}, std::uint64_t{17}}) {
                      BourbakiResult b = generic_bourbaki(e.module, seed);
                      if (render_ideal(b.ideal) != "(x, y)") {
                          why = "seed " + std::to_string(seed) + " gives " +
                                render_ideal(b.ideal);
                          return false;
                      }
                      std::size_t mu_i = mu_of_ideal(b.ideal);
                      if (mu_i != 2 || mu_e - e.module.rank() + 1 != 2) {
                          why = "mu(I) = " + std::to_string(mu_i);
                          return false;
                      }
                      auto [ht, gr] = height_and_grade(b.ideal);
                      if (ht != 2 || gr != 2) {
                          why = "height " + std::to_string(ht) + ", grade " +
                                std::to_string(gr);
                          return false;
                      }
                      if (b.certificates.hilbert_burch != CheckOutcome::passed) {
                          why = "cofactor resolution certificate did not pass";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(4, "analytic spreads, fiber cone, and spread additivity", 10.0,
              [&](std::string& why) {
                  const CorpusEntry& mpf = entry("m-plus-free");
                  if (analytic_spread(mpf.module) != 3) {
                      why = "spread of m-plus-free";
                      return false;
                  }
                  RingPtr r2 = mpf.ring;
                  if (analytic_spread_of_ideal(make_ideal(r2, {"x", "y"})) != 2) {
                      why = "spread of (x, y)";
                      return false;
                  }
                  Ideal msq = make_ideal(r2, {"x^2", "x*y", "y^2"});
                  if (analytic_spread_of_ideal(msq) != 2) {
                      why = "spread of (x^2, x*y, y^2)";
                      return false;
                  }
                  FiberCone fc = fiber_cone(entry("m-squared").module);
                  Ideal conic = make_ideal(fc.fiber_ring, {"y1*y3 - y2^2"});
                  if (fc.dim != 2 || !ideal_equal(fc.defining, conic)) {
                      why = "fiber cone of m-squared is " +
                            render_ideal(fc.defining);
                      return false;
                  }
                  for (const auto& name : nonfree_entries) {
                      const CorpusEntry& e = entry(name);
                      BourbakiResult b = generic_bourbaki(e.module, e.seed);
                      std::size_t le = analytic_spread(e.module);
                      std::size_t li = analytic_spread_of_ideal(b.ideal);
                      if (le != li + e.module.rank() - 1) {
                          why = name + ": " + std::to_string(le) +
                                " != " + std::to_string(li) + " + rank - 1";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(5, "analytic spread dominates the divisor heights", 30.0,
              [&](std::string& why) {
                  for (const auto& name : nonfree_entries) {
                      ZakReport z = zak_report(entry(name).module);
                      if (!z.det0_bound_ok || !z.norm_bound_ok) {
                          why = name + ": basic bound fails";
                          return false;
                      }
                      bool pd1_expected =
                          std::find(pd1_entries.begin(), pd1_entries.end(), name) !=
                          pd1_entries.end();
                      if (z.pd1 != pd1_expected) {
                          why = name + ": unexpected pd-1 flag";
                          return false;
                      }
                      if (pd1_expected && !z.fitting_bound_ok) {
                          why = name + ": strengthened bound fails";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(6, "reduction numbers at module and Fitting-ideal level", 30.0,
              [&](std::string& why) {
                  const CorpusEntry& e = entry("m-squared");
                  ReductionOutcome proper =
                      reduction_number(e.module, {0, 2}, 5);
                  if (!proper.known || proper.r != 1) {
                      why = "r of (x^2, y^2) inside m^2";
                      return false;
                  }
                  for (const auto& any : corpus()) {
                      std::vector<std::size_t> all(any.module.generator_count());
                      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
                      ReductionOutcome trivial =
                          reduction_number(any.module, all, 5);
                      if (!trivial.known || trivial.r != 0) {
                          why = any.name + ": full generating set is not an r = 0 "
                                "reduction";
                          return false;
                      }
                  }
                  PresentedModule pres = presentation_of_embedded(e.module);
                  EmbeddedModule u(e.module.generators().select_columns({0, 2}));
                  std::vector<Polynomial> fu =
                      fitting_ideal(presentation_of_embedded(u), u.rank())
                          .groebner();
                  std::vector<Polynomial> fe =
                      fitting_ideal(pres, e.module.rank()).groebner();
                  PolyMatrix combined(e.ring, 1, fu.size() + fe.size());
                  for (std::size_t i = 0; i < fu.size(); ++i)
                      combined.set(0, i, fu[i]);
                  for (std::size_t i = 0; i < fe.size(); ++i)
                      combined.set(0, fu.size() + i, fe[i]);
                  std::vector<std::size_t> ucols(fu.size());
                  for (std::size_t i = 0; i < ucols.size(); ++i) ucols[i] = i;
                  ReductionOutcome fitting_level =
                      reduction_number(EmbeddedModule(combined), ucols, 5);
                  if (!fitting_level.known || fitting_level.r != 1) {
                      why = "Fitting-ideal reduction number disagrees";
                      return false;
                  }
                  return true;
              });

    criterion(7, "local freeness and the non-free locus", 10.0,
              [&](std::string& why) {
                  if (!is_free_local(entry("free2").module) ||
                      !is_free_local(entry("x-split").module)) {
                      why = "free entries are not recognized";
                      return false;
                  }
                  const CorpusEntry& e = entry("m-plus-free");
                  Ideal locus = nonfree_locus_ideal(e.module);
                  Ideal expected = make_ideal(e.ring, {"x", "y"});
                  if (!gb_equal(locus, expected, why)) return false;
                  return true;
              });

    criterion(8, "wedge and minors paths agree on 200 random matrices", 60.0,
              [&](std::string& why) {
                  RingPtr ring =
                      Ring::make(Field{}, {"x", "y", "z"}, OrderSpec{});
                  std::mt19937_64 rng(20260823);
                  auto random_poly = [&]() {
                      Polynomial p = Polynomial::zero(ring);
                      if (rng() % 4 == 0) return p;  // sparse
                      std::size_t terms = 1 + rng() % 3;
                      for (std::size_t t = 0; t < terms; ++t) {
                          std::vector<std::uint32_t> exps(3, 0);
                          std::size_t degree = rng() % 3;
                          for (std::size_t d = 0; d < degree; ++d)
                              exps[rng() % 3] += 1;
                          long coeff = 1 + static_cast<long>(rng() % 5);
                          if (rng() % 2) coeff = -coeff;
                          p = p + Polynomial::term(
                                      Monomial(exps),
                                      Scalar::integer(coeff, ring->field()), ring);
                      }
                      return p;
                  };
                  for (int sample = 0; sample < 200; ++sample) {
                      std::size_t rows = 1 + rng() % 4;
                      std::size_t cols = 1 + rng() % rows;
                      PolyMatrix psi(ring, rows, cols);
                      for (std::size_t r = 0; r < rows; ++r)
                          for (std::size_t c = 0; c < cols; ++c)
                              psi.set(r, c, random_poly());
                      Ideal via_theta = theta_image(psi);
                      Ideal via_minors(ring, psi.minors(cols));
                      if (!ideal_equal(via_theta, via_minors)) {
                          why = "mismatch at sample " + std::to_string(sample);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(9, "order determinant commutes with adjoining a fresh variable",
              30.0, [&](std::string& why) {
                  for (const auto& e : corpus()) {
                      std::vector<std::string> vars = e.ring->vars();
                      vars.push_back("w");
                      RingPtr ext =
                          Ring::make(e.ring->field(), vars, e.ring->order());
                      std::vector<std::size_t> vmap(e.ring->nvars());
                      for (std::size_t i = 0; i < vmap.size(); ++i) vmap[i] = i;
                      Ideal lhs = det0(EmbeddedModule(
                          e.module.generators().map_to(ext, vmap)));
                      Ideal rhs = det0(e.module).map_to(ext, vmap);
                      if (!gb_equal(lhs, rhs, why)) {
                          why = e.name + ": " + why;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(10, "engine soundness: S-pair audit, dimension, presentations",
              60.0, [&](std::string& why) {
                  std::vector<Ideal> ideals = audited_ideals();
                  for (const auto& i : ideals)
                      if (!audit_groebner(i, why)) return false;
                  for (const auto& i : ideals) {
                      if (is_unit_ideal(i)) continue;
                      if (dimension(i) != brute_force_dimension(i)) {
                          why = "dimension mismatch on " + render_ideal(i);
                          return false;
                      }
                  }
                  for (const auto& e : corpus()) {
                      const PolyMatrix& a = e.module.generators();
                      PolyMatrix wider(e.ring, a.rows(), a.cols() + 1);
                      for (std::size_t r = 0; r < a.rows(); ++r) {
                          for (std::size_t c = 0; c < a.cols(); ++c)
                              wider.set(r, c, a.at(r, c));
                          wider.set(r, a.cols(),
                                    a.at(r, 0) + Polynomial::variable(0, e.ring) *
                                                     a.at(r, 1));
                      }
                      PresentedModule lean = presentation_of_embedded(e.module);
                      PresentedModule fat =
                          presentation_of_embedded(EmbeddedModule(wider));
                      for (std::size_t i = 0; i <= e.module.generator_count();
                           ++i) {
                          if (!ideal_equal(fitting_ideal(lean, i),
                                           fitting_ideal(fat, i))) {
                              why = e.name + ": F_" + std::to_string(i) +
                                    " depends on the presentation";
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(11, "verify-corpus is byte-deterministic and fast", 60.0,
              [&](std::string& why) {
                  std::string args =
                      "verify-corpus --corpus " + std::string(DIVMOD_CORPUS_DIR);
                  CliRun a = run_cli(args);
                  CliRun b = run_cli(args);
                  if (a.code != 0 || b.code != 0) {
                      why = "nonzero exit";
                      return false;
                  }
                  if (a.out != b.out) {
                      why = "outputs differ between runs";
                      return false;
                  }
                  if (a.out.find("total: 81 passed, 0 failed\n") ==
                      std::string::npos) {
                      why = "summary does not report 81 passing checks";
                      return false;
                  }
                  return true;
              });

    if (failures) {
        std::cout << failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
