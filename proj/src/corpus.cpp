#include "divmod/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "divmod/bourbaki.hpp"
#include "divmod/errors.hpp"
#include "divmod/parser.hpp"
#include "json_detail.hpp"

namespace divmod {

namespace {

using nlohmann::json;

// Signals a fixture that lacks the ground truth a check needs.
struct MissingExpected {
    std::string key;
};

const ExpectedIdeal& want_ideal(const CorpusEntry& e, const std::string& key) {
    auto it = e.ideals.find(key);
    if (it == e.ideals.end()) throw MissingExpected{key};
    return it->second;
}

std::size_t want_count(const CorpusEntry& e, const std::string& key) {
    auto it = e.counts.find(key);
    if (it == e.counts.end()) throw MissingExpected{key};
    return it->second.value;
}

bool want_flag(const CorpusEntry& e, const std::string& key) {
    auto it = e.flags.find(key);
    if (it == e.flags.end()) throw MissingExpected{key};
    return it->second.value;
}

Ideal parse_ideal(const CorpusEntry& e, const std::string& key) {
    std::vector<Polynomial> ps;
    for (const auto& s : want_ideal(e, key).generators)
        ps.push_back(parse_polynomial(s, e.ring));
    return Ideal(e.ring, std::move(ps));
}

using CheckResult = std::pair<bool, std::string>;

// ---- individual proposition checks ----------------------------------------

CheckResult check_base_invariants(const CorpusEntry& e) {
    PresentedModule pres = presentation_of_embedded(e.module);
    std::size_t mu = mu_local(pres);
    std::size_t spread = analytic_spread(e.module);
    FiberCone fc = fiber_cone(e.module);
    std::ostringstream os;
    os << "mu " << mu << ", spread " << spread << ", fiber dim " << fc.dim;
    bool ok = (mu == want_count(e, "mu")) && (spread == want_count(e, "spread")) &&
              (fc.dim == want_count(e, "fiber_dim")) && (fc.dim == spread);
    if (e.ideals.count("fiber_ideal")) {
        std::vector<Polynomial> ps;
        for (const auto& s : e.ideals.at("fiber_ideal").generators)
            ps.push_back(parse_polynomial(s, fc.fiber_ring));
        Ideal expect(fc.fiber_ring, std::move(ps));
        os << ", fiber ideal " << render_ideal(fc.defining);
        ok = ok && render_ideal(fc.defining) == render_ideal(expect);
    }
    if (!ok)
        os << "; expected mu " << want_count(e, "mu") << ", spread "
           << want_count(e, "spread") << ", fiber dim " << want_count(e, "fiber_dim");
    return {ok, os.str()};
}

CheckResult check_det0_fitting_identity(const CorpusEntry& e) {
    Ideal d = det0(e.module);
    // cokernel of the inclusion: ambient basis presented by the generator
    // columns
    PresentedModule quo(e.ring, e.module.ambient_rank(), e.module.generators());
    Ideal f0 = fitting_ideal(quo, 0);
    Ideal expect = parse_ideal(e, "det0");
    bool ok = render_ideal(d) == render_ideal(f0) &&
              render_ideal(d) == render_ideal(expect) && ideal_equal(d, f0);
    std::string detail = "det0 " + render_ideal(d) + ", cokernel F_0 " +
                         render_ideal(f0) + ", expected " + render_ideal(expect);
    return {ok, detail};
}

CheckResult check_det0_top_fitting_pd1(const CorpusEntry& e) {
    Ideal d = det0(e.module);
    PresentedModule pres = presentation_of_embedded(e.module);
    Ideal fe = fitting_ideal(pres, e.module.rank());
    Ideal expect = parse_ideal(e, "top_fitting");
    bool ok = render_ideal(d) == render_ideal(fe) &&
              render_ideal(fe) == render_ideal(expect);
    return {ok, "det0 " + render_ideal(d) + ", top Fitting " + render_ideal(fe)};
}

CheckResult check_norm_in_fitting(const CorpusEntry& e) {
    PresentedModule pres = presentation_of_embedded(e.module);
    NormCertificate nc = norm_representative(pres, e.seed);
    Ideal fe = fitting_ideal(pres, e.module.rank());
    bool ok = ideal_contains(fe, nc.ideal);
    if (e.ideals.count("norm_ideal"))
        ok = ok && render_ideal(nc.ideal) == render_ideal(parse_ideal(e, "norm_ideal"));
    return {ok, "norm " + render_ideal(nc.ideal) + " inside top Fitting " +
                    render_ideal(fe)};
}

CheckResult check_norm_fitting_equality(const CorpusEntry& e) {
    PresentedModule pres = presentation_of_embedded(e.module);
    NormCertificate nc = norm_representative(pres, e.seed);
    Ideal fe = fitting_ideal(pres, e.module.rank());
    Ideal expect = parse_ideal(e, "norm_ideal");
    bool ok = render_ideal(nc.ideal) == render_ideal(fe) &&
              render_ideal(nc.ideal) == render_ideal(expect);
    return {ok, "norm " + render_ideal(nc.ideal) + " equals top Fitting " +
                    render_ideal(fe)};
}

CheckResult check_zak(const CorpusEntry& e, int which) {
    ZakReport z = zak_report(e.module);
    std::ostringstream os;
    bool ok = false;
    switch (which) {
        case 0:
            ok = z.det0_bound_ok && z.spread_det0 >= z.ht_det0;
            os << "spread " << z.spread_det0 << " >= det0 height " << z.ht_det0;
            break;
        case 1:
            ok = z.norm_bound_ok && z.spread_det0 >= z.ht_norm;
            os << "spread " << z.spread_det0 << " >= norm height " << z.ht_norm;
            break;
        default:
            ok = z.pd1 && z.fitting_bound_ok && z.spread_det0 >= z.ht_fitting;
            os << "spread " << z.spread_det0 << " >= top Fitting height "
               << z.ht_fitting << (z.pd1 ? "" : " (relation matrix not square-free)");
            break;
    }
    return {ok, os.str()};
}

CheckResult check_local_freeness(const CorpusEntry& e) {
    bool computed = is_free_local(e.module);
    bool expect = want_flag(e, "free_local");
    std::string detail = std::string("locally free at the origin: ") +
                         (computed ? "yes" : "no");
    return {computed == expect, detail};
}

CheckResult check_nonfree_locus(const CorpusEntry& e) {
    Ideal locus = nonfree_locus_ideal(e.module);
    Ideal expect = parse_ideal(e, "nonfree_locus");
    bool ok = render_ideal(locus) == render_ideal(expect);
    return {ok, "non-free locus " + render_ideal(locus) + ", expected " +
                    render_ideal(expect)};
}

CheckResult check_theta_minors(const CorpusEntry& e) {
    PresentedModule pres = presentation_of_embedded(e.module);
    PolyMatrix psi = find_psi(pres, e.module.rank() - 1);
    Ideal via_theta = theta_image(psi);
    Ideal via_minors(e.ring, psi.minors(psi.cols()));
    bool ok = render_ideal(via_theta) == render_ideal(via_minors);
    return {ok, "wedge image " + render_ideal(via_theta) + ", minors " +
                    render_ideal(via_minors)};
}

CheckResult check_bourbaki_ideal(const CorpusEntry& e) {
    BourbakiResult b = generic_bourbaki(e.module, e.seed);
    Ideal expect = parse_ideal(e, "bourbaki_ideal");
    bool ok = render_ideal(b.ideal) == render_ideal(expect) &&
              b.certificates.mu_formula && b.certificates.rank_one;
    return {ok, "ideal " + render_ideal(b.ideal) + ", expected " +
                    render_ideal(expect)};
}

CheckResult check_bourbaki_mu_drop(const CorpusEntry& e) {
    BourbakiResult b = generic_bourbaki(e.module, e.seed);
    std::size_t mu = mu_local(presentation_of_embedded(e.module));
    std::size_t gcount = e.module.rank() - 1;
    std::vector<std::size_t> kill(gcount);
    std::iota(kill.begin(), kill.end(), 0);
    std::size_t mu_bar = mu_local(quotient_by_generators(b.presentation, kill));
    bool ok = b.certificates.mu_formula && (mu_bar + gcount == mu);
    std::ostringstream os;
    os << "mu of quotient " << mu_bar << " == " << mu << " - " << gcount;
    return {ok, os.str()};
}

CheckResult check_spread_additivity(const CorpusEntry& e) {
    BourbakiResult b = generic_bourbaki(e.module, e.seed);
    std::size_t le = analytic_spread(e.module);
    std::size_t li = analytic_spread_of_ideal(b.ideal);
    bool ok = (le == li + e.module.rank() - 1) && (le == want_count(e, "spread"));
    std::ostringstream os;
    os << "spread " << le << " == ideal spread " << li << " + "
       << e.module.rank() - 1;
    return {ok, os.str()};
}

CheckResult check_generator_spread_chain(const CorpusEntry& e) {
    Classification c = classify_module(e.module);
    std::size_t lower = c.height + e.module.rank() - 1;
    bool ok = c.mu >= c.spread && c.spread >= lower;
    std::ostringstream os;
    os << "mu " << c.mu << " >= spread " << c.spread << " >= " << lower;
    return {ok, os.str()};
}

CheckResult check_classification_values(const CorpusEntry& e) {
    Classification c = classify_module(e.module);
    bool ok = c.mu == want_count(e, "mu") && c.spread == want_count(e, "spread") &&
              c.height == want_count(e, "height") &&
              c.grade == want_count(e, "grade") &&
              c.equimultiple == want_flag(e, "equimultiple") &&
              c.principal_class == want_flag(e, "principal_class") &&
              c.complete_intersection == want_flag(e, "complete_intersection");
    std::ostringstream os;
    os << "mu " << c.mu << ", spread " << c.spread << ", height " << c.height
       << ", grade " << c.grade << ", flags " << c.equimultiple
       << c.principal_class << c.complete_intersection;
    return {ok, os.str()};
}

CheckResult check_rank_plus_one(const CorpusEntry& e) {
    Classification c = classify_module(e.module);
    if (c.mu != e.module.rank() + 1)
        return {false, "tag requires mu == rank + 1"};
    BourbakiResult b = generic_bourbaki(e.module, e.seed);
    auto [ht, gr] = height_and_grade(b.ideal);
    bool ok = c.principal_class && c.grade == 2 && c.height == 2 &&
              b.ideal.groebner().size() == 2 &&
              analytic_spread_of_ideal(b.ideal) == 2 && ht == 2 && gr == 2;
    std::ostringstream os;
    os << "principal class " << c.principal_class << ", ideal "
       << render_ideal(b.ideal) << " with spread "
       << analytic_spread_of_ideal(b.ideal) << ", height " << ht;
    return {ok, os.str()};
}

CheckResult check_flat_base_change(const CorpusEntry& e) {
    std::string fresh = "w";
    std::size_t k = 0;
    while (e.ring->var_index(fresh).has_value()) fresh = "w" + std::to_string(k++);
    std::vector<std::string> vars = e.ring->vars();
    vars.push_back(fresh);
    RingPtr ext = Ring::make(e.ring->field(), vars, e.ring->order());
    std::vector<std::size_t> vmap(e.ring->nvars());
    std::iota(vmap.begin(), vmap.end(), 0);
    Ideal lhs = det0(EmbeddedModule(e.module.generators().map_to(ext, vmap)));
    Ideal rhs = det0(e.module).map_to(ext, vmap);
    bool ok = render_ideal(lhs) == render_ideal(rhs) && ideal_equal(lhs, rhs);
    return {ok, "extended det0 " + render_ideal(lhs) + " == " + render_ideal(rhs)};
}

CheckResult check_fitting_height_cap(const CorpusEntry& e) {
    PresentedModule pres = presentation_of_embedded(e.module);
    Ideal fe = fitting_ideal(pres, e.module.rank());
    std::size_t ht = height_and_grade(fe).first;
    bool ok = ht <= e.module.rank() + 1;
    std::ostringstream os;
    os << "top Fitting height " << ht << " <= " << e.module.rank() + 1;
    return {ok, os.str()};
}

CheckResult check_reduction_generator_bound(const CorpusEntry& e) {
    if (e.reductions.empty()) throw MissingExpected{"reductions"};
    std::size_t spread = analytic_spread(e.module);
    std::ostringstream os;
    bool ok = true;
    for (const auto& red : e.reductions) {
        ReductionOutcome ro = reduction_number(e.module, red.columns, e.rmax);
        EmbeddedModule u(e.module.generators().select_columns(red.columns));
        std::size_t mu_u = mu_local(presentation_of_embedded(u));
        bool this_ok = ro.known && ro.r == red.r && mu_u >= spread;
        if (red.minimal) this_ok = this_ok && mu_u == spread;
        ok = ok && this_ok;
        os << "[r " << (ro.known ? std::to_string(ro.r) : std::string("unknown"))
           << ", mu(U) " << mu_u << " vs spread " << spread << "] ";
    }
    return {ok, os.str()};
}

CheckResult check_reduction_mod_m(const CorpusEntry& e) {
    if (e.reductions.empty()) throw MissingExpected{"reductions"};
    const auto& red = e.reductions.front();
    ReductionOutcome before = reduction_number(e.module, red.columns, e.rmax);
    // append a maximal-ideal multiple of the first generator, then enlarge
    // the reduction by it
    const PolyMatrix& a = e.module.generators();
    PolyMatrix wider(e.ring, a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) wider.set(r, c, a.at(r, c));
        wider.set(r, a.cols(), Polynomial::variable(0, e.ring) * a.at(r, 0));
    }
    std::vector<std::size_t> u = red.columns;
    u.push_back(a.cols());
    ReductionOutcome after = reduction_number(EmbeddedModule(wider), u, e.rmax);
    bool ok = before.known && after.known && before.r == after.r;
    std::ostringstream os;
    os << "r " << (before.known ? std::to_string(before.r) : std::string("unknown"))
       << " unchanged by an extra maximal-ideal multiple: r "
       << (after.known ? std::to_string(after.r) : std::string("unknown"));
    return {ok, os.str()};
}

CheckResult check_fitting_reduction_agreement(const CorpusEntry& e) {
    if (e.reductions.empty()) throw MissingExpected{"reductions"};
    const auto& red = e.reductions.front();
    ReductionOutcome module_level = reduction_number(e.module, red.columns, e.rmax);

    PresentedModule pres = presentation_of_embedded(e.module);
    EmbeddedModule u(e.module.generators().select_columns(red.columns));
    PresentedModule upres = presentation_of_embedded(u);
    std::vector<Polynomial> fu = fitting_ideal(upres, u.rank()).groebner();
    std::vector<Polynomial> fe = fitting_ideal(pres, e.module.rank()).groebner();
    PolyMatrix combined(e.ring, 1, fu.size() + fe.size());
    for (std::size_t i = 0; i < fu.size(); ++i) combined.set(0, i, fu[i]);
    for (std::size_t i = 0; i < fe.size(); ++i) combined.set(0, fu.size() + i, fe[i]);
    std::vector<std::size_t> ucols(fu.size());
    std::iota(ucols.begin(), ucols.end(), 0);
    ReductionOutcome fitting_level =
        reduction_number(EmbeddedModule(combined), ucols, e.rmax);

    bool ok = module_level.known && fitting_level.known &&
              module_level.r == fitting_level.r;
    std::ostringstream os;
    os << "module r "
       << (module_level.known ? std::to_string(module_level.r) : std::string("unknown"))
       << ", Fitting r "
       << (fitting_level.known ? std::to_string(fitting_level.r)
                               : std::string("unknown"));
    return {ok, os.str()};
}

CheckResult run_tag(const std::string& tag, const CorpusEntry& e) {
    if (tag == "base-invariants") return check_base_invariants(e);
    if (tag == "det0-fitting-identity") return check_det0_fitting_identity(e);
    if (tag == "det0-top-fitting-pd1") return check_det0_top_fitting_pd1(e);
    if (tag == "norm-in-fitting") return check_norm_in_fitting(e);
    if (tag == "norm-fitting-equality") return check_norm_fitting_equality(e);
    if (tag == "spread-vs-det0-height") return check_zak(e, 0);
    if (tag == "spread-vs-norm-height") return check_zak(e, 1);
    if (tag == "spread-vs-fitting-height") return check_zak(e, 2);
    if (tag == "local-freeness") return check_local_freeness(e);
    if (tag == "nonfree-locus") return check_nonfree_locus(e);
    if (tag == "theta-minors") return check_theta_minors(e);
    if (tag == "bourbaki-ideal") return check_bourbaki_ideal(e);
    if (tag == "bourbaki-mu-drop") return check_bourbaki_mu_drop(e);
    if (tag == "spread-additivity") return check_spread_additivity(e);
    if (tag == "generator-spread-chain") return check_generator_spread_chain(e);
    if (tag == "classification-values") return check_classification_values(e);
    if (tag == "rank-plus-one") return check_rank_plus_one(e);
    if (tag == "flat-base-change") return check_flat_base_change(e);
    if (tag == "fitting-height-cap") return check_fitting_height_cap(e);
    if (tag == "reduction-generator-bound") return check_reduction_generator_bound(e);
    if (tag == "reduction-mod-m-insensitive") return check_reduction_mod_m(e);
    if (tag == "fitting-reduction-agreement")
        return check_fitting_reduction_agreement(e);
    return {false, "unknown proposition tag"};
}

// ---- fixture loading -------------------------------------------------------

CorpusEntry entry_from_json(const json& j, const std::string& source) {
    RingPtr ring = detail::ring_from_json(j.at("ring"));
    EmbeddedModule mod(detail::embedded_matrix_from_json(j.at("module"), ring),
                       j.value("name", source));
    CorpusEntry e{j.at("name").get<std::string>(),
                  source,
                  ring,
                  std::move(mod),
                  0,
                  5,
                  {},
                  j.value("note", ""),
                  {},
                  {},
                  {},
                  {}};
    if (j.contains("options")) {
        e.seed = j["options"].value("seed", std::uint64_t{0});
        e.rmax = j["options"].value("rmax", std::size_t{5});
    }
    e.tags = j.value("tags", std::vector<std::string>{});
    if (j.contains("expected")) {
        for (const auto& [key, val] : j.at("expected").items()) {
            if (key == "reductions") {
                for (const auto& red : val) {
                    ExpectedReduction er;
                    er.columns = red.at("columns").get<std::vector<std::size_t>>();
                    er.r = red.at("r").get<std::size_t>();
                    er.minimal = red.value("minimal", false);
                    er.note = red.value("note", "");
                    e.reductions.push_back(std::move(er));
                }
            } else if (val.contains("value") && val["value"].is_array()) {
                ExpectedIdeal ei;
                ei.generators = val["value"].get<std::vector<std::string>>();
                ei.note = val.value("note", "");
                e.ideals.emplace(key, std::move(ei));
            } else if (val.contains("value") && val["value"].is_boolean()) {
                e.flags.emplace(key,
                                ExpectedFlag{val["value"].get<bool>(),
                                             val.value("note", "")});
            } else if (val.contains("value") && val["value"].is_number()) {
                e.counts.emplace(key,
                                 ExpectedCount{val["value"].get<std::size_t>(),
                                               val.value("note", "")});
            } else {
                throw ParseError("expected value '" + key +
                                     "' must be {value, note}",
                                 0);
            }
        }
    }
    for (const auto& [key, val] : e.ideals)
        if (val.note.empty())
            throw ParseError("expected value '" + key + "' lacks a note", 0);
    for (const auto& [key, val] : e.counts)
        if (val.note.empty())
            throw ParseError("expected value '" + key + "' lacks a note", 0);
    for (const auto& [key, val] : e.flags)
        if (val.note.empty())
            throw ParseError("expected value '" + key + "' lacks a note", 0);
    for (const auto& red : e.reductions)
        if (red.note.empty())
            throw ParseError("a reduction entry lacks a note", 0);
    return e;
}

}  // namespace

std::string render_ideal(const Ideal& i) {
    const auto& gb = i.groebner();
    if (gb.empty()) return "(0)";
    std::string out = "(";
    for (std::size_t k = 0; k < gb.size(); ++k) {
        if (k) out += ", ";
        out += gb[k].str();
    }
    return out + ")";
}

CorpusEntry parse_corpus_entry(const std::string& json_text,
                               const std::string& source_name) {
    try {
        json j = json::parse(json_text);
        return entry_from_json(j, source_name);
    } catch (const json::parse_error& ex) {
        throw ParseError(source_name + ": " + ex.what(), ex.byte);
    } catch (const json::exception& ex) {
        throw ParseError(source_name + ": " + ex.what(), 0);
    } catch (const ParseError& ex) {
        throw ParseError(source_name + ": " + ex.message(), ex.position());
    }
}

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::exists(dir))
        throw ParseError("corpus directory '" + dir + "' does not exist", 0);
    std::vector<fs::path> files;
    for (const auto& ent : fs::directory_iterator(dir))
        if (ent.is_regular_file() && ent.path().extension() == ".json")
            files.push_back(ent.path());
    std::sort(files.begin(), files.end());
    std::vector<CorpusEntry> out;
    for (const auto& f : files) {
        std::ifstream in(f);
        std::stringstream buf;
        buf << in.rdbuf();
        out.push_back(parse_corpus_entry(buf.str(), f.filename().string()));
    }
    return out;
}

CorpusSummary verify_all(const std::vector<CorpusEntry>& entries,
                         const std::string& tag_filter) {
    CorpusSummary s;
    std::map<std::string, TagSummary> tally;
    for (const auto& e : entries) {
        for (const auto& tag : e.tags) {
            if (!tag_filter.empty() && tag != tag_filter) continue;
            PropositionCheck pc{tag, e.name, false, ""};
            try {
                auto [ok, detail] = run_tag(tag, e);
                pc.pass = ok;
                pc.detail = detail;
            } catch (const MissingExpected& me) {
                pc.detail = "missing expected value '" + me.key + "'";
            } catch (const std::exception& ex) {
                pc.detail = std::string("error: ") + ex.what();
            }
            auto& t = tally[tag];
            t.tag = tag;
            (pc.pass ? t.passed : t.failed) += 1;
            s.all_pass = s.all_pass && pc.pass;
            s.checks.push_back(std::move(pc));
        }
    }
    for (auto& [_, t] : tally) s.tags.push_back(std::move(t));
    return s;
}

std::string render_summary(const CorpusSummary& s) {
    std::ostringstream os;
    for (const auto& c : s.checks)
        os << (c.pass ? "pass" : "FAIL") << "  " << c.tag << "  [" << c.entry
           << "]  " << c.detail << "\n";
    os << "--\n";
    for (const auto& t : s.tags)
        os << t.tag << ": " << t.passed << " passed, " << t.failed << " failed\n";
    std::size_t passed = 0, failed = 0;
    for (const auto& t : s.tags) {
        passed += t.passed;
        failed += t.failed;
    }
    os << "total: " << passed << " passed, " << failed << " failed\n";
    return os.str();
}

}  // namespace divmod
