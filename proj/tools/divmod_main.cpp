#include <cstdint>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "divmod/bourbaki.hpp"
#include "divmod/corpus.hpp"
#include "divmod/divisors.hpp"
#include "divmod/errors.hpp"
#include "divmod/jobspec.hpp"
#include "divmod/rees.hpp"

using namespace divmod;
using ojson = nlohmann::ordered_json;

namespace {

// flags shared by every computing subcommand; sentinel values mean "not given"
struct Args {
    std::string input;
    std::uint64_t seed = 0;
    std::size_t rmax = 5;
    std::string order;
    std::size_t index = 0;
    std::vector<std::size_t> u;
    std::string corpus_dir;
    std::string tag;
    bool as_json = false;
};

std::string ring_text(const RingPtr& r) {
    std::string out = r->field().is_rational() ? "Q" : "F" + std::to_string(r->field().p);
    out += "[";
    for (std::size_t i = 0; i < r->nvars(); ++i) {
        if (i) out += ", ";
        out += r->var(i);
    }
    out += "] ";
    out += r->order().kind == OrderKind::lex ? "lex" : "grevlex";
    return out;
}

ojson ring_json(const RingPtr& r) {
    ojson j;
    j["characteristic"] = r->field().p;
    j["vars"] = r->vars();
    j["order"] = r->order().kind == OrderKind::lex ? "lex" : "grevlex";
    return j;
}

ojson ideal_json(const Ideal& i) {
    ojson a = ojson::array();
    for (const auto& g : i.groebner()) a.push_back(g.str());
    return a;
}

ojson matrix_json(const PolyMatrix& m) {
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ojson row = ojson::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string matrix_text(const PolyMatrix& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) out += ", ";
        out += "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ", ";
            out += m.at(r, c).str();
        }
        out += "]";
    }
    return out + "]";
}

std::string outcome_text(CheckOutcome o) {
    switch (o) {
        case CheckOutcome::passed: return "passed";
        case CheckOutcome::failed: return "failed";
        default: return "not applicable";
    }
}

// Ambient degrees are all zero, so a column generates a graded submodule only
// when its nonzero entries are homogeneous of one shared degree.
bool homogeneous_columns(const PolyMatrix& m) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
        long degree = -1;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            const Polynomial& p = m.at(r, c);
            if (p.is_zero()) continue;
            if (!p.is_homogeneous()) return false;
            if (degree >= 0 && p.degree() != degree) return false;
            degree = p.degree();
        }
    }
    return true;
}

void warn_if_inhomogeneous(const JobSpec& job) {
    const PolyMatrix& m =
        job.embedded ? job.embedded->generators() : job.presented->relations();
    if (!homogeneous_columns(m))
        std::cerr << "warning: input is not homogeneous; origin-local readings "
                     "(mu, spread, heights) may be inexact\n";
}

const EmbeddedModule& need_embedded(const JobSpec& job, const std::string& cmd) {
    if (!job.embedded)
        throw ParseError("command '" + cmd + "' needs an embedded module payload", 0);
    return *job.embedded;
}

PresentedModule presentation_of(const JobSpec& job) {
    if (job.presented) return *job.presented;
    return presentation_of_embedded(*job.embedded);
}

std::vector<std::size_t> chosen_columns(const Args& a, const JobSpec& job) {
    return a.u.empty() ? job.reduction : a.u;
}

void emit(const ojson& report, const std::string& text, bool as_json) {
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text;
}

ojson envelope(const std::string& cmd, const JobSpec& job) {
    ojson j;
    j["command"] = cmd;
    j["ring"] = ring_json(job.ring);
    ojson mod;
    if (job.embedded) {
        mod["ambient_rank"] = job.embedded->ambient_rank();
        mod["generators"] = job.embedded->generator_count();
        mod["rank"] = job.embedded->rank();
    } else {
        mod["generators"] = job.presented->generator_count();
        mod["relations"] = job.presented->relations().cols();
        mod["rank"] = job.presented->rank();
    }
    j["module"] = std::move(mod);
    return j;
}

std::string header_text(const JobSpec& job) {
    std::ostringstream os;
    os << "ring " << ring_text(job.ring);
    if (job.embedded)
        os << "; module " << job.embedded->ambient_rank() << " x "
           << job.embedded->generator_count() << ", rank " << job.embedded->rank();
    else
        os << "; presented " << job.presented->generator_count() << " generators, "
           << job.presented->relations().cols() << " relations, rank "
           << job.presented->rank();
    os << "\n";
    return os.str();
}

int run_command(const std::string& cmd, const Args& a) {
    if (cmd == "verify-corpus") {
        std::vector<CorpusEntry> entries = load_corpus(a.corpus_dir);
        CorpusSummary s = verify_all(entries, a.tag);
        if (a.as_json) {
            ojson j;
            j["command"] = cmd;
            ojson checks = ojson::array();
            for (const auto& c : s.checks) {
                ojson cj;
                cj["tag"] = c.tag;
                cj["entry"] = c.entry;
                cj["pass"] = c.pass;
                cj["detail"] = c.detail;
                checks.push_back(std::move(cj));
            }
            j["checks"] = std::move(checks);
            ojson tags = ojson::array();
            for (const auto& t : s.tags) {
                ojson tj;
                tj["tag"] = t.tag;
                tj["passed"] = t.passed;
                tj["failed"] = t.failed;
                tags.push_back(std::move(tj));
            }
            j["tags"] = std::move(tags);
            j["all_pass"] = s.all_pass;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << render_summary(s);
        }
        return s.all_pass ? 0 : 2;
    }

    JobSpec job = load_jobspec(a.input, a.order);
    if (!job.command.empty() && job.command != cmd)
        throw ParseError("input file requests command '" + job.command +
                             "' but '" + cmd + "' was invoked",
                         0);
    job.seed = a.seed != std::numeric_limits<std::uint64_t>::max() ? a.seed : job.seed;
    job.rmax = a.rmax != std::numeric_limits<std::size_t>::max() ? a.rmax : job.rmax;

    static const std::vector<std::string> local_sensitive = {
        "bourbaki", "fiber", "spread", "reduction", "classify", "zak",
        "nonfree-locus"};
    for (const auto& s : local_sensitive)
        if (s == cmd) warn_if_inhomogeneous(job);

    ojson j = envelope(cmd, job);
    std::ostringstream text;
    text << header_text(job);

    if (cmd == "fitting") {
        PresentedModule pres = presentation_of(job);
        Ideal f = fitting_ideal(pres, a.index);
        j["index"] = a.index;
        j["ideal"] = ideal_json(f);
        text << "F_" << a.index << " = " << render_ideal(f) << "\n";
    } else if (cmd == "det0") {
        Ideal d = det0(need_embedded(job, cmd));
        j["ideal"] = ideal_json(d);
        text << "det0 = " << render_ideal(d) << "\n";
    } else if (cmd == "norm") {
        PresentedModule pres = presentation_of(job);
        NormCertificate nc = norm_representative(pres, job.seed);
        j["seed"] = job.seed;
        j["columns"] = nc.columns;
        j["rho"] = matrix_json(nc.rho);
        j["ideal"] = ideal_json(nc.ideal);
        text << "columns = [";
        for (std::size_t i = 0; i < nc.columns.size(); ++i)
            text << (i ? ", " : "") << nc.columns[i];
        text << "]\nrho = " << matrix_text(nc.rho) << "\nnorm = "
             << render_ideal(nc.ideal) << "\n";
    } else if (cmd == "psi") {
        PresentedModule pres = presentation_of(job);
        if (pres.rank() == 0) throw MathError("module must have positive rank");
        PolyMatrix psi = find_psi(pres, pres.rank() - 1);
        Ideal minors(pres.ring(), psi.minors(psi.cols()));
        j["excluded_rows"] = pres.rank() - 1;
        j["psi"] = matrix_json(psi);
        j["minors"] = ideal_json(minors);
        text << "psi = " << matrix_text(psi) << "\nminors = "
             << render_ideal(minors) << "\n";
    } else if (cmd == "bourbaki") {
        const EmbeddedModule& e = need_embedded(job, cmd);
        std::vector<std::size_t> u = chosen_columns(a, job);
        BourbakiResult b = u.empty() ? generic_bourbaki(e, job.seed)
                                     : generic_bourbaki(e, u, job.seed);
        j["seed"] = b.seed;
        ojson coeffs = ojson::array();
        for (const auto& row : b.coefficients) {
            ojson rj = ojson::array();
            for (const auto& c : row) rj.push_back(c.str());
            coeffs.push_back(std::move(rj));
        }
        j["coefficients"] = std::move(coeffs);
        j["kept_columns"] = b.kept;
        j["psi"] = matrix_json(b.psi);
        j["ideal"] = ideal_json(b.ideal);
        ojson certs;
        certs["mu_formula"] = b.certificates.mu_formula;
        certs["rank_one"] = b.certificates.rank_one;
        certs["grade_psi"] = b.certificates.grade_psi;
        certs["hilbert_burch"] = outcome_text(b.certificates.hilbert_burch);
        j["certificates"] = std::move(certs);
        text << "seed = " << b.seed << "\nideal = " << render_ideal(b.ideal)
             << "\npsi = " << matrix_text(b.psi) << "\nmu_formula = "
             << (b.certificates.mu_formula ? "yes" : "no") << "\nrank_one = "
             << (b.certificates.rank_one ? "yes" : "no") << "\ngrade_psi = "
             << (b.certificates.grade_psi ? "yes" : "no") << "\nhilbert_burch = "
             << outcome_text(b.certificates.hilbert_burch) << "\n";
    } else if (cmd == "rees") {
        ReesPresentation rp = rees_presentation(need_embedded(job, cmd));
        std::vector<std::string> markers(rp.marker_ring->vars().end() - rp.markers,
                                         rp.marker_ring->vars().end());
        j["markers"] = markers;
        j["targets"] = rp.targets;
        j["equigenerated"] = rp.equigenerated;
        j["defining"] = ideal_json(rp.defining);
        text << "markers = [";
        for (std::size_t i = 0; i < markers.size(); ++i)
            text << (i ? ", " : "") << markers[i];
        text << "]\nequigenerated = " << (rp.equigenerated ? "yes" : "no")
             << "\ndefining = " << render_ideal(rp.defining) << "\n";
    } else if (cmd == "fiber") {
        FiberCone fc = fiber_cone(need_embedded(job, cmd));
        j["fiber_vars"] = fc.fiber_ring->vars();
        j["defining"] = ideal_json(fc.defining);
        j["dim"] = fc.dim;
        text << "defining = " << render_ideal(fc.defining) << "\ndim = " << fc.dim
             << "\n";
    } else if (cmd == "spread") {
        std::size_t l = analytic_spread(need_embedded(job, cmd));
        j["spread"] = l;
        text << "spread = " << l << "\n";
    } else if (cmd == "reduction") {
        const EmbeddedModule& e = need_embedded(job, cmd);
        std::vector<std::size_t> u = chosen_columns(a, job);
        if (u.empty()) throw ParseError("no reduction columns supplied", 0);
        ReductionOutcome ro = reduction_number(e, u, job.rmax);
        j["u"] = u;
        j["rmax"] = job.rmax;
        j["known"] = ro.known;
        if (ro.known) j["r"] = ro.r;
        if (ro.known)
            text << "r = " << ro.r << "\n";
        else
            text << "r unknown within rmax " << job.rmax << "\n";
    } else if (cmd == "classify") {
        Classification c = classify_module(need_embedded(job, cmd));
        j["mu"] = c.mu;
        j["spread"] = c.spread;
        j["height"] = c.height;
        j["grade"] = c.grade;
        j["deviation"] = c.deviation;
        j["equimultiple"] = c.equimultiple;
        j["principal_class"] = c.principal_class;
        j["complete_intersection"] = c.complete_intersection;
        text << "mu = " << c.mu << "\nspread = " << c.spread << "\nheight = "
             << c.height << "\ngrade = " << c.grade << "\ndeviation = "
             << c.deviation << "\nequimultiple = " << (c.equimultiple ? "yes" : "no")
             << "\nprincipal_class = " << (c.principal_class ? "yes" : "no")
             << "\ncomplete_intersection = "
             << (c.complete_intersection ? "yes" : "no") << "\n";
    } else if (cmd == "zak") {
        ZakReport z = zak_report(need_embedded(job, cmd));
        j["spread"] = z.spread_det0;
        j["ht_det0"] = z.ht_det0;
        j["ht_norm"] = z.ht_norm;
        j["ht_fitting"] = z.ht_fitting;
        j["pd1"] = z.pd1;
        j["det0_bound_ok"] = z.det0_bound_ok;
        j["norm_bound_ok"] = z.norm_bound_ok;
        j["fitting_bound_ok"] = z.fitting_bound_ok;
        text << "spread = " << z.spread_det0 << "\nht det0 = " << z.ht_det0
             << "\nht norm = " << z.ht_norm << "\nht top Fitting = " << z.ht_fitting
             << "\npd1 = " << (z.pd1 ? "yes" : "no") << "\nbounds = "
             << (z.det0_bound_ok ? "det0 ok" : "det0 VIOLATED") << ", "
             << (z.norm_bound_ok ? "norm ok" : "norm VIOLATED") << ", "
             << (z.fitting_bound_ok ? "fitting ok" : "fitting unverified") << "\n";
    } else if (cmd == "nonfree-locus") {
        const EmbeddedModule& e = need_embedded(job, cmd);
        Ideal locus = nonfree_locus_ideal(e);
        bool free_local = is_free_local(e);
        j["ideal"] = ideal_json(locus);
        j["free_local"] = free_local;
        text << "locus = " << render_ideal(locus) << "\nfree_local = "
             << (free_local ? "yes" : "no") << "\n";
    } else {
        throw InternalError("unhandled command " + cmd);
    }

    emit(j, text.str(), a.as_json);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"divisor computations for modules over polynomial rings"};
    app.require_subcommand(1);

    Args a;
    a.seed = std::numeric_limits<std::uint64_t>::max();
    a.rmax = std::numeric_limits<std::size_t>::max();

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", a.input, "job description (JSON)")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--seed", a.seed, "seed for generic choices");
        sub->add_option("--rmax", a.rmax, "reduction-number search bound");
        sub->add_option("--order", a.order, "monomial order override")
            ->check(CLI::IsMember({"grevlex", "lex"}));
        sub->add_flag("--json", a.as_json, "emit the JSON report instead of text");
        return sub;
    };

    add_common(app.add_subcommand("fitting", "Fitting ideal of the module"))
        ->add_option("--index", a.index, "Fitting index i")
        ->required();
    add_common(app.add_subcommand("det0", "order determinant ideal"));
    add_common(app.add_subcommand("norm", "norm representative via a generic column selection"));
    add_common(app.add_subcommand("psi", "relation submatrix below the generic rows"));
    auto* bourbaki_cmd =
        add_common(app.add_subcommand("bourbaki", "generic Bourbaki ideal"));
    bourbaki_cmd->add_option("--u", a.u, "columns generating a verified reduction");
    add_common(app.add_subcommand("rees", "Rees algebra presentation"));
    add_common(app.add_subcommand("fiber", "fiber cone and its dimension"));
    add_common(app.add_subcommand("spread", "analytic spread"));
    auto* reduction_cmd =
        add_common(app.add_subcommand("reduction", "reduction number of a column subset"));
    reduction_cmd->add_option("--u", a.u, "candidate reduction columns");
    add_common(app.add_subcommand("classify", "numerical invariants and class flags"));
    add_common(app.add_subcommand("zak", "spread-versus-height inequalities"));
    add_common(app.add_subcommand("nonfree-locus", "ideal of the non-free locus"));
    auto* verify_cmd = app.add_subcommand("verify-corpus", "machine-check the corpus");
    verify_cmd->add_option("--corpus", a.corpus_dir, "corpus directory")
        ->required()
        ->check(CLI::ExistingDirectory);
    verify_cmd->add_option("--tag", a.tag, "restrict to one proposition tag");
    verify_cmd->add_flag("--json", a.as_json, "emit the JSON report instead of text");

    try {
        app.parse(argc, argv);
        return run_command(app.get_subcommands().front()->get_name(), a);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
