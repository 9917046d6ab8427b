#include "fcx/duality.hpp"
#include "fcx/enumerate.hpp"
#include "fcx/fideal.hpp"
#include "fcx/homalg.hpp"
#include "fcx/io.hpp"
#include "fcx/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBudget = 4;

struct Output {
    bool records = false;
    std::string file;
    std::ostringstream human;
    std::vector<json> lines;

    void record(json j) { lines.push_back(std::move(j)); }

    void flush() {
        std::string text;
        if (records) {
            for (const auto& j : lines) text += j.dump() + "\n";
        } else {
            text = human.str();
        }
        if (file.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(file);
            if (!out) throw fcx::error("cannot open '" + file + "' for writing");
            out << text;
        }
    }
};

fcx::FieldSpec parse_field(const std::string& s) {
    if (s == "q" || s == "Q") return fcx::FieldSpec::rationals();
    if (s.rfind("gf:", 0) == 0) {
        unsigned long p = std::stoul(s.substr(3));
        return fcx::FieldSpec::prime_field(static_cast<std::uint32_t>(p));
    }
    throw CLI::ValidationError("--field", "expected 'q' or 'gf:<prime>', got '" + s + "'");
}

std::string verdict_word(bool b) { return b ? "true" : "false"; }

json family_json(const fcx::SubsetFamily& fam) {
    json arr = json::array();
    for (fcx::Mask m : fam.members()) arr.push_back(fcx::mask_vertices(m));
    return arr;
}

json facets_json(const fcx::Complex& c) {
    return family_json(fcx::SubsetFamily::of(c.n(), c.facets()));
}

std::string family_text(const fcx::SubsetFamily& fam) {
    std::string s;
    for (fcx::Mask m : fam.members()) {
        if (!s.empty()) s += " ";
        s += fcx::mask_to_string(m);
    }
    return s.empty() ? "(none)" : s;
}

std::string facets_text(const fcx::Complex& c) {
    return family_text(fcx::SubsetFamily::of(c.n(), c.facets()));
}

fcx::SubsetFamily facet_family(const fcx::Complex& c) {
    return fcx::SubsetFamily::of(c.n(), c.facets());
}

std::string betti_text(const fcx::BettiTable& t) {
    std::string s;
    for (const auto& [key, mult] : t.entries) {
        if (!s.empty()) s += " ";
        s += "(" + std::to_string(key.first) + "," + std::to_string(key.second) +
             "):" + std::to_string(mult);
    }
    return s.empty() ? "(zero)" : s;
}

json betti_json(const fcx::BettiTable& t) {
    json arr = json::array();
    for (const auto& [key, mult] : t.entries)
        arr.push_back({{"i", key.first}, {"j", key.second}, {"mult", mult}});
    return arr;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of squarefree monomial ideals: f-ideals, complement duals, "
                 "Betti tables, Cohen-Macaulayness, shellability, classification"};
    app.require_subcommand(1);

    Output out;
    std::string field_arg = "q";
    app.add_option("--field", field_arg, "Coefficient field: q or gf:<prime>")
        ->capture_default_str();
    app.add_flag("--records", out.records, "Emit machine-readable records, one JSON object per line");
    app.add_option("--output", out.file, "Write output to a file instead of stdout");

    std::string file_info, file_fvec, file_dual, file_check, file_cm, file_betti, file_linear,
        file_primes, file_unmixed, file_shell;

    auto* cmd_info = app.add_subcommand("info", "Vertex count, dimension, purity, facets");
    cmd_info->add_option("file", file_info, "Complex file")->required();

    auto* cmd_fvec = app.add_subcommand("fvector", "Face counts by dimension");
    cmd_fvec->add_option("file", file_fvec, "Complex file")->required();

    auto* cmd_dual = app.add_subcommand("dual", "Newton complement dual, Alexander dual, or homogeneous complement");
    cmd_dual->add_option("file", file_dual, "Complex file")->required();
    bool dual_newton = false, dual_alexander = false, dual_hcomp = false;
    cmd_dual->add_flag("--newton", dual_newton, "Complement every facet (default)");
    cmd_dual->add_flag("--alexander", dual_alexander, "Complements of the minimal nonfaces");
    cmd_dual->add_flag("--hcomp", dual_hcomp, "Equicardinal subsets that are not facets");

    auto* cmd_check = app.add_subcommand("check", "Decide a predicate of the complex");
    std::string predicate;
    cmd_check->add_option("predicate", predicate, "One of: f-ideal, lu, well-distributed, strong")
        ->required()
        ->check(CLI::IsMember({"f-ideal", "lu", "well-distributed", "strong"}));
    cmd_check->add_option("file", file_check, "Complex file")->required();

    auto* cmd_cm = app.add_subcommand("cm", "Cohen-Macaulayness of the complex (Reisner)");
    cmd_cm->add_option("file", file_cm, "Complex file")->required();

    auto* cmd_betti = app.add_subcommand("betti", "Graded Betti numbers of an ideal attached to the complex");
    cmd_betti->add_option("file", file_betti, "Complex file")->required();
    std::string betti_as = "facet-ideal";
    cmd_betti->add_option("--as", betti_as, "facet-ideal: generated by the facets; stanley-reisner: by the minimal nonfaces")
        ->check(CLI::IsMember({"facet-ideal", "stanley-reisner"}))
        ->capture_default_str();

    auto* cmd_linear = app.add_subcommand("linear", "Linear-resolution verdict for the facet ideal");
    cmd_linear->add_option("file", file_linear, "Complex file")->required();

    auto* cmd_primes = app.add_subcommand("minimal-primes", "Minimal primes of the facet ideal");
    cmd_primes->add_option("file", file_primes, "Complex file")->required();

    auto* cmd_unmixed = app.add_subcommand("unmixed", "Equal-height test for the minimal primes");
    cmd_unmixed->add_option("file", file_unmixed, "Complex file")->required();

    auto* cmd_shell = app.add_subcommand("shellable", "Search for a shelling order");
    cmd_shell->add_option("file", file_shell, "Complex file")->required();
    std::uint64_t shell_budget = fcx::kDefaultShellBudget;
    cmd_shell->add_option("--budget", shell_budget, "Step budget for the backtracking search")
        ->capture_default_str();

    auto* cmd_enum = app.add_subcommand("enumerate", "Stream or classify all pure complexes with given parameters");
    int en_n = 0, en_d = 0, en_m = 0, en_jobs = 1;
    bool en_iso = false, en_classify = false, en_cm = false;
    cmd_enum->add_option("--n", en_n, "Vertex count")->required();
    cmd_enum->add_option("--d", en_d, "Facet cardinality")->required();
    cmd_enum->add_option("--facets", en_m, "Facet count")->required();
    cmd_enum->add_flag("--classify", en_classify, "Tally predicates instead of streaming");
    cmd_enum->add_flag("--iso", en_iso, "Group by isomorphism class");
    cmd_enum->add_flag("--cm", en_cm, "Also tally Cohen-Macaulayness");
    cmd_enum->add_option("--jobs", en_jobs, "Worker threads for classification")
        ->capture_default_str();

    auto* cmd_verify = app.add_subcommand("verify", "Replay the packaged verification suite");
    std::string verify_what;
    cmd_verify->add_option("what", verify_what, "Suite name; only 'paper' exists")
        ->required()
        ->check(CLI::IsMember({"paper"}));
    std::string fixtures_dir = "fixtures";
    cmd_verify->add_option("--fixtures", fixtures_dir, "Fixture directory")
        ->capture_default_str();
    std::vector<std::string> verify_only;
    cmd_verify->add_option("--only", verify_only, "Run only checks with one of these name prefixes");
    std::uint64_t verify_samples = 10000;
    cmd_verify->add_option("--samples", verify_samples, "Sample count for the n = 6 pools")
        ->capture_default_str();

    // Global flags stay usable after the subcommand name.
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        fcx::FieldSpec field = parse_field(field_arg);

        if (*cmd_info) {
            fcx::Complex c = fcx::parse_complex_file(file_info);
            auto [dim, pure] = fcx::dimension_and_purity(c);
            out.human << "n: " << c.n() << "\n"
                      << "dim: " << dim << "\n"
                      << "pure: " << verdict_word(pure) << "\n"
                      << "facets: " << c.facets().size() << "\n"
                      << "facet list: " << facets_text(c) << "\n";
            out.record({{"command", "info"},
                        {"n", c.n()},
                        {"dim", dim},
                        {"pure", pure},
                        {"facet_count", c.facets().size()},
                        {"facets", facets_json(c)}});
        } else if (*cmd_fvec) {
            fcx::Complex c = fcx::parse_complex_file(file_fvec);
            fcx::FVector fv = fcx::f_vector(c);
            std::string fs;
            for (auto e : fv.entries) fs += (fs.empty() ? "" : ", ") + std::to_string(e);
            out.human << "f-vector: (" << fs << ")\n";
            out.record({{"command", "fvector"}, {"entries", fv.entries}});
        } else if (*cmd_dual) {
            if (dual_newton + dual_alexander + dual_hcomp > 1)
                throw CLI::ValidationError("dual", "choose one of --newton, --alexander, --hcomp");
            fcx::Complex c = fcx::parse_complex_file(file_dual);
            std::string kind = dual_alexander ? "alexander" : dual_hcomp ? "hcomp" : "newton";
            fcx::Complex d = dual_alexander ? fcx::alexander_dual(c)
                             : dual_hcomp   ? fcx::homogeneous_complement(c)
                                            : fcx::newton_dual(c);
            out.human << fcx::write_complex(d);
            out.record({{"command", "dual"}, {"kind", kind}, {"facets", facets_json(d)}});
        } else if (*cmd_check) {
            fcx::Complex c = fcx::parse_complex_file(file_check);
            if (predicate == "f-ideal") {
                fcx::FIdealVerdict v = fcx::is_f_ideal(facet_family(c));
                std::string route = v.route == fcx::FIdealRoute::BothAgree ? "both-agree"
                                                                           : "general-fvector";
                out.human << "f-ideal: " << verdict_word(v.is_f) << " (route: " << route;
                if (v.route == fcx::FIdealRoute::BothAgree)
                    out.human << ", |G|=" << c.facets().size();
                out.human << ")\n";
                if (v.witness) out.human << "uncovered: " << fcx::mask_to_string(*v.witness) << "\n";
                if (v.mismatch_index)
                    out.human << "f-vector mismatch at cardinality " << *v.mismatch_index + 1
                              << "\n";
                json rec = {{"command", "check"},
                            {"predicate", "f-ideal"},
                            {"verdict", v.is_f},
                            {"route", route}};
                if (v.witness) rec["witness"] = fcx::mask_vertices(*v.witness);
                if (v.mismatch_index) rec["mismatch_cardinality"] = *v.mismatch_index + 1;
                out.record(rec);
            } else if (predicate == "lu") {
                fcx::LuVerdict v = fcx::is_lu_set(facet_family(c));
                out.human << "L: " << verdict_word(v.l) << ", U: " << verdict_word(v.u) << "\n";
                if (v.l_witness)
                    out.human << "uncovered below: " << fcx::mask_to_string(*v.l_witness) << "\n";
                if (v.u_witness)
                    out.human << "uncovered above: " << fcx::mask_to_string(*v.u_witness) << "\n";
                json rec = {{"command", "check"}, {"predicate", "lu"}, {"l", v.l}, {"u", v.u}};
                if (v.l_witness) rec["l_witness"] = fcx::mask_vertices(*v.l_witness);
                if (v.u_witness) rec["u_witness"] = fcx::mask_vertices(*v.u_witness);
                out.record(rec);
            } else if (predicate == "well-distributed") {
                fcx::WellDistributedVerdict v = fcx::is_well_distributed(c);
                out.human << "well-distributed: " << verdict_word(v.well_distributed) << "\n";
                if (v.collision)
                    out.human << "facet and complement both present: "
                              << fcx::mask_to_string(*v.collision) << "\n";
                json rec = {{"command", "check"},
                            {"predicate", "well-distributed"},
                            {"verdict", v.well_distributed}};
                if (v.collision) rec["collision"] = fcx::mask_vertices(*v.collision);
                out.record(rec);
            } else {
                bool strong = fcx::is_strong(c);
                out.human << "strong: " << verdict_word(strong) << "\n";
                out.record({{"command", "check"}, {"predicate", "strong"}, {"verdict", strong}});
            }
        } else if (*cmd_cm) {
            fcx::Complex c = fcx::parse_complex_file(file_cm);
            bool cm = fcx::is_cohen_macaulay(c, field);
            out.human << "cohen-macaulay over " << field.to_string() << ": " << verdict_word(cm)
                      << "\n";
            out.record({{"command", "cm"}, {"field", field.to_string()}, {"verdict", cm}});
        } else if (*cmd_betti) {
            fcx::Complex c = fcx::parse_complex_file(file_betti);
            fcx::SubsetFamily gens =
                betti_as == "facet-ideal" ? facet_family(c) : fcx::minimal_nonfaces(c);
            fcx::BettiTable t = fcx::betti_table(gens, field, fcx::BettiSubject::Ideal);
            fcx::LinearVerdict lv = fcx::has_linear_resolution(gens, field);
            out.human << "betti (" << betti_as << ", over " << field.to_string()
                      << "): " << betti_text(t) << "\n"
                      << "linear: " << verdict_word(lv.linear) << "\n";
            out.record({{"command", "betti"},
                        {"as", betti_as},
                        {"field", field.to_string()},
                        {"entries", betti_json(t)},
                        {"linear", lv.linear}});
        } else if (*cmd_linear) {
            fcx::Complex c = fcx::parse_complex_file(file_linear);
            fcx::LinearVerdict v = fcx::has_linear_resolution(facet_family(c), field);
            out.human << "linear resolution over " << field.to_string() << ": "
                      << verdict_word(v.linear) << "\n";
            if (v.reason) out.human << "reason: " << *v.reason << "\n";
            json rec = {{"command", "linear"}, {"field", field.to_string()}, {"verdict", v.linear}};
            if (v.reason) rec["reason"] = *v.reason;
            out.record(rec);
        } else if (*cmd_primes) {
            fcx::Complex c = fcx::parse_complex_file(file_primes);
            fcx::PrimeList pl = fcx::minimal_primes(facet_family(c));
            out.human << "minimal primes (" << pl.components.size() << "): "
                      << family_text(pl.components) << "\n";
            out.record({{"command", "minimal-primes"},
                        {"components", family_json(pl.components)},
                        {"heights", pl.heights()}});
        } else if (*cmd_unmixed) {
            fcx::Complex c = fcx::parse_complex_file(file_unmixed);
            bool u = fcx::is_unmixed(facet_family(c));
            out.human << "unmixed: " << verdict_word(u) << "\n";
            out.record({{"command", "unmixed"}, {"verdict", u}});
        } else if (*cmd_shell) {
            fcx::Complex c = fcx::parse_complex_file(file_shell);
            fcx::ShellVerdict v = fcx::is_shellable(c, shell_budget);
            std::string status = v.status == fcx::ShellStatus::Shellable      ? "shellable"
                                 : v.status == fcx::ShellStatus::NotShellable ? "not_shellable"
                                                                              : "budget_exhausted";
            out.human << "shellable: " << status << " (" << v.steps << " steps)\n";
            if (!v.order.empty()) {
                out.human << "order:";
                for (fcx::Mask f : v.order) out.human << " " << fcx::mask_to_string(f);
                out.human << "\n";
            }
            json rec = {{"command", "shellable"}, {"status", status}, {"steps", v.steps}};
            if (!v.order.empty()) {
                json ord = json::array();
                for (fcx::Mask f : v.order) ord.push_back(fcx::mask_vertices(f));
                rec["order"] = ord;
            }
            out.record(rec);
            out.flush();
            return v.status == fcx::ShellStatus::BudgetExhausted ? kExitBudget : kExitOk;
        } else if (*cmd_enum) {
            if (en_classify) {
                fcx::ClassifyOptions o;
                o.iso = en_iso;
                o.cm = en_cm;
                o.field = field;
                o.jobs = en_jobs;
                fcx::ClassifyReport r = fcx::classify(en_n, en_d, en_m, o);
                out.human << "total " << r.total << ", f " << r.f_count << ", well-distributed "
                          << r.well_distributed_count << ", strong " << r.strong_count;
                if (en_cm) out.human << ", cohen-macaulay " << r.cm_count;
                out.human << "\n";
                json rec = {{"command", "enumerate"},
                            {"n", r.n},
                            {"d", r.d},
                            {"facets", r.m},
                            {"total", r.total},
                            {"f_count", r.f_count},
                            {"well_distributed_count", r.well_distributed_count},
                            {"strong_count", r.strong_count},
                            {"shards", r.shards}};
                if (en_cm) rec["cm_count"] = r.cm_count;
                if (en_iso) {
                    out.human << "classes: " << r.classes.size()
                              << (r.canonical_exact ? "" : " (heuristic forms)") << "\n";
                    json classes = json::array();
                    for (const auto& cls : r.classes) {
                        out.human << "  orbit " << cls.orbit << ": " << facets_text(cls.representative)
                                  << " [f: " << verdict_word(cls.f)
                                  << ", strong: " << verdict_word(cls.strong)
                                  << ", well-distributed: " << verdict_word(cls.well_distributed);
                        json jc = {{"representative", facets_json(cls.representative)},
                                   {"orbit", cls.orbit},
                                   {"f", cls.f},
                                   {"strong", cls.strong},
                                   {"well_distributed", cls.well_distributed}};
                        if (cls.cohen_macaulay) {
                            out.human << ", cm: " << verdict_word(*cls.cohen_macaulay);
                            jc["cohen_macaulay"] = *cls.cohen_macaulay;
                        }
                        out.human << "]\n";
                        classes.push_back(std::move(jc));
                    }
                    rec["canonical_exact"] = r.canonical_exact;
                    rec["classes"] = classes;
                }
                out.record(rec);
            } else {
                std::uint64_t count = 0;
                fcx::enumerate_pure(en_n, en_d, en_m, [&](const fcx::Complex& c) {
                    out.human << facets_text(c) << "\n";
                    out.record({{"command", "enumerate"}, {"facets", facets_json(c)}});
                    ++count;
                });
                out.human << "total " << count << "\n";
            }
        } else if (*cmd_verify) {
            fcx::VerifyOptions vo;
            vo.only = verify_only;
            vo.sample_count = verify_samples;
            fcx::SuiteResult suite = fcx::verify_paper_suite(fixtures_dir, vo);
            if (suite.checks.empty()) {
                std::cerr << "error: --only matched no checks\n";
                return kExitUsage;
            }
            for (const auto& c : suite.checks) {
                out.human << (c.pass ? "PASS" : c.gating ? "FAIL" : "INFO") << " " << c.name
                          << ": " << c.detail << "\n";
                out.record({{"command", "verify"},
                            {"check", c.name},
                            {"pass", c.pass},
                            {"gating", c.gating},
                            {"detail", c.detail}});
            }
            out.human << (suite.all_pass() ? "all checks pass" : "FAILURES PRESENT") << " ("
                      << suite.checks.size() << " checks, " << suite.failed_count()
                      << " failed)\n";
            out.flush();
            return suite.all_pass() ? kExitOk : 1;
        }

        out.flush();
        return kExitOk;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const fcx::parse_error& e) {
        std::cerr << "parse error, line " << e.line << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const fcx::precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const fcx::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
