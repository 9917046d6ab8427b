#include "fcx/verify.hpp"

#include "fcx/duality.hpp"
#include "fcx/enumerate.hpp"
#include "fcx/fideal.hpp"
#include "fcx/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace fcx {

bool SuiteResult::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass || !c.gating; });
}

std::size_t SuiteResult::failed_count() const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (!c.pass && c.gating) ++n;
    return n;
}

namespace {

const FieldSpec kQ = FieldSpec::rationals();

std::string family_str(const SubsetFamily& f) {
    std::string s;
    for (Mask m : f.members()) {
        if (!s.empty()) s += " ";
        s += mask_to_string(m);
    }
    return s.empty() ? "(none)" : s;
}

std::string facets_str(const Complex& c) {
    return family_str(SubsetFamily::of(c.n(), c.facets()));
}

SubsetFamily facet_family(const Complex& c) {
    return SubsetFamily::of(c.n(), c.facets());
}

std::string coeff_str(const std::vector<std::int64_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

bool coeffs_equal(std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    while (!b.empty() && b.back() == 0) b.pop_back();
    return a == b;
}

// Tallies a universally quantified check and keeps the first failure.
struct PropRun {
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::string first_failure;

    void note(bool ok, const std::function<std::string()>& describe) {
        ++checked;
        if (!ok) {
            if (failed == 0) first_failure = describe();
            ++failed;
        }
    }
    bool pass() const { return failed == 0; }
    std::string detail(const std::string& what) const {
        if (pass()) return what + " holds on all " + std::to_string(checked) + " instances";
        return std::to_string(failed) + " of " + std::to_string(checked) +
               " instances fail; first: " + first_failure;
    }
};

class Suite {
  public:
    Suite(std::string dir, VerifyOptions opts) : dir_(std::move(dir)), opts_(std::move(opts)) {}

    SuiteResult run();

  private:
    using Body = std::function<std::pair<bool, std::string>()>;

    void check(SuiteResult& out, const std::string& name, bool gating, const Body& body) {
        if (!opts_.only.empty()) {
            bool hit = false;
            for (const auto& p : opts_.only)
                if (name.rfind(p, 0) == 0) {
                    hit = true;
                    break;
                }
            if (!hit) return;
        }
        CheckResult r;
        r.name = name;
        r.gating = gating;
        try {
            auto [pass, detail] = body();
            r.pass = pass;
            r.detail = detail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        out.checks.push_back(std::move(r));
    }

    std::string path(const std::string& name) const { return dir_ + "/" + name; }

    const Complex& sec2() {
        if (!sec2_) sec2_ = parse_complex_file(path("sec2.cx"));
        return *sec2_;
    }
    const Complex& sec3() {
        if (!sec3_) sec3_ = parse_complex_file(path("sec3.cx"));
        return *sec3_;
    }
    const Complex& sec3_hcomp() {
        if (!sec3_hcomp_) sec3_hcomp_ = parse_complex_file(path("sec3_hcomp.cx"));
        return *sec3_hcomp_;
    }

    // One complex per line, facets as tokens; shared "n N" header.
    const std::vector<Complex>& sec3_list() {
        if (sec3_list_) return *sec3_list_;
        std::ifstream in(path("sec3_list.txt"));
        if (!in) throw error("cannot open '" + path("sec3_list.txt") + "'");
        std::vector<Complex> list;
        std::string line;
        int n = 0;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::vector<std::string> toks;
            std::string t;
            while (ls >> t) toks.push_back(t);
            if (toks.empty() || toks[0][0] == '#') continue;
            if (n == 0) {
                if (toks.size() != 2 || toks[0] != "n")
                    throw error("sec3_list.txt: expected 'n <count>' header");
                n = std::stoi(toks[1]);
                continue;
            }
            std::vector<Mask> facets;
            for (const auto& tok : toks) {
                std::vector<int> vs;
                for (char ch : tok) vs.push_back(ch - '0');
                facets.push_back(mask_from_vertices(vs, n));
            }
            list.push_back(Complex::generated(n, facets));
        }
        sec3_list_ = std::move(list);
        return *sec3_list_;
    }

    // One subset per line; shared "n N" header.
    SubsetFamily load_family(const std::string& name) {
        std::ifstream in(path(name));
        if (!in) throw error("cannot open '" + path(name) + "'");
        std::string line;
        int n = 0;
        std::vector<Mask> members;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::vector<std::string> toks;
            std::string t;
            while (ls >> t) toks.push_back(t);
            if (toks.empty() || toks[0][0] == '#') continue;
            if (n == 0) {
                if (toks.size() != 2 || toks[0] != "n")
                    throw error(name + ": expected 'n <count>' header");
                n = std::stoi(toks[1]);
                continue;
            }
            std::vector<int> vs;
            for (const auto& tok : toks)
                for (char ch : tok) vs.push_back(ch - '0');
            members.push_back(mask_from_vertices(vs, n));
        }
        return SubsetFamily::of(n, std::move(members));
    }

    // Every pure complex on [n]: all facet cardinalities, all counts.
    const std::vector<Complex>& pure_pool(int n) {
        auto& slot = pure_pools_[static_cast<std::size_t>(n)];
        if (slot) return *slot;
        std::vector<Complex> pool;
        for (int d = 1; d <= n; ++d) {
            int top = static_cast<int>(binomial(n, d));
            for (int m = 1; m <= top; ++m)
                enumerate_pure(n, d, m, [&](const Complex& c) { pool.push_back(c); });
        }
        slot = std::move(pool);
        return *slot;
    }

    const std::vector<Complex>& samples6() {
        if (!samples6_) {
            std::vector<Complex> pool;
            pool.reserve(opts_.sample_count);
            sample_pure(6, 3, 10, opts_.sample_count, opts_.sample_seed,
                        [&](const Complex& c) { pool.push_back(c); });
            samples6_ = std::move(pool);
        }
        return *samples6_;
    }

    // Strong complexes among the n = 4 pool and the n = 6 samples.
    const std::vector<Complex>& strong_pool() {
        if (strong_pool_) return *strong_pool_;
        std::vector<Complex> pool;
        for (const Complex& c : pure_pool(4)) {
            int d = card(c.facets().front());
            if (c.facets().size() == binomial(4, d)) continue;
            if (is_strong(c)) pool.push_back(c);
        }
        for (const Complex& c : samples6())
            if (is_strong(c)) pool.push_back(c);
        strong_pool_ = std::move(pool);
        return *strong_pool_;
    }

    // Well-distributed f-complexes among the n = 4 pool, the n = 6
    // samples, and the sec2 fixture.
    const std::vector<Complex>& wdf_pool() {
        if (wdf_pool_) return *wdf_pool_;
        std::vector<Complex> pool;
        auto consider = [&](const Complex& c) {
            int d = card(c.facets().front());
            if (c.n() != 2 * d) return;
            if (!is_well_distributed(c).well_distributed) return;
            if (!is_f_ideal(facet_family(c)).is_f) return;
            pool.push_back(c);
        };
        for (const Complex& c : pure_pool(4)) consider(c);
        for (const Complex& c : samples6()) consider(c);
        consider(sec2());
        wdf_pool_ = std::move(pool);
        return *wdf_pool_;
    }

    std::string dir_;
    VerifyOptions opts_;
    std::optional<Complex> sec2_;
    std::optional<Complex> sec3_;
    std::optional<Complex> sec3_hcomp_;
    std::optional<std::vector<Complex>> sec3_list_;
    std::array<std::optional<std::vector<Complex>>, 7> pure_pools_;
    std::optional<std::vector<Complex>> samples6_;
    std::optional<std::vector<Complex>> strong_pool_;
    std::optional<std::vector<Complex>> wdf_pool_;
};

std::map<std::pair<int, int>, std::uint64_t> sec2_expected_betti() {
    return {{{0, 3}, 10}, {{1, 4}, 15}, {{2, 5}, 6}};
}

std::string betti_str(const BettiTable& t) {
    std::string s;
    for (const auto& [key, mult] : t.entries) {
        if (!s.empty()) s += " ";
        s += "(" + std::to_string(key.first) + "," + std::to_string(key.second) +
             "):" + std::to_string(mult);
    }
    return s.empty() ? "(zero)" : s;
}

} // namespace

SuiteResult Suite::run() {
    SuiteResult out;

    check(out, "sec2-f-ideal", true, [&] {
        auto fam = facet_family(sec2());
        auto v = is_f_ideal(fam);
        std::string detail = "is_f = " + std::string(v.is_f ? "true" : "false") + ", " +
                             std::to_string(fam.size()) + " generators";
        if (!v.is_f) {
            if (v.witness) detail += ", uncovered " + mask_to_string(*v.witness);
            if (v.mismatch_index)
                detail += ", f-vector mismatch at cardinality " +
                          std::to_string(*v.mismatch_index + 1);
            detail += "; generators: " + family_str(fam);
        }
        return std::pair{v.is_f, detail};
    });

    check(out, "sec2-disjoint", true, [&] {
        const Complex& c = sec2();
        Complex dual = newton_dual(c);
        std::vector<Mask> both;
        for (Mask f : c.facets())
            if (std::binary_search(dual.facets().begin(), dual.facets().end(), f, canonical_less))
                both.push_back(f);
        if (both.empty()) return std::pair{true, std::string("facet sets are disjoint")};
        return std::pair{false, "shared facets: " + family_str(SubsetFamily::of(c.n(), both))};
    });

    check(out, "sec2-minimal-primes", true, [&] {
        SubsetFamily expected = load_family("sec2_primes.txt");
        PrimeList pl = minimal_primes(facet_family(sec2()));
        bool ok = pl.components == expected;
        std::string detail = ok ? "all 10 displayed components reproduced"
                                : "computed: " + family_str(pl.components) +
                                      "; expected: " + family_str(expected);
        return std::pair{ok, detail};
    });

    check(out, "sec2-unmixed", true, [&] {
        bool ok = is_unmixed(facet_family(sec2()));
        return std::pair{ok, std::string(ok ? "all components have height 3"
                                            : "component heights differ")};
    });

    auto betti_check = [&](const SubsetFamily& fam) {
        BettiTable t = betti_table(fam, kQ, BettiSubject::Ideal);
        bool ok = t.entries == sec2_expected_betti();
        std::string detail = betti_str(t);
        if (!ok) detail += "; expected (0,3):10 (1,4):15 (2,5):6";
        return std::pair{ok, detail};
    };
    check(out, "sec2-betti-ideal", true, [&] { return betti_check(facet_family(sec2())); });
    check(out, "sec2-betti-dual", true,
          [&] { return betti_check(facet_family(newton_dual(sec2()))); });

    check(out, "sec2-linear-both", true, [&] {
        auto a = has_linear_resolution(facet_family(sec2()), kQ);
        auto b = has_linear_resolution(facet_family(newton_dual(sec2())), kQ);
        bool ok = a.linear && b.linear;
        std::string detail = "ideal: " + std::string(a.linear ? "linear" : *a.reason) +
                             "; dual: " + std::string(b.linear ? "linear" : *b.reason);
        return std::pair{ok, detail};
    });

    check(out, "sec2-cm-both", true, [&] {
        bool a = is_cohen_macaulay(stanley_reisner_complex(facet_family(sec2())), kQ);
        bool b = is_cohen_macaulay(stanley_reisner_complex(facet_family(newton_dual(sec2()))), kQ);
        return std::pair{a && b, "ideal: " + std::string(a ? "CM" : "not CM") +
                                     "; dual: " + std::string(b ? "CM" : "not CM")};
    });

    check(out, "sec2-alexander-self", true, [&] {
        Complex dual = alexander_dual(sec2());
        bool ok = dual == sec2();
        return std::pair{ok, ok ? std::string("alexander dual is the complex itself")
                                : "dual facets: " + facets_str(dual)};
    });

    check(out, "sec2-shellable-neither", true, [&] {
        ShellVerdict a = is_shellable(sec2());
        ShellVerdict b = is_shellable(newton_dual(sec2()));
        bool ok = a.status == ShellStatus::NotShellable && b.status == ShellStatus::NotShellable;
        auto word = [](ShellStatus s) {
            return s == ShellStatus::NotShellable  ? "not shellable"
                   : s == ShellStatus::Shellable   ? "shellable"
                                                   : "budget exhausted";
        };
        return std::pair{ok, "complex: " + std::string(word(a.status)) + " (" +
                                 std::to_string(a.steps) + " steps); newton dual: " +
                                 word(b.status) + " (" + std::to_string(b.steps) + " steps)"};
    });

    check(out, "sec3-list-all-f", true, [&] {
        PropRun run;
        for (const Complex& c : sec3_list())
            run.note(is_f_ideal(facet_family(c)).is_f, [&] { return facets_str(c); });
        bool twelve = sec3_list().size() == 12;
        if (!twelve) return std::pair{false, std::string("fixture does not hold 12 complexes")};
        return std::pair{run.pass(), run.detail("f-ideal")};
    });

    check(out, "sec3-list-strong", true, [&] {
        PropRun run;
        for (const Complex& c : sec3_list())
            run.note(is_strong(c), [&] { return facets_str(c); });
        return std::pair{run.pass(), run.detail("strong")};
    });

    check(out, "sec3-list-hcomp-f", true, [&] {
        PropRun run;
        for (const Complex& c : sec3_list())
            run.note(is_f_ideal(facet_family(homogeneous_complement(c))).is_f,
                     [&] { return facets_str(c); });
        return std::pair{run.pass(), run.detail("complement f-ideal")};
    });

    check(out, "sec3-list-not-wd", true, [&] {
        PropRun run;
        for (const Complex& c : sec3_list())
            run.note(!is_well_distributed(c).well_distributed, [&] { return facets_str(c); });
        return std::pair{run.pass(), run.detail("not well-distributed")};
    });

    check(out, "sec3-list-one-class", true, [&] {
        Complex path = Complex::generated(
            4, {mask_from_vertices({1, 2}, 4), mask_from_vertices({1, 3}, 4),
                mask_from_vertices({2, 4}, 4)});
        CanonicalForm target = canonical_form(path);
        PropRun run;
        for (const Complex& c : sec3_list()) {
            CanonicalForm cf = canonical_form(c);
            run.note(cf.exact && cf.form == target.form, [&] { return facets_str(c); });
        }
        return std::pair{run.pass(),
                         run.detail("isomorphic to the 3-edge path " + facets_str(target.form))};
    });

    check(out, "sec3-list-complete", true, [&] {
        std::vector<std::vector<Mask>> found;
        enumerate_pure(4, 2, 3, [&](const Complex& c) {
            if (is_f_ideal(facet_family(c)).is_f) found.push_back(c.facets());
        });
        std::vector<std::vector<Mask>> listed;
        for (const Complex& c : sec3_list()) listed.push_back(c.facets());
        std::sort(found.begin(), found.end());
        std::sort(listed.begin(), listed.end());
        bool ok = found == listed;
        return std::pair{ok, "enumeration finds " + std::to_string(found.size()) +
                                 " f-complexes; fixture lists " + std::to_string(listed.size()) +
                                 (ok ? ", identical sets" : ", sets differ")};
    });

    check(out, "sec3-classify-counts", true, [&] {
        ClassifyReport r = classify(4, 2, 3);
        bool ok = r.total == 20 && r.f_count == 12 && r.well_distributed_count == 0 &&
                  r.strong_count == 12;
        return std::pair{ok, "total " + std::to_string(r.total) + ", f " +
                                 std::to_string(r.f_count) + ", well-distributed " +
                                 std::to_string(r.well_distributed_count) + ", strong " +
                                 std::to_string(r.strong_count) +
                                 (ok ? "" : "; expected 20/12/0/12")};
    });

    check(out, "sec3-classify-iso", true, [&] {
        ClassifyOptions o;
        o.iso = true;
        ClassifyReport r = classify(4, 2, 3, o);
        std::vector<std::uint64_t> orbits;
        for (const auto& cls : r.classes) orbits.push_back(cls.orbit);
        std::sort(orbits.begin(), orbits.end());
        Complex path = Complex::generated(
            4, {mask_from_vertices({1, 2}, 4), mask_from_vertices({1, 3}, 4),
                mask_from_vertices({2, 4}, 4)});
        Complex target = canonical_form(path).form;
        bool shape = r.classes.size() == 3 && orbits == std::vector<std::uint64_t>{4, 4, 12};
        bool fclass = false;
        for (const auto& cls : r.classes)
            if (cls.f) fclass = cls.orbit == 12 && cls.representative == target;
        std::uint64_t fclasses = 0;
        for (const auto& cls : r.classes) fclasses += cls.f;
        bool ok = shape && fclass && fclasses == 1 && r.canonical_exact;
        std::string detail = std::to_string(r.classes.size()) + " classes, orbits";
        for (auto o2 : orbits) detail += " " + std::to_string(o2);
        detail += fclass ? "; the f-class is the 12-orbit path class"
                         : "; f-class mismatch";
        return std::pair{ok, detail};
    });

    check(out, "sec3b-f", true, [&] {
        auto v = is_f_ideal(facet_family(sec3()));
        return std::pair{v.is_f, "is_f = " + std::string(v.is_f ? "true" : "false") + ", " +
                                     std::to_string(sec3().facets().size()) + " generators"};
    });

    check(out, "sec3b-hcomp", true, [&] {
        Complex hc = homogeneous_complement(sec3());
        bool ok = hc == sec3_hcomp();
        return std::pair{ok, ok ? "matches the displayed 10-member facet set"
                                : "computed: " + facets_str(hc)};
    });

    check(out, "sec3b-l-witness", true, [&] {
        Complex hc = homogeneous_complement(sec3());
        LuVerdict lu = is_lu_set(facet_family(hc));
        Mask want = mask_from_vertices({1, 2}, 6);
        bool ok = !lu.l && lu.l_witness && *lu.l_witness == want;
        std::string detail = lu.l ? std::string("L holds unexpectedly")
                                  : "L fails, uncovered " +
                                        (lu.l_witness ? mask_to_string(*lu.l_witness)
                                                      : std::string("(none)"));
        return std::pair{ok, detail};
    });

    check(out, "sec3b-not-strong", true, [&] {
        bool strong = is_strong(sec3());
        return std::pair{!strong, std::string(strong ? "strong, expected not strong"
                                                     : "not strong, as displayed")};
    });

    check(out, "prop-newton-n4", true, [&] {
        PropRun run;
        for (int d = 1; d <= 3; ++d) {
            int top = static_cast<int>(binomial(4, d));
            for (int m = 1; m <= top; ++m)
                enumerate_pure(4, d, m, [&](const Complex& c) {
                    bool a = is_f_ideal(facet_family(c)).is_f;
                    bool b = is_f_ideal(facet_family(newton_dual(c))).is_f;
                    run.note(a == b, [&] { return facets_str(c); });
                });
        }
        return std::pair{run.pass(), run.detail("f-ideal newton duality")};
    });

    check(out, "prop-newton-n6", true, [&] {
        PropRun run;
        for (const Complex& c : samples6()) {
            bool a = is_f_ideal(facet_family(c)).is_f;
            bool b = is_f_ideal(facet_family(newton_dual(c))).is_f;
            run.note(a == b, [&] { return facets_str(c); });
        }
        return std::pair{run.pass(), run.detail("f-ideal newton duality (sampled)")};
    });

    check(out, "prop-commute-n4", true, [&] {
        PropRun run;
        for (int d = 1; d <= 3; ++d) {
            int top = static_cast<int>(binomial(4, d));
            for (int m = 1; m < top; ++m)
                enumerate_pure(4, d, m, [&](const Complex& c) {
                    Complex a = newton_dual(homogeneous_complement(c));
                    Complex b = homogeneous_complement(newton_dual(c));
                    run.note(a == b, [&] { return facets_str(c); });
                });
        }
        return std::pair{run.pass(), run.detail("complement/dual commutation")};
    });

    check(out, "prop-commute-n6", true, [&] {
        PropRun run;
        for (const Complex& c : samples6()) {
            Complex a = newton_dual(homogeneous_complement(c));
            Complex b = homogeneous_complement(newton_dual(c));
            run.note(a == b, [&] { return facets_str(c); });
        }
        return std::pair{run.pass(), run.detail("complement/dual commutation (sampled)")};
    });

    check(out, "prop-strong-nonfaces", true, [&] {
        PropRun run;
        for (const Complex& c : strong_pool()) {
            SubsetFamily nf = minimal_nonfaces(c);
            SubsetFamily hc = facet_family(homogeneous_complement(c));
            run.note(nf == hc, [&] { return facets_str(c); });
        }
        return std::pair{run.pass(), run.detail("N(c) = F(c') on strong complexes")};
    });

    check(out, "prop-strong-alexander", true, [&] {
        PropRun run;
        for (const Complex& c : strong_pool()) {
            Complex a = alexander_dual(c);
            Complex b = homogeneous_complement(newton_dual(c));
            run.note(a == b, [&] { return facets_str(c); });
        }
        return std::pair{run.pass(), run.detail("alexander dual = (c^c)' on strong complexes")};
    });

    check(out, "prop-eagon-reiner", true, [&] {
        PropRun run;
        for (int n = 1; n <= 5; ++n)
            for (const Complex& c : pure_pool(n)) {
                if (c.facets().size() == 1 && c.facets()[0] == full_mask(n)) continue;
                bool cm = is_cohen_macaulay(c, kQ);
                SubsetFamily gens = minimal_nonfaces(alexander_dual(c));
                bool lin = has_linear_resolution(gens, kQ).linear;
                run.note(cm == lin, [&] {
                    return facets_str(c) + " on [" + std::to_string(n) + "]: CM " +
                           (cm ? "true" : "false") + ", dual-ideal linear " +
                           (lin ? "true" : "false");
                });
            }
        return std::pair{run.pass(), run.detail("CM(c) = linearity of the dual ideal")};
    });

    check(out, "prop-sec2-theorem", true, [&] {
        PropRun run;
        for (const Complex& c : wdf_pool()) {
            Complex dual = newton_dual(c);
            Complex sr = stanley_reisner_complex(facet_family(c));
            bool identity = sr == dual;
            bool cm = is_cohen_macaulay(dual, kQ);
            bool lin = has_linear_resolution(facet_family(c), kQ).linear;
            run.note(identity && cm == lin, [&] {
                return facets_str(c) + ": SR-identity " + (identity ? "ok" : "broken") +
                       ", CM " + (cm ? "true" : "false") + ", linear " + (lin ? "true" : "false");
            });
        }
        return std::pair{run.pass(),
                         run.detail("CM = linear on well-distributed f-complexes")};
    });

    check(out, "prop-sec3-theorem", true, [&] {
        PropRun run;
        for (const Complex& c : strong_pool()) {
            Complex dual = newton_dual(c);
            Complex hc = homogeneous_complement(c);
            bool a = is_cohen_macaulay(c, kQ);
            bool b = has_linear_resolution(facet_family(dual), kQ).linear;
            Complex sr_hc = stanley_reisner_complex(facet_family(hc));
            bool cc = is_cohen_macaulay(sr_hc, kQ);
            bool d2 = is_cohen_macaulay(stanley_reisner_complex(facet_family(dual)), kQ);
            bool e = has_linear_resolution(facet_family(hc), kQ).linear;
            run.note(a == b && b == cc && sr_hc == c && d2 == e, [&] {
                return facets_str(c) + ": complex CM " + (a ? "t" : "f") + ", I(dual) linear " +
                       (b ? "t" : "f") + ", I(complement) CM " + (cc ? "t" : "f") +
                       ", I(dual) CM " + (d2 ? "t" : "f") + ", I(complement) linear " +
                       (e ? "t" : "f");
            });
        }
        return std::pair{run.pass(), run.detail("three-way equivalence on strong complexes")};
    });

    check(out, "oracle-primes-routes", true, [&] {
        PropRun run;
        auto probe = [&](const SubsetFamily& fam) {
            PrimeList pl = minimal_primes(fam);
            run.note(!pl.components.empty(), [&] { return family_str(fam); });
        };
        probe(facet_family(sec2()));
        probe(facet_family(sec3()));
        for (const Complex& c : sec3_list()) probe(facet_family(c));
        for (const Complex& c : pure_pool(4)) probe(facet_family(c));
        for (const Complex& c : samples6()) probe(facet_family(c));
        return std::pair{run.pass(), run.detail("transversal/SR route agreement")};
    });

    check(out, "oracle-nonfaces-sweep", true, [&] {
        PropRun run;
        auto probe = [&](const Complex& c) {
            run.note(minimal_nonfaces(c) == minimal_nonfaces_by_sweep(c),
                     [&] { return facets_str(c); });
        };
        probe(sec2());
        probe(sec3());
        for (const Complex& c : sec3_list()) probe(c);
        for (const Complex& c : pure_pool(4)) probe(c);
        return std::pair{run.pass(), run.detail("layered/sweep nonface agreement")};
    });

    check(out, "oracle-kpoly-small", true, [&] {
        PropRun run;
        auto probe = [&](const Complex& c) {
            std::vector<std::int64_t> kp = k_polynomial(c);
            SubsetFamily nf = minimal_nonfaces(c);
            std::vector<std::int64_t> alt;
            if (nf.empty())
                alt = {1};
            else
                alt = betti_table(nf, kQ, BettiSubject::Quotient).alternating_sum_by_degree();
            run.note(coeffs_equal(kp, alt), [&] {
                return facets_str(c) + ": K " + coeff_str(kp) + " vs Betti " + coeff_str(alt);
            });
        };
        for (int n = 1; n <= 5; ++n) {
            probe(Complex::empty_complex(n));
            for (const Complex& c : pure_pool(n)) probe(c);
        }
        return std::pair{run.pass(), run.detail("K-polynomial/Betti identity")};
    });

    check(out, "oracle-kpoly-sec2", true, [&] {
        Complex sr = stanley_reisner_complex(facet_family(sec2()));
        std::vector<std::int64_t> kp = k_polynomial(sr);
        std::vector<std::int64_t> alt =
            betti_table(facet_family(sec2()), kQ, BettiSubject::Quotient)
                .alternating_sum_by_degree();
        std::vector<std::int64_t> expected = {1, 0, 0, -10, 15, -6};
        bool ok = coeffs_equal(kp, alt) && coeffs_equal(kp, expected);
        return std::pair{ok, "K " + coeff_str(kp) + ", Betti " + coeff_str(alt)};
    });

    check(out, "homology-conventions", true, [&] {
        PropRun run;
        std::vector<FieldSpec> fields = {kQ, FieldSpec::prime_field(2)};
        for (const FieldSpec& k : fields) {
            auto dims_of = [&](const Complex& c) { return reduced_homology_dims(c, k); };
            Complex hollow = Complex::generated(
                3, {mask_from_vertices({1, 2}, 3), mask_from_vertices({1, 3}, 3),
                    mask_from_vertices({2, 3}, 3)});
            HomologyDims h = dims_of(hollow);
            run.note(h.at(-1) == 0 && h.at(0) == 0 && h.at(1) == 1,
                     [&] { return "hollow triangle over " + k.to_string(); });
            Complex full = Complex::generated(3, {mask_from_vertices({1, 2, 3}, 3)});
            HomologyDims hf = dims_of(full);
            run.note(hf.at(-1) == 0 && hf.at(0) == 0 && hf.at(1) == 0 && hf.at(2) == 0,
                     [&] { return "full simplex over " + k.to_string(); });
            Complex two = Complex::generated(
                2, {mask_from_vertices({1}, 2), mask_from_vertices({2}, 2)});
            HomologyDims ht = dims_of(two);
            run.note(ht.at(-1) == 0 && ht.at(0) == 1,
                     [&] { return "two points over " + k.to_string(); });
            HomologyDims he = dims_of(Complex::empty_complex(1));
            run.note(he.at(-1) == 1, [&] { return "empty complex over " + k.to_string(); });
        }
        return std::pair{run.pass(), run.detail("reduced homology conventions")};
    });

    check(out, "betti-gf2", false, [&] {
        BettiTable t = betti_table(facet_family(sec2()), FieldSpec::prime_field(2),
                                   BettiSubject::Ideal);
        bool same = t.entries == sec2_expected_betti();
        return std::pair{same, "GF(2) table " + betti_str(t) +
                                   (same ? " agrees with the rational table"
                                         : " differs from the rational table")};
    });

    return out;
}

SuiteResult verify_paper_suite(const std::string& fixtures_dir, const VerifyOptions& opts) {
    Suite suite(fixtures_dir, opts);
    return suite.run();
}

} // namespace fcx
