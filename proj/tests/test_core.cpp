#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fcx/complex.hpp"
#include "fcx/enumerate.hpp"
#include "fcx/errors.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <set>

using namespace fcx;

namespace {

Mask mk(std::initializer_list<int> vs, int n) {
    return mask_from_vertices(std::vector<int>(vs), n);
}

Complex cx(int n, std::initializer_list<std::initializer_list<int>> facets) {
    std::vector<Mask> ms;
    for (const auto& f : facets) ms.push_back(mk(f, n));
    return Complex::generated(n, ms);
}

// Every pure complex with 1 <= m <= cap facets of each cardinality.
std::vector<Complex> pure_pool(int n, std::uint64_t cap = 2000) {
    std::vector<Complex> pool;
    for (int d = 1; d <= n; ++d) {
        std::uint64_t top = binomial(n, d);
        for (std::uint64_t m = 1; m <= top; ++m) {
            if (enumeration_size(n, d, static_cast<int>(m)) > cap) continue;
            enumerate_pure(n, d, static_cast<int>(m),
                           [&](const Complex& c) { pool.push_back(c); });
        }
    }
    return pool;
}

} // namespace

TEST_CASE("mask helpers") {
    CHECK(card(0) == 0);
    CHECK(card(0b1011) == 3);
    CHECK(full_mask(1) == 1);
    CHECK(full_mask(6) == 0b111111);
    CHECK(full_mask(64) == ~Mask{0});
    CHECK(subset_of(0b001, 0b011));
    CHECK(!subset_of(0b100, 0b011));
    CHECK(subset_of(0, 0));

    Mask m = mask_from_vertices({3, 1, 5}, 6);
    CHECK(m == 0b10101);
    CHECK(mask_vertices(m) == std::vector<int>{1, 3, 5});
    CHECK(mask_to_string(m) == "{1,3,5}");
    CHECK(mask_to_spaced(m) == "1 3 5");
    CHECK_THROWS_AS(mask_from_vertices({0}, 6), precondition_error);
    CHECK_THROWS_AS(mask_from_vertices({7}, 6), precondition_error);
    CHECK_THROWS_AS(mask_from_vertices({2, 2}, 6), precondition_error);
}

TEST_CASE("canonical order: cardinality first, then numeric") {
    CHECK(canonical_less(0b001, 0b010));
    CHECK(canonical_less(0b100, 0b011)); // {3} before {1,2}
    CHECK(!canonical_less(0b011, 0b100));
    CHECK(canonical_less(0b011, 0b101));
}

TEST_CASE("binomial matches a Pascal triangle") {
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::binomial_pascal(n, k));
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(64, 0) == 1);
    CHECK(binomial(64, 1) == 64);
    CHECK(binomial(64, 32) == 1832624140942590534ULL);
    CHECK(binomial(63, 31) == 916312070471295267ULL);
    CHECK(binomial(5, 7) == 0);
}

TEST_CASE("all_subsets_of_cardinality is the full ascending slice") {
    for (int n : {1, 4, 6}) {
        for (int k = 0; k <= n; ++k) {
            std::vector<Mask> got = all_subsets_of_cardinality(n, k);
            CHECK(got.size() == binomial(n, k));
            CHECK(std::is_sorted(got.begin(), got.end()));
            for (Mask m : got) {
                CHECK(card(m) == k);
                CHECK(subset_of(m, full_mask(n)));
            }
        }
    }
    CHECK(all_subsets_of_cardinality(64, 64) == std::vector<Mask>{~Mask{0}});
    CHECK(all_subsets_of_cardinality(64, 0) == std::vector<Mask>{0});
    CHECK(all_subsets_of_cardinality(64, 1).size() == 64);
}

TEST_CASE("unrank_combination agrees with iteration order") {
    std::vector<Mask> all = all_subsets_of_cardinality(6, 3);
    for (std::uint64_t r = 0; r < all.size(); ++r) {
        std::vector<std::uint32_t> picks = unrank_combination(r, 20, 3);
        CHECK(picks.size() == 3);
        CHECK(std::is_sorted(picks.begin(), picks.end()));
    }
    CHECK(unrank_combination(0, 5, 2) == std::vector<std::uint32_t>{0, 1});
    CHECK(unrank_combination(9, 5, 2) == std::vector<std::uint32_t>{3, 4});
}

TEST_CASE("SubsetFamily canonicalizes, deduplicates, reduces") {
    SubsetFamily fam = SubsetFamily::of(4, {0b0011, 0b0100, 0b0011, 0b1100});
    CHECK(fam.size() == 3);
    CHECK(fam.members() == std::vector<Mask>{0b0100, 0b0011, 0b1100});
    CHECK(fam.contains(0b0011));
    CHECK(!fam.contains(0b1010));
    CHECK(fam.uniform_cardinality() == std::nullopt);

    SubsetFamily uni = SubsetFamily::of_vertex_lists(4, {{1, 2}, {3, 4}});
    CHECK(uni.uniform_cardinality() == 2);

    SubsetFamily nested = SubsetFamily::of(4, {0b0001, 0b0011, 0b1000});
    CHECK(nested.inclusion_minimal().members() == std::vector<Mask>{0b0001, 0b1000});
    CHECK(nested.inclusion_maximal().members() == std::vector<Mask>{0b1000, 0b0011});
}

TEST_CASE("Complex::generated keeps maximal faces only") {
    Complex c = Complex::generated(4, {0b0011, 0b0001, 0b0100});
    CHECK(c.facets() == std::vector<Mask>{0b0100, 0b0011});
    CHECK(c.dim() == 1);
    CHECK(!c.is_pure());
    CHECK(c.is_face(0b0001));
    CHECK(c.is_face(0));
    CHECK(!c.is_face(0b1000));

    CHECK_THROWS_AS(Complex::generated(4, {}), precondition_error);
    CHECK_THROWS_AS(Complex::generated(2, {0b100}), precondition_error);

    // Generated by the empty face alone: the complex {∅}.
    Complex e = Complex::generated(3, {0});
    CHECK(e.is_empty_complex());
    CHECK(e.dim() == -1);
    CHECK(e.is_pure());
    CHECK(e.facets().empty());

    Complex v = Complex::void_complex(3);
    CHECK(v.is_void());
    CHECK(v.dim() == -2);
    CHECK(!v.is_face(0));
    CHECK(v != e);
}

TEST_CASE("dimension_and_purity") {
    CHECK(dimension_and_purity(Complex::void_complex(2)) == std::pair{-2, true});
    CHECK(dimension_and_purity(Complex::empty_complex(2)) == std::pair{-1, true});
    CHECK(dimension_and_purity(cx(4, {{1, 2}, {3, 4}})) == std::pair{1, true});
    CHECK(dimension_and_purity(cx(4, {{1, 2}, {3}})) == std::pair{1, false});
}

TEST_CASE("f_vector on known complexes and against the oracle") {
    CHECK(f_vector(Complex::empty_complex(5)).entries.empty());
    CHECK(f_vector(Complex::empty_complex(5)).dim() == -1);
    CHECK_THROWS_AS(f_vector(Complex::void_complex(2)), precondition_error);

    Complex hollow = cx(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(f_vector(hollow).entries == std::vector<std::uint64_t>{3, 3});

    Complex simplex = cx(4, {{1, 2, 3, 4}});
    CHECK(f_vector(simplex).entries == std::vector<std::uint64_t>{4, 6, 4, 1});

    for (const Complex& c : pure_pool(4))
        CHECK(f_vector(c) == oracle::f_vector(c));
    for (const Complex& c : pure_pool(5, 300))
        CHECK(f_vector(c) == oracle::f_vector(c));
}

TEST_CASE("all_faces and faces_of_cardinality match the sweep") {
    for (const Complex& c : pure_pool(4)) {
        std::set<Mask> expect = oracle::faces(c);
        std::vector<Mask> got = c.all_faces();
        CHECK(got.size() == expect.size());
        for (Mask m : got) CHECK(expect.count(m) == 1);

        for (int k = 0; k <= c.n(); ++k) {
            SubsetFamily slice = faces_of_cardinality(c, k);
            std::size_t want = 0;
            for (Mask m : expect)
                if (card(m) == k) ++want;
            CHECK(slice.size() == want);
            for (Mask m : slice.members()) CHECK(expect.count(m) == 1);
        }
    }
    CHECK(faces_of_cardinality(cx(3, {{1, 2}}), 0).members() == std::vector<Mask>{0});
}

TEST_CASE("link: definition spot checks and oracle property") {
    Complex hollow = cx(3, {{1, 2}, {1, 3}, {2, 3}});
    Complex lk1 = link(hollow, mk({1}, 3));
    CHECK(lk1.facets() == std::vector<Mask>{0b010, 0b100});

    CHECK(link(hollow, mk({1, 2}, 3)).is_empty_complex());
    CHECK(link(hollow, 0) == hollow);
    CHECK_THROWS_AS(link(hollow, mk({1, 2, 3}, 3)), precondition_error);

    for (const Complex& c : pure_pool(4)) {
        std::set<Mask> all = oracle::faces(c);
        for (Mask f : all) {
            Complex lk = link(c, f);
            std::set<Mask> expect;
            for (Mask g : all)
                if ((g & f) == 0 && all.count(g | f)) expect.insert(g);
            std::set<Mask> got = lk.is_void() ? std::set<Mask>{} : oracle::faces(lk);
            CHECK(got == expect);
        }
    }
}

TEST_CASE("restriction: conventions and oracle property") {
    Complex hollow = cx(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(restriction(hollow, 0).is_empty_complex());
    CHECK(restriction(hollow, mk({1, 2}, 3)).facets() == std::vector<Mask>{0b011});

    Complex edge = cx(3, {{1, 2}});
    CHECK(restriction(edge, mk({3}, 3)).is_void());

    for (const Complex& c : pure_pool(4)) {
        std::set<Mask> all = oracle::faces(c);
        for (Mask s = 0; s <= full_mask(c.n()); ++s) {
            Complex r = restriction(c, s);
            std::set<Mask> expect;
            for (Mask g : all)
                if (subset_of(g, s)) expect.insert(g);
            // A nonempty window holding no vertex of c restricts to void.
            if (s != 0 && expect.size() == 1) expect.clear();
            std::set<Mask> got = r.is_void() ? std::set<Mask>{} : oracle::faces(r);
            CHECK(got == expect);
        }
    }
}

TEST_CASE("minimal_nonfaces: both routes equal the oracle") {
    Complex hollow = cx(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(minimal_nonfaces(hollow).members() == std::vector<Mask>{0b111});

    Complex simplex = cx(3, {{1, 2, 3}});
    CHECK(minimal_nonfaces(simplex).empty());

    Complex empty = Complex::empty_complex(3);
    CHECK(minimal_nonfaces(empty).members() == std::vector<Mask>{0b001, 0b010, 0b100});

    CHECK_THROWS_AS(minimal_nonfaces(Complex::void_complex(2)), precondition_error);

    for (const Complex& c : pure_pool(5, 300)) {
        SubsetFamily expect = oracle::min_nonfaces(c);
        CHECK(minimal_nonfaces(c) == expect);
        CHECK(minimal_nonfaces_by_sweep(c) == expect);
    }
}

TEST_CASE("stanley_reisner_complex equals the power-set sweep") {
    SubsetFamily gens = SubsetFamily::of_vertex_lists(3, {{1, 2}});
    Complex sr = stanley_reisner_complex(gens);
    CHECK(sr.facets() == std::vector<Mask>{mk({1, 3}, 3), mk({2, 3}, 3)});

    CHECK_THROWS_AS(stanley_reisner_complex(SubsetFamily::of(3, {0})), unit_ideal_error);
    CHECK_THROWS_AS(stanley_reisner_complex(SubsetFamily{}), precondition_error);

    // Generators covering every vertex as singletons leave only {∅}.
    SubsetFamily all_vars = SubsetFamily::of_vertex_lists(2, {{1}, {2}});
    CHECK(stanley_reisner_complex(all_vars).is_empty_complex());

    for (const Complex& c : pure_pool(4)) {
        SubsetFamily fam = SubsetFamily::of(c.n(), c.facets());
        CHECK(stanley_reisner_complex(fam) == oracle::sr_complex(fam));
    }
    for (const Complex& c : pure_pool(5, 120)) {
        SubsetFamily fam = SubsetFamily::of(c.n(), c.facets());
        CHECK(stanley_reisner_complex(fam) == oracle::sr_complex(fam));
    }

    // Nonface complex of the minimal nonfaces recovers the complex.
    for (const Complex& c : pure_pool(4)) {
        SubsetFamily nf = minimal_nonfaces(c);
        if (nf.empty()) continue; // full simplex
        CHECK(stanley_reisner_complex(nf) == c);
    }
}

TEST_CASE("minimal_transversals equals the brute-force hitting sets") {
    SubsetFamily star = SubsetFamily::of_vertex_lists(4, {{1, 2}, {1, 3}, {1, 4}});
    CHECK(minimal_transversals(star).members() ==
          std::vector<Mask>{0b0001, 0b1110});

    for (const Complex& c : pure_pool(4)) {
        SubsetFamily fam = SubsetFamily::of(c.n(), c.facets());
        CHECK(minimal_transversals(fam) == oracle::transversals(fam));
    }
    for (const Complex& c : pure_pool(5, 120)) {
        SubsetFamily fam = SubsetFamily::of(c.n(), c.facets());
        CHECK(minimal_transversals(fam) == oracle::transversals(fam));
    }
}
