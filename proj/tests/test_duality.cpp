#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fcx/duality.hpp"
#include "fcx/enumerate.hpp"
#include "fcx/errors.hpp"

#include "oracles.hpp"

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

TEST_CASE("newton_dual complements every facet") {
    Complex c = cx(3, {{1, 2}});
    CHECK(newton_dual(c) == cx(3, {{3}}));

    Complex mixed = cx(4, {{1}, {2, 3}});
    CHECK(newton_dual(mixed) == cx(4, {{2, 3, 4}, {1, 4}}));

    CHECK(newton_dual(Complex::empty_complex(3)) == cx(3, {{1, 2, 3}}));
    CHECK_THROWS_AS(newton_dual(cx(2, {{1, 2}})), precondition_error);
    CHECK_THROWS_AS(newton_dual(Complex::void_complex(2)), precondition_error);
}

TEST_CASE("newton_dual is an involution away from the full simplex") {
    // Complements of an antichain stay an antichain, so no facet is lost.
    for (const Complex& c : pure_pool(4)) {
        if (c.facets().front() == full_mask(c.n())) continue;
        CHECK(newton_dual(newton_dual(c)) == c);
    }
    for (const Complex& c : pure_pool(5, 300)) {
        if (c.facets().front() == full_mask(c.n())) continue;
        CHECK(newton_dual(newton_dual(c)) == c);
    }
}

TEST_CASE("alexander_dual on landmark complexes") {
    // Boundary of the triangle: the one minimal nonface is the whole set,
    // so the dual collapses to {∅}.
    Complex hollow = cx(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(alexander_dual(hollow).is_empty_complex());

    // Dual of {∅}: minimal nonfaces are the vertices, complements their
    // opposite facets.
    Complex e = Complex::empty_complex(3);
    CHECK(alexander_dual(e) == cx(3, {{1, 2}, {1, 3}, {2, 3}}));

    // A single edge on four vertices.
    Complex edge = cx(4, {{1, 2}});
    SubsetFamily nf = minimal_nonfaces(edge);
    Complex dual = alexander_dual(edge);
    for (Mask m : nf.members()) CHECK(dual.is_face(full_mask(4) & ~m));

    CHECK_THROWS_AS(alexander_dual(cx(3, {{1, 2, 3}})), precondition_error);
    CHECK_THROWS_AS(alexander_dual(Complex::void_complex(3)), precondition_error);
}

TEST_CASE("alexander_dual is an involution") {
    for (const Complex& c : pure_pool(4)) {
        if (minimal_nonfaces(c).empty()) continue; // full simplex
        CHECK(alexander_dual(alexander_dual(c)) == c);
    }
}

TEST_CASE("alexander_dual faces are complements of nonfaces") {
    for (const Complex& c : pure_pool(4)) {
        if (minimal_nonfaces(c).empty()) continue;
        Complex dual = alexander_dual(c);
        std::set<Mask> cf = oracle::faces(c);
        Mask full = full_mask(c.n());
        for (Mask s = 0;; ++s) {
            bool dual_face = dual.is_face(s);
            bool c_nonface = !cf.count(full & ~s);
            CHECK(dual_face == c_nonface);
            if (s == full) break;
        }
    }
}

TEST_CASE("homogeneous_complement: definition and errors") {
    Complex c = cx(4, {{1, 2}, {1, 3}, {2, 4}});
    Complex hc = homogeneous_complement(c);
    CHECK(hc == cx(4, {{1, 4}, {2, 3}, {3, 4}}));

    CHECK_THROWS_AS(homogeneous_complement(cx(3, {{1, 2}, {3}})), precondition_error);
    CHECK_THROWS_AS(homogeneous_complement(Complex::empty_complex(3)), precondition_error);
    CHECK_THROWS_AS(homogeneous_complement(Complex::void_complex(3)), precondition_error);
    // Facets already exhaust the 1-subsets of [2].
    CHECK_THROWS_AS(homogeneous_complement(cx(2, {{1}, {2}})), precondition_error);
}

TEST_CASE("homogeneous_complement is an involution and splits [n]_d") {
    for (const Complex& c : pure_pool(4)) {
        int d = c.dim() + 1;
        if (c.facets().size() == binomial(c.n(), d)) continue;
        Complex hc = homogeneous_complement(c);
        CHECK(homogeneous_complement(hc) == c);
        CHECK(c.facets().size() + hc.facets().size() == binomial(c.n(), d));
        for (Mask m : all_subsets_of_cardinality(c.n(), d)) {
            bool in_c = std::binary_search(c.facets().begin(), c.facets().end(), m,
                                           canonical_less);
            bool in_hc = std::binary_search(hc.facets().begin(), hc.facets().end(), m,
                                            canonical_less);
            CHECK(in_c != in_hc);
        }
    }
}

TEST_CASE("complement operations commute: (c')^c equals (c^c)'") {
    for (const Complex& c : pure_pool(4)) {
        int d = c.dim() + 1;
        if (c.facets().size() == binomial(c.n(), d)) continue;
        if (c.facets().front() == full_mask(c.n())) continue;
        Complex lhs = newton_dual(homogeneous_complement(c));
        Complex rhs = homogeneous_complement(newton_dual(c));
        CHECK(lhs == rhs);
    }
}
