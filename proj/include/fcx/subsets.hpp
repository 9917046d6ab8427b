#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "fcx/errors.hpp"

namespace fcx {

/// A subset of the vertex set [n] = {1..n}, n <= 64. Vertex v occupies bit
/// v-1. The empty set is mask 0.
using Mask = std::uint64_t;

constexpr int kMaxVertices = 64;

inline int card(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) {
    return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

/// Canonical subset order: by cardinality, then numerically.
inline bool canonical_less(Mask a, Mask b) {
    int ca = card(a), cb = card(b);
    if (ca != cb) return ca < cb;
    return a < b;
}

/// Vertices of a mask as 1-based labels, ascending.
std::vector<int> mask_vertices(Mask m);

/// Mask from 1-based vertex labels. Throws on labels outside [1, n] or
/// repeats.
Mask mask_from_vertices(const std::vector<int>& vs, int n);

/// "{1,2,3}" rendering used in witnesses and diagnostics; "{}" for the
/// empty set.
std::string mask_to_string(Mask m);

/// "1 2 3" rendering used by the file format.
std::string mask_to_spaced(Mask m);

/// Binomial coefficient; exact for all n <= 64 (values fit in 64 bits).
std::uint64_t binomial(int n, int k);

/// All k-subsets of [n] in increasing numeric mask order.
std::vector<Mask> all_subsets_of_cardinality(int n, int k);

/// The rank'th m-subset of the given pool (pool sorted ascending), in
/// lexicographic order of the selected index sequence. rank < C(pool, m).
std::vector<std::uint32_t> unrank_combination(std::uint64_t rank, std::uint32_t pool, std::uint32_t m);

/// Visit submasks of m (including m and 0), descending numeric order.
template <typename F>
void for_each_submask(Mask m, F&& f) {
    Mask s = m;
    while (true) {
        f(s);
        if (s == 0) break;
        s = (s - 1) & m;
    }
}

} // namespace fcx
