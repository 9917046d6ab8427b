#pragma once

#include "fcx/complex.hpp"
#include "fcx/homalg.hpp"

#include <functional>
#include <optional>

namespace fcx {

// Number of pure complexes with m facets of cardinality d on [n].
std::uint64_t enumeration_size(int n, int d, int m);

// Visit every m-subset of [n]_d exactly once as a pure complex, in
// lexicographic order of the selected facet-mask lists.
void enumerate_pure(int n, int d, int m, const std::function<void(const Complex&)>& visit);

// The slice [begin, end) of the same stream, addressed by combination
// rank; the shard interface behind parallel classification. Requires
// C(n, d) <= 64 so ranks fit the exact unranking machinery.
void enumerate_pure_range(int n, int d, int m, std::uint64_t begin, std::uint64_t end,
                          const std::function<void(const Complex&)>& visit);

// count members drawn uniformly with replacement from the (n, d, m)
// pool. Bit-reproducible for a fixed seed on any platform: the raw
// mt19937_64 stream feeds a hand-rolled rejection step, never a
// distribution adapter.
void sample_pure(int n, int d, int m, std::uint64_t count, std::uint64_t seed,
                 const std::function<void(const Complex&)>& visit);

struct CanonicalForm {
    Complex form;
    // True when the form came from the exhaustive permutation search
    // (n <= 10). The fallback relabels by a deterministic vertex key:
    // equal fallback forms still certify isomorphism, distinct ones
    // prove nothing.
    bool exact = true;
};

// The least relabeling of c under the canonical facet-list order.
// Isomorphism (ambient vertex set included) is equality of exact forms.
CanonicalForm canonical_form(const Complex& c);

struct ClassifyOptions {
    bool iso = false;
    // Tally Cohen-Macaulayness of each complex (markedly slower).
    bool cm = false;
    FieldSpec field = FieldSpec::rationals();
    int jobs = 1;
};

struct IsoClass {
    Complex representative;
    std::uint64_t orbit = 0;
    bool f = false;
    bool strong = false;
    bool well_distributed = false;
    std::optional<bool> cohen_macaulay;
};

struct ClassifyReport {
    int n = 0;
    int d = 0;
    int m = 0;
    std::uint64_t total = 0;
    std::uint64_t f_count = 0;
    std::uint64_t strong_count = 0;
    // Complexes that are f and well-distributed; stays 0 unless n = 2d.
    std::uint64_t well_distributed_count = 0;
    std::uint64_t cm_count = 0;
    bool iso = false;
    bool canonical_exact = true;
    std::vector<IsoClass> classes;
    // Rank ranges the run was split into, for reproducibility.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> shards;
};

ClassifyReport classify(int n, int d, int m, const ClassifyOptions& opts = {});

} // namespace fcx
