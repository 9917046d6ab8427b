#include "fcx/fideal.hpp"

#include "fcx/duality.hpp"

#include <algorithm>
#include <unordered_set>

namespace fcx {

namespace {

int require_uniform(const SubsetFamily& fam) {
    auto d = fam.uniform_cardinality();
    if (!d)
        throw precondition_error(fam.empty() ? "shadow of an empty family is undefined"
                                             : "family is not uniform");
    return *d;
}

} // namespace

SubsetFamily lower_shadow(const SubsetFamily& fam) {
    int d = require_uniform(fam);
    if (d < 1) throw precondition_error("lower shadow needs members of cardinality at least 1");
    std::unordered_set<Mask> out;
    for (Mask m : fam.members())
        for (Mask rem = m; rem; rem &= rem - 1) out.insert(m & ~(rem & ~(rem - 1)));
    return SubsetFamily::of(fam.n(), std::vector<Mask>(out.begin(), out.end()));
}

SubsetFamily upper_shadow(const SubsetFamily& fam) {
    int d = require_uniform(fam);
    if (d > fam.n())
        throw precondition_error("upper shadow needs members of cardinality at most n");
    std::unordered_set<Mask> out;
    Mask full = full_mask(fam.n());
    for (Mask m : fam.members()) {
        Mask rest = full & ~m;
        for (Mask rem = rest; rem; rem &= rem - 1) out.insert(m | (rem & ~(rem - 1)));
    }
    return SubsetFamily::of(fam.n(), std::vector<Mask>(out.begin(), out.end()));
}

LuVerdict is_lu_set(const SubsetFamily& fam) {
    int d = require_uniform(fam);
    int n = fam.n();
    LuVerdict v;
    SubsetFamily lo = lower_shadow(fam);
    v.l = lo.size() == binomial(n, d - 1);
    if (!v.l)
        for (Mask m : all_subsets_of_cardinality(n, d - 1))
            if (!lo.contains(m)) {
                v.l_witness = m;
                break;
            }
    if (d == n) {
        // No (d+1)-subsets exist; the upper condition holds vacuously.
        v.u = true;
        return v;
    }
    SubsetFamily up = upper_shadow(fam);
    v.u = up.size() == binomial(n, d + 1);
    if (!v.u)
        for (Mask m : all_subsets_of_cardinality(n, d + 1))
            if (!up.contains(m)) {
                v.u_witness = m;
                break;
            }
    return v;
}

FIdealVerdict is_f_ideal(const SubsetFamily& gens) {
    if (gens.empty()) throw precondition_error("no generators");
    SubsetFamily reduced = gens.inclusion_minimal();
    if (reduced.members().front() == 0) throw unit_ideal_error();

    FIdealVerdict v;
    Complex facet_cx = Complex::generated(reduced);
    Complex nonface_cx = stanley_reisner_complex(reduced);
    v.facet_f = f_vector(facet_cx);
    v.nonface_f = f_vector(nonface_cx);
    bool general = v.facet_f == v.nonface_f;
    if (!general) {
        std::size_t len = std::max(v.facet_f.entries.size(), v.nonface_f.entries.size());
        for (std::size_t i = 0; i < len; ++i) {
            std::uint64_t a = i < v.facet_f.entries.size() ? v.facet_f.entries[i] : 0;
            std::uint64_t b = i < v.nonface_f.entries.size() ? v.nonface_f.entries[i] : 0;
            if (a != b) {
                v.mismatch_index = static_cast<int>(i);
                break;
            }
        }
    }

    auto d = reduced.uniform_cardinality();
    if (!d || *d == 0) {
        v.is_f = general;
        v.route = FIdealRoute::GeneralFVector;
        return v;
    }

    LuVerdict lu = is_lu_set(reduced);
    std::uint64_t half = binomial(reduced.n(), *d) / 2;
    bool pure = lu.l && lu.u && binomial(reduced.n(), *d) % 2 == 0 && reduced.size() == half;
    if (pure != general)
        throw internal_error("pure and general f-ideal routes disagree on " +
                             std::to_string(reduced.size()) + " generators");
    v.is_f = general;
    v.route = FIdealRoute::BothAgree;
    if (!pure) {
        if (!lu.l)
            v.witness = lu.l_witness;
        else if (!lu.u)
            v.witness = lu.u_witness;
    }
    return v;
}

WellDistributedVerdict is_well_distributed(const Complex& c) {
    if (c.is_void() || c.is_empty_complex())
        throw precondition_error("well-distributedness needs at least one facet");
    if (!c.is_pure()) throw precondition_error("well-distributedness needs a pure complex");
    int n = c.n();
    int d = c.dim() + 1;
    if (n != 2 * d)
        throw precondition_error("well-distributedness is defined only when n = 2d (n = " +
                                 std::to_string(n) + ", facet size " + std::to_string(d) + ")");
    WellDistributedVerdict v;
    Mask full = full_mask(n);
    for (Mask f : c.facets())
        if (std::binary_search(c.facets().begin(), c.facets().end(), full & ~f, canonical_less)) {
            v.collision = f;
            return v;
        }
    v.well_distributed = true;
    return v;
}

bool is_strong(const Complex& c) {
    Complex hc = homogeneous_complement(c);
    return is_f_ideal(SubsetFamily::of(c.n(), c.facets())).is_f &&
           is_f_ideal(SubsetFamily::of(hc.n(), hc.facets())).is_f;
}

} // namespace fcx
