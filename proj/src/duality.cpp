#include "fcx/duality.hpp"

#include <algorithm>

namespace fcx {

Complex newton_dual(const Complex& c) {
    if (c.is_void())
        throw precondition_error("newton dual of the void complex is undefined");
    Mask full = full_mask(c.n());
    if (c.is_empty_complex()) return Complex::generated(c.n(), {full});
    std::vector<Mask> comps;
    comps.reserve(c.facets().size());
    for (Mask f : c.facets()) {
        if (f == full)
            throw precondition_error("facet " + mask_to_string(f) + " equals the whole vertex set");
        comps.push_back(full & ~f);
    }
    return Complex::generated(c.n(), comps);
}

Complex alexander_dual(const Complex& c) {
    if (c.is_void())
        throw precondition_error("alexander dual of the void complex is undefined");
    SubsetFamily nf = minimal_nonfaces(c);
    if (nf.empty())
        throw precondition_error("alexander dual of the full simplex is undefined");
    Mask full = full_mask(c.n());
    std::vector<Mask> comps;
    comps.reserve(nf.size());
    for (Mask m : nf.members()) comps.push_back(full & ~m);
    return Complex::generated(c.n(), comps);
}

Complex homogeneous_complement(const Complex& c) {
    if (c.is_void() || c.is_empty_complex())
        throw precondition_error("homogeneous complement needs at least one facet");
    if (!c.is_pure())
        throw precondition_error("homogeneous complement needs a pure complex");
    int d = c.dim() + 1;
    std::vector<Mask> rest;
    for (Mask m : all_subsets_of_cardinality(c.n(), d))
        if (!std::binary_search(c.facets().begin(), c.facets().end(), m, canonical_less))
            rest.push_back(m);
    if (rest.empty())
        throw precondition_error("facet set already covers every " + std::to_string(d) + "-subset");
    return Complex::generated(c.n(), rest);
}

} // namespace fcx
