#pragma once

#include "fcx/complex.hpp"

namespace fcx {

// Complex generated by the complements of the facets.
Complex newton_dual(const Complex& c);

// Faces are the complements of nonfaces; facets are the complements of
// the minimal nonfaces. Throws on the void complex and on the full
// simplex (no minimal nonfaces to complement).
Complex alexander_dual(const Complex& c);

// For a pure complex with facet size d: the complex generated by the
// d-subsets of [n] that are not facets of c. Throws if c is not pure,
// has no facets, or its facets exhaust all d-subsets.
Complex homogeneous_complement(const Complex& c);

} // namespace fcx
