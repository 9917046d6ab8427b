#pragma once

#include "fcx/complex.hpp"

#include <optional>

namespace fcx {

// All (d-1)-subsets contained in some member of a d-uniform family.
SubsetFamily lower_shadow(const SubsetFamily& fam);

// All (d+1)-subsets of [n] containing some member of a d-uniform family.
SubsetFamily upper_shadow(const SubsetFamily& fam);

struct LuVerdict {
    bool l = false;
    bool u = false;
    // A (d-1)-set missed by the lower shadow / a (d+1)-set missed by the
    // upper shadow, when the corresponding check fails.
    std::optional<Mask> l_witness;
    std::optional<Mask> u_witness;
};

LuVerdict is_lu_set(const SubsetFamily& fam);

enum class FIdealRoute { PureLu, GeneralFVector, BothAgree };

struct FIdealVerdict {
    bool is_f = false;
    FIdealRoute route = FIdealRoute::GeneralFVector;
    // On a pure-route failure: the uncovered set from the LU check.
    std::optional<Mask> witness;
    // On a general-route failure: first index where the f-vectors of the
    // nonface and facet complexes differ (0-based cardinality-1).
    std::optional<int> mismatch_index;
    FVector facet_f;
    FVector nonface_f;
};

// gens must be a nonempty antichain after reduction; throws
// unit_ideal_error when the empty set generates.
FIdealVerdict is_f_ideal(const SubsetFamily& gens);

struct WellDistributedVerdict {
    bool well_distributed = false;
    // A facet whose complement is also a facet, when the check fails.
    std::optional<Mask> collision;
};

// Defined only for pure complexes with facet size d = n/2.
WellDistributedVerdict is_well_distributed(const Complex& c);

// Both c and its homogeneous complement generate f-ideals.
bool is_strong(const Complex& c);

} // namespace fcx
