#pragma once

#include <optional>
#include <vector>

#include "fcx/subsets.hpp"

namespace fcx {

/// A finite family of distinct subsets of [n], kept in canonical order
/// (cardinality, then numerically). No antichain requirement; doubles as a
/// squarefree monomial set under F <-> X_F.
class SubsetFamily {
  public:
    SubsetFamily() = default;

    /// Validates range, deduplicates, sorts canonically.
    static SubsetFamily of(int n, std::vector<Mask> members);

    /// From 1-based vertex lists.
    static SubsetFamily of_vertex_lists(int n, const std::vector<std::vector<int>>& lists);

    int n() const { return n_; }
    const std::vector<Mask>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Mask m) const;

    /// d when all members have cardinality d (nonempty family), else nullopt.
    std::optional<int> uniform_cardinality() const;

    /// Inclusion-minimal members (the minimal generating set of the ideal
    /// the family spans).
    SubsetFamily inclusion_minimal() const;

    /// Inclusion-maximal members.
    SubsetFamily inclusion_maximal() const;

    bool operator==(const SubsetFamily&) const = default;

  private:
    int n_ = 0;
    std::vector<Mask> members_;
};

/// The face-count sequence (f_0, ..., f_dim); empty for the complex {∅}.
struct FVector {
    std::vector<std::uint64_t> entries;

    int dim() const { return static_cast<int>(entries.size()) - 1; }
    bool operator==(const FVector&) const = default;
};

/// A simplicial complex on the vertex set [n], stored by its facet
/// antichain in canonical order. Unused vertices are permitted.
///
/// Two degenerate states are kept distinct: the empty complex {∅} (the one
/// face is the empty set) and the void complex (no faces at all). Reduced
/// homology treats them differently, so conflating them would corrupt
/// every Hochster computation downstream.
class Complex {
  public:
    enum class Kind { Void, Empty, Normal };

    /// The complex generated by the given faces: facets are the
    /// inclusion-maximal members. generated(n, {∅}) is the empty complex.
    /// Throws precondition_error when members is empty or out of range.
    static Complex generated(int n, const std::vector<Mask>& members);
    static Complex generated(const SubsetFamily& members);

    static Complex empty_complex(int n);
    static Complex void_complex(int n);

    int n() const { return n_; }
    Kind kind() const { return kind_; }
    bool is_void() const { return kind_ == Kind::Void; }
    bool is_empty_complex() const { return kind_ == Kind::Empty; }
    const std::vector<Mask>& facets() const { return facets_; }

    /// -1 for {∅}, -2 sentinel for the void complex.
    int dim() const;
    bool is_pure() const;

    bool is_face(Mask f) const;

    /// Every face as a mask set, ∅ included (nonvoid complexes only).
    std::vector<Mask> all_faces() const;

    bool operator==(const Complex&) const = default;
    bool operator<(const Complex&) const;

  private:
    Complex(int n, Kind kind, std::vector<Mask> facets)
        : n_(n), kind_(kind), facets_(std::move(facets)) {}

    int n_ = 1;
    Kind kind_ = Kind::Void;
    std::vector<Mask> facets_;
};

/// (dim, pure). Void reports (-2, true), {∅} reports (-1, true).
std::pair<int, bool> dimension_and_purity(const Complex& c);

/// entries[k] = number of faces of cardinality k+1, by exact subset
/// expansion. Throws on the void complex.
FVector f_vector(const Complex& c);

/// All faces of cardinality k, 0 <= k <= n. k = 0 yields {∅} iff c is
/// nonvoid.
SubsetFamily faces_of_cardinality(const Complex& c, int k);

/// link_c(f) = { G : G ∩ f = ∅, G ∪ f ∈ c } on the same vertex set.
/// Throws when f is not a face. The link of a facet is {∅}.
Complex link(const Complex& c, Mask f);

/// The subcomplex of faces contained in s. Restriction of a nonvoid
/// complex to s = ∅ is {∅}; to a nonempty s none of whose vertices is a
/// face, the void complex.
Complex restriction(const Complex& c, Mask s);

/// All minimal nonfaces: F ∉ c with every proper subset of F in c.
/// Layered search by cardinality, terminating at dim+2. Throws on void.
SubsetFamily minimal_nonfaces(const Complex& c);

/// Reference implementation: direct sweep over all 2^n subsets. n <= 20.
SubsetFamily minimal_nonfaces_by_sweep(const Complex& c);

/// The nonface complex of the ideal spanned by gens: all subsets
/// containing no member of gens. Facets are found by maximal-independent-
/// set search, not via the full face list. Throws unit_ideal_error when
/// ∅ ∈ gens; precondition_error when gens is empty.
Complex stanley_reisner_complex(const SubsetFamily& gens);

/// All inclusion-minimal transversals (hitting sets) of the family,
/// by Berge multiplication. Independent of stanley_reisner_complex.
SubsetFamily minimal_transversals(const SubsetFamily& fam);

} // namespace fcx
