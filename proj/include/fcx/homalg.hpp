#pragma once

#include "fcx/complex.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fcx {

class FieldSpec {
  public:
    static FieldSpec rationals() { return FieldSpec(0); }
    // p must be prime, 2 <= p < 2^31.
    static FieldSpec prime_field(std::uint32_t p);

    bool is_rationals() const { return p_ == 0; }
    std::uint32_t prime() const;
    std::string to_string() const;

    bool operator==(const FieldSpec&) const = default;

  private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

// Exact rank of an integer matrix viewed over the given field.
// Rationals use fraction-free elimination (64-bit with arbitrary-precision
// fallback); prime fields use modular elimination.
std::size_t exact_rank(const std::vector<std::vector<std::int64_t>>& rows, const FieldSpec& k);

struct HomologyDims {
    // Index 0 holds the dimension of reduced homology in degree -1.
    std::vector<std::uint64_t> by_degree;

    std::uint64_t at(int degree) const {
        int idx = degree + 1;
        if (idx < 0 || idx >= static_cast<int>(by_degree.size())) return 0;
        return by_degree[static_cast<std::size_t>(idx)];
    }
    int top_degree() const { return static_cast<int>(by_degree.size()) - 2; }
};

// Reduced simplicial homology of the augmented chain complex; degrees
// -1 through dim(c). The void complex yields an empty list; the empty
// complex {∅} has one-dimensional homology in degree -1.
HomologyDims reduced_homology_dims(const Complex& c, const FieldSpec& k);

// Reisner: every link (the empty face included) has vanishing reduced
// homology below its own dimension.
bool is_cohen_macaulay(const Complex& c, const FieldSpec& k);

enum class BettiSubject { Ideal, Quotient };

struct BettiTable {
    BettiSubject subject = BettiSubject::Ideal;
    // (homological index i, internal degree j) -> multiplicity; absent = 0.
    std::map<std::pair<int, int>, std::uint64_t> entries;

    std::uint64_t at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    int max_degree() const;
    // Coefficient list of sum_j (sum_i (-1)^i beta_{i,j}) t^j.
    std::vector<std::int64_t> alternating_sum_by_degree() const;
};

// Graded Betti numbers of the squarefree monomial ideal generated by
// gens (or of its quotient ring), over the field k.
BettiTable betti_table(const SubsetFamily& gens, const FieldSpec& k,
                       BettiSubject subject = BettiSubject::Ideal);

struct LinearVerdict {
    bool linear = false;
    // Set when the verdict is negative.
    std::optional<std::string> reason;
    // The first nonlinear table entry (i, j), when one exists.
    std::optional<std::pair<int, int>> offender;
};

// True when every nonzero beta_{i,j} of the ideal satisfies j = i + d,
// with d the common generator degree. Non-uniform generators yield a
// negative verdict with a reason instead of an error.
LinearVerdict has_linear_resolution(const SubsetFamily& gens, const FieldSpec& k);

struct PrimeList {
    // Variable supports of the minimal primes, canonically ordered.
    SubsetFamily components;

    std::vector<int> heights() const;
};

// Minimal primes of the ideal generated by gens: the minimal vertex
// covers, computed by transversal enumeration and cross-checked against
// the facet complements of the Stanley-Reisner complex.
PrimeList minimal_primes(const SubsetFamily& gens);

bool is_unmixed(const SubsetFamily& gens);

enum class ShellStatus { Shellable, NotShellable, BudgetExhausted };

struct ShellVerdict {
    ShellStatus status = ShellStatus::NotShellable;
    // A witness facet order when status is Shellable.
    std::vector<Mask> order;
    std::uint64_t steps = 0;
};

inline constexpr std::uint64_t kDefaultShellBudget = 10'000'000;

// Backtracking search for a shelling order of a pure complex, with
// memoized dead prefixes. Complete below the step budget: NotShellable
// is a proof, BudgetExhausted is an honest give-up.
ShellVerdict is_shellable(const Complex& c, std::uint64_t budget = kDefaultShellBudget);

// Coefficients (index = degree) of K(t) = sum over faces F, empty face
// included, of t^|F| (1-t)^(n-|F|).
std::vector<std::int64_t> k_polynomial(const Complex& c);

} // namespace fcx
