#include "fcx/complex.hpp"

#include <algorithm>
#include <unordered_set>

namespace fcx {

std::vector<int> mask_vertices(Mask m) {
    std::vector<int> vs;
    vs.reserve(static_cast<std::size_t>(card(m)));
    while (m) {
        int b = std::countr_zero(m);
        vs.push_back(b + 1);
        m &= m - 1;
    }
    return vs;
}

Mask mask_from_vertices(const std::vector<int>& vs, int n) {
    Mask m = 0;
    for (int v : vs) {
        if (v < 1 || v > n)
            throw precondition_error("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
        Mask bit = Mask{1} << (v - 1);
        if (m & bit)
            throw precondition_error("repeated vertex " + std::to_string(v));
        m |= bit;
    }
    return m;
}

std::string mask_to_string(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int v : mask_vertices(m)) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

std::string mask_to_spaced(Mask m) {
    std::string s;
    for (int v : mask_vertices(m)) {
        if (!s.empty()) s += " ";
        s += std::to_string(v);
    }
    return s;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    // The result fits in 64 bits for n <= 64, but the interleaved
    // multiply can exceed it; widen the intermediate.
    unsigned __int128 c = 1;
    for (int i = 1; i <= k; ++i)
        c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return static_cast<std::uint64_t>(c);
}

std::vector<Mask> all_subsets_of_cardinality(int n, int k) {
    std::vector<Mask> out;
    if (k < 0 || k > n) return out;
    if (k == 0) return {Mask{0}};
    if (k == n) return {full_mask(n)}; // 1 << 64 is UB, keep the shift below safe
    out.reserve(binomial(n, k));
    // Gosper's hack walks k-subsets in increasing numeric order.
    Mask v = (Mask{1} << k) - 1;
    Mask limit = full_mask(n);
    while (subset_of(v, limit)) {
        out.push_back(v);
        Mask t = v | (v - 1);
        if (t == ~Mask{0}) break;
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

std::vector<std::uint32_t> unrank_combination(std::uint64_t rank, std::uint32_t pool, std::uint32_t m) {
    if (m > pool || rank >= binomial(static_cast<int>(pool), static_cast<int>(m)))
        throw precondition_error("combination rank out of range");
    std::vector<std::uint32_t> idx(m);
    std::uint32_t next = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
        std::uint32_t c = next;
        while (true) {
            std::uint64_t block = binomial(static_cast<int>(pool - c - 1), static_cast<int>(m - i - 1));
            if (rank < block) break;
            rank -= block;
            ++c;
        }
        idx[i] = c;
        next = c + 1;
    }
    return idx;
}

namespace {

void check_n(int n) {
    if (n < 1 || n > kMaxVertices)
        throw precondition_error("vertex count " + std::to_string(n) + " outside [1, 64]");
}

void check_members_range(int n, const std::vector<Mask>& members) {
    Mask full = full_mask(n);
    for (Mask m : members)
        if (!subset_of(m, full))
            throw precondition_error("subset " + mask_to_string(m) + " has a vertex outside [1, " + std::to_string(n) + "]");
}

std::vector<Mask> sorted_unique(std::vector<Mask> ms) {
    std::sort(ms.begin(), ms.end(), canonical_less);
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    return ms;
}

// Inclusion-maximal members of a canonically sorted distinct list.
std::vector<Mask> maximal_members(const std::vector<Mask>& sorted) {
    std::vector<Mask> out;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        bool contained = false;
        // Any strict superset has larger cardinality, hence comes later.
        for (std::size_t j = i + 1; j < sorted.size() && !contained; ++j)
            contained = sorted[i] != sorted[j] && subset_of(sorted[i], sorted[j]);
        if (!contained) out.push_back(sorted[i]);
    }
    return out;
}

std::vector<Mask> minimal_members(const std::vector<Mask>& sorted) {
    std::vector<Mask> out;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        bool has_subset = false;
        for (std::size_t j = 0; j < i && !has_subset; ++j)
            has_subset = subset_of(sorted[j], sorted[i]) && sorted[j] != sorted[i];
        if (!has_subset) out.push_back(sorted[i]);
    }
    return out;
}

} // namespace

SubsetFamily SubsetFamily::of(int n, std::vector<Mask> members) {
    check_n(n);
    check_members_range(n, members);
    SubsetFamily f;
    f.n_ = n;
    f.members_ = sorted_unique(std::move(members));
    return f;
}

SubsetFamily SubsetFamily::of_vertex_lists(int n, const std::vector<std::vector<int>>& lists) {
    std::vector<Mask> ms;
    ms.reserve(lists.size());
    check_n(n);
    for (const auto& l : lists) ms.push_back(mask_from_vertices(l, n));
    return of(n, std::move(ms));
}

bool SubsetFamily::contains(Mask m) const {
    return std::binary_search(members_.begin(), members_.end(), m, canonical_less);
}

std::optional<int> SubsetFamily::uniform_cardinality() const {
    if (members_.empty()) return std::nullopt;
    int d = card(members_.front());
    for (Mask m : members_)
        if (card(m) != d) return std::nullopt;
    return d;
}

SubsetFamily SubsetFamily::inclusion_minimal() const {
    SubsetFamily f;
    f.n_ = n_;
    f.members_ = minimal_members(members_);
    return f;
}

SubsetFamily SubsetFamily::inclusion_maximal() const {
    SubsetFamily f;
    f.n_ = n_;
    f.members_ = maximal_members(members_);
    return f;
}

Complex Complex::generated(int n, const std::vector<Mask>& members) {
    check_n(n);
    if (members.empty())
        throw precondition_error("no generators; use empty_complex/void_complex for the degenerate states");
    check_members_range(n, members);
    std::vector<Mask> facets = maximal_members(sorted_unique(members));
    if (facets.size() == 1 && facets[0] == 0) return empty_complex(n);
    return Complex(n, Kind::Normal, std::move(facets));
}

Complex Complex::generated(const SubsetFamily& members) {
    return generated(members.n(), members.members());
}

Complex Complex::empty_complex(int n) {
    check_n(n);
    return Complex(n, Kind::Empty, {});
}

Complex Complex::void_complex(int n) {
    check_n(n);
    return Complex(n, Kind::Void, {});
}

int Complex::dim() const {
    switch (kind_) {
        case Kind::Void: return -2;
        case Kind::Empty: return -1;
        case Kind::Normal: return card(facets_.back()) - 1;
    }
    return -2;
}

bool Complex::is_pure() const {
    if (kind_ != Kind::Normal) return true;
    return card(facets_.front()) == card(facets_.back());
}

bool Complex::is_face(Mask f) const {
    if (kind_ == Kind::Void) return false;
    if (f == 0) return true;
    for (Mask g : facets_)
        if (subset_of(f, g)) return true;
    return false;
}

std::vector<Mask> Complex::all_faces() const {
    if (kind_ == Kind::Void)
        throw precondition_error("void complex has no faces");
    std::unordered_set<Mask> seen;
    seen.insert(0);
    for (Mask f : facets_)
        for_each_submask(f, [&](Mask s) { seen.insert(s); });
    std::vector<Mask> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

bool Complex::operator<(const Complex& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (kind_ != o.kind_) return static_cast<int>(kind_) < static_cast<int>(o.kind_);
    return std::lexicographical_compare(facets_.begin(), facets_.end(), o.facets_.begin(), o.facets_.end(),
                                        canonical_less);
}

std::pair<int, bool> dimension_and_purity(const Complex& c) {
    return {c.dim(), c.is_pure()};
}

FVector f_vector(const Complex& c) {
    if (c.is_void())
        throw precondition_error("f-vector of the void complex is undefined");
    FVector fv;
    if (c.is_empty_complex()) return fv;
    fv.entries.assign(static_cast<std::size_t>(c.dim()) + 1, 0);
    for (Mask f : c.all_faces())
        if (f != 0) ++fv.entries[static_cast<std::size_t>(card(f)) - 1];
    return fv;
}

SubsetFamily faces_of_cardinality(const Complex& c, int k) {
    if (k < 0 || k > c.n())
        throw precondition_error("face cardinality outside [0, n]");
    if (c.is_void()) return SubsetFamily::of(c.n(), {});
    if (k == 0) return SubsetFamily::of(c.n(), {Mask{0}});
    std::vector<Mask> hits;
    for (Mask f : c.all_faces())
        if (card(f) == k) hits.push_back(f);
    return SubsetFamily::of(c.n(), std::move(hits));
}

Complex link(const Complex& c, Mask f) {
    if (!c.is_face(f))
        throw precondition_error(mask_to_string(f) + " is not a face");
    if (f == 0) return c;
    std::vector<Mask> gens;
    for (Mask g : c.facets())
        if (subset_of(f, g)) gens.push_back(g & ~f);
    return Complex::generated(c.n(), gens);
}

Complex restriction(const Complex& c, Mask s) {
    if (!subset_of(s, full_mask(c.n())))
        throw precondition_error("restriction set has a vertex outside [1, n]");
    if (c.is_void()) return Complex::void_complex(c.n());
    if (s == 0) return Complex::empty_complex(c.n());
    std::vector<Mask> gens;
    bool any_vertex = false;
    for (Mask g : c.facets()) {
        Mask r = g & s;
        gens.push_back(r);
        any_vertex |= r != 0;
    }
    if (!any_vertex) return Complex::void_complex(c.n());
    return Complex::generated(c.n(), gens);
}

SubsetFamily minimal_nonfaces(const Complex& c) {
    if (c.is_void())
        throw precondition_error("minimal nonfaces of the void complex are undefined");
    int n = c.n();
    std::vector<Mask> found;
    // Faces of the previous cardinality; a k-set whose (k-1)-subsets are
    // all faces is reachable as face ∪ {v}.
    std::unordered_set<Mask> prev_faces = {Mask{0}};
    int top = c.dim() + 2;
    for (int k = 1; k <= std::min(top, n); ++k) {
        std::unordered_set<Mask> candidates;
        for (Mask f : prev_faces)
            for (int v = 0; v < n; ++v) {
                Mask bit = Mask{1} << v;
                if (!(f & bit)) candidates.insert(f | bit);
            }
        std::unordered_set<Mask> faces_k;
        for (Mask g : candidates) {
            if (c.is_face(g)) {
                faces_k.insert(g);
                continue;
            }
            bool all_subfaces = true;
            for (Mask rem = g; rem && all_subfaces; rem &= rem - 1)
                all_subfaces = prev_faces.count(g & ~(rem & ~(rem - 1))) > 0;
            if (all_subfaces) found.push_back(g);
        }
        if (faces_k.empty()) break;
        prev_faces = std::move(faces_k);
    }
    return SubsetFamily::of(n, std::move(found));
}

SubsetFamily minimal_nonfaces_by_sweep(const Complex& c) {
    if (c.is_void())
        throw precondition_error("minimal nonfaces of the void complex are undefined");
    int n = c.n();
    if (n > 20)
        throw precondition_error("subset sweep is limited to n <= 20");
    std::uint64_t total = Mask{1} << n;
    std::vector<char> face(total, 0);
    face[0] = 1;
    for (Mask f : c.facets())
        for_each_submask(f, [&](Mask s) { face[s] = 1; });
    std::vector<Mask> found;
    for (Mask m = 1; m < total; ++m) {
        if (face[m]) continue;
        bool minimal = true;
        for (Mask rem = m; rem && minimal; rem &= rem - 1)
            minimal = face[m & ~(rem & ~(rem - 1))] != 0;
        if (minimal) found.push_back(m);
    }
    return SubsetFamily::of(n, std::move(found));
}

namespace {

// All maximal independent sets: S with no generator contained in S,
// maximal under inclusion. Branch on the vertices of the first generator
// still inside the allowed set.
void max_independent_rec(Mask allowed, const std::vector<Mask>& gens, std::vector<Mask>& out) {
    for (Mask g : gens) {
        if (!subset_of(g, allowed)) continue;
        for (Mask rem = g; rem; rem &= rem - 1) {
            Mask bit = rem & ~(rem - 1);
            max_independent_rec(allowed & ~bit, gens, out);
        }
        return;
    }
    out.push_back(allowed);
}

} // namespace

Complex stanley_reisner_complex(const SubsetFamily& gens) {
    if (gens.empty())
        throw precondition_error("no generators");
    SubsetFamily reduced = gens.inclusion_minimal();
    if (reduced.members().front() == 0) throw unit_ideal_error();
    std::vector<Mask> independent;
    max_independent_rec(full_mask(gens.n()), reduced.members(), independent);
    std::vector<Mask> facets = sorted_unique(std::move(independent));
    facets = maximal_members(facets);
    if (facets.size() == 1 && facets[0] == 0) return Complex::empty_complex(gens.n());
    return Complex::generated(gens.n(), facets);
}

SubsetFamily minimal_transversals(const SubsetFamily& fam) {
    std::vector<Mask> ts = {Mask{0}};
    for (Mask e : fam.members()) {
        std::vector<Mask> next;
        for (Mask t : ts) {
            if (t & e) {
                next.push_back(t);
                continue;
            }
            for (Mask rem = e; rem; rem &= rem - 1)
                next.push_back(t | (rem & ~(rem - 1)));
        }
        next = sorted_unique(std::move(next));
        ts = minimal_members(next);
    }
    return SubsetFamily::of(fam.n(), std::move(ts));
}

} // namespace fcx
