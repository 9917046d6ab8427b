#pragma once

// Brute-force reference implementations the production code is checked
// against. Everything here favors obviousness over speed and stays
// independent of the library algorithms: faces come from raw power-set
// sweeps, ranks from textbook Gaussian elimination.

#include "fcx/complex.hpp"
#include "fcx/homalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using fcx::Complex;
using fcx::Mask;
using fcx::SubsetFamily;

inline std::uint64_t binomial_pascal(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<std::uint64_t> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<std::uint64_t> next(i + 1, 1);
        for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

// Every face by definition: the subsets of [n] contained in some facet.
inline std::set<Mask> faces(const Complex& c) {
    if (c.n() > 20) throw std::logic_error("oracle sweep capped at n = 20");
    std::set<Mask> out;
    if (c.is_void()) return out;
    out.insert(0);
    const Mask full = fcx::full_mask(c.n());
    for (Mask s = 1; s <= full; ++s)
        for (Mask f : c.facets())
            if (fcx::subset_of(s, f)) {
                out.insert(s);
                break;
            }
    return out;
}

inline fcx::FVector f_vector(const Complex& c) {
    fcx::FVector fv;
    if (c.dim() < 0) return fv;
    fv.entries.assign(static_cast<std::size_t>(c.dim()) + 1, 0);
    for (Mask s : faces(c))
        if (s != 0) ++fv.entries[static_cast<std::size_t>(fcx::card(s)) - 1];
    return fv;
}

inline std::vector<Mask> inclusion_maximal(const std::set<Mask>& fam) {
    std::vector<Mask> out;
    for (Mask a : fam) {
        bool maximal = true;
        for (Mask b : fam)
            if (a != b && fcx::subset_of(a, b)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(a);
    }
    return out;
}

inline std::vector<Mask> inclusion_minimal(const std::set<Mask>& fam) {
    std::vector<Mask> out;
    for (Mask a : fam) {
        bool minimal = true;
        for (Mask b : fam)
            if (a != b && fcx::subset_of(b, a)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(a);
    }
    return out;
}

// Faces of the nonface complex, by the raw definition: subsets containing
// no generator.
inline Complex sr_complex(const SubsetFamily& gens) {
    if (gens.n() > 20) throw std::logic_error("oracle sweep capped at n = 20");
    std::set<Mask> independent;
    const Mask full = fcx::full_mask(gens.n());
    for (Mask s = 0;; ++s) {
        bool ok = true;
        for (Mask g : gens.members())
            if (fcx::subset_of(g, s)) {
                ok = false;
                break;
            }
        if (ok) independent.insert(s);
        if (s == full) break;
    }
    std::vector<Mask> fac = inclusion_maximal(independent);
    return Complex::generated(gens.n(), fac);
}

inline SubsetFamily min_nonfaces(const Complex& c) {
    std::set<Mask> fs = faces(c);
    std::vector<Mask> out;
    const Mask full = fcx::full_mask(c.n());
    for (Mask s = 1; s <= full; ++s) {
        if (fs.count(s)) continue;
        bool all_proper_in = true;
        for (Mask t = (s - 1) & s; all_proper_in; t = (t - 1) & s) {
            if (!fs.count(t)) all_proper_in = false;
            if (t == 0) break;
        }
        if (all_proper_in) out.push_back(s);
    }
    return SubsetFamily::of(c.n(), out);
}

inline SubsetFamily transversals(const SubsetFamily& fam) {
    if (fam.n() > 20) throw std::logic_error("oracle sweep capped at n = 20");
    std::set<Mask> hitting;
    const Mask full = fcx::full_mask(fam.n());
    for (Mask s = 0;; ++s) {
        bool hits_all = true;
        for (Mask m : fam.members())
            if ((s & m) == 0) {
                hits_all = false;
                break;
            }
        if (hits_all) hitting.insert(s);
        if (s == full) break;
    }
    return SubsetFamily::of(fam.n(), inclusion_minimal(hitting));
}

using Rational = boost::multiprecision::cpp_rational;

inline std::size_t rank_q(std::vector<std::vector<std::int64_t>> rows) {
    std::vector<std::vector<Rational>> m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        m[i].assign(rows[i].begin(), rows[i].end());
    std::size_t rank = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            Rational factor = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rank_gfp(std::vector<std::vector<std::int64_t>> rows, std::uint32_t p) {
    std::vector<std::vector<std::int64_t>> m = std::move(rows);
    auto norm = [&](std::int64_t x) {
        std::int64_t r = x % static_cast<std::int64_t>(p);
        return r < 0 ? r + p : r;
    };
    for (auto& row : m)
        for (auto& x : row) x = norm(x);
    auto inv = [&](std::int64_t a) {
        // Fermat: a^(p-2) mod p.
        std::int64_t result = 1, base = a % p;
        for (std::uint32_t e = p - 2; e; e >>= 1) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
        }
        return result;
    };
    std::size_t rank = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        std::int64_t piv_inv = inv(m[rank][c]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            std::int64_t factor = m[i][c] * piv_inv % p;
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = norm(m[i][j] - factor * m[rank][j] % static_cast<std::int64_t>(p));
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rank_over(const std::vector<std::vector<std::int64_t>>& rows,
                             const fcx::FieldSpec& k) {
    if (rows.empty() || rows[0].empty()) return 0;
    return k.is_rationals() ? rank_q(rows) : rank_gfp(rows, k.prime());
}

// Reduced homology dimensions (index 0 = degree -1), built from the raw
// face list with faces ordered by mask value.
inline std::vector<std::uint64_t> homology(const Complex& c, const fcx::FieldSpec& k) {
    std::vector<std::uint64_t> out;
    if (c.is_void()) return out;
    int dim = c.dim();
    // by_card[j] = faces of cardinality j, ascending mask order.
    std::vector<std::vector<Mask>> by_card(static_cast<std::size_t>(dim) + 2);
    for (Mask s : faces(c)) by_card[static_cast<std::size_t>(fcx::card(s))].push_back(s);

    // boundary[j]: rows indexed by cardinality-j faces, columns by (j-1)-faces.
    std::vector<std::size_t> ranks(by_card.size(), 0);
    for (std::size_t j = 1; j < by_card.size(); ++j) {
        const auto& src = by_card[j];
        const auto& dst = by_card[j - 1];
        if (src.empty() || dst.empty()) continue;
        std::vector<std::vector<std::int64_t>> m(src.size(),
                                                 std::vector<std::int64_t>(dst.size(), 0));
        for (std::size_t r = 0; r < src.size(); ++r) {
            int position = 0;
            for (Mask rem = src[r]; rem; rem &= rem - 1, ++position) {
                Mask face = src[r] & ~(rem & ~(rem - 1));
                auto it = std::lower_bound(dst.begin(), dst.end(), face);
                m[r][static_cast<std::size_t>(it - dst.begin())] = position % 2 == 0 ? 1 : -1;
            }
        }
        ranks[j] = rank_over(m, k);
    }
    for (int deg = -1; deg <= dim; ++deg) {
        std::size_t j = static_cast<std::size_t>(deg) + 1;
        std::uint64_t cycles = by_card[j].size() - ranks[j];
        std::uint64_t boundaries = j + 1 < by_card.size() ? ranks[j + 1] : 0;
        out.push_back(cycles - boundaries);
    }
    return out;
}

// Validates a claimed shelling order directly against the definition:
// from the second facet on, the part of the new facet already covered
// must be pure of codimension one in it and nonempty.
inline bool shelling_valid(const Complex& c, const std::vector<Mask>& order) {
    std::vector<Mask> sorted = order;
    std::sort(sorted.begin(), sorted.end(), fcx::canonical_less);
    if (sorted != c.facets()) return false;
    for (std::size_t k = 1; k < order.size(); ++k) {
        Mask f = order[k];
        int d = fcx::card(f);
        std::set<Mask> covered;
        for (Mask t = (f - 1) & f;; t = (t - 1) & f) {
            for (std::size_t i = 0; i < k; ++i)
                if (fcx::subset_of(t, order[i])) {
                    covered.insert(t);
                    break;
                }
            if (t == 0) break;
        }
        std::vector<Mask> maximal = inclusion_maximal(covered);
        if (maximal.empty()) return false;
        for (Mask m : maximal)
            if (fcx::card(m) != d - 1) return false;
    }
    return true;
}

} // namespace oracle
