#include "fcx/homalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace fcx {

namespace {

using boost::multiprecision::cpp_int;

bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t q = 3; q * q <= p; q += 2)
        if (p % q == 0) return false;
    return true;
}

} // namespace

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
        throw precondition_error(std::to_string(p) + " is not a prime below 2^31");
    return FieldSpec(p);
}

std::uint32_t FieldSpec::prime() const {
    if (p_ == 0) throw precondition_error("field is the rationals, not a prime field");
    return p_;
}

std::string FieldSpec::to_string() const {
    return p_ == 0 ? "q" : "gf:" + std::to_string(p_);
}

namespace {

struct overflow_escape {};

inline std::int64_t mul_ck(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_escape{};
    return r;
}

inline std::int64_t sub_ck(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_escape{};
    return r;
}

// Fraction-free elimination; each division is exact (entries stay
// minors of the input), so the only failure mode is 64-bit overflow,
// reported via overflow_escape.
template <class I>
std::size_t bareiss_rank(std::vector<std::vector<I>> m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    I prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                if constexpr (std::is_same_v<I, std::int64_t>)
                    m[i][j] = sub_ck(mul_ck(m[r][c], m[i][j]), mul_ck(m[i][c], m[r][j])) / prev;
                else
                    m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::size_t modular_rank(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p) {
    std::size_t nr = rows.size();
    std::size_t nc = nr ? rows[0].size() : 0;
    std::vector<std::vector<std::uint64_t>> m(nr, std::vector<std::uint64_t>(nc));
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) {
            std::int64_t v = rows[i][j] % static_cast<std::int64_t>(p);
            if (v < 0) v += p;
            m[i][j] = static_cast<std::uint64_t>(v);
        }
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = r;
        while (piv < nr && m[piv][c] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(m[piv], m[r]);
        std::uint64_t inv = pow_mod(m[r][c], p - 2, p);
        for (std::size_t j = c; j < nc; ++j) m[r][j] = m[r][j] * inv % p;
        for (std::size_t i = r + 1; i < nr; ++i) {
            std::uint64_t f = m[i][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < nc; ++j) m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
        }
        ++r;
    }
    return r;
}

} // namespace

std::size_t exact_rank(const std::vector<std::vector<std::int64_t>>& rows, const FieldSpec& k) {
    if (rows.empty() || rows[0].empty()) return 0;
    if (!k.is_rationals()) return modular_rank(rows, k.prime());
    try {
        return bareiss_rank<std::int64_t>(rows);
    } catch (const overflow_escape&) {
        std::vector<std::vector<cpp_int>> wide(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            wide[i].assign(rows[i].begin(), rows[i].end());
        return bareiss_rank<cpp_int>(std::move(wide));
    }
}

namespace {

// Reduced homology of the complex given by an explicit closed face
// list (the empty face included).
HomologyDims homology_of_faces(const std::vector<Mask>& faces, const FieldSpec& k) {
    int top = 0;
    for (Mask f : faces) top = std::max(top, card(f));
    std::vector<std::vector<Mask>> level(static_cast<std::size_t>(top) + 1);
    for (Mask f : faces) level[static_cast<std::size_t>(card(f))].push_back(f);
    std::vector<std::unordered_map<Mask, std::size_t>> index(level.size());
    for (std::size_t c = 0; c < level.size(); ++c) {
        std::sort(level[c].begin(), level[c].end());
        for (std::size_t i = 0; i < level[c].size(); ++i) index[c][level[c][i]] = i;
    }

    std::vector<std::size_t> rank(level.size() + 1, 0);
    for (std::size_t c = 1; c < level.size(); ++c) {
        if (level[c].empty()) break;
        std::vector<std::vector<std::int64_t>> m(
            level[c].size(), std::vector<std::int64_t>(level[c - 1].size(), 0));
        for (std::size_t i = 0; i < level[c].size(); ++i) {
            Mask g = level[c][i];
            int t = 0;
            for (Mask rem = g; rem; rem &= rem - 1, ++t) {
                Mask sub = g & ~(rem & ~(rem - 1));
                m[i][index[c - 1].at(sub)] = t % 2 == 0 ? 1 : -1;
            }
        }
        rank[c] = exact_rank(m, k);
    }

    HomologyDims dims;
    dims.by_degree.resize(level.size());
    for (std::size_t c = 0; c < level.size(); ++c)
        dims.by_degree[c] = level[c].size() - rank[c] - rank[c + 1];
    return dims;
}

} // namespace

HomologyDims reduced_homology_dims(const Complex& c, const FieldSpec& k) {
    if (c.is_void()) return {};
    return homology_of_faces(c.all_faces(), k);
}

bool is_cohen_macaulay(const Complex& c, const FieldSpec& k) {
    if (c.is_void())
        throw precondition_error("Cohen-Macaulayness of the void complex is undefined");
    for (Mask f : c.all_faces()) {
        Complex lk = link(c, f);
        HomologyDims dims = reduced_homology_dims(lk, k);
        for (int i = -1; i < lk.dim(); ++i)
            if (dims.at(i) != 0) return false;
    }
    return true;
}

int BettiTable::max_degree() const {
    int j = 0;
    for (const auto& [key, mult] : entries) j = std::max(j, key.second);
    return j;
}

std::vector<std::int64_t> BettiTable::alternating_sum_by_degree() const {
    std::vector<std::int64_t> coeff(static_cast<std::size_t>(max_degree()) + 1, 0);
    for (const auto& [key, mult] : entries) {
        auto [i, j] = key;
        std::int64_t signed_mult = static_cast<std::int64_t>(mult);
        coeff[static_cast<std::size_t>(j)] += i % 2 == 0 ? signed_mult : -signed_mult;
    }
    return coeff;
}

BettiTable betti_table(const SubsetFamily& gens, const FieldSpec& k, BettiSubject subject) {
    if (gens.empty()) throw precondition_error("no generators");
    SubsetFamily reduced = gens.inclusion_minimal();
    if (reduced.members().front() == 0) throw unit_ideal_error();
    int n = reduced.n();
    if (n > 20)
        throw precondition_error("Betti tables sweep all 2^n vertex subsets; limited to n <= 20");

    Complex sr = stanley_reisner_complex(reduced);
    std::vector<Mask> faces = sr.all_faces();

    BettiTable t;
    t.subject = BettiSubject::Ideal;
    Mask total = full_mask(n);
    for (Mask sigma = 0;; ++sigma) {
        std::vector<Mask> sub;
        for (Mask f : faces)
            if (subset_of(f, sigma)) sub.push_back(f);
        HomologyDims dims = homology_of_faces(sub, k);
        int s = card(sigma);
        for (int deg = -1; deg <= dims.top_degree(); ++deg) {
            std::uint64_t d = dims.at(deg);
            int i = s - deg - 2;
            if (d != 0 && i >= 0) t.entries[{i, s}] += d;
        }
        if (sigma == total) break;
    }

    if (subject == BettiSubject::Quotient) {
        BettiTable q;
        q.subject = BettiSubject::Quotient;
        q.entries[{0, 0}] = 1;
        for (const auto& [key, mult] : t.entries) q.entries[{key.first + 1, key.second}] = mult;
        return q;
    }
    return t;
}

LinearVerdict has_linear_resolution(const SubsetFamily& gens, const FieldSpec& k) {
    if (gens.empty()) throw precondition_error("no generators");
    SubsetFamily reduced = gens.inclusion_minimal();
    if (reduced.members().front() == 0) throw unit_ideal_error();
    LinearVerdict v;
    auto d = reduced.uniform_cardinality();
    if (!d) {
        v.reason = "generators are not all of one degree";
        return v;
    }
    BettiTable t = betti_table(reduced, k, BettiSubject::Ideal);
    for (const auto& [key, mult] : t.entries) {
        auto [i, j] = key;
        if (j != i + *d) {
            v.reason = "nonzero Betti number at (" + std::to_string(i) + ", " + std::to_string(j) +
                       ") off the line j = i + " + std::to_string(*d);
            v.offender = key;
            return v;
        }
    }
    v.linear = true;
    return v;
}

PrimeList minimal_primes(const SubsetFamily& gens) {
    if (gens.empty()) throw precondition_error("no generators");
    SubsetFamily reduced = gens.inclusion_minimal();
    if (reduced.members().front() == 0) throw unit_ideal_error();

    SubsetFamily covers = minimal_transversals(reduced);

    Complex sr = stanley_reisner_complex(reduced);
    Mask full = full_mask(reduced.n());
    std::vector<Mask> comp;
    if (sr.is_empty_complex())
        comp.push_back(full);
    else
        for (Mask f : sr.facets()) comp.push_back(full & ~f);
    SubsetFamily from_sr = SubsetFamily::of(reduced.n(), std::move(comp));

    if (!(covers == from_sr))
        throw internal_error("transversal and Stanley-Reisner prime routes disagree");
    return PrimeList{covers};
}

std::vector<int> PrimeList::heights() const {
    std::vector<int> hs;
    hs.reserve(components.size());
    for (Mask m : components.members()) hs.push_back(card(m));
    return hs;
}

bool is_unmixed(const SubsetFamily& gens) {
    PrimeList pl = minimal_primes(gens);
    auto hs = pl.heights();
    return std::all_of(hs.begin(), hs.end(), [&](int h) { return h == hs.front(); });
}

namespace {

struct shell_budget_escape {};

class ShellSearch {
  public:
    ShellSearch(std::vector<Mask> facets, std::uint64_t budget)
        : facets_(std::move(facets)), budget_(budget) {
        d_ = card(facets_.front());
    }

    bool run(std::vector<Mask>& order) {
        order.clear();
        return extend(0, order);
    }

    std::uint64_t steps() const { return steps_; }

  private:
    bool addable(std::uint64_t used, std::size_t k) const {
        if (used == 0) return true;
        Mask fk = facets_[k];
        std::vector<Mask> ridges;
        std::vector<Mask> smaller;
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            if (!(used >> i & 1)) continue;
            Mask inter = facets_[i] & fk;
            if (card(inter) == d_ - 1)
                ridges.push_back(inter);
            else
                smaller.push_back(inter);
        }
        if (ridges.empty()) return false;
        for (Mask s : smaller) {
            bool covered = false;
            for (Mask r : ridges)
                if (subset_of(s, r)) {
                    covered = true;
                    break;
                }
            if (!covered) return false;
        }
        return true;
    }

    bool extend(std::uint64_t used, std::vector<Mask>& order) {
        if (order.size() == facets_.size()) return true;
        if (dead_.count(used)) return false;
        if (++steps_ > budget_) throw shell_budget_escape{};

        std::vector<std::pair<int, std::size_t>> cands;
        for (std::size_t k = 0; k < facets_.size(); ++k) {
            if (used >> k & 1) continue;
            if (!addable(used, k)) continue;
            int overlap = 0;
            for (std::size_t i = 0; i < facets_.size(); ++i)
                if ((used >> i & 1) && card(facets_[i] & facets_[k]) == d_ - 1) ++overlap;
            cands.emplace_back(-overlap, k);
        }
        std::sort(cands.begin(), cands.end());
        for (auto [neg, k] : cands) {
            order.push_back(facets_[k]);
            if (extend(used | (std::uint64_t{1} << k), order)) return true;
            order.pop_back();
        }
        dead_.insert(used);
        return false;
    }

    std::vector<Mask> facets_;
    std::uint64_t budget_;
    int d_;
    std::uint64_t steps_ = 0;
    std::unordered_set<std::uint64_t> dead_;
};

} // namespace

ShellVerdict is_shellable(const Complex& c, std::uint64_t budget) {
    if (c.is_void())
        throw precondition_error("shellability of the void complex is undefined");
    if (!c.is_pure()) throw precondition_error("shellability search covers pure complexes only");
    ShellVerdict v;
    if (c.is_empty_complex()) {
        v.status = ShellStatus::Shellable;
        return v;
    }
    if (c.facets().size() > 64)
        throw precondition_error("shellability search is limited to 64 facets");
    ShellSearch search(c.facets(), budget);
    try {
        bool ok = search.run(v.order);
        v.status = ok ? ShellStatus::Shellable : ShellStatus::NotShellable;
        if (!ok) v.order.clear();
    } catch (const shell_budget_escape&) {
        v.status = ShellStatus::BudgetExhausted;
        v.order.clear();
    }
    v.steps = search.steps();
    return v;
}

std::vector<std::int64_t> k_polynomial(const Complex& c) {
    if (c.is_void())
        throw precondition_error("K-polynomial of the void complex is undefined");
    int n = c.n();
    std::vector<std::uint64_t> count(static_cast<std::size_t>(n) + 1, 0);
    count[0] = 1;
    if (!c.is_empty_complex()) {
        FVector fv = f_vector(c);
        for (std::size_t i = 0; i < fv.entries.size(); ++i) count[i + 1] = fv.entries[i];
    }
    std::vector<std::int64_t> coeff(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 0; j <= n; ++j) {
        __int128 acc = 0;
        for (int cd = 0; cd <= j; ++cd) {
            if (count[static_cast<std::size_t>(cd)] == 0) continue;
            __int128 term = static_cast<__int128>(count[static_cast<std::size_t>(cd)]) *
                            static_cast<__int128>(binomial(n - cd, j - cd));
            acc += (j - cd) % 2 == 0 ? term : -term;
        }
        if (acc > std::numeric_limits<std::int64_t>::max() ||
            acc < std::numeric_limits<std::int64_t>::min())
            throw precondition_error("K-polynomial coefficient exceeds 64 bits");
        coeff[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(acc);
    }
    return coeff;
}

} // namespace fcx
