#include "fcx/enumerate.hpp"

#include "fcx/duality.hpp"
#include "fcx/fideal.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <thread>

namespace fcx {

namespace {

std::vector<Mask> pool_or_throw(int n, int d, int m) {
    if (d < 1 || d > n) throw precondition_error("facet cardinality outside [1, n]");
    std::vector<Mask> pool = all_subsets_of_cardinality(n, d);
    if (m < 1 || static_cast<std::uint64_t>(m) > pool.size())
        throw precondition_error("facet count outside [1, C(n, d)]");
    return pool;
}

// Lexicographic successor of an index combination over [0, pool).
bool next_combination(std::vector<std::uint32_t>& idx, std::uint32_t pool) {
    std::uint32_t m = static_cast<std::uint32_t>(idx.size());
    for (std::uint32_t i = m; i-- > 0;) {
        if (idx[i] < pool - m + i) {
            ++idx[i];
            for (std::uint32_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

Complex complex_of(const std::vector<Mask>& pool, const std::vector<std::uint32_t>& idx, int n) {
    std::vector<Mask> facets;
    facets.reserve(idx.size());
    for (std::uint32_t i : idx) facets.push_back(pool[i]);
    return Complex::generated(n, facets);
}

} // namespace

std::uint64_t enumeration_size(int n, int d, int m) {
    std::vector<Mask> pool = pool_or_throw(n, d, m);
    if (pool.size() > 64)
        throw precondition_error("pool size above 64 exceeds the exact rank machinery");
    return binomial(static_cast<int>(pool.size()), m);
}

void enumerate_pure(int n, int d, int m, const std::function<void(const Complex&)>& visit) {
    std::vector<Mask> pool = pool_or_throw(n, d, m);
    std::vector<std::uint32_t> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
    do {
        visit(complex_of(pool, idx, n));
    } while (next_combination(idx, static_cast<std::uint32_t>(pool.size())));
}

void enumerate_pure_range(int n, int d, int m, std::uint64_t begin, std::uint64_t end,
                          const std::function<void(const Complex&)>& visit) {
    std::vector<Mask> pool = pool_or_throw(n, d, m);
    std::uint64_t total = enumeration_size(n, d, m);
    if (begin > end || end > total) throw precondition_error("rank range outside [0, total]");
    if (begin == end) return;
    std::vector<std::uint32_t> idx =
        unrank_combination(begin, static_cast<std::uint32_t>(pool.size()), static_cast<std::uint32_t>(m));
    for (std::uint64_t r = begin; r < end; ++r) {
        visit(complex_of(pool, idx, n));
        if (r + 1 < end) next_combination(idx, static_cast<std::uint32_t>(pool.size()));
    }
}

void sample_pure(int n, int d, int m, std::uint64_t count, std::uint64_t seed,
                 const std::function<void(const Complex&)>& visit) {
    std::vector<Mask> pool = pool_or_throw(n, d, m);
    std::uint64_t total = enumeration_size(n, d, m);
    std::mt19937_64 rng(seed);
    // Uniform rank via rejection; r % total is unbiased when r lands
    // below the largest multiple of total.
    std::uint64_t rem = (0 - total) % total;
    std::uint64_t cutoff = std::numeric_limits<std::uint64_t>::max() - rem;
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t r;
        do {
            r = rng();
        } while (r > cutoff);
        std::vector<std::uint32_t> idx = unrank_combination(
            r % total, static_cast<std::uint32_t>(pool.size()), static_cast<std::uint32_t>(m));
        visit(complex_of(pool, idx, n));
    }
}

namespace {

Mask apply_perm(Mask g, const std::vector<int>& image) {
    Mask out = 0;
    for (Mask rem = g; rem; rem &= rem - 1) {
        int v = std::countr_zero(rem) + 1;
        out |= Mask{1} << (image[static_cast<std::size_t>(v)] - 1);
    }
    return out;
}

std::vector<Mask> relabeled_facets(const Complex& c, const std::vector<int>& image) {
    std::vector<Mask> out;
    out.reserve(c.facets().size());
    for (Mask g : c.facets()) out.push_back(apply_perm(g, image));
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

bool facet_list_less(const std::vector<Mask>& a, const std::vector<Mask>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
}

} // namespace

CanonicalForm canonical_form(const Complex& c) {
    if (c.is_void() || c.is_empty_complex()) return {c, true};
    int n = c.n();
    int d = card(c.facets().front());

    if (n > 10) {
        // Deterministic relabeling by (facet degree, label): a genuine
        // permutation, so equal outputs certify isomorphism.
        std::vector<std::pair<int, int>> keyed;
        for (int v = 1; v <= n; ++v) {
            int deg = 0;
            for (Mask g : c.facets())
                if (g >> (v - 1) & 1) ++deg;
            keyed.emplace_back(-deg, v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> image(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(keyed[i].second)] = i + 1;
        return {Complex::generated(n, relabeled_facets(c, image)), false};
    }

    // The least form's first facet must be {1..d}, so only permutations
    // sending some least-cardinality facet onto {1..d} can win.
    std::optional<std::vector<Mask>> best;
    std::vector<int> image(static_cast<std::size_t>(n) + 1, 0);
    for (Mask f : c.facets()) {
        if (card(f) != d) break;
        std::vector<int> fv = mask_vertices(f);
        std::vector<int> rest;
        for (int v = 1; v <= n; ++v)
            if (!(f >> (v - 1) & 1)) rest.push_back(v);
        std::sort(fv.begin(), fv.end());
        do {
            std::sort(rest.begin(), rest.end());
            do {
                for (std::size_t i = 0; i < fv.size(); ++i)
                    image[static_cast<std::size_t>(fv[i])] = static_cast<int>(i) + 1;
                for (std::size_t i = 0; i < rest.size(); ++i)
                    image[static_cast<std::size_t>(rest[i])] = d + static_cast<int>(i) + 1;
                std::vector<Mask> candidate = relabeled_facets(c, image);
                if (!best || facet_list_less(candidate, *best)) best = std::move(candidate);
            } while (std::next_permutation(rest.begin(), rest.end()));
        } while (std::next_permutation(fv.begin(), fv.end()));
    }
    return {Complex::generated(n, *best), true};
}

namespace {

struct Tally {
    std::uint64_t total = 0;
    std::uint64_t f = 0;
    std::uint64_t strong = 0;
    std::uint64_t wd = 0;
    std::uint64_t cm = 0;
    std::map<std::vector<Mask>, IsoClass> classes;
    bool canonical_exact = true;
};

struct Verdicts {
    bool f = false;
    bool strong = false;
    bool wd = false;
    std::optional<bool> cm;
};

Verdicts evaluate(const Complex& c, int n, int d, int m, const ClassifyOptions& opts) {
    Verdicts v;
    SubsetFamily facets = SubsetFamily::of(n, c.facets());
    v.f = is_f_ideal(facets).is_f;
    bool proper = static_cast<std::uint64_t>(m) < binomial(n, d);
    v.strong = proper && is_strong(c);
    if (n == 2 * d) v.wd = v.f && is_well_distributed(c).well_distributed;
    if (opts.cm) v.cm = is_cohen_macaulay(c, opts.field);
    return v;
}

void absorb(Tally& t, const Complex& c, int n, int d, int m, const ClassifyOptions& opts) {
    ++t.total;
    if (opts.iso) {
        CanonicalForm cf = canonical_form(c);
        t.canonical_exact = t.canonical_exact && cf.exact;
        auto it = t.classes.find(cf.form.facets());
        if (it == t.classes.end()) {
            Verdicts v = evaluate(cf.form, n, d, m, opts);
            IsoClass cls{cf.form, 1, v.f, v.strong, v.wd, v.cm};
            it = t.classes.emplace(cf.form.facets(), std::move(cls)).first;
        } else {
            ++it->second.orbit;
        }
        const IsoClass& cls = it->second;
        t.f += cls.f;
        t.strong += cls.strong;
        t.wd += cls.well_distributed;
        t.cm += cls.cohen_macaulay.value_or(false);
    } else {
        Verdicts v = evaluate(c, n, d, m, opts);
        t.f += v.f;
        t.strong += v.strong;
        t.wd += v.wd;
        t.cm += v.cm.value_or(false);
    }
}

void merge(Tally& into, Tally&& from) {
    into.total += from.total;
    into.f += from.f;
    into.strong += from.strong;
    into.wd += from.wd;
    into.cm += from.cm;
    into.canonical_exact = into.canonical_exact && from.canonical_exact;
    for (auto& [key, cls] : from.classes) {
        auto it = into.classes.find(key);
        if (it == into.classes.end())
            into.classes.emplace(key, std::move(cls));
        else
            it->second.orbit += cls.orbit;
    }
}

} // namespace

ClassifyReport classify(int n, int d, int m, const ClassifyOptions& opts) {
    std::uint64_t total = enumeration_size(n, d, m);
    int jobs = std::max(1, opts.jobs);
    if (static_cast<std::uint64_t>(jobs) > total) jobs = static_cast<int>(total);

    ClassifyReport report;
    report.n = n;
    report.d = d;
    report.m = m;
    report.iso = opts.iso;

    std::vector<std::pair<std::uint64_t, std::uint64_t>> shards;
    for (int j = 0; j < jobs; ++j) {
        std::uint64_t lo = total * static_cast<std::uint64_t>(j) / static_cast<std::uint64_t>(jobs);
        std::uint64_t hi =
            total * (static_cast<std::uint64_t>(j) + 1) / static_cast<std::uint64_t>(jobs);
        shards.emplace_back(lo, hi);
    }
    report.shards = shards;

    std::vector<Tally> parts(static_cast<std::size_t>(jobs));
    auto work = [&](int j) {
        auto [lo, hi] = shards[static_cast<std::size_t>(j)];
        enumerate_pure_range(n, d, m, lo, hi, [&](const Complex& c) {
            absorb(parts[static_cast<std::size_t>(j)], c, n, d, m, opts);
        });
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j) threads.emplace_back(work, j);
        for (auto& th : threads) th.join();
    }

    Tally all;
    for (auto& p : parts) merge(all, std::move(p));

    report.total = all.total;
    report.f_count = all.f;
    report.strong_count = all.strong;
    report.well_distributed_count = all.wd;
    report.cm_count = all.cm;
    report.canonical_exact = all.canonical_exact;
    if (opts.iso)
        for (auto& [key, cls] : all.classes) report.classes.push_back(std::move(cls));
    return report;
}

} // namespace fcx
