// Definitional oracles, kept independent of the library's optimized paths:
// closures via enumerated set families, quantifiers over all open sets, and
// a brute-force topology enumerator over all 2^(2^n) subset families.
#ifndef TOPODYN_TESTS_ORACLES_HPP
#define TOPODYN_TESTS_ORACLES_HPP

#include <vector>

#include "topodyn/relation.hpp"

namespace oracles {

using topodyn::FinSpace;
using topodyn::PointSet;
using topodyn::Relation;

inline PointSet bits_to_set(int n, std::uint32_t bits) {
    PointSet s(n);
    for (int i = 0; i < n; ++i)
        if (bits & (1u << i)) s.set(i);
    return s;
}

// All open sets as unions of minimal opens (the set-family route).
inline std::vector<PointSet> open_family(const FinSpace& x) {
    const int n = x.n();
    std::vector<PointSet> out;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        PointSet u(n);
        for (int i = 0; i < n; ++i)
            if (bits & (1u << i)) u |= x.min_open(i);
        out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<PointSet> closed_family(const FinSpace& x) {
    std::vector<PointSet> out;
    for (const auto& u : open_family(x)) out.push_back(~u);
    std::sort(out.begin(), out.end());
    return out;
}

// Smallest enumerated closed superset.
inline PointSet closure_oracle(const FinSpace& x, const PointSet& s) {
    PointSet best = x.whole();
    for (const auto& c : closed_family(x))
        if (s.is_subset_of(c) && c.count() < best.count()) best = c;
    return best;
}

// Largest enumerated open subset.
inline PointSet interior_oracle(const FinSpace& x, const PointSet& s) {
    PointSet best = x.empty_set();
    for (const auto& u : open_family(x))
        if (u.is_subset_of(s) && u.count() > best.count()) best = u;
    return best;
}

// Per-row closure via the family route.
inline Relation hat_oracle(const FinSpace& x, const Relation& e) {
    Relation out(e.n());
    for (int i = 0; i < e.n(); ++i) out.row[i] = closure_oracle(x, e.row[i]);
    return out;
}

// Closure of the pair set in the explicitly built product space.
inline Relation bar_oracle(const FinSpace& x, const Relation& e) {
    const int n = x.n();
    FinSpace prod = topodyn::product(x, x);
    PointSet pairs(static_cast<std::size_t>(n) * n);
    for (auto [a, b] : e.pairs()) pairs.set(static_cast<std::size_t>(a) * n + b);
    PointSet cl = prod.closure(pairs);
    Relation out(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (cl.test(static_cast<std::size_t>(a) * n + b)) out.set(a, b);
    return out;
}

// Full quantifier over every open pair, not just minimal opens.
inline Relation prolongation_oracle(const FinSpace& x, const Relation& e) {
    const int n = x.n();
    auto opens = open_family(x);
    Relation out(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            bool all = true;
            for (const auto& u : opens) {
                if (!u.test(a)) continue;
                for (const auto& v : opens) {
                    if (!v.test(b)) continue;
                    bool hit = false;
                    for (auto p = u.find_first(); p != PointSet::npos && !hit;
                         p = u.find_next(p))
                        if (e.row[p].intersects(v)) hit = true;
                    if (!hit) {
                        all = false;
                        break;
                    }
                }
                if (!all) break;
            }
            if (all) out.set(a, b);
        }
    }
    return out;
}

// Exhaustive search over every E-saturated open set.
inline bool l_stable_oracle(const FinSpace& x, const Relation& e) {
    auto opens = open_family(x);
    Relation h = topodyn::hat(x, e);
    for (int p = 0; p < x.n(); ++p) {
        for (const auto& u : opens) {
            if (!h.row[p].is_subset_of(u)) continue;
            bool found = false;
            for (const auto& v : opens) {
                if (h.row[p].is_subset_of(v) && v.is_subset_of(u) &&
                    topodyn::saturate(e, v).is_subset_of(v)) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

// Definitional separation quantifiers over the enumerated families.
inline topodyn::SeparationProfile separation_oracle(const FinSpace& x) {
    const int n = x.n();
    auto opens = open_family(x);
    auto closeds = closed_family(x);
    topodyn::SeparationProfile p;
    p.t0 = p.t1 = p.hausdorff = p.regular = p.normal = true;
    auto separated = [&](const PointSet& a, const PointSet& b) {
        for (const auto& u : opens)
            if (a.is_subset_of(u))
                for (const auto& v : opens)
                    if (b.is_subset_of(v) && !u.intersects(v)) return true;
        return false;
    };
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            bool some_u = false, some_v = false;
            for (const auto& u : opens) {
                if (u.test(a) && !u.test(b)) some_u = true;
                if (u.test(b) && !u.test(a)) some_v = true;
            }
            if (!some_u && !some_v) p.t0 = false;
            if (!some_u) p.t1 = false;
            PointSet sa = topodyn::make_set(n, {a});
            PointSet sb = topodyn::make_set(n, {b});
            if (!separated(sa, sb)) p.hausdorff = false;
        }
    }
    for (int a = 0; a < n; ++a) {
        PointSet sa = topodyn::make_set(n, {a});
        for (const auto& c : closeds)
            if (!c.test(a) && c.any() && !separated(sa, c)) p.regular = false;
    }
    for (const auto& c1 : closeds)
        for (const auto& c2 : closeds)
            if (c1.any() && c2.any() && !c1.intersects(c2) && !separated(c1, c2))
                p.normal = false;
    p.t3 = p.hausdorff && p.regular;
    return p;
}

// Brute force: every subset family over n points that satisfies the topology
// axioms, reported as the induced minimal-open rows (n <= 3).
inline std::vector<FinSpace> brute_force_topologies(int n) {
    std::vector<FinSpace> out;
    const int subsets = 1 << n;
    const std::uint64_t families = 1ull << subsets;
    for (std::uint64_t fam = 0; fam < families; ++fam) {
        auto has = [&](std::uint32_t s) { return (fam >> s) & 1ull; };
        if (!has(0) || !has(subsets - 1)) continue;  // empty set and whole space
        bool ok = true;
        for (std::uint32_t a = 0; a < static_cast<std::uint32_t>(subsets) && ok; ++a) {
            if (!has(a)) continue;
            for (std::uint32_t b = 0; b < static_cast<std::uint32_t>(subsets) && ok; ++b) {
                if (!has(b)) continue;
                if (!has(a | b) || !has(a & b)) ok = false;
            }
        }
        if (!ok) continue;
        std::vector<PointSet> rows(n, PointSet(n));
        for (int p = 0; p < n; ++p) {
            std::uint32_t inter = subsets - 1;
            for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(subsets); ++s)
                if (has(s) && (s & (1u << p))) inter &= s;
            rows[p] = bits_to_set(n, inter);
        }
        out.push_back(FinSpace::from_min_open(std::move(rows)));
    }
    return out;
}

}  // namespace oracles

#endif
