#include "topodyn/relation.hpp"

#include <map>

namespace topodyn {

Relation Relation::diagonal(int n) {
    Relation r(n);
    for (int x = 0; x < n; ++x) r.set(x, x);
    return r;
}

Relation Relation::full(int n) {
    Relation r(n);
    for (auto& row : r.row) row.set();
    return r;
}

Relation Relation::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    Relation r(n);
    for (auto [x, y] : pairs) {
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw DimensionMismatch("relation pair out of range");
        r.set(x, y);
    }
    return r;
}

Relation Relation::from_partition(int n, const std::vector<std::vector<int>>& classes) {
    Relation r(n);
    PointSet seen(n);
    for (const auto& cls : classes) {
        PointSet c = make_set(n, cls);
        if (c.intersects(seen)) throw DimensionMismatch("partition classes overlap");
        seen |= c;
        for (int m : cls) r.row[m] = c;
    }
    if (!seen.all()) throw DimensionMismatch("partition does not cover all points");
    return r;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n(); ++x)
        for (int y : members(row[x])) out.emplace_back(x, y);
    return out;
}

RelationProfile relation_profile(const Relation& e) {
    const int n = e.n();
    RelationProfile p;
    p.reflexive = p.symmetric = p.transitive = true;
    for (int x = 0; x < n; ++x) {
        if (!e.at(x, x)) p.reflexive = false;
        for (auto y = e.row[x].find_first(); y != PointSet::npos; y = e.row[x].find_next(y)) {
            if (!e.at(static_cast<int>(y), x)) p.symmetric = false;
            if (!e.row[y].is_subset_of(e.row[x])) p.transitive = false;
        }
    }
    p.equivalence = p.reflexive && p.symmetric && p.transitive;
    return p;
}

namespace {
void require_match(const FinSpace& x, const Relation& e) {
    if (x.n() != e.n()) throw DimensionMismatch("relation and space dimensions differ");
}
}  // namespace

Relation hat(const FinSpace& x, const Relation& e) {
    require_match(x, e);
    Relation out(e.n());
    for (int i = 0; i < e.n(); ++i) out.row[i] = x.closure(e.row[i]);
    return out;
}

Relation product_closure(const FinSpace& x, const Relation& e) {
    require_match(x, e);
    Relation out(e.n());
    for (int i = 0; i < e.n(); ++i)
        out.row[i] = x.closure(saturate(e, x.min_open(i)));
    return out;
}

Relation prolongation(const FinSpace& x, const Relation& e) {
    require_match(x, e);
    const int n = e.n();
    Relation out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // (i,j) in D iff some a in min_open(i) has E(a) meeting min_open(j);
            // any larger open pair then meets E as well.
            bool hit = false;
            for (auto a = x.min_open(i).find_first(); a != PointSet::npos && !hit;
                 a = x.min_open(i).find_next(a))
                if (e.row[a].intersects(x.min_open(j))) hit = true;
            if (hit) out.set(i, j);
        }
    }
    return out;
}

Relation tilde(const FinSpace& x, const Relation& e) {
    Relation h = hat(x, e);
    const int n = e.n();
    Relation out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (h.row[i] == h.row[j]) out.set(i, j);
    return out;
}

PointSet saturate(const Relation& e, const PointSet& a) {
    PointSet out(e.n());
    for (auto y = a.find_first(); y != PointSet::npos; y = a.find_next(y)) out |= e.row[y];
    return out;
}

bool is_saturated(const Relation& e, const PointSet& a) {
    return saturate(e, a) == a;
}

RestrictResult restrict_to(const FinSpace& x, const Relation& e, const PointSet& carrier) {
    require_match(x, e);
    Subspace sub = subspace(x, carrier);
    const int m = sub.space.n();
    Relation r(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (e.at(sub.to_parent[i], sub.to_parent[j])) r.set(i, j);
    return RestrictResult{std::move(sub.space), std::move(r), std::move(sub.to_parent)};
}

void for_each_partition(int n, const std::function<void(const Relation&)>& fn) {
    // Restricted growth strings: block[i] <= 1 + max(block[0..i-1]).
    std::vector<int> block(n, 0);
    std::function<void(int, int)> rec = [&](int i, int maxb) {
        if (i == n) {
            std::map<int, std::vector<int>> classes;
            for (int p = 0; p < n; ++p) classes[block[p]].push_back(p);
            std::vector<std::vector<int>> cls;
            for (auto& [_, v] : classes) cls.push_back(v);
            fn(Relation::from_partition(n, cls));
            return;
        }
        for (int b = 0; b <= maxb + 1; ++b) {
            block[i] = b;
            rec(i + 1, std::max(maxb, b));
        }
    };
    rec(1, 0);
}

std::vector<Relation> all_partitions(int n) {
    std::vector<Relation> out;
    for_each_partition(n, [&](const Relation& r) { out.push_back(r); });
    return out;
}

Relation random_equivalence(int n, std::mt19937_64& rng) {
    // Chinese-restaurant style block assignment, deterministic in the rng.
    std::vector<int> block(n);
    int blocks = 1;
    block[0] = 0;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, blocks);
        int b = pick(rng);
        block[i] = b;
        if (b == blocks) ++blocks;
    }
    std::vector<std::vector<int>> classes(blocks);
    for (int i = 0; i < n; ++i) classes[block[i]].push_back(i);
    return Relation::from_partition(n, classes);
}

}  // namespace topodyn
