#include "topodyn/actions.hpp"

#include <numeric>

namespace topodyn {

Verdict verify_homeomorphism(const FinSpace& x, const std::vector<int>& f) {
    const int n = x.n();
    if (static_cast<int>(f.size()) != n) throw NotABijection("map has wrong arity");
    std::vector<bool> hit(n, false);
    for (int v : f) {
        if (v < 0 || v >= n || hit[v]) throw NotABijection("map is not a bijection");
        hit[v] = true;
    }
    for (int p = 0; p < n; ++p) {
        PointSet image(n);
        for (auto a = x.min_open(p).find_first(); a != PointSet::npos;
             a = x.min_open(p).find_next(a))
            image.set(f[a]);
        if (image != x.min_open(f[p])) {
            Verdict v;
            v.value = false;
            v.witness = Witness{"continuity-failure", {p},
                                "image of the minimal open of " + std::to_string(p) +
                                    " is not the minimal open of " + std::to_string(f[p])};
            return v;
        }
    }
    return Verdict{true, std::nullopt, std::nullopt};
}

Relation orbit_relation(const ActionSpec& a) {
    const int n = a.space.n();
    for (const auto& g : a.generators)
        if (!verify_homeomorphism(a.space, g).value)
            throw InvalidGenerator("generator is not a homeomorphism");
    // union-find over generator edges
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& g : a.generators)
        for (int p = 0; p < n; ++p) parent[find(p)] = find(g[p]);
    Relation r(n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (find(p) == find(q)) r.set(p, q);
    return r;
}

namespace {

int orbit_length(const std::vector<int>& g, int x) {
    int len = 1;
    for (int y = g[x]; y != x; y = g[y]) ++len;
    return len;
}

// largest cyclic gap between marked residues mod p (all marked -> gap 1)
int max_cyclic_gap(const std::vector<bool>& marked) {
    const int p = static_cast<int>(marked.size());
    int first = -1;
    for (int i = 0; i < p; ++i)
        if (marked[i]) {
            first = i;
            break;
        }
    if (first < 0) return 0;
    int worst = 0, prev = first;
    for (int i = first + 1; i < first + p + 1; ++i) {
        if (marked[i % p]) {
            worst = std::max(worst, i - prev);
            prev = i;
        }
    }
    return worst;
}

}  // namespace

SyndeticReport flow_pap_syndetic(const ActionSpec& a) {
    const int n = a.space.n();
    for (const auto& g : a.generators)
        if (!verify_homeomorphism(a.space, g).value)
            throw InvalidGenerator("generator is not a homeomorphism");
    SyndeticReport rep;
    rep.value = true;
    if (a.kind == GroupKind::Finite) {
        // K = G always works: the identity lies in N(x, U) whenever x is in U.
        rep.max_gap = 1;
        rep.notes.push_back("finite group: K = G covers every return-time set");
        return rep;
    }
    if (a.generators.size() != 1)
        throw InvalidGenerator("Z actions take exactly one generator");
    const auto& g = a.generators[0];
    for (int p = 0; p < n; ++p) {
        const int len = orbit_length(g, p);
        for (int u = 0; u < n; ++u) {
            if (!a.space.min_open(u).test(p)) continue;
            std::vector<bool> marked(len, false);
            int y = p;
            for (int t = 0; t < len; ++t) {
                if (a.space.min_open(u).test(y)) marked[t] = true;
                y = g[y];
            }
            rep.max_gap = std::max(rep.max_gap, max_cyclic_gap(marked));
        }
    }
    rep.notes.push_back(
        "trivially true on finite spaces: every orbit is periodic, so gaps are "
        "bounded by orbit length; K = {0..gap}");
    return rep;
}

PeriodicityProfile periodicity_profile(const ActionSpec& a) {
    if (a.generators.size() != 1)
        throw InvalidGenerator("periodicity profile takes a single generator");
    const auto& g = a.generators[0];
    PeriodicityProfile p;
    p.pointwise_periodic = true;
    long long order = 1;
    std::vector<bool> seen(a.space.n(), false);
    for (int x = 0; x < a.space.n(); ++x) {
        if (seen[x]) continue;
        int len = 1;
        seen[x] = true;
        for (int y = g[x]; y != x; y = g[y]) {
            seen[y] = true;
            ++len;
        }
        order = std::lcm(order, static_cast<long long>(len));
    }
    p.max_order = order;
    p.periodic = true;  // a permutation of a finite set has finite order
    return p;
}

}  // namespace topodyn
