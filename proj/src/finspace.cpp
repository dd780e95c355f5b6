#include "topodyn/finspace.hpp"

#include <algorithm>
#include <sstream>

namespace topodyn {

PointSet make_set(std::size_t n, std::initializer_list<int> ms) {
    PointSet s(n);
    for (int m : ms) s.set(static_cast<std::size_t>(m));
    return s;
}

PointSet make_set(std::size_t n, const std::vector<int>& ms) {
    PointSet s(n);
    for (int m : ms) s.set(static_cast<std::size_t>(m));
    return s;
}

std::vector<int> members(const PointSet& s) {
    std::vector<int> out;
    for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

namespace {

std::string set_to_string(const PointSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int m : members(s)) {
        if (!first) os << ',';
        os << m;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace

FinSpace FinSpace::from_min_open(std::vector<PointSet> rows) {
    const auto n = rows.size();
    for (std::size_t x = 0; x < n; ++x) {
        if (rows[x].size() != n)
            throw NotATopology("min_open row has wrong width");
        if (!rows[x].test(x))
            throw NotATopology("min_open(" + std::to_string(x) + ") does not contain the point");
    }
    // Alexandrov consistency: y in min_open(x) implies min_open(y) subset of min_open(x).
    for (std::size_t x = 0; x < n; ++x)
        for (auto y = rows[x].find_first(); y != PointSet::npos; y = rows[x].find_next(y))
            if (!rows[y].is_subset_of(rows[x]))
                throw NotATopology("Alexandrov consistency fails at pair (" +
                                   std::to_string(x) + "," + std::to_string(y) + ")");
    FinSpace s;
    s.min_open_ = std::move(rows);
    return s;
}

PointSet FinSpace::closure(const PointSet& s) const {
    PointSet out(min_open_.size());
    for (std::size_t x = 0; x < min_open_.size(); ++x)
        if (min_open_[x].intersects(s)) out.set(x);
    return out;
}

PointSet FinSpace::interior(const PointSet& s) const {
    PointSet out(min_open_.size());
    for (std::size_t x = 0; x < min_open_.size(); ++x)
        if (min_open_[x].is_subset_of(s)) out.set(x);
    return out;
}

bool FinSpace::is_open(const PointSet& s) const { return interior(s) == s; }
bool FinSpace::is_closed(const PointSet& s) const { return closure(s) == s; }

PointSet FinSpace::whole() const {
    PointSet s(min_open_.size());
    s.set();
    return s;
}

PointSet FinSpace::empty_set() const { return PointSet(min_open_.size()); }

SeparationProfile FinSpace::separation_profile() const {
    const int nn = n();
    SeparationProfile p;
    p.t0 = p.t1 = p.hausdorff = p.regular = p.normal = true;
    for (int x = 0; x < nn; ++x) {
        for (int y = 0; y < nn; ++y) {
            if (x == y) continue;
            if (min_open_[x] == min_open_[y]) p.t0 = false;
            if (min_open_[x].test(y)) p.t1 = false;
            if (min_open_[x].intersects(min_open_[y])) p.hausdorff = false;
            // Regularity reduces to singleton closures on Alexandrov spaces:
            // x outside cl{y} iff y not in min_open(x).
            if (!min_open_[x].test(y) && min_open_[x].intersects(min_open_[y]))
                p.regular = false;
        }
    }
    // Disjoint closed sets separate iff every pair of points with disjoint
    // singleton closures has disjoint minimal opens.
    for (int a = 0; a < nn && p.normal; ++a) {
        PointSet cla = closure(make_set(nn, {a}));
        for (int b = 0; b < nn; ++b) {
            PointSet clb = closure(make_set(nn, {b}));
            if (!cla.intersects(clb) && min_open_[a].intersects(min_open_[b])) {
                p.normal = false;
                break;
            }
        }
    }
    p.t3 = p.hausdorff && p.regular;
    return p;
}

FinSpace build_space(int n, const std::vector<PointSet>& opens) {
    std::vector<PointSet> family = opens;
    PointSet empty(n);
    PointSet whole(n);
    whole.set();
    family.push_back(empty);
    family.push_back(whole);
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    for (const auto& s : family)
        if (s.size() != static_cast<std::size_t>(n))
            throw NotATopology("open set has wrong width");
    auto in_family = [&](const PointSet& s) {
        return std::binary_search(family.begin(), family.end(), s);
    };
    for (const auto& a : family) {
        for (const auto& b : family) {
            if (!in_family(a | b))
                throw NotATopology("family not closed under union of " + set_to_string(a) +
                                   " and " + set_to_string(b));
            if (!in_family(a & b))
                throw NotATopology("family not closed under intersection of " + set_to_string(a) +
                                   " and " + set_to_string(b));
        }
    }
    std::vector<PointSet> rows(n, whole);
    for (int x = 0; x < n; ++x)
        for (const auto& s : family)
            if (s.test(x)) rows[x] &= s;
    return FinSpace::from_min_open(std::move(rows));
}

FinSpace discrete_space(int n) {
    std::vector<PointSet> rows;
    rows.reserve(n);
    for (int x = 0; x < n; ++x) rows.push_back(make_set(n, {x}));
    return FinSpace::from_min_open(std::move(rows));
}

FinSpace indiscrete_space(int n) {
    PointSet whole(n);
    whole.set();
    return FinSpace::from_min_open(std::vector<PointSet>(n, whole));
}

FinSpace sierpinski() {
    return build_space(2, {make_set(2, {1})});
}

FinSpace product(const FinSpace& x, const FinSpace& y) {
    const int nx = x.n();
    const int ny = y.n();
    std::vector<PointSet> rows;
    rows.reserve(static_cast<std::size_t>(nx) * ny);
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            PointSet row(static_cast<std::size_t>(nx) * ny);
            for (auto a = x.min_open(i).find_first(); a != PointSet::npos;
                 a = x.min_open(i).find_next(a))
                for (auto b = y.min_open(j).find_first(); b != PointSet::npos;
                     b = y.min_open(j).find_next(b))
                    row.set(a * ny + b);
            rows.push_back(std::move(row));
        }
    }
    return FinSpace::from_min_open(std::move(rows));
}

Subspace subspace(const FinSpace& x, const PointSet& carrier) {
    if (carrier.none()) throw EmptyCarrier("subspace carrier is empty");
    std::vector<int> to_parent = members(carrier);
    std::vector<int> to_sub(x.n(), -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i) to_sub[to_parent[i]] = static_cast<int>(i);
    std::vector<PointSet> rows;
    rows.reserve(to_parent.size());
    for (int p : to_parent) {
        PointSet row(to_parent.size());
        PointSet rel = x.min_open(p) & carrier;
        for (auto a = rel.find_first(); a != PointSet::npos; a = rel.find_next(a))
            row.set(to_sub[a]);
        rows.push_back(std::move(row));
    }
    return Subspace{FinSpace::from_min_open(std::move(rows)), std::move(to_parent)};
}

void for_each_topology(int n, const std::function<void(const FinSpace&)>& fn) {
    if (n < 1 || n > 4) throw CapExceeded("topology enumeration capped at 4 points");
    // Topologies on n labeled points correspond to preorders: min_open rows
    // are exactly the rows of a reflexive transitive boolean matrix.
    const int off = n * (n - 1);
    std::vector<std::pair<int, int>> slots;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) slots.emplace_back(x, y);
    for (std::uint32_t bits = 0; bits < (1u << off); ++bits) {
        std::vector<PointSet> rows;
        rows.reserve(n);
        for (int x = 0; x < n; ++x) rows.push_back(make_set(n, {x}));
        for (int s = 0; s < off; ++s)
            if (bits & (1u << s)) rows[slots[s].first].set(slots[s].second);
        bool transitive = true;
        for (int x = 0; x < n && transitive; ++x)
            for (auto y = rows[x].find_first(); y != PointSet::npos && transitive;
                 y = rows[x].find_next(y))
                if (!rows[y].is_subset_of(rows[x])) transitive = false;
        if (!transitive) continue;
        fn(FinSpace::from_min_open(std::move(rows)));
    }
}

std::vector<FinSpace> all_topologies(int n) {
    std::vector<FinSpace> out;
    for_each_topology(n, [&](const FinSpace& s) { out.push_back(s); });
    return out;
}

FinSpace random_space(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 3);
    std::vector<PointSet> rows;
    rows.reserve(n);
    for (int x = 0; x < n; ++x) rows.push_back(make_set(n, {x}));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && coin(rng) == 0) rows[x].set(y);
    // reflexive-transitive closure
    for (bool changed = true; changed;) {
        changed = false;
        for (int x = 0; x < n; ++x)
            for (auto y = rows[x].find_first(); y != PointSet::npos; y = rows[x].find_next(y))
                if (!rows[y].is_subset_of(rows[x])) {
                    rows[x] |= rows[y];
                    changed = true;
                }
    }
    return FinSpace::from_min_open(std::move(rows));
}

std::vector<PointSet> all_open_sets(const FinSpace& x) {
    if (x.n() > 20) throw CapExceeded("open-set enumeration capped at 20 points");
    std::vector<PointSet> out;
    const std::uint32_t limit = 1u << x.n();
    for (std::uint32_t bits = 0; bits < limit; ++bits) {
        PointSet s(x.n());
        for (int i = 0; i < x.n(); ++i)
            if (bits & (1u << i)) s.set(i);
        if (x.is_open(s)) out.push_back(std::move(s));
    }
    return out;
}

std::vector<PointSet> all_closed_sets(const FinSpace& x) {
    std::vector<PointSet> out;
    for (const auto& s : all_open_sets(x)) out.push_back(~s);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace topodyn
