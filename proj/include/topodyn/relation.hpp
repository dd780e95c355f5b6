#ifndef TOPODYN_RELATION_HPP
#define TOPODYN_RELATION_HPP

#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "topodyn/finspace.hpp"

namespace topodyn {

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Binary relation over point indices; row x is E(x) = {y : (x,y) in E}.
// Carries no back-reference to a space: the same matrix is reused across
// topologies by the enumeration sweeps.
struct Relation {
    std::vector<PointSet> row;

    Relation() = default;
    explicit Relation(int n) : row(n, PointSet(n)) {}

    int n() const { return static_cast<int>(row.size()); }
    bool at(int x, int y) const { return row[x].test(y); }
    void set(int x, int y) { row[x].set(y); }

    bool operator==(const Relation& other) const { return row == other.row; }

    static Relation diagonal(int n);
    static Relation full(int n);
    static Relation from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
    static Relation from_partition(int n, const std::vector<std::vector<int>>& classes);

    std::vector<std::pair<int, int>> pairs() const;
};

struct RelationProfile {
    bool reflexive = false;
    bool symmetric = false;
    bool transitive = false;
    bool equivalence = false;
};

RelationProfile relation_profile(const Relation& e);

// Row-wise closure: hat(E)(x) = cl(E(x)).
Relation hat(const FinSpace& x, const Relation& e);

// Closure of E in the product topology on X x X, computed row-wise:
// bar(E)(x) = cl(E(min_open(x))).
Relation product_closure(const FinSpace& x, const Relation& e);

// Bilateral prolongation, by the neighborhood quantifier over minimal opens
// (nets in finite spaces reduce to neighborhood quantification). Kept as a
// code path independent of product_closure; the two must agree.
Relation prolongation(const FinSpace& x, const Relation& e);

// Orbit-class relation: (x,y) in tilde(E) iff hat(E)(x) == hat(E)(y).
Relation tilde(const FinSpace& x, const Relation& e);

// E(A) = union of rows over A.
PointSet saturate(const Relation& e, const PointSet& a);
bool is_saturated(const Relation& e, const PointSet& a);

struct RestrictResult {
    FinSpace space;
    Relation rel;
    std::vector<int> to_parent;
};
RestrictResult restrict_to(const FinSpace& x, const Relation& e, const PointSet& carrier);

// All set partitions of {0..n-1} as equivalence relations (Bell(n) of them).
void for_each_partition(int n, const std::function<void(const Relation&)>& fn);
std::vector<Relation> all_partitions(int n);

Relation random_equivalence(int n, std::mt19937_64& rng);

}  // namespace topodyn

#endif
