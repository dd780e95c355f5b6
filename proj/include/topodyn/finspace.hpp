#ifndef TOPODYN_FINSPACE_HPP
#define TOPODYN_FINSPACE_HPP

#include <boost/dynamic_bitset.hpp>
#include <functional>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace topodyn {

// Subset of the points 0..n-1 of a space; size() encodes n.
using PointSet = boost::dynamic_bitset<>;

PointSet make_set(std::size_t n, std::initializer_list<int> members);
PointSet make_set(std::size_t n, const std::vector<int>& members);
std::vector<int> members(const PointSet& s);

struct NotATopology : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyCarrier : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SeparationProfile {
    bool t0 = false;
    bool t1 = false;
    bool hausdorff = false;
    bool regular = false;
    bool t3 = false;
    bool normal = false;
};

// A finite topological space, stored via each point's minimal open
// neighborhood (every finite topology is Alexandrov, so this is lossless).
class FinSpace {
public:
    FinSpace() = default;

    // Validating constructor from minimal-open rows.
    static FinSpace from_min_open(std::vector<PointSet> rows);

    int n() const { return static_cast<int>(min_open_.size()); }
    const PointSet& min_open(int x) const { return min_open_[x]; }

    // cl(S) = {x : min_open(x) meets S}.
    PointSet closure(const PointSet& s) const;
    // int(S) = {x : min_open(x) subset of S}.
    PointSet interior(const PointSet& s) const;
    bool is_open(const PointSet& s) const;
    bool is_closed(const PointSet& s) const;

    PointSet whole() const;
    PointSet empty_set() const;

    SeparationProfile separation_profile() const;

    bool operator==(const FinSpace& other) const { return min_open_ == other.min_open_; }

private:
    std::vector<PointSet> min_open_;
};

// Validates the claimed open-set family and derives the minimal opens.
FinSpace build_space(int n, const std::vector<PointSet>& opens);

FinSpace discrete_space(int n);
FinSpace indiscrete_space(int n);
FinSpace sierpinski();  // points {0,1}, opens {∅, {1}, X}

// Product with row-major pair indexing: (x, y) -> x * Y.n() + y.
FinSpace product(const FinSpace& x, const FinSpace& y);

struct Subspace {
    FinSpace space;
    std::vector<int> to_parent;  // sub index -> parent index
};
Subspace subspace(const FinSpace& x, const PointSet& carrier);

// Every topology on n labeled points, exactly once (n <= 4).
// Cardinalities are 1, 4, 29, 355 for n = 1..4.
void for_each_topology(int n, const std::function<void(const FinSpace&)>& fn);
std::vector<FinSpace> all_topologies(int n);

// Random Alexandrov topology: reflexive-transitive closure of a random digraph.
FinSpace random_space(int n, std::mt19937_64& rng);

// All open sets, by scanning subsets; guarded against large n.
std::vector<PointSet> all_open_sets(const FinSpace& x);
std::vector<PointSet> all_closed_sets(const FinSpace& x);

}  // namespace topodyn

#endif
