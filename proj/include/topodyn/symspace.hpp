#ifndef TOPODYN_SYMSPACE_HPP
#define TOPODYN_SYMSPACE_HPP

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "topodyn/actions.hpp"

namespace topodyn {

struct UnsupportedSetShape : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotOpen : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PointNotInU : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Rat = boost::rational<long long>;

// q + m*alpha mod 1 for a fixed symbolic irrational alpha; q normalized to
// [0,1). The representation is faithful: irrationality makes (q, m) unique.
struct RotPoint {
    Rat q{0};
    long long m = 0;

    RotPoint() = default;
    RotPoint(Rat q_, long long m_);
    bool in_f() const { return q == Rat(0); }  // F = Z*alpha mod 1
    bool operator==(const RotPoint&) const = default;
};

// Point k/n on the level-n circle fiber, n >= 2, 0 <= k < n.
struct LevelPoint {
    int n = 2;
    int k = 0;
    bool operator==(const LevelPoint&) const = default;
};

struct InfinityPoint {
    bool operator==(const InfinityPoint&) const = default;
};

using SymPoint = std::variant<RotPoint, LevelPoint, InfinityPoint>;

std::string to_string(const SymPoint& p);

enum class SpaceKind { CofiniteWithF, DiscretePlusInfinity };

// Finitely-describable subsets of a symbolic space.
struct SymSet {
    enum class Kind {
        Empty,
        Whole,
        Finite,              // the listed points
        CofiniteComplement,  // complement of the listed points; minus_f drops F too
        FPlusFinite,         // F union the listed points (CofiniteWithF only)
        Orbit,               // orbit of the base point
        Level,               // one circle fiber (DiscretePlusInfinity only)
        ContainsInfinity     // infinity plus the listed level points
    };
    Kind kind = Kind::Empty;
    std::vector<SymPoint> pts;
    std::optional<SymPoint> base;
    int level = 0;
    bool minus_f = false;

    static SymSet empty() { return {}; }
    static SymSet whole();
    static SymSet finite(std::vector<SymPoint> pts);
    static SymSet cofinite(std::vector<SymPoint> excluded, bool minus_f = false);
    static SymSet f_plus(std::vector<SymPoint> pts);
    static SymSet orbit(SymPoint base);
    static SymSet level_set(int n);
    static SymSet contains_infinity(std::vector<SymPoint> extra = {});

    bool operator==(const SymSet&) const = default;
};

// One of the two fixed countable spaces together with its action.
// CofiniteWithF: opens are cofinite sets and cofinite-minus-F sets; the group
// Z acts by the symbolic rotation n.[x] = [x + n*alpha]. with_f=false
// degenerates to the plain cofinite topology; trivial_action freezes Z.
// DiscretePlusInfinity: level points are isolated, neighborhoods of infinity
// are cofinite; the generator advances each level-n cycle by one step.
struct SymSystem {
    SpaceKind kind = SpaceKind::CofiniteWithF;
    bool with_f = true;
    bool trivial_action = false;

    static SymSystem ex002() { return {SpaceKind::CofiniteWithF, true, false}; }
    static SymSystem ex06() { return {SpaceKind::DiscretePlusInfinity, false, false}; }
    static SymSystem degenerate_cofinite() { return {SpaceKind::CofiniteWithF, false, true}; }

    SymPoint act(long long steps, const SymPoint& p) const;
};

bool sym_member(const SymSystem& sys, const SymSet& s, const SymPoint& p);
bool sym_is_open(const SymSystem& sys, const SymSet& s);
bool sym_is_closed(const SymSystem& sys, const SymSet& s);

// Least closed superset within the kind's closed-set lattice.
SymSet sym_closure(const SymSystem& sys, const SymSet& s);

struct Certificate {
    bool value = false;
    std::string kind;
    std::string text;
};

// Membership of a point in the closure of the orbit of another point.
bool sym_orbit_closure_member(const SymSystem& sys, const SymPoint& x, const SymPoint& y);

// (x, y) in the closure, in the product space, of the orbit relation.
Certificate sym_bar_membership(const SymSystem& sys, const SymPoint& x, const SymPoint& y);

// Same, for the orbit-closure relation R; r_closed compares this with
// sym_orbit_closure_member.
Certificate sym_r_bar_membership(const SymSystem& sys, const SymPoint& x, const SymPoint& y);

struct SymReport {
    Report report;
    std::vector<Certificate> certificates;
    nlohmann::ordered_json to_json() const;
};

SymReport sym_analyze(const SymSystem& sys);

struct SyndeticCert {
    bool value = false;
    long long gap = 0;
    std::string text;
};

SyndeticCert sym_syndetic(const SymSystem& sys, const SymPoint& x, const SymSet& u);

// Finite model of the tower: levels 2..max_level plus the point at infinity
// (discrete trace topology), with the cycle-advance generator and the orbit
// partition.
struct TruncatedTower {
    ActionSpec action;
    Relation orbits;
    int infinity_index = 0;
};
TruncatedTower truncate_tower(int max_level);

}  // namespace topodyn

#endif
