#ifndef TOPODYN_ACTIONS_HPP
#define TOPODYN_ACTIONS_HPP

#include <string>
#include <vector>

#include "topodyn/checkers.hpp"

namespace topodyn {

struct NotABijection : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidGenerator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GroupKind { Z, Finite };

// Group action on a FinSpace by homeomorphism generators. Z means the free
// group on one generator; Finite means the generators enumerate all elements.
struct ActionSpec {
    FinSpace space;
    std::vector<std::vector<int>> generators;
    GroupKind kind = GroupKind::Z;
};

// Continuity on an Alexandrov space: f(min_open(x)) inside min_open(f(x));
// homeomorphism iff equality holds everywhere.
Verdict verify_homeomorphism(const FinSpace& x, const std::vector<int>& f);

// Equivalence whose classes are orbits under generators and their inverses.
Relation orbit_relation(const ActionSpec& a);

struct SyndeticReport {
    bool value = false;
    int max_gap = 0;  // worst gap over all points and minimal opens
    std::vector<std::string> notes;
};

// Flow-level pointwise almost periodicity: every return-time set N(x, U) is
// syndetic. Verified per point and per minimal open; on a finite space every
// Z-orbit is periodic, so gaps are bounded by orbit length.
SyndeticReport flow_pap_syndetic(const ActionSpec& a);

struct PeriodicityProfile {
    bool pointwise_periodic = false;
    bool periodic = false;
    long long max_order = 0;  // lcm of orbit lengths
};

// Single-generator only.
PeriodicityProfile periodicity_profile(const ActionSpec& a);

}  // namespace topodyn

#endif
