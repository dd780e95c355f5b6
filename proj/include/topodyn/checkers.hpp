#ifndef TOPODYN_CHECKERS_HPP
#define TOPODYN_CHECKERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "topodyn/json_fwd.hpp"
#include "topodyn/relation.hpp"

namespace topodyn {

struct NotAnEquivalence : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// An internal consistency check between two computation routes failed.
struct CrossAssertionError : std::logic_error {
    using std::logic_error::logic_error;
};

struct Witness {
    std::string kind;
    std::vector<int> points;
    std::string explanation;
};

struct Verdict {
    bool value = false;
    std::optional<Witness> witness;
    std::optional<std::string> note;

    explicit operator bool() const { return value; }
};

struct NamedVerdict {
    std::string name;
    bool value;
};

struct Report {
    std::vector<NamedVerdict> verdicts;
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;

    void add(const std::string& name, const Verdict& v);
    void add(const std::string& name, bool value);
    bool get(const std::string& name) const;
    nlohmann::ordered_json to_json() const;
};

// hat(E) an equivalence relation; when E itself is one, the symmetry-only
// shortcut must agree with the full three-way check.
Verdict is_pointwise_almost_periodic(const FinSpace& x, const Relation& e);

// hat(E) equal to its own closure in the product; the parenthetical variant
// hat(E) == product_closure(E) is computed too and must agree.
Verdict is_r_closed(const FinSpace& x, const Relation& e);

// prolongation == hat; always equal to the r_closed verdict on finite spaces.
bool is_d_stable(const FinSpace& x, const Relation& e);

// Every open neighborhood of hat(E)(x) contains an E-saturated open
// neighborhood of it. Only the minimal open superset of hat(E)(x) needs
// checking: the condition is antitone in U and arbitrary intersections of
// opens are open here.
Verdict is_l_stable(const FinSpace& x, const Relation& e);

// Saturating any closed set by class closures stays closed; provably always
// true on finite spaces, verified anyway for n <= 6.
Verdict is_weakly_almost_periodic(const FinSpace& x, const Relation& e);

// Every class dense.
Verdict is_minimal(const FinSpace& x, const Relation& e);

// Points x with hat(E)(y) == hat(E)(x) for every y in hat(E)(x). Each point's
// verdict is cross-checked against the restriction characterization
// (symmetry of hat|_(hat(x)), and closed-equivalence of it on the subspace);
// the cross-check applies where hat(E)(x) is E-saturated, which every
// almost periodic point is.
PointSet almost_periodic_points(const FinSpace& x, const Relation& e);

struct Quotient {
    FinSpace space;
    std::vector<int> point_class;            // parent point -> class index
    std::vector<std::vector<int>> class_members;
};
Quotient quotient(const FinSpace& x, const Relation& q);

Verdict quotient_is_hausdorff(const FinSpace& x, const Relation& e);

Report analyze(const FinSpace& x, const Relation& e);

struct Instance {
    FinSpace space;
    Relation rel;
};

struct Violation {
    std::size_t instance;
    std::string law;
    Witness witness;
};

// Evaluates the lemma battery on one instance, appending violations.
void check_instance(const FinSpace& x, const Relation& e, std::size_t index,
                    std::vector<Violation>& out);

std::vector<Violation> theorem_battery(const std::vector<Instance>& instances);

}  // namespace topodyn

#endif
