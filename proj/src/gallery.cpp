#include "topodyn/gallery.hpp"

#include <cmath>

#include "topodyn/checkers.hpp"
#include "topodyn/flowdemo.hpp"
#include "topodyn/json_io.hpp"
#include "topodyn/symspace.hpp"

namespace topodyn::gallery {

namespace {

nlohmann::ordered_json ex1_report() {
    FinSpace x = sierpinski();
    ActionSpec trivial{x, {{0, 1}}, GroupKind::Finite};
    Relation orbits = orbit_relation(trivial);
    Relation r = hat(x, orbits);

    nlohmann::ordered_json j;
    j["fixture"] = "ex1";
    j["space"] = space_to_json(x);
    j["closed_sets"] = nlohmann::ordered_json::array();
    for (const auto& c : all_closed_sets(x)) j["closed_sets"].push_back(members(c));
    j["orbit_closure_relation"] = nlohmann::ordered_json::array();
    for (auto [a, b] : r.pairs()) j["orbit_closure_relation"].push_back({a, b});
    j["flow_pap"] = flow_pap_syndetic(trivial).value;
    j["analysis"] = analyze(x, orbits).to_json();
    return j;
}

nlohmann::ordered_json ex002_report() {
    SymSystem sys = SymSystem::ex002();
    SymReport rep = sym_analyze(sys);
    nlohmann::ordered_json j;
    j["fixture"] = "ex002";
    j.update(rep.to_json());

    const SymPoint half = RotPoint(Rat(1, 2), 0);
    j["orbit_closure_of_non_f_point_is_whole"] =
        (sym_closure(sys, SymSet::orbit(half)) == SymSet::whole());
    j["orbit_closure_of_f_point_is_f"] =
        (sym_closure(sys, SymSet::orbit(RotPoint(Rat(0), 0))) == SymSet::f_plus({}));

    // explicit syndetic gap bounds: exclude two orbit points from the open set
    j["syndetic_examples"] = nlohmann::ordered_json::array();
    for (long long k : {1, 3}) {
        SymSet u = SymSet::cofinite({RotPoint(Rat(1, 2), k), RotPoint(Rat(1, 2), k + 1)});
        SyndeticCert c = sym_syndetic(sys, half, u);
        nlohmann::ordered_json ej;
        ej["excluded_orbit_indices"] = {k, k + 1};
        ej["gap"] = c.gap;
        ej["text"] = c.text;
        j["syndetic_examples"].push_back(ej);
    }
    return j;
}

nlohmann::ordered_json ex06_report() {
    SymSystem sys = SymSystem::ex06();
    SymReport rep = sym_analyze(sys);
    nlohmann::ordered_json j;
    j["fixture"] = "ex06";
    j.update(rep.to_json());

    j["truncations"] = nlohmann::ordered_json::array();
    for (int levels : {5, 10, 20}) {
        TruncatedTower t = truncate_tower(levels);
        Report fin = analyze(t.action.space, t.orbits);
        PeriodicityProfile prof = periodicity_profile(t.action);
        bool match = fin.get("r_closed") == rep.report.get("r_closed") &&
                     fin.get("pap_decomposition") == rep.report.get("decomposition_pap") &&
                     fin.get("orbit_class_hausdorff") == rep.report.get("quotient_hausdorff") &&
                     fin.get("minimal") == rep.report.get("minimal") &&
                     prof.pointwise_periodic == rep.report.get("pointwise_periodic") &&
                     flow_pap_syndetic(t.action).value == rep.report.get("flow_pap");
        nlohmann::ordered_json tj;
        tj["levels"] = levels;
        tj["points"] = t.action.space.n();
        tj["verdicts_match"] = match;
        // the global order diverges with the truncation window, which is how
        // the finite models witness the failure of global periodicity
        tj["generator_order"] = prof.max_order;
        j["truncations"].push_back(tj);
    }
    return j;
}

nlohmann::ordered_json ex04_report() {
    nlohmann::ordered_json j;
    j["fixture"] = "ex04";
    j["label"] = "numeric illustration";
    const double dt = 1e-3;
    j["periods"] = nlohmann::ordered_json::array();
    for (double r : {0.3, 0.5, 0.7, 0.9}) {
        double measured = flow::estimate_period(r, dt);
        double analytic = flow::analytic_period(r);
        nlohmann::ordered_json pj;
        pj["r"] = r;
        pj["measured"] = measured;
        pj["analytic"] = analytic;
        pj["relative_error"] = std::fabs(measured - analytic) / analytic;
        j["periods"].push_back(pj);
    }
    j["drift"] = nlohmann::ordered_json::array();
    for (double r : {0.3, 0.5, 0.9}) {
        double period = flow::analytic_period(r);
        int steps = static_cast<int>(std::ceil(period / dt));
        flow::Trajectory traj = flow::integrate({r, 0.0}, dt, steps);
        nlohmann::ordered_json dj;
        dj["r"] = r;
        dj["max_radius_drift"] = traj.max_radius_drift;
        j["drift"].push_back(dj);
    }
    j["witness"] = flow::r_witness_report(5, dt).to_json();
    return j;
}

}  // namespace

nlohmann::ordered_json report(const std::string& name) {
    if (name == "ex1") return ex1_report();
    if (name == "ex002") return ex002_report();
    if (name == "ex06") return ex06_report();
    if (name == "ex04") return ex04_report();
    throw UnknownFixture("unknown gallery fixture: " + name);
}

// Frozen reports, defined in gallery_expected.cpp; regenerated only on a
// deliberate fixture change.
extern const char* const kExpectedEx1;
extern const char* const kExpectedEx002;
extern const char* const kExpectedEx06;

nlohmann::ordered_json expected(const std::string& name) {
    if (name == "ex1") return nlohmann::ordered_json::parse(kExpectedEx1);
    if (name == "ex002") return nlohmann::ordered_json::parse(kExpectedEx002);
    if (name == "ex06") return nlohmann::ordered_json::parse(kExpectedEx06);
    if (name == "ex04") {
        nlohmann::ordered_json j;
        j["fixture"] = "ex04";
        j["tolerances"]["period_relative_error"] = 0.005;
        j["tolerances"]["radius_drift"] = 1e-6;
        j["tolerances"]["witness_return_distance"] = 1e-3;
        return j;
    }
    throw UnknownFixture("unknown gallery fixture: " + name);
}

DiffResult diff(const std::string& name) {
    nlohmann::ordered_json got = report(name);
    if (name == "ex04") {
        nlohmann::ordered_json tol = expected(name)["tolerances"];
        for (const auto& p : got["periods"])
            if (p["relative_error"].get<double>() > tol["period_relative_error"].get<double>())
                return {false, "period drift at r=" + p["r"].dump()};
        for (const auto& d : got["drift"])
            if (d["max_radius_drift"].get<double>() > tol["radius_drift"].get<double>())
                return {false, "radius drift at r=" + d["r"].dump()};
        for (const auto& e : got["witness"]["entries"])
            if (e["return_distance"].get<double>() >
                tol["witness_return_distance"].get<double>())
                return {false, "witness orbit failed to return at n=" + e["n"].dump()};
        if (got["witness"]["boundary_pair_related"].get<bool>())
            return {false, "boundary pair unexpectedly related"};
        return {true, ""};
    }
    nlohmann::ordered_json want = expected(name);
    if (got == want) return {true, ""};
    return {false, "report drift: " + nlohmann::ordered_json::diff(got, want).dump()};
}

}  // namespace topodyn::gallery
