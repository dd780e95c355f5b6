#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "topodyn/checkers.hpp"
#include "topodyn/flowdemo.hpp"
#include "topodyn/gallery.hpp"
#include "topodyn/json_io.hpp"
#include "topodyn/symspace.hpp"

namespace {

using topodyn::CheckInput;
using topodyn::Instance;
using topodyn::Violation;

int run_check(const std::string& path, const std::string& format) {
    nlohmann::json doc;
    CheckInput in;
    try {
        std::ifstream f(path);
        if (!f) {
            std::cerr << "error: cannot open " << path << "\n";
            return 2;
        }
        doc = nlohmann::json::parse(f);
        in = topodyn::check_input_from_json(doc);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    nlohmann::ordered_json out;
    out["input"] = path;
    out["space"] = topodyn::space_to_json(in.space);
    out["analysis"] = topodyn::analyze(in.space, in.rel).to_json();
    if (in.action) {
        auto syn = topodyn::flow_pap_syndetic(*in.action);
        out["flow_pap"]["value"] = syn.value;
        out["flow_pap"]["max_gap"] = syn.max_gap;
        out["flow_pap"]["notes"] = syn.notes;
        if (in.action->generators.size() == 1) {
            auto prof = topodyn::periodicity_profile(*in.action);
            out["periodicity"]["pointwise_periodic"] = prof.pointwise_periodic;
            out["periodicity"]["periodic"] = prof.periodic;
            out["periodicity"]["max_order"] = prof.max_order;
        }
    }
    if (format == "text") {
        for (const auto& [key, val] : out["analysis"]["verdicts"].items())
            std::cout << key << ": " << (val.get<bool>() ? "true" : "false") << "\n";
        for (const auto& n : out["analysis"]["notes"])
            std::cout << "note: " << n.get<std::string>() << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;  // verdicts are data, not errors
}

void print_violations(const std::vector<Violation>& violations) {
    for (const auto& v : violations)
        std::cout << "violation[" << v.instance << "] " << v.law << ": " << v.witness.kind
                  << " (" << v.witness.explanation << ")\n";
}

int run_enumerate(int points, int random_count, std::uint64_t seed, int max_points) {
    // generation stays sequential (so seeds are reproducible); the battery
    // itself runs in parallel with index-ordered output
    std::vector<Instance> instances;
    if (random_count > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick_n(2, max_points);
        for (int i = 0; i < random_count; ++i) {
            int n = pick_n(rng);
            topodyn::FinSpace x = topodyn::random_space(n, rng);
            topodyn::Relation e = topodyn::random_equivalence(n, rng);
            instances.push_back({std::move(x), std::move(e)});
        }
    } else {
        topodyn::for_each_topology(points, [&](const topodyn::FinSpace& x) {
            topodyn::for_each_partition(points, [&](const topodyn::Relation& e) {
                instances.push_back({x, e});
            });
        });
    }
    std::vector<Violation> violations = topodyn::theorem_battery(instances);
    std::cout << instances.size() << " instances, " << violations.size() << " violations\n";
    print_violations(violations);
    return violations.empty() ? 0 : 1;
}

int run_gallery(const std::string& name) {
    nlohmann::ordered_json rep;
    topodyn::gallery::DiffResult d;
    try {
        rep = topodyn::gallery::report(name);
        d = topodyn::gallery::diff(name);
    } catch (const topodyn::gallery::UnknownFixture& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << rep.dump(2) << "\n";
    std::cout << (d.match ? "match" : "drift: " + d.detail) << "\n";
    return d.match ? 0 : 1;
}

int run_flowdemo(double dt, double tol_period, double tol_drift, int n_max,
                 const std::string& csv_path) {
    nlohmann::ordered_json out;
    bool ok = true;
    out["periods"] = nlohmann::ordered_json::array();
    for (double r : {0.3, 0.5, 0.7, 0.9}) {
        double measured = topodyn::flow::estimate_period(r, dt);
        double analytic = topodyn::flow::analytic_period(r);
        double rel = std::fabs(measured - analytic) / analytic;
        ok = ok && rel <= tol_period;
        nlohmann::ordered_json pj;
        pj["r"] = r;
        pj["measured"] = measured;
        pj["analytic"] = analytic;
        pj["relative_error"] = rel;
        out["periods"].push_back(pj);
    }
    out["drift"] = nlohmann::ordered_json::array();
    for (double r : {0.3, 0.5, 0.9}) {
        int steps = static_cast<int>(std::ceil(topodyn::flow::analytic_period(r) / dt));
        auto traj = topodyn::flow::integrate({r, 0.0}, dt, steps);
        ok = ok && traj.max_radius_drift <= tol_drift;
        nlohmann::ordered_json dj;
        dj["r"] = r;
        dj["max_radius_drift"] = traj.max_radius_drift;
        out["drift"].push_back(dj);
        if (!csv_path.empty() && r == 0.5) {
            std::ofstream csv(csv_path);
            csv << "t,x,y\n";
            for (std::size_t i = 0; i < traj.times.size(); ++i)
                csv << traj.times[i] << "," << traj.points[i].x << "," << traj.points[i].y
                    << "\n";
        }
    }
    out["witness"] = topodyn::flow::r_witness_report(n_max, dt).to_json();
    out["label"] = "numeric illustration";
    std::cout << out.dump(2) << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"checkers for orbit-closure relations on finite and symbolic spaces"};
    app.require_subcommand(1);

    std::string check_path, check_format = "json";
    auto* check = app.add_subcommand("check", "analyze a space/relation/action input file");
    check->add_option("input", check_path, "input JSON file")->required();
    check->add_option("--format", check_format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    int points = 3, random_count = 0, max_points = 6;
    std::uint64_t seed = 0;
    auto* en = app.add_subcommand("enumerate", "run the lemma battery");
    en->add_option("--points", points, "exhaustive sweep point count (<= 4)")
        ->check(CLI::Range(1, 4));
    en->add_option("--random", random_count, "number of random instances instead");
    en->add_option("--seed", seed, "seed for the random battery");
    en->add_option("--max-points", max_points, "largest random space (<= 8)")
        ->check(CLI::Range(2, 8));

    std::string gallery_name;
    auto* gal = app.add_subcommand("gallery", "run a fixture and diff against the committed report");
    gal->add_option("name", gallery_name, "ex1 | ex002 | ex06 | ex04")->required();

    double dt = 1e-3, tol_period = 0.005, tol_drift = 1e-6;
    int n_max = 5;
    std::string csv_path;
    auto* fd = app.add_subcommand("flow-demo", "disk-flow numeric report");
    fd->add_option("--dt", dt, "integration step");
    fd->add_option("--tolerance-period", tol_period, "relative period tolerance");
    fd->add_option("--tolerance-drift", tol_drift, "radius drift tolerance");
    fd->add_option("--n-max", n_max, "number of witness radii");
    fd->add_option("--csv", csv_path, "trajectory sample output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return run_check(check_path, check_format);
        if (en->parsed()) return run_enumerate(points, random_count, seed, max_points);
        if (gal->parsed()) return run_gallery(gallery_name);
        if (fd->parsed()) return run_flowdemo(dt, tol_period, tol_drift, n_max, csv_path);
    } catch (const topodyn::CrossAssertionError& e) {
        std::cerr << "internal cross-assertion violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
