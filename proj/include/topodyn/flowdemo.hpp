#ifndef TOPODYN_FLOWDEMO_HPP
#define TOPODYN_FLOWDEMO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "topodyn/json_fwd.hpp"

namespace topodyn::flow {

struct OutsideDisk : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonPeriodic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Point of the closed unit disk; construction tolerance 1e-12.
Vec2 disk_point(double x, double y);

// v = (y (1 - r^2), -x (1 - r^2)): rigid rotation on each circle of radius r,
// fixed on the boundary and at the origin.
Vec2 eval_field(const Vec2& p);

struct Trajectory {
    std::vector<double> times;
    std::vector<Vec2> points;
    double dt = 0.0;
    std::string integrator = "rk4";
    double max_radius_drift = 0.0;
};

// Fixed-step classical 4th-order integration of the autonomous system.
Trajectory integrate(const Vec2& p0, double dt, int steps);

// First-return time to the start ray from (r, 0), with linear crossing
// refinement. The analytic value is 2*pi / (1 - r^2).
double estimate_period(double r, double dt);
double analytic_period(double r);

struct WitnessEntry {
    int index = 0;
    double radius = 0.0;
    double return_distance = 0.0;  // distance to start after one measured period
    double diametral_distance = 0.0;  // closest approach to the diametral point
};

struct WitnessReport {
    std::vector<WitnessEntry> entries;
    bool boundary_pair_related = false;  // (1,0) vs (-1,0): fixed points, never related
    std::string verdict;
    nlohmann::ordered_json to_json() const;
};

// Radii r_n = 1 - 1/sqrt(pi n): each circle orbit passes through its own
// diametral point, while the limiting boundary points are fixed and
// unrelated; rendered as the non-closedness illustration.
WitnessReport r_witness_report(int n_max, double dt = 1e-3);

}  // namespace topodyn::flow

#endif
