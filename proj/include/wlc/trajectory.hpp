#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wlc/system.hpp"

namespace wlc {

/// Time-indexed rollout record. Row i holds the state at `times[i]`, the
/// control applied from that row to the next, the active mode and the stage
/// cost charged at that row. The final row carries the terminal state, a zero
/// control and the terminal cost, so the accumulated cost is the column sum.
struct Trajectory {
    std::vector<int> k_hat;
    std::vector<double> times;
    std::vector<Vector> states;
    std::vector<Vector> controls;
    std::vector<Mode> modes;
    std::vector<double> stage_costs;
    std::vector<Vector> costates;  // optional; empty when not recorded
    double switch_time = 0.0;       // free switching instant used, if any

    std::size_t size() const { return states.size(); }
    double accumulated_cost() const;
    void clear();
    void push(int k, double t, Vector x, Vector u, Mode mode, double stage_cost);
};

// CSV with header t,x1..xn,u1..um,mode,stage_cost (17 significant digits).
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
void save_trajectory_csv(const std::string& path, const Trajectory& traj);
Trajectory read_trajectory_csv(std::istream& in);
Trajectory load_trajectory_csv(const std::string& path);

}  // namespace wlc
