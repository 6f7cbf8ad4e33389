#pragma once

#include <functional>

#include "wlc/schedule.hpp"
#include "wlc/system.hpp"
#include "wlc/trajectory.hpp"

namespace wlc {

// One explicit step with the control held over the interval. Both apply the
// system's post_step hook.
Vector step_euler(const ControlAffineSystem& sys, const Vector& x, const Vector& u, Mode mode,
                  double dt);
Vector step_rk4(const ControlAffineSystem& sys, const Vector& x, const Vector& u, Mode mode,
                double dt);

enum class Integrator { Euler, RK4 };

using ControlProfile = std::function<Vector(double t)>;
// Optional per-row cost charged by integrate(); may be empty.
using RowCost = std::function<double(double t, const Vector& x, const Vector& u, double dt)>;

// Fixed-step rollout over `steps` intervals starting at schedule.t0. The mode of
// each step is the one active at its left end. `out` is filled row by row, so it
// keeps the partial rollout if a plant guard throws part way.
void integrate(const ControlAffineSystem& sys, const Vector& x0, const ControlProfile& control,
               const ModeSchedule& schedule, double dt, int steps, Integrator method,
               Trajectory& out, const RowCost& row_cost = {});

}  // namespace wlc
