#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wlc/schedule.hpp"
#include "wlc/system.hpp"
#include "wlc/trajectory.hpp"

namespace wlc {

/// Uniform grid in hat time. Every phase occupies one unit of hat time and
/// `steps_per_phase` grid intervals, so n_prime = phases / delta_hat.
struct HatGrid {
    double delta_hat = 0.0;
    int phases = 0;
    int steps_per_phase = 0;
    int n_prime = 0;

    // Throws InvalidArgument unless 1 / delta_hat is an integer.
    static HatGrid make(double delta_hat, int phases);
    int phase_of(int k_hat) const;
    double t_hat(int k_hat) const { return k_hat * delta_hat; }
};

/// Reference signal r(t). `closed_form_sine` integrates
/// r'(t) = amplitude * sin(frequency * t) on the listed components from r0
/// in closed form; `csv_samples` interpolates tabulated samples linearly and
/// holds the end values outside the table.
class Reference {
public:
    enum class Kind { Constant, ClosedFormSine, CsvSamples };

    static Reference constant(Vector r0);
    static Reference closed_form_sine(Vector r0, std::vector<int> components, double amplitude,
                                      double frequency);
    static Reference samples(std::vector<double> times, std::vector<Vector> values);
    static Reference load_csv(const std::string& path, Eigen::Index dim);

    Vector at(double t) const;
    Kind kind() const { return kind_; }
    const Vector& r0() const { return r0_; }
    Eigen::Index dim() const { return r0_.size(); }

private:
    Kind kind_ = Kind::Constant;
    Vector r0_;
    std::vector<int> components_;
    double amplitude_ = 0.0;
    double frequency_ = 0.0;
    std::vector<double> times_;
    std::vector<Vector> values_;
};

struct CostWeights {
    Matrix S;
    Matrix Q;
    Matrix R;
    Reference reference;

    // S and Q symmetric PSD (eigenvalues >= -1e-10), R symmetric PD.
    void validate() const;
    static CostWeights diagonal(const Vector& s, const Vector& q, const Vector& r, Reference ref);
};

double hat_to_time(double t_hat, const ModeSchedule& sched);
// Throws AmbiguousInverse when t lies inside a zero-length phase shared with
// a neighbouring phase boundary.
double time_to_hat(double t, const ModeSchedule& sched);

// x'(t_hat) = (f_v(x) + g_v(x) u) * (length of the phase containing t_hat).
Vector transformed_derivative(const ControlAffineSystem& sys, const Vector& x, const Vector& u,
                              double t_hat, const ModeSchedule& sched);

// Euler step on the hat grid: x + (f_v + g_v u) * phase_length * delta_hat.
Vector discretize_step(const ControlAffineSystem& sys, const Vector& x, const Vector& u, int k_hat,
                       const ModeSchedule& sched, const HatGrid& grid);

Vector reference_at(int k_hat, const ModeSchedule& sched, const HatGrid& grid,
                    const CostWeights& weights);

double stage_cost(const Vector& x, const Vector& u, int k_hat, const ModeSchedule& sched,
                  const HatGrid& grid, const CostWeights& weights);
double terminal_cost(const Vector& x, const Vector& r, const Matrix& S);

// Recomputes the discrete cost of a hat-grid trajectory: stage costs at
// rows 0..N'-1 plus the terminal cost at row N'.
double total_cost(const Trajectory& traj, const ModeSchedule& sched, const HatGrid& grid,
                  const CostWeights& weights);

using HatControl = std::function<Vector(int k_hat, const Vector& x)>;

// Rolls the hat-grid dynamics forward under `control`, recording stage costs.
Trajectory hat_rollout(const ControlAffineSystem& sys, const Vector& x0, const HatControl& control,
                       const ModeSchedule& sched, const HatGrid& grid, const CostWeights& weights);

}  // namespace wlc
