#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wlc/schedule.hpp"
#include "wlc/system.hpp"
#include "wlc/trajectory.hpp"
#include "wlc/transform.hpp"

namespace wlc::adp {

/// Polynomial basis phi(t1, x): every monomial of total degree <= `degree` in
/// the selected entries of z = ((t1, x_1, ..., x_n) - offset) ./ scale, ordered
/// by degree and then lexicographically by variable index. Variable 0 is t1 and
/// variable i + 1 is x_i. By default all variables are selected, the offset is 0
/// and the scale 1. The first entry is the constant 1.
class Basis {
public:
    Basis() = default;
    Basis(int degree, int state_dim);
    Basis(int degree, int state_dim, Vector offset, Vector scale, std::vector<int> variables = {});

    int degree() const { return degree_; }
    int state_dim() const { return state_dim_; }
    const Vector& offset() const { return offset_; }
    const Vector& scale() const { return scale_; }
    const std::vector<int>& variables() const { return variables_; }
    int size() const { return static_cast<int>(monomials_.size()); }
    // Variable indices of monomial j, repeated for powers.
    const std::vector<int>& monomial(int j) const { return monomials_[static_cast<std::size_t>(j)]; }

    Vector eval(double t1, const Vector& x) const;
    // d phi / d x, size() x state_dim().
    Matrix jacobian(double t1, const Vector& x) const;

private:
    Vector scaled_inputs(double t1, const Vector& x) const;

    int degree_ = 0;
    int state_dim_ = 0;
    Vector offset_;
    Vector scale_;
    std::vector<int> variables_;
    std::vector<std::vector<int>> monomials_;
};

// phi(t1, x) for the given basis.
Vector basis_phi(const Basis& basis, double t1, const Vector& x);

/// Mode schedule with one free switching instant. `base` holds the modes, t0,
/// tf and every fixed switching time; the entry at `free_index` is replaced by t1.
struct ScheduleTemplate {
    ModeSchedule base;
    int free_index = 0;

    ModeSchedule with_switch(double t1) const;
    // Interior sampling interval [t0 + margin*T, tf - margin*T].
    std::pair<double, double> interior(double margin = 0.05) const;
};

/// Optimal-control problem on the hat grid.
struct Problem {
    const ControlAffineSystem* system = nullptr;
    CostWeights weights;
    ScheduleTemplate schedule;
    HatGrid grid;

    void validate() const;
};

struct TrainingConfig {
    Vector lower;  // domain box for the sampled states
    Vector upper;
    double t1_lower = 0.0;
    double t1_upper = 0.0;
    int degree = 2;
    // Basis variables (0 is t1, i + 1 is x_i); empty selects all of them.
    std::vector<int> basis_variables;
    int batch_size = 500;
    int inner_iterations = 3;
    double inner_tolerance = 1e-8;
    // Precondition the control update with the curvature of the trained
    // costate; without it the update is the plain fixed point u = -R^-1 g^T lambda.
    bool newton_inner = true;
    double ridge_lambda = 1e-8;
    double fd_step = 1e-6;
    double max_condition = 1e12;
    // Draw a fresh sample set at every step instead of reusing one set.
    bool resample_each_step = false;
    std::uint64_t seed = 0;

    void validate(const Problem& problem, int basis_size) const;
    bool contains(const Vector& x) const;
};

struct TrainingReport {
    std::vector<double> frobenius_norm;  // ||W_k||_F, indexed by k
    std::vector<double> rms_residual;
    std::vector<double> condition;
};

/// Per-step linear-in-parameter costate networks: W_k^T phi(t1, x_k) predicts
/// the costate at step k + 1.
struct CostateNetwork {
    Basis basis;
    HatGrid grid;
    ScheduleTemplate schedule;
    std::vector<Matrix> weights;  // n_prime matrices of size basis.size() x n
    TrainingReport report;

    void validate() const;
};

void save_network(const std::string& path, const CostateNetwork& net);
CostateNetwork load_network(const std::string& path);
void write_weight_history_csv(std::ostream& out, const CostateNetwork& net);

// Predicted costate lambda_{k+1} from the state at step k.
Vector evaluate_costate(const CostateNetwork& net, int k_hat, double t1, const Vector& x);

// Stationary control u = -R^-1 g_v(x)^T lambda clipped to the admissible box.
Vector control_from_costate(const ControlAffineSystem& sys, const Matrix& R, const Vector& x,
                            Mode mode, const Vector& lambda_next);

Vector policy(const CostateNetwork& net, const Problem& problem, int k_hat, double t1,
              const Vector& x);

Vector terminal_costate(const Vector& x, const Vector& r, const Matrix& S);

// Jacobian of the hat-grid step with the control held fixed.
Matrix step_jacobian(const ControlAffineSystem& sys, const Vector& x, const Vector& u, int k_hat,
                     const ModeSchedule& sched, const HatGrid& grid, double h = 1e-6);

// lambda_k(x): terminal costate at k = n_prime, otherwise
// Q phase_length delta_hat (x - r_k) + J_k^T W_k^T phi(t1, x) with J_k taken at
// the policy control. Requires W_k to be trained already.
Vector costate_target(const CostateNetwork& net, const Problem& problem, int k_hat, double t1,
                      const Vector& x, double h = 1e-6);

CostateNetwork train_backward(const TrainingConfig& cfg, const Problem& problem);

// Rolls the policy forward from step 0. `out` receives every completed row,
// so it keeps the partial rollout if the plant throws.
void closed_loop_simulate(const CostateNetwork& net, const Problem& problem, const Vector& x0,
                          double t1, Trajectory& out);
Trajectory closed_loop_simulate(const CostateNetwork& net, const Problem& problem,
                                const Vector& x0, double t1);

// Accumulated cost from step k onward under the policy.
double cost_to_go(const CostateNetwork& net, const Problem& problem, int k_hat, double t1,
                  const Vector& x);

struct SweepResult {
    double t1_star = 0.0;
    double cost_star = 0.0;
    std::vector<double> t1;
    std::vector<double> cost;
};

// Uniform candidates on [t1_lower, t1_upper]; ties within 1e-12 go to the
// smaller t1.
SweepResult sweep_switching_times(const CostateNetwork& net, const Problem& problem,
                                  const Vector& x0, int candidates, double t1_lower,
                                  double t1_upper);
void write_cost_curve_csv(std::ostream& out, const SweepResult& sweep);

// ||W_b - W_{b-1}||_F divided by the median of all adjacent-step differences.
double weight_jump_ratio(const CostateNetwork& net, int boundary_k);

/// Backward Riccati recursion for a switched linear problem with stage cost
/// 1/2 (x^T Q_k x + u^T R_k u) and terminal cost 1/2 x^T P_N x.
struct LqrSolution {
    std::vector<Matrix> P;  // n_prime + 1 entries
    std::vector<Matrix> K;  // u_k = -K_k x_k
    std::vector<Matrix> A;  // per-step discrete dynamics x_{k+1} = A_k x_k + B_k u_k
    std::vector<Matrix> B;

    Vector costate(int k, const Vector& x) const { return P[static_cast<std::size_t>(k)] * x; }
    // lambda_{k+1} along the optimal step from x_k.
    Vector next_costate(int k, const Vector& x) const;
    double optimal_cost(const Vector& x0) const { return 0.5 * x0.dot(P.front() * x0); }
};

// Discrete per-phase matrices; phase i covers steps [switch_index[i-1], switch_index[i]).
// The terminal weight is P_N = 2 S.
LqrSolution lqr_oracle(const std::vector<Matrix>& A_list, const std::vector<Matrix>& B_list,
                       const std::vector<Matrix>& Q_list, const std::vector<Matrix>& R_list,
                       const Matrix& S, int n_steps, const std::vector<int>& switch_index);

// Oracle for a switched linear system on the problem's hat grid at switching time t1.
LqrSolution lqr_oracle(const SwitchedLinearSystem& sys, const Problem& problem, double t1);

}  // namespace wlc::adp
