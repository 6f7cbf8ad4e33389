#pragma once

#include <array>
#include <string>

#include "wlc/engine_fit.hpp"
#include "wlc/system.hpp"

namespace wlc::plant {

inline constexpr Eigen::Index kStates = 11;
inline constexpr Eigen::Index kControls = 4;

// State layout (0-based): omega_e, p_im, theta, omega, X, Y, V, beta, delta, u_p, u_s.
enum StateIndex : Eigen::Index {
    kOmegaE = 0, kPim, kTheta, kOmega, kX, kY, kV, kBeta, kDelta, kUp, kUs
};
// Control layout: du_p/dt, du_s/dt, u_f, u_b.
enum ControlIndex : Eigen::Index { kLiftRate = 0, kSteerAccel, kFuel, kBrake };

/// Wheel-loader parameters. The first block carries the published vehicle
/// constants under their usual symbols; the second block holds the constants
/// of the sub-models (engine coupling, torque converter, end stops) and the
/// nondimensionalization scales.
struct WLParams {
    double J_e = 0.43;
    double r1 = 2.0;
    double r2 = 2.0;
    double theta1 = 3.14159265358979323846 / 6.0;
    double n_lc = 2.0;
    double A_lc = 0.0284;
    double y_g = 2.13;
    double eta_lift = 0.5;
    double y_off = 0.5;
    double M_tot = 31330.0;
    double mu_roll = 0.03;
    double F_roll = 9.81 * 0.03 * 31330.0;
    double L = 3.7;
    double rho_f = 832.0;
    double R_w = 0.3175;
    double T1 = 5.0;
    double T2 = -2.5;
    double eta_gb = 0.9;
    double C_st = 1e5;
    double F_buc = 0.0981 * 31330.0;
    double F_arm = 0.0981 * 31330.0;
    double I_boom = 1200.0;

    // Engine speed [rad/s] and torque [N m] per model unit.
    double engine_speed_scale = 250.0;
    double engine_torque_scale = 500.0;
    // Friction and pumping loss k * omega_e^2 in model torque units.
    double engine_friction = 40.0;
    // Converter pump torque [N m] per unit of the T1 + T2 * nu line at omega_e = 1.
    double pump_torque_scale = 200.0;
    double lift_power_max = 4e4;
    double steer_rate_max = 0.5;
    double boom_stop_lower = -0.7;
    double boom_stop_upper = 1.4;
    double boom_stop_rate = 50.0;
    double steer_stop = 0.55;
    double delta_max = 0.6;
    double omega_e_min = 0.15;
    double omega_e_max = 1.5;
    double theta_min = -3.14159265358979323846 / 4.0;
    double theta_max = 3.14159265358979323846 / 2.0;

    std::array<double, kStates> state_scales{1.0, 1.0, 3.14159265358979323846 / 2.0, 1.0, 30.0,
                                             30.0, 3.0, 3.14159265358979323846, 0.6, 5e5, 0.5};
    std::array<double, kControls> control_scales{5e5, 0.5, 1.0, 5e5};

    // Throws InvalidArgument naming the first violated invariant.
    void validate() const;
};

WLParams load_params(const std::string& path);
void save_params(const std::string& path, const WLParams& p);

Vector state_scales(const WLParams& p);
Vector control_scales(const WLParams& p);

Vector nondimensionalize(const Vector& x_physical, const Vector& scales);
Vector redimensionalize(const Vector& x_normalized, const Vector& scales);

struct LiftTorques {
    double cylinder;  // F_cyl * R * sin(alpha)
    double bucket;    // T_buc
    double arm;       // T_arm,w
};

double cylinder_angle(double theta, const WLParams& p);
LiftTorques lift_torques(double theta, double u_p, const WLParams& p);

double pump_torque(double omega_e, double V, Mode mode, const WLParams& p);
double traction_force(double omega_e, double V, Mode mode, const WLParams& p);
double turning_radius(double delta, const WLParams& p);
double heading_rate(double V, double delta, const WLParams& p);

struct LoadPower {
    double lift;
    double steering;
    double traction;
    double total() const { return lift + steering + traction; }
};

// x in physical units (see WheelLoader::physical_derivative).
LoadPower engine_load_power(const Vector& x_physical, Mode mode, const WLParams& p);

/// Eleven-state switched wheel-loader model. Public entry points work on
/// nondimensional states and controls; `physical_derivative` exposes the same
/// dynamics in physical units.
class WheelLoader : public ControlAffineSystem {
public:
    WheelLoader(WLParams params, engine::EngineWeights engine);

    Eigen::Index state_dim() const override { return kStates; }
    Eigen::Index control_dim() const override { return kControls; }

    Vector drift(const Vector& x, Mode mode) const override;
    Matrix input_matrix(const Vector& x, Mode mode) const override;
    Vector derivative(const Vector& x, const Vector& u, Mode mode) const override;

    // Fuel and brake lie in [0, 1]; the two actuator rates in [-1, 1].
    void clamp_control(Vector& u) const override;
    // In Stop mode only dissipative forces act on the vehicle, so a step that
    // would reverse the velocity ends at rest instead.
    void post_step(const Vector& x_prev, Vector& x_next, Mode mode) const override;

    Vector physical_derivative(const Vector& x, const Vector& u, Mode mode) const;

    // Throws EngineStall, SteeringLimit or BoomRange for a state (physical units)
    // outside the model's validity region.
    void check_state(const Vector& x_physical) const;

    const WLParams& params() const { return params_; }
    const engine::EngineWeights& engine() const { return engine_; }
    const Vector& x_scales() const { return x_scale_; }
    const Vector& u_scales() const { return u_scale_; }

private:
    // Drift part in physical units (u = 0) and the physical input matrix.
    void physical_parts(const Vector& x, Mode mode, Vector& f, Matrix* g) const;

    WLParams params_;
    engine::EngineWeights engine_;
    Vector x_scale_;
    Vector u_scale_;
};

}  // namespace wlc::plant
