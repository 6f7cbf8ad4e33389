#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace wlc::engine {

// Piecewise-constant random square-wave excitation for fuel and speed.
struct InputSignal {
    std::vector<double> times;
    std::vector<double> u_f;
    std::vector<double> omega_e;
    double pulse_width = 0.0;
    double sample_dt = 0.0;

    std::size_t size() const { return times.size(); }
};

InputSignal generate_excitation(double duration, double pulse_width, double sample_dt,
                                std::uint64_t seed);

// Appends `tail` after `head`, shifting its time axis. Both must share sample_dt.
InputSignal concatenate(const InputSignal& head, const InputSignal& tail);

/// Per-column divisors applied by the normalization pass.
struct Scales {
    double omega_e = 1.0;
    double p_im = 1.0;
    double u_f = 1.0;
    double T_e = 1.0;
};

enum class Split { Training, Validation };

struct EngineDataset {
    std::vector<double> t;
    std::vector<double> omega_e;
    std::vector<double> p_im;
    std::vector<double> u_f;
    std::vector<double> T_e;
    Scales scales;
    Split split = Split::Training;

    std::size_t size() const { return t.size(); }
    // First `n` rows, keeping scales and split.
    EngineDataset head(std::size_t n) const;
};

struct ManifoldParams {
    double tau1 = 0.1;
    double tau2 = 0.1;
    double a1 = 0.1;
    double a2 = 0.1;
    double a3 = 0.1;

    std::array<double, 5> to_array() const { return {tau1, tau2, a1, a2, a3}; }
    static ManifoldParams from_array(const std::array<double, 5>& v) {
        return {v[0], v[1], v[2], v[3], v[4]};
    }
    double time_constant(double omega_e) const { return tau1 * omega_e + tau2; }
    double stationary_pressure(double omega_e, double u_f) const {
        return a1 * omega_e + a2 * u_f + a3;
    }
};

// Mean-value engine model: linear torque map plus first-order manifold.
struct EngineWeights {
    Eigen::Vector4d w_te = Eigen::Vector4d::Zero();
    ManifoldParams manifold;
    Scales scales;
};

// Torque map and manifold constants identified on the reference engine.
EngineWeights reference_engine_weights();

// Synthetic ground truth standing in for a validated engine. The engine
// speed channel is imposed (dynamometer style) and mapped from [0, 1]
// onto [omega_min, omega_max].
struct TruthEngine {
    EngineWeights truth = reference_engine_weights();
    double torque_min = -0.2;
    double torque_max = 24.0;
    double noise_sigma = 0.01;
    std::uint64_t noise_seed = 0;
    double omega_min = 0.15;
    double omega_max = 1.0;
};

// Raw (model-unit) dataset with unit scales. Manifold pressure is integrated
// with forward Euler on the sample grid starting from its stationary value.
EngineDataset simulate_truth_engine(const InputSignal& inputs, const TruthEngine& engine);

Scales dataset_scales(const EngineDataset& data);
EngineDataset normalize(const EngineDataset& raw, const Scales& scales);

double predict_torque(const Eigen::Vector4d& w_te, double omega_e, double p_im, double u_f);

// Batch least squares on [1, omega_e, p_im, u_f]. Throws SingularSystem naming
// the first column that adds no rank.
Eigen::Vector4d fit_torque_weights(const EngineDataset& data);

double mean_absolute_error(std::span<const double> predicted, std::span<const double> measured);

std::vector<double> predict_torque_series(const Eigen::Vector4d& w_te, const EngineDataset& data);

// One transition of the sampled manifold-pressure record.
struct ManifoldSample {
    double omega_e;
    double u_f;
    double p_im;
    double p_im_next;
    double dt;
};

std::vector<ManifoldSample> manifold_samples(const EngineDataset& data);

// Equation-error residual tau_p * dp/dt - (p_stat - p) for one transition.
// Returns the squared residual; fills `grad` with its gradient if non-null.
double manifold_sample_loss(const ManifoldParams& params, const ManifoldSample& sample,
                            std::array<double, 5>* grad);

struct GradientDescentConfig {
    double learning_rate = 1e-3;
    int epochs = 200;
    double tolerance = 1e-9;
    ManifoldParams init{};
};

struct ManifoldFit {
    ManifoldParams params;
    double final_mae = 0.0;
    int epochs_run = 0;
};

ManifoldFit fit_manifold_params(const EngineDataset& data, const GradientDescentConfig& cfg);

// Open-loop manifold-pressure simulation from the first measured value.
std::vector<double> simulate_manifold(const ManifoldParams& params, const EngineDataset& data);

// Map weights fitted on normalized data back into the raw units.
Eigen::Vector4d denormalize_torque_weights(const Eigen::Vector4d& w, const Scales& scales);
ManifoldParams denormalize_manifold(const ManifoldParams& params, const Scales& scales);

void write_dataset_csv(std::ostream& out, const EngineDataset& data);
void save_engine_weights(const std::string& path, const EngineWeights& weights);
EngineWeights load_engine_weights(const std::string& path);

}  // namespace wlc::engine
