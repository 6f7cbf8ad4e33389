#pragma once

#include <map>
#include <string>

#include <Eigen/Dense>

namespace wlc {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Gear-ratio mode of the driveline. The enumerator value is the ratio.
enum class Mode : int { Backward = -60, Stop = 0, Forward = 60 };

inline int gamma(Mode m) { return static_cast<int>(m); }
const char* to_string(Mode m);
Mode mode_from_string(const std::string& name);
Mode mode_from_gamma(int gamma);

// Switched dynamics x' = f_v(x) + g_v(x) u in nondimensional form.
class ControlAffineSystem {
public:
    virtual ~ControlAffineSystem() = default;

    virtual Eigen::Index state_dim() const = 0;
    virtual Eigen::Index control_dim() const = 0;

    virtual Vector drift(const Vector& x, Mode mode) const = 0;
    virtual Matrix input_matrix(const Vector& x, Mode mode) const = 0;

    virtual Vector derivative(const Vector& x, const Vector& u, Mode mode) const {
        return drift(x, mode) + input_matrix(x, mode) * u;
    }

    // Admissible control box; the default is unbounded.
    virtual void clamp_control(Vector& /*u*/) const {}

    // Hook applied after every discrete step (x_prev -> x_next) for
    // non-smooth effects such as sticking at rest. Default: none.
    virtual void post_step(const Vector& /*x_prev*/, Vector& /*x_next*/, Mode /*mode*/) const {}
};

// Linear time-invariant dynamics per mode, used by the oracle problems.
class SwitchedLinearSystem : public ControlAffineSystem {
public:
    struct Dynamics {
        Matrix A;
        Matrix B;
    };

    SwitchedLinearSystem(Eigen::Index n, Eigen::Index m) : n_(n), m_(m) {}

    void set_mode(Mode mode, Matrix A, Matrix B);
    const Dynamics& dynamics(Mode mode) const;

    Eigen::Index state_dim() const override { return n_; }
    Eigen::Index control_dim() const override { return m_; }
    Vector drift(const Vector& x, Mode mode) const override;
    Matrix input_matrix(const Vector& x, Mode mode) const override;

private:
    Eigen::Index n_;
    Eigen::Index m_;
    std::map<Mode, Dynamics> modes_;
};

}  // namespace wlc
