#include "artibot/shape/serpenoid.hpp"

#include <cmath>
#include <stdexcept>

namespace artibot::shape {

void SerpenoidConfig::validate() const {
  if (num_joints < 1) throw std::invalid_argument("num_joints must be >= 1");
  if (module_length <= 0.0)
    throw std::invalid_argument("module_length must be > 0");
  if (dt <= 0.0) throw std::invalid_argument("dt must be > 0");
  if (omega_t <= 0.0) throw std::invalid_argument("omega_t must be > 0");
}

Eigen::VectorXd serpenoid_angles(const SerpenoidConfig& cfg, double amplitude,
                                 double spatial_freq, double t) {
  Eigen::VectorXd theta(cfg.num_joints);
  for (int i = 0; i < cfg.num_joints; ++i) {
    const double s = cfg.joint_position(i);
    theta[i] =
        cfg.theta0 + amplitude * std::sin(spatial_freq * s - cfg.omega_t * t);
  }
  return theta;
}

Eigen::Matrix2Xd shape_jacobian(const SerpenoidConfig& cfg,
                                const ShapeState& state, double t) {
  Eigen::Matrix2Xd jac(2, cfg.num_joints);
  const double amplitude = state.amplitude();
  const double omega_s = state.spatial_freq();
  for (int i = 0; i < cfg.num_joints; ++i) {
    const double s = cfg.joint_position(i);
    const double phase = omega_s * s - cfg.omega_t * t;
    jac(0, i) = std::sin(phase);
    jac(1, i) = amplitude * s * std::cos(phase);
  }
  return jac;
}

Eigen::Vector2d project_torques(const Eigen::Matrix2Xd& jacobian,
                                const Eigen::VectorXd& external_torques) {
  if (jacobian.cols() != external_torques.size()) {
    throw std::invalid_argument("project_torques: dimension mismatch");
  }
  return jacobian * external_torques;
}

}  // namespace artibot::shape
