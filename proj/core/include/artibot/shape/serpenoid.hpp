#pragma once

#include <Eigen/Core>
#include <numbers>

namespace artibot::shape {

inline constexpr double kPi = std::numbers::pi;

// Fixed parameters of the serpenoid wave. Spatial positions are measured in
// normalized backbone units (head = 0, tail = 1), so module_length defaults
// to 1/num_joints and spatial frequency is in radians per backbone length.
struct SerpenoidConfig {
  double theta0 = 0.0;            // angular offset [rad]
  double omega_t = 1.8;           // temporal frequency [rad/s]
  double module_length = 0.125;   // joint spacing along the backbone
  int num_joints = 8;
  double dt = kPi / 160.0;        // control period [s]

  void validate() const;

  // Distance from the head to joint i, i = 0 for the head joint.
  double joint_position(int i) const { return i * module_length; }
  double period() const { return 2.0 * kPi / omega_t; }
};

// Shape variables beta = (A, omega_S) with their first derivatives and the
// nominal values the admittance dynamics relax to.
struct ShapeState {
  Eigen::Vector2d beta{0.0, 0.0};      // (amplitude, spatial frequency)
  Eigen::Vector2d beta_dot{0.0, 0.0};
  Eigen::Vector2d nominal{0.0, 0.0};   // beta_0, fixed for a run

  static ShapeState at_nominal(const Eigen::Vector2d& beta0) {
    return ShapeState{beta0, Eigen::Vector2d::Zero(), beta0};
  }

  double amplitude() const { return beta[0]; }
  double spatial_freq() const { return beta[1]; }
};

// theta_i = theta0 + A * sin(omega_s * s_i - omega_t * t), s_i = i * l_s.
Eigen::VectorXd serpenoid_angles(const SerpenoidConfig& cfg, double amplitude,
                                 double spatial_freq, double t);

// Rows are the sensitivities of the shape function: d theta_i / dA and
// d theta_i / d omega_s, evaluated at the given state.
Eigen::Matrix2Xd shape_jacobian(const SerpenoidConfig& cfg,
                                const ShapeState& state, double t);

// F = J * mu_ext; throws std::invalid_argument on dimension mismatch.
Eigen::Vector2d project_torques(const Eigen::Matrix2Xd& jacobian,
                                const Eigen::VectorXd& external_torques);

}  // namespace artibot::shape
