#pragma once

#include <Eigen/Core>

#include "artibot/shape/serpenoid.hpp"

namespace artibot::shape {

// Range the shape variables are held to after every update. The serpenoid
// stays physical for an N=16-module body within these bounds.
struct ShapeClamp {
  double amp_min = 0.0;
  double amp_max = kPi / 2.0;
  double freq_min = kPi;
  double freq_max = 6.0 * kPi;

  Eigen::Vector2d apply(const Eigen::Vector2d& beta,
                        Eigen::Vector2d* beta_dot = nullptr) const;
};

// Diagonal 2x2 mass/damping/spring matrices of the shape-space admittance
// M b'' + B b' + K (b - b0) = F.
struct AdmittanceConfig {
  Eigen::Vector2d mass{1.5, 2.0};
  Eigen::Vector2d damping{3.0, 1.0};
  Eigen::Vector2d spring{5.0, 1.0};

  void validate() const;  // throws on nonpositive diagonals
};

// One semi-implicit Euler step of the admittance dynamics:
//   b' <- b' + dt * M^-1 (F - B b' - K (b - b0));  b <- b + dt * b'
// followed by the shape clamp.
ShapeState admittance_step(const AdmittanceConfig& cfg, const ShapeState& state,
                           const Eigen::Vector2d& force, double dt,
                           const ShapeClamp& clamp = ShapeClamp{});

}  // namespace artibot::shape
