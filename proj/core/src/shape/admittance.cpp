#include "artibot/shape/admittance.hpp"

#include <algorithm>
#include <stdexcept>

namespace artibot::shape {

Eigen::Vector2d ShapeClamp::apply(const Eigen::Vector2d& beta,
                                  Eigen::Vector2d* beta_dot) const {
  Eigen::Vector2d out = beta;
  out[0] = std::clamp(out[0], amp_min, amp_max);
  out[1] = std::clamp(out[1], freq_min, freq_max);
  if (beta_dot != nullptr) {
    // Zero the velocity of a bound that engaged so the state does not keep
    // pressing into the limit.
    for (int k = 0; k < 2; ++k) {
      if (out[k] != beta[k]) (*beta_dot)[k] = 0.0;
    }
  }
  return out;
}

void AdmittanceConfig::validate() const {
  for (int k = 0; k < 2; ++k) {
    if (mass[k] <= 0.0 || damping[k] <= 0.0 || spring[k] <= 0.0) {
      throw std::invalid_argument(
          "admittance gains must have positive diagonals");
    }
  }
}

ShapeState admittance_step(const AdmittanceConfig& cfg, const ShapeState& state,
                           const Eigen::Vector2d& force, double dt,
                           const ShapeClamp& clamp) {
  if (dt <= 0.0) throw std::invalid_argument("admittance_step: dt must be > 0");
  ShapeState next = state;
  const Eigen::Vector2d accel =
      (force - cfg.damping.cwiseProduct(state.beta_dot) -
       cfg.spring.cwiseProduct(state.beta - state.nominal))
          .cwiseQuotient(cfg.mass);
  next.beta_dot += dt * accel;
  next.beta += dt * next.beta_dot;
  next.beta = clamp.apply(next.beta, &next.beta_dot);
  return next;
}

}  // namespace artibot::shape
