#pragma once

#include <Eigen/Core>
#include <array>
#include <optional>
#include <vector>

#include "artibot/shape/serpenoid.hpp"

namespace artibot::shape {

inline constexpr int kMaxWindows = 6;

// One live activation window: a group of neighboring joints sharing local
// shape parameters. A window covers `phase_span` radians of the serpenoid
// wave (pi, i.e. one half period, unless a birth had to be deferred at the
// window cap) and keeps its slot id for its whole lifetime.
struct Window {
  int slot = -1;
  ShapeState state;
  double phase_span = kPi;
};

struct WindowEvents {
  std::vector<int> born;     // slots created this advance
  std::vector<int> retired;  // slots retired this advance
};

// Sliding activation windows anchored between zero-curvature points of the
// wave. The chain is ordered head (s=0) to tail (s=1); boundaries move
// tailward as the wave phase advances, the tail window retires once it
// slides off the body and a new head window is created at beta_0.
//
// All positions are in normalized backbone units, s in [0, 1].
class WindowLayout {
 public:
  static WindowLayout create(const Eigen::Vector2d& beta_nominal,
                             double wave_phase, double steepness = 100.0);

  // Advance the wave phase by dphase >= 0 (omega_t * dt per control step).
  void advance(double dphase, WindowEvents* events = nullptr);

  int window_count() const { return static_cast<int>(chain_.size()); }
  double steepness() const { return steepness_; }
  const Eigen::Vector2d& nominal() const { return nominal_; }

  bool slot_live(int slot) const;
  // Live windows in head-to-tail order.
  const std::vector<Window>& chain() const { return chain_; }
  Window& window_at(int chain_index) { return chain_[chain_index]; }

  ShapeState& state_by_slot(int slot);
  const ShapeState& state_by_slot(int slot) const;

  // Visible [start, end) of each live window; chain order. Ends clip at 1.
  std::vector<std::pair<double, double>> bounds() const;
  std::optional<std::pair<double, double>> slot_bounds(int slot) const;

  // Sigmoid window weights of every slot at backbone position s, normalized
  // to sum to 1 over live windows. Dead slots weigh 0. Throws on s outside
  // [0, 1].
  Eigen::Matrix<double, kMaxWindows, 1> weights_at(double s) const;

  // Blended shape variables at s: sum_j beta_j * weight_j(s).
  Eigen::Vector2d beta_at(double s) const;

  // Wave phase at backbone position s (zero-curvature points at multiples of
  // pi). Piecewise linear with slope omega_s of the containing window.
  double phase_at(double s) const;

  // Chain index of the window containing s; argmax window weight away from
  // exact boundaries.
  int chain_index_of(double s) const;
  int slot_of(double s) const { return chain_[chain_index_of(s)].slot; }

 private:
  WindowLayout() = default;
  void append_tail_window(int slot);
  std::vector<double> starts() const;

  double steepness_ = 100.0;
  Eigen::Vector2d nominal_{0.0, 0.0};
  // Entered phase of the head window, in (0, head.phase_span].
  double head_entered_ = kPi;
  std::vector<Window> chain_;
};

}  // namespace artibot::shape
