#include "artibot/shape/windows.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace artibot::shape {

namespace {

constexpr double kEdgeTol = 1e-12;

int lowest_free_slot(const std::vector<Window>& chain) {
  std::array<bool, kMaxWindows> used{};
  for (const Window& w : chain) used[w.slot] = true;
  for (int s = 0; s < kMaxWindows; ++s) {
    if (!used[s]) return s;
  }
  return -1;
}

}  // namespace

WindowLayout WindowLayout::create(const Eigen::Vector2d& beta_nominal,
                                  double wave_phase, double steepness) {
  if (beta_nominal[1] <= 0.0) {
    throw std::invalid_argument("window layout needs spatial frequency > 0");
  }
  if (steepness <= 0.0) {
    throw std::invalid_argument("window steepness must be > 0");
  }
  WindowLayout layout;
  layout.steepness_ = steepness;
  layout.nominal_ = beta_nominal;

  // Entered phase of the head window at this wave phase; phase = 0 means the
  // head window is exactly fully inside the body.
  double entered = std::fmod(wave_phase, kPi);
  if (entered < 0.0) entered += kPi;
  if (entered <= kEdgeTol) entered = kPi;
  layout.head_entered_ = entered;

  layout.chain_.push_back(Window{0, ShapeState::at_nominal(beta_nominal), kPi});
  double covered = entered / beta_nominal[1];
  int next_slot = 1;
  while (covered < 1.0 - kEdgeTol && next_slot < kMaxWindows) {
    layout.append_tail_window(next_slot++);
    covered += kPi / beta_nominal[1];
  }
  if (covered < 1.0 - kEdgeTol) {
    // Out of slots; the oldest window absorbs the remaining backbone.
    layout.chain_.back().phase_span += (1.0 - covered) * beta_nominal[1];
  }
  return layout;
}

void WindowLayout::append_tail_window(int slot) {
  chain_.push_back(Window{slot, ShapeState::at_nominal(nominal_), kPi});
}

std::vector<double> WindowLayout::starts() const {
  std::vector<double> s(chain_.size());
  s[0] = 0.0;
  double pos = head_entered_ / chain_.front().state.spatial_freq();
  for (size_t j = 1; j < chain_.size(); ++j) {
    s[j] = pos;
    pos += chain_[j].phase_span / chain_[j].state.spatial_freq();
  }
  return s;
}

void WindowLayout::advance(double dphase, WindowEvents* events) {
  if (dphase < 0.0) throw std::invalid_argument("window phase cannot rewind");
  head_entered_ += dphase;

  // Births at the head. A new window may only materialize while a slot is
  // free; otherwise the head window absorbs the extra half period.
  while (head_entered_ > chain_.front().phase_span + kEdgeTol) {
    const int slot = lowest_free_slot(chain_);
    if (static_cast<int>(chain_.size()) < kMaxWindows && slot >= 0) {
      head_entered_ -= chain_.front().phase_span;
      chain_.insert(chain_.begin(),
                    Window{slot, ShapeState::at_nominal(nominal_), kPi});
      if (events != nullptr) events->born.push_back(slot);
    } else {
      chain_.front().phase_span += kPi;
    }
  }

  // Retirements off the tail.
  while (chain_.size() > 1) {
    const std::vector<double> st = starts();
    if (st.back() < 1.0 - kEdgeTol) break;
    if (events != nullptr) events->retired.push_back(chain_.back().slot);
    chain_.pop_back();
  }
}

bool WindowLayout::slot_live(int slot) const {
  return std::any_of(chain_.begin(), chain_.end(),
                     [slot](const Window& w) { return w.slot == slot; });
}

ShapeState& WindowLayout::state_by_slot(int slot) {
  for (Window& w : chain_) {
    if (w.slot == slot) return w.state;
  }
  throw std::out_of_range("window slot not live");
}

const ShapeState& WindowLayout::state_by_slot(int slot) const {
  return const_cast<WindowLayout*>(this)->state_by_slot(slot);
}

std::vector<std::pair<double, double>> WindowLayout::bounds() const {
  const std::vector<double> st = starts();
  std::vector<std::pair<double, double>> b(chain_.size());
  for (size_t j = 0; j < chain_.size(); ++j) {
    const double end =
        (j + 1 < chain_.size()) ? st[j + 1]
                                : st[j] + chain_[j].phase_span /
                                              chain_[j].state.spatial_freq();
    b[j] = {st[j], std::min(end, 1.0)};
  }
  return b;
}

std::optional<std::pair<double, double>> WindowLayout::slot_bounds(
    int slot) const {
  const auto b = bounds();
  for (size_t j = 0; j < chain_.size(); ++j) {
    if (chain_[j].slot == slot) return b[j];
  }
  return std::nullopt;
}

Eigen::Matrix<double, kMaxWindows, 1> WindowLayout::weights_at(double s) const {
  if (s < 0.0 || s > 1.0) {
    throw std::invalid_argument("window weight position outside [0, 1]");
  }
  Eigen::Matrix<double, kMaxWindows, 1> w =
      Eigen::Matrix<double, kMaxWindows, 1>::Zero();
  const auto b = bounds();
  double total = 0.0;
  for (size_t j = 0; j < chain_.size(); ++j) {
    const double lo = 1.0 / (1.0 + std::exp(steepness_ * (b[j].first - s)));
    const double hi = 1.0 / (1.0 + std::exp(steepness_ * (s - b[j].second)));
    const double raw = std::max(lo + hi - 1.0, 0.0);
    w[chain_[j].slot] = raw;
    total += raw;
  }
  if (total < 1e-12) {
    w.setZero();
    w[chain_[chain_index_of(s)].slot] = 1.0;
    return w;
  }
  return w / total;
}

Eigen::Vector2d WindowLayout::beta_at(double s) const {
  const auto w = weights_at(s);
  Eigen::Vector2d beta = Eigen::Vector2d::Zero();
  for (const Window& win : chain_) beta += w[win.slot] * win.state.beta;
  return beta;
}

double WindowLayout::phase_at(double s) const {
  if (s < 0.0 || s > 1.0) {
    throw std::invalid_argument("phase position outside [0, 1]");
  }
  const std::vector<double> st = starts();
  size_t j = chain_.size() - 1;
  for (size_t k = 1; k < chain_.size(); ++k) {
    if (s < st[k]) {
      j = k - 1;
      break;
    }
  }
  // Phase at s=0 is -head_entered_ so that zero-curvature points sit at
  // multiples of pi along the chain; the head window contributes its entered
  // portion, every later boundary adds the preceding window's full span.
  if (j == 0) return -head_entered_ + chain_[0].state.spatial_freq() * s;
  double phase = 0.0;
  for (size_t k = 1; k < j; ++k) phase += chain_[k].phase_span;
  return phase + chain_[j].state.spatial_freq() * (s - st[j]);
}

int WindowLayout::chain_index_of(double s) const {
  if (s < 0.0 || s > 1.0) {
    throw std::invalid_argument("position outside [0, 1]");
  }
  const std::vector<double> st = starts();
  for (size_t j = chain_.size(); j-- > 0;) {
    if (s >= st[j]) return static_cast<int>(j);
  }
  return 0;
}

}  // namespace artibot::shape
