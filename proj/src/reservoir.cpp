// Copyright 2026 The catcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "catcoh/reservoir.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "catcoh/errors.hpp"

namespace catcoh {

ReservoirState::ReservoirState(int window_min, std::vector<Complex> amplitudes)
    : window_min_(window_min), amps_(std::move(amplitudes)), support_min_(1), support_max_(0) {
  if (amps_.empty()) throw ParameterError("ReservoirState: empty window");
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (amps_[i] != Complex(0.0)) {
      const int level = window_min_ + static_cast<int>(i);
      if (support_min_ > support_max_) support_min_ = level;
      support_max_ = level;
    }
  }
}

ReservoirState::ReservoirState(int window_min, std::vector<Complex> amplitudes,
                               int support_min, int support_max)
    : window_min_(window_min),
      amps_(std::move(amplitudes)),
      support_min_(support_min),
      support_max_(support_max) {}

Complex ReservoirState::amplitude(int level) const noexcept {
  if (level < window_min_ || level > window_max()) return 0.0;
  return amps_[static_cast<std::size_t>(level - window_min_)];
}

double ReservoirState::norm_squared() const noexcept {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return sum;
}

std::vector<int> ReservoirState::populated_levels() const {
  std::vector<int> levels;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (amps_[i] != Complex(0.0)) levels.push_back(window_min_ + static_cast<int>(i));
  }
  return levels;
}

ReservoirState ReservoirState::normalized() const {
  const double norm = std::sqrt(norm_squared());
  if (norm == 0.0) throw ParameterError("ReservoirState::normalized: zero vector");
  std::vector<Complex> out(amps_);
  for (auto& a : out) a /= norm;
  return ReservoirState(window_min_, std::move(out), support_min_, support_max_);
}

ReservoirState make_eta(int length, int base_level, double theta, int guard) {
  if (length < 1) {
    throw ParameterError("make_eta: L must be >= 1, got " + std::to_string(length));
  }
  if (guard < 0) {
    throw ParameterError("make_eta: guard must be >= 0, got " + std::to_string(guard));
  }
  const std::size_t width = static_cast<std::size_t>(length + 2 * guard);
  std::vector<Complex> amps(width, 0.0);
  const double scale = 1.0 / std::sqrt(static_cast<double>(length));
  for (int l = 0; l < length; ++l) {
    amps[static_cast<std::size_t>(guard + l)] =
        l == 0 ? Complex(scale) : std::polar(scale, l * theta);
  }
  return ReservoirState(base_level - guard, std::move(amps), base_level,
                        base_level + length - 1);
}

ReservoirState apply_shift(const ReservoirState& state, int k) {
  if (k == 0 || state.is_zero()) return state;
  const int lo = state.support_min() + k;
  const int hi = state.support_max() + k;
  if (lo < state.window_min() || hi > state.window_max()) {
    throw WindowOverflowError("apply_shift: shift by " + std::to_string(k) +
                              " moves support [" + std::to_string(state.support_min()) +
                              ", " + std::to_string(state.support_max()) +
                              "] outside window [" + std::to_string(state.window_min()) +
                              ", " + std::to_string(state.window_max()) +
                              "]; reservoir used more times than its guard allows");
  }
  std::vector<Complex> out(state.amps_.size(), 0.0);
  for (int level = state.support_min(); level <= state.support_max(); ++level) {
    out[static_cast<std::size_t>(level + k - state.window_min())] = state.amplitude(level);
  }
  return ReservoirState(state.window_min(), std::move(out), lo, hi);
}

ReservoirState apply_laurent(const ReservoirState& state, const LaurentCoeffs& poly) {
  std::vector<Complex> out(state.amps_.size(), 0.0);
  if (poly.empty() || state.is_zero()) {
    return ReservoirState(state.window_min(), std::move(out), 1, 0);
  }
  const int lo = state.support_min() + poly.min_power();
  const int hi = state.support_max() + poly.max_power();
  if (lo < state.window_min() || hi > state.window_max()) {
    throw WindowOverflowError("apply_laurent: shifts in [" +
                              std::to_string(poly.min_power()) + ", " +
                              std::to_string(poly.max_power()) +
                              "] move support outside the reservoir window");
  }
  for (int k = poly.min_power(); k <= poly.max_power(); ++k) {
    const Complex c = poly.coeff(k);
    if (c == Complex(0.0)) continue;
    for (int level = state.support_min(); level <= state.support_max(); ++level) {
      out[static_cast<std::size_t>(level + k - state.window_min())] += c * state.amplitude(level);
    }
  }
  return ReservoirState(state.window_min(), std::move(out), lo, hi);
}

Complex shift_overlap(const ReservoirState& state, int a) {
  // <s|Delta^a|s> = sum_j conj(s_{j+a}) s_j
  Complex sum = 0.0;
  if (state.is_zero()) return sum;
  const int lo = std::max(state.support_min(), state.support_min() - a);
  const int hi = std::min(state.support_max(), state.support_max() - a);
  for (int j = lo; j <= hi; ++j) {
    sum += std::conj(state.amplitude(j + a)) * state.amplitude(j);
  }
  return sum;
}

Complex laurent_expectation(const ReservoirState& state, const LaurentCoeffs& poly) {
  Complex sum = 0.0;
  for (int k = poly.min_power(); !poly.empty() && k <= poly.max_power(); ++k) {
    const Complex c = poly.coeff(k);
    if (c != Complex(0.0)) sum += c * shift_overlap(state, k);
  }
  return sum;
}

Complex reservoir_overlap(double theta1, double theta2, int length) {
  if (length < 1) {
    throw ParameterError("reservoir_overlap: L must be >= 1, got " + std::to_string(length));
  }
  // Dirichlet kernel; the difference is reduced to [-pi, pi] first.
  const double delta = std::remainder(theta2 - theta1, 2.0 * M_PI);
  if (delta == 0.0) return 1.0;
  const double magnitude = std::sin(0.5 * length * delta) / (length * std::sin(0.5 * delta));
  return std::polar(magnitude, 0.5 * (length - 1) * delta);
}

}  // namespace catcoh
