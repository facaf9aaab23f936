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

#pragma once

#include <span>
#include <vector>

#include "catcoh/laurent.hpp"

namespace catcoh {

/// Pure state of a reservoir energy ladder restricted to a finite window of
/// consecutive levels [window_min, window_max]. The populated region
/// [support_min, support_max] is tracked separately: every amplitude outside
/// it is exactly zero, and shifts are checked against the window so the
/// state never wraps or silently loses amplitude.
///
/// Instances are immutable values. Branch components produced by the
/// channel code may be sub-normalized; make_eta always returns a unit vector.
class ReservoirState {
 public:
  // Support is taken as the hull of the exactly-nonzero amplitudes.
  ReservoirState(int window_min, std::vector<Complex> amplitudes);

  int window_min() const noexcept { return window_min_; }
  int window_max() const noexcept {
    return window_min_ + static_cast<int>(amps_.size()) - 1;
  }
  int window_size() const noexcept { return static_cast<int>(amps_.size()); }
  int support_min() const noexcept { return support_min_; }
  int support_max() const noexcept { return support_max_; }
  bool is_zero() const noexcept { return support_min_ > support_max_; }

  Complex amplitude(int level) const noexcept;
  std::span<const Complex> amplitudes() const noexcept { return amps_; }

  double norm_squared() const noexcept;
  // Levels carrying an exactly-nonzero amplitude, ascending.
  std::vector<int> populated_levels() const;

  ReservoirState normalized() const;

 private:
  ReservoirState(int window_min, std::vector<Complex> amplitudes, int support_min,
                 int support_max);

  friend ReservoirState make_eta(int length, int base_level, double theta, int guard);
  friend ReservoirState apply_shift(const ReservoirState& state, int k);
  friend ReservoirState apply_laurent(const ReservoirState& state,
                                      const LaurentCoeffs& poly);

  int window_min_;
  std::vector<Complex> amps_;
  int support_min_;
  int support_max_;
};

/// (1/sqrt(L)) sum_{l<L} e^{i l theta} |l0 + l>, with `guard` empty levels of
/// headroom on each side. Callers planning N uses should pass guard >= N.
ReservoirState make_eta(int length, int base_level, double theta, int guard);

inline int default_guard(int planned_uses) { return planned_uses + 2; }

/// Delta^k |state>. Throws WindowOverflowError if the populated region would
/// leave the window.
ReservoirState apply_shift(const ReservoirState& state, int k);

/// poly(Delta) |state>, same window. The result is generally unnormalized.
ReservoirState apply_laurent(const ReservoirState& state, const LaurentCoeffs& poly);

/// <state| Delta^a |state>. Zero once |a| exceeds the support width.
Complex shift_overlap(const ReservoirState& state, int a);

/// sum_k c_k <state| Delta^k |state>.
Complex laurent_expectation(const ReservoirState& state, const LaurentCoeffs& poly);

/// <eta(theta1)|eta(theta2)> for two L-level reservoir states on the same ladder.
Complex reservoir_overlap(double theta1, double theta2, int length);

}  // namespace catcoh
