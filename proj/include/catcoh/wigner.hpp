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

#include <vector>

#include "catcoh/detail/bigint.hpp"

namespace catcoh {

/// Wigner small-d matrix at beta = pi/2 for one angular momentum J, with all
/// quantum numbers doubled so half-integer J is addressable:
///   d(twoM, twoMp) = <J,M| exp(-i pi/2 J_y) |J,M'>.
/// Entries come from exact integer Krawtchouk coefficients and are rounded
/// once, so the relative error is a few ulp for every twoJ (values below the
/// double range flush to zero).
class WignerTable {
 public:
  explicit WignerTable(int twoJ);

  int twoJ() const noexcept { return two_j_; }
  double d(int twoM, int twoMp) const;
  // |d|^2 without the rounding of a square.
  double d_squared(int twoM, int twoMp) const;

 private:
  std::size_t index(int twoM, int twoMp) const;

  int two_j_;
  std::vector<double> squared_;
  std::vector<signed char> sign_;
};

/// Immutable set of tables for every twoJ in [0, max_twoJ], built up front.
class WignerCache {
 public:
  explicit WignerCache(int max_twoJ);

  int max_twoJ() const noexcept { return static_cast<int>(tables_.size()) - 1; }
  const WignerTable& table(int twoJ) const;

 private:
  std::vector<WignerTable> tables_;
};

double wigner_d_half_pi(int twoJ, int twoM, int twoMp);

/// Multiplicity of spin-J irreps in N spin-1/2: C(N, l2) - C(N, l2 - 1),
/// l2 = (N - twoJ)/2.
detail::BigInt gamma_multiplicity(int N, int twoJ);

}  // namespace catcoh
