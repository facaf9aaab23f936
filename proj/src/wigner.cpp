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

#include "catcoh/wigner.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "catcoh/errors.hpp"

namespace catcoh {
namespace {

using detail::BigInt;

void check_quantum_numbers(int twoJ, int twoM, int twoMp) {
  if (twoJ < 0 || std::abs(twoM) > twoJ || std::abs(twoMp) > twoJ ||
      (twoJ - twoM) % 2 != 0 || (twoJ - twoMp) % 2 != 0) {
    throw ParameterError("wigner: invalid (twoJ, twoM, twoMp) = (" + std::to_string(twoJ) +
                         ", " + std::to_string(twoM) + ", " + std::to_string(twoMp) + ")");
  }
}

}  // namespace

WignerTable::WignerTable(int twoJ) : two_j_(twoJ) {
  if (twoJ < 0) throw ParameterError("WignerTable: twoJ must be >= 0");
  // With n = 2J, a = J + M', b = J - M:
  //   d = (-1)^{M-M'} 2^{-J} sqrt(b! (n-b)! / (a! (n-a)!)) K(a, b),
  // where K(a, b) is the coefficient of t^b in (1 - t)^a (1 + t)^{n-a}, so
  //   |d|^2 = C(n, a) K^2 / (2^n C(n, b)).
  const int n = twoJ;
  const auto size = static_cast<std::size_t>(n + 1);
  squared_.assign(size * size, 0.0);
  sign_.assign(size * size, 0);
  const auto binom = detail::binomial_row(static_cast<unsigned>(n));
  std::vector<BigInt> k_row(binom.begin(), binom.end());  // a = 0
  std::vector<BigInt> next(size);
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      const BigInt& k = k_row[static_cast<std::size_t>(b)];
      if (k == 0) continue;
      const int two_m = n - 2 * b;
      const int two_mp = 2 * a - n;
      const std::size_t i = index(two_m, two_mp);
      squared_[i] = detail::ratio_to_double(binom[static_cast<std::size_t>(a)] * k * k,
                                            binom[static_cast<std::size_t>(b)] << n);
      const bool odd_phase = ((two_m - two_mp) / 2) % 2 != 0;
      sign_[i] = static_cast<signed char>(((k < 0) != odd_phase) ? -1 : 1);
    }
    if (a == n) break;
    // (1 - t)^{a+1}(1 + t)^{n-a-1} (1 + t) = (1 - t)^a (1 + t)^{n-a} (1 - t)
    for (int b = 0; b <= n; ++b) {
      const auto ub = static_cast<std::size_t>(b);
      next[ub] = k_row[ub];
      if (b > 0) next[ub] -= k_row[ub - 1] + next[ub - 1];
    }
    k_row.swap(next);
  }
}

std::size_t WignerTable::index(int twoM, int twoMp) const {
  const auto row = static_cast<std::size_t>((two_j_ - twoM) / 2);
  const auto col = static_cast<std::size_t>((two_j_ + twoMp) / 2);
  return row * static_cast<std::size_t>(two_j_ + 1) + col;
}

double WignerTable::d_squared(int twoM, int twoMp) const {
  check_quantum_numbers(two_j_, twoM, twoMp);
  return squared_[index(twoM, twoMp)];
}

double WignerTable::d(int twoM, int twoMp) const {
  check_quantum_numbers(two_j_, twoM, twoMp);
  const std::size_t i = index(twoM, twoMp);
  return sign_[i] * std::sqrt(squared_[i]);
}

WignerCache::WignerCache(int max_twoJ) {
  if (max_twoJ < 0) throw ParameterError("WignerCache: max_twoJ must be >= 0");
  tables_.reserve(static_cast<std::size_t>(max_twoJ) + 1);
  for (int j = 0; j <= max_twoJ; ++j) tables_.emplace_back(j);
}

const WignerTable& WignerCache::table(int twoJ) const {
  if (twoJ < 0 || twoJ > max_twoJ()) {
    throw CapacityError("WignerCache: twoJ = " + std::to_string(twoJ) + " outside [0, " +
                        std::to_string(max_twoJ()) + "]");
  }
  return tables_[static_cast<std::size_t>(twoJ)];
}

double wigner_d_half_pi(int twoJ, int twoM, int twoMp) {
  check_quantum_numbers(twoJ, twoM, twoMp);
  return WignerTable(twoJ).d(twoM, twoMp);
}

detail::BigInt gamma_multiplicity(int N, int twoJ) {
  if (N < 0 || twoJ < 0 || twoJ > N || (N - twoJ) % 2 != 0) {
    throw ParameterError("gamma_multiplicity: need 0 <= twoJ <= N with matching parity, got N = " +
                         std::to_string(N) + ", twoJ = " + std::to_string(twoJ));
  }
  const long l2 = (N - twoJ) / 2;
  return detail::binomial(N, l2) - detail::binomial(N, l2 - 1);
}

}  // namespace catcoh
