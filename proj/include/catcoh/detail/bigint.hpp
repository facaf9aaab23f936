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

// Exact integer helpers shared by the counting and angular-momentum code.

#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace catcoh::detail {

using BigInt = boost::multiprecision::cpp_int;

// Row n of Pascal's triangle.
inline std::vector<BigInt> binomial_row(unsigned n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (unsigned k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
  return row;
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// num / den rounded to double; exact up to the final rounding even when both
// operands are far outside the double range.
inline double ratio_to_double(const BigInt& num, const BigInt& den) {
  if (num == 0) return 0.0;
  if (num < 0) return -ratio_to_double(-num, den);
  const long shift = 64 + static_cast<long>(msb(den)) - static_cast<long>(msb(num));
  const BigInt q = shift >= 0 ? BigInt(num << shift) / den : num / BigInt(den << -shift);
  return std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
}

inline double to_double(const BigInt& x) { return ratio_to_double(x, BigInt(1)); }

}  // namespace catcoh::detail
