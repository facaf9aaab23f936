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

#include "catcoh/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "catcoh/detail/bigint.hpp"
#include "catcoh/errors.hpp"

namespace catcoh {
namespace {

using detail::BigInt;

void check_sizes(int N, int L, const char* context) {
  if (N < 1) throw ParameterError(std::string(context) + ": N must be >= 1");
  if (L < 1) throw ParameterError(std::string(context) + ": L must be >= 1");
}

void check_count(int n, int N, const char* context) {
  if (n < 0 || n > N) {
    throw ParameterError(std::string(context) + ": n = " + std::to_string(n) +
                         " outside [0, " + std::to_string(N) + "]");
  }
}

// Coefficients of (1 + x)^n (1 - x)^{N-n}.
std::vector<BigInt> sequence_poly(int n, int N) {
  const auto plus = detail::binomial_row(static_cast<unsigned>(n));
  auto minus = detail::binomial_row(static_cast<unsigned>(N - n));
  for (std::size_t k = 1; k < minus.size(); k += 2) minus[k] = -minus[k];
  std::vector<BigInt> q(static_cast<std::size_t>(N) + 1);
  for (std::size_t i = 0; i < plus.size(); ++i)
    for (std::size_t j = 0; j < minus.size(); ++j) q[i + j] += plus[i] * minus[j];
  return q;
}

// ||q(D^-1)|eta>||^2 * L for q with integer coefficients q_0..q_N. The
// amplitude on each level is a sum of q over a window of width L, so this is
// the sum of squared window sums over every window that meets [0, N].
BigInt windowed_energy(const std::vector<BigInt>& q, long L) {
  const long N = static_cast<long>(q.size()) - 1;
  std::vector<BigInt> prefix(q.size() + 1);
  for (std::size_t k = 0; k < q.size(); ++k) prefix[k + 1] = prefix[k] + q[k];
  auto window = [&](long t) -> BigInt {
    const long lo = std::max(t, 0L);
    const long hi = std::min(t + L - 1, N);
    if (lo > hi) return 0;
    return prefix[static_cast<std::size_t>(hi + 1)] - prefix[static_cast<std::size_t>(lo)];
  };
  BigInt total = 0;
  if (L > N) {
    // Windows clipped on the left, then L - N windows covering all of q,
    // then windows clipped on the right.
    for (long hi = 0; hi < N; ++hi) {
      const BigInt& s = prefix[static_cast<std::size_t>(hi + 1)];
      total += s * s;
    }
    const BigInt& all = prefix.back();
    total += BigInt(L - N) * all * all;
    for (long t = 1; t <= N; ++t) {
      const BigInt s = window(t);
      total += s * s;
    }
  } else {
    for (long t = -(L - 1); t <= N; ++t) {
      const BigInt s = window(t);
      total += s * s;
    }
  }
  return total;
}

BigInt seq_denominator(int N, int L) { return BigInt(L) << (2 * N); }

std::optional<double> approx_form(int k, int N, int L) {
  const double m = N - k;
  if (k > 0 && m <= 0) return std::nullopt;
  switch (k) {
    case 0:
      return 1.0 - std::sqrt(N / M_PI) / L;
    case 1:
      return 1.0 / (2.0 * std::sqrt(M_PI * m) * L);
    case 2:
      return 1.0 / (4.0 * std::sqrt(M_PI * m * m * m) * L);
    default:
      return 3.0 / (8.0 * std::sqrt(M_PI * m * m * m * m * m) * L);
  }
}

std::optional<double> try_approx(int n, int N, int L) {
  if (N <= 1 || n < 0 || n > N) return std::nullopt;
  for (int k = 0; k <= 3; ++k) {
    if (n == N - k) {
      if (auto v = approx_form(k, N, L)) return v;
    }
  }
  // Mirrors: p_seq(k - 1) = p_seq(N - k).
  for (int k = 1; k <= 3; ++k) {
    if (n == k - 1) {
      if (auto v = approx_form(k, N, L)) return v;
    }
  }
  return std::nullopt;
}

}  // namespace

double p_seq_exact(int n, int N, int L) {
  check_sizes(N, L, "p_seq_exact");
  check_count(n, N, "p_seq_exact");
  return detail::ratio_to_double(windowed_energy(sequence_poly(n, N), L), seq_denominator(N, L));
}

double p_count_exact(int n, int N, int L) {
  check_sizes(N, L, "p_count_exact");
  check_count(n, N, "p_count_exact");
  return detail::ratio_to_double(
      detail::binomial(N, n) * windowed_energy(sequence_poly(n, N), L), seq_denominator(N, L));
}

SequenceStats sequence_stats(int N, int L) {
  check_sizes(N, L, "sequence_stats");
  SequenceStats stats = product_state_stats(N, L);
  const BigInt den = seq_denominator(N, L);
  const auto binom = detail::binomial_row(static_cast<unsigned>(N));
  std::vector<BigInt> q = sequence_poly(0, N);
  for (int n = 0; n <= N; ++n) {
    const BigInt energy = windowed_energy(q, L);
    stats.p_seq[static_cast<std::size_t>(n)] = detail::ratio_to_double(energy, den);
    stats.p_count[static_cast<std::size_t>(n)] =
        detail::ratio_to_double(binom[static_cast<std::size_t>(n)] * energy, den);
    if (n == N) break;
    // (1+x)^{n+1}(1-x)^{N-n-1} = (1+x) * [(1+x)^n (1-x)^{N-n} / (1-x)]
    std::vector<BigInt> next(q.size());
    BigInt run = 0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      run += q[k];
      next[k] += run;
      next[k + 1] += run;
    }
    q = std::move(next);
  }
  return stats;
}

double p_seq_approx(int n, int N, int L) {
  check_sizes(N, L, "p_seq_approx");
  if (auto v = try_approx(n, N, L)) return *v;
  throw DomainError("p_seq_approx: no closed form for n = " + std::to_string(n) +
                    " at N = " + std::to_string(N));
}

bool p_seq_approx_supported(int n, int N) { return try_approx(n, N, 1).has_value(); }

SequenceStats product_state_stats(int N, int L) {
  check_sizes(N, L, "product_state_stats");
  // p+ = (2L - 1)/2L and p- = 1/2L, kept as exact rationals.
  SequenceStats stats{N, L, std::vector<double>(static_cast<std::size_t>(N) + 1, 0.0),
                      std::vector<double>(static_cast<std::size_t>(N) + 1, 0.0),
                      std::vector<double>(static_cast<std::size_t>(N) + 1),
                      std::vector<double>(static_cast<std::size_t>(N) + 1)};
  const BigInt den = boost::multiprecision::pow(BigInt(2 * L), static_cast<unsigned>(N));
  const auto binom = detail::binomial_row(static_cast<unsigned>(N));
  BigInt plus_power = 1;
  for (int n = 0; n <= N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    stats.product_p_seq[i] = detail::ratio_to_double(plus_power, den);
    stats.product_p_count[i] = detail::ratio_to_double(binom[i] * plus_power, den);
    plus_power *= 2 * L - 1;
  }
  return stats;
}

CollapseReport conditional_collapse_demo(int N, int L, int base_level) {
  if (N < 2) throw ParameterError("conditional_collapse_demo: N must be >= 2");
  if (L <= N) throw ParameterError("conditional_collapse_demo: need L > N");
  const ReservoirState eta = make_eta(L, base_level, 0.0, 1);
  const ReservoirState post =
      apply_laurent(eta, LaurentCoeffs{{0, 1.0}, {-1, -1.0}}).normalized();
  return {post, p_seq_exact(N - 1, N, L), p_count_exact(0, N, L)};
}

}  // namespace catcoh
