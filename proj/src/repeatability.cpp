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

#include "catcoh/repeatability.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "catcoh/errors.hpp"
#include "catcoh/reservoir.hpp"

namespace catcoh {
namespace {

void check_args(int N, int L, int dense_cap, const char* context) {
  if (N < 1) throw ParameterError(std::string(context) + ": N must be >= 1");
  if (L <= N) {
    throw ParameterError(std::string(context) + ": need L > N (L = " + std::to_string(L) +
                         ", N = " + std::to_string(N) + ")");
  }
  if (N > dense_cap) {
    throw CapacityError(std::string(context) + ": N = " + std::to_string(N) +
                        " exceeds the dense cap of " + std::to_string(dense_cap));
  }
}

bool has_balanced_first_column(const QubitGate& gate) {
  const double r = 1.0 / std::sqrt(2.0);
  return std::abs(gate(0, 0) - r) < 1e-15 && std::abs(gate(1, 0) - r) < 1e-15;
}

HermitianMatrix xi_closed_form(int N, int L) {
  const int dim = 1 << N;
  const double scale = std::ldexp(1.0, -N);
  // Product term depends only on the number of differing bits.
  std::vector<double> prod(N + 1);
  for (int d = 0; d <= N; ++d) prod[d] = std::pow(1.0 - 1.0 / L, d);
  Eigen::MatrixXcd m(dim, dim);
  for (int z = 0; z < dim; ++z) {
    const int hz = std::popcount(static_cast<unsigned>(z));
    for (int w = 0; w < dim; ++w) {
      const int dh = std::min(L, std::abs(hz - std::popcount(static_cast<unsigned>(w))));
      const int flips = std::popcount(static_cast<unsigned>(z ^ w));
      m(z, w) = scale * ((1.0 - static_cast<double>(dh) / L) - prod[flips]);
    }
  }
  return HermitianMatrix(m);
}

}  // namespace

HermitianMatrix xi_matrix_pipeline(int N, int L, const QubitGate& gate, int dense_cap) {
  check_args(N, L, dense_cap, "xi_matrix");
  const int guard = default_guard(N);
  const ReservoirState eta = make_eta(L, guard, 0.0, guard);
  const HermitianMatrix joint =
      joint_qubit_state(sequential_prepare(N, gate, eta, dense_cap), dense_cap);
  const HermitianMatrix single = phi_channel(eta, gate, ground_projector());
  return joint - tensor_power(single, N);
}

HermitianMatrix xi_matrix(int N, int L, const QubitGate& gate, int dense_cap) {
  check_args(N, L, dense_cap, "xi_matrix");
  if (has_balanced_first_column(gate)) return xi_closed_form(N, L);
  return xi_matrix_pipeline(N, L, gate, dense_cap);
}

double xi_trace_norm(int N, int L, const QubitGate& gate, int dense_cap) {
  return trace_norm(xi_matrix(N, L, gate, dense_cap));
}

double xi_trace_norm_approx(int N, int L) {
  if (N < 1 || L < 1) throw ParameterError("xi_trace_norm_approx: need N >= 1 and L >= 1");
  return static_cast<double>(N - 1) / L;
}

RepeatabilityResult repeatability(int N, int L, const QubitGate& gate, bool keep_matrix,
                                  int dense_cap) {
  HermitianMatrix xi = xi_matrix(N, L, gate, dense_cap);
  const double norm = trace_norm(xi);
  RepeatabilityResult r{N, L, std::nullopt, norm, xi_trace_norm_approx(N, L)};
  if (keep_matrix) r.xi = std::move(xi);
  return r;
}

}  // namespace catcoh
