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

#include <optional>

#include "catcoh/channels.hpp"
#include "catcoh/hermitian.hpp"

namespace catcoh {

struct RepeatabilityResult {
  int N;
  int L;
  std::optional<HermitianMatrix> xi;
  double trace_norm_exact;
  double trace_norm_approx;  // (N - 1) / L
};

/// xi_N = (joint state of N outputs) - (single-use output)^{tensor N}, all
/// qubits starting in |psi0>. Gates whose first column is (1, 1)/sqrt(2) use
/// the Hamming-weight closed form; anything else goes through the channel
/// pipeline. Requires L > N and N <= dense_cap.
HermitianMatrix xi_matrix(int N, int L, const QubitGate& gate,
                          int dense_cap = kDefaultDenseQubitCap);

/// Pipeline route only, used to cross-check the closed form.
HermitianMatrix xi_matrix_pipeline(int N, int L, const QubitGate& gate,
                                   int dense_cap = kDefaultDenseQubitCap);

double xi_trace_norm(int N, int L, const QubitGate& gate, int dense_cap = kDefaultDenseQubitCap);
double xi_trace_norm_approx(int N, int L);

RepeatabilityResult repeatability(int N, int L, const QubitGate& gate, bool keep_matrix = false,
                                  int dense_cap = kDefaultDenseQubitCap);

}  // namespace catcoh
