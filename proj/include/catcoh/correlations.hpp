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

#include "catcoh/reservoir.hpp"

namespace catcoh {

/// Measurement statistics of N qubits prepared by N successive uses of one
/// reservoir |eta_L> with the Hadamard-like gate, measured in {|+>, |->}.
/// Index n counts '+' outcomes.
struct SequenceStats {
  int N;
  int L;
  // Probability of one fixed sequence with n pluses.
  std::vector<double> p_seq;
  // Probability of n pluses in any order.
  std::vector<double> p_count;
  // Same quantities for the uncorrelated state rho_S^(x)N.
  std::vector<double> product_p_seq;
  std::vector<double> product_p_count;
};

/// 4^-N <eta|(1-D)^{N-n}(1+D)^n(1+D^-1)^n(1-D^-1)^{N-n}|eta>, evaluated in
/// exact integer arithmetic and rounded once at the end.
double p_seq_exact(int n, int N, int L);
double p_count_exact(int n, int N, int L);

/// All n at once; cheaper than N+1 separate calls.
SequenceStats sequence_stats(int N, int L);

/// Closed-form large-N approximations for n in {N, N-1, N-2, N-3} and the
/// mirrored counts {0, 1, 2}. Where a count matches both a tail form and a
/// mirror form (small N) the tail form wins if it is finite. Anything else
/// throws DomainError.
double p_seq_approx(int n, int N, int L);
bool p_seq_approx_supported(int n, int N);

/// rho_S^(x)N baseline: p_seq(n) = (1 - 1/2L)^n (1/2L)^{N-n}.
SequenceStats product_state_stats(int N, int L);

struct CollapseReport {
  // Normalized reservoir after one '-' outcome: (1 - D^-1)|eta>.
  ReservoirState post_minus;
  double p_seq_one_minus;  // p_seq(N-1)
  double p_count_none;     // p_count(0)
};

CollapseReport conditional_collapse_demo(int N, int L, int base_level = 0);

}  // namespace catcoh
