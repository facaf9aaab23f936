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

double trace_distance(const HermitianMatrix& rho, const HermitianMatrix& sigma);
// tr sqrt(sqrt(rho) sigma sqrt(rho)).
double fidelity(const HermitianMatrix& rho, const HermitianMatrix& sigma);
// Minimum error probability for telling rho (prior) from sigma (1 - prior).
double helstrom_error(const HermitianMatrix& rho, const HermitianMatrix& sigma,
                      double prior = 0.5);

/// Single-use output for a reservoir of phase theta:
///   (1/2)[1 + (1 - 1/L)(e^{-i theta}|psi0><psi1| + h.c.)].
HermitianMatrix phase_reference_state(double theta, int L);

/// Closed-form fidelity between phase_reference_state(theta1, L) and
/// phase_reference_state(theta2, L).
double naive_fidelity_per_copy(double theta1, double theta2, int L);

struct DiscriminationReport {
  double theta1;
  double theta2;
  int L;
  int N;
  // Counterfactual: the N outputs treated as independent copies.
  double naive_fidelity_per_copy;
  double naive_fidelity_N;
  double naive_error_bound;  // F_N / 2
  // Limit set by the reservoir states themselves:
  //   (1/2)(1 - sqrt(1 - |<eta(theta1)|eta(theta2)>|^2)).
  // Follows from data processing; not a printed formula.
  double reservoir_overlap_magnitude;
  double reservoir_error_floor;
  // True when the naive bound claims to beat the floor.
  bool naive_beats_floor;
  // From the exact correlated N-qubit states; empty in naive reports.
  std::optional<double> exact_trace_distance;
  std::optional<double> exact_helstrom_error;
};

DiscriminationReport naive_report(double theta1, double theta2, int L, int N);

/// Adds the exact correlated-state values. Throws std::logic_error if the
/// exact error falls below the reservoir floor by more than 1e-9.
DiscriminationReport exact_report(double theta1, double theta2, int L, int N,
                                  int dense_cap = kDefaultDenseQubitCap);

}  // namespace catcoh
