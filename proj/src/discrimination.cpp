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

#include "catcoh/discrimination.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

#include "catcoh/errors.hpp"
#include "catcoh/reservoir.hpp"

namespace catcoh {
namespace {

void check_pair(const HermitianMatrix& rho, const HermitianMatrix& sigma, const char* context) {
  if (rho.dim() != sigma.dim()) {
    throw ParameterError(std::string(context) + ": dimension mismatch (" +
                         std::to_string(rho.dim()) + " vs " + std::to_string(sigma.dim()) + ")");
  }
  require_density_matrix(rho, context);
  require_density_matrix(sigma, context);
}

}  // namespace

double trace_distance(const HermitianMatrix& rho, const HermitianMatrix& sigma) {
  check_pair(rho, sigma, "trace_distance");
  return 0.5 * trace_norm(rho - sigma);
}

double fidelity(const HermitianMatrix& rho, const HermitianMatrix& sigma) {
  check_pair(rho, sigma, "fidelity");
  // ||sqrt(rho) sqrt(sigma)||_1: singular values carry absolute accuracy,
  // whereas sqrt of the eigenvalues of sqrt(rho) sigma sqrt(rho) amplifies
  // round-off near zero to ~sqrt(eps).
  const Eigen::MatrixXcd prod = psd_sqrt(rho).matrix() * psd_sqrt(sigma).matrix();
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(prod).singularValues().sum();
}

double helstrom_error(const HermitianMatrix& rho, const HermitianMatrix& sigma, double prior) {
  check_pair(rho, sigma, "helstrom_error");
  if (!(prior > 0.0 && prior < 1.0)) throw ParameterError("helstrom_error: prior must be in (0, 1)");
  return 0.5 * (1.0 - trace_norm(prior * rho - (1.0 - prior) * sigma));
}

HermitianMatrix phase_reference_state(double theta, int L) {
  if (L < 1) throw ParameterError("phase_reference_state: L must be >= 1");
  const Complex off = 0.5 * (1.0 - 1.0 / L) * std::polar(1.0, -theta);
  Eigen::Matrix2cd m;
  m << 0.5, off, std::conj(off), 0.5;
  return HermitianMatrix(m);
}

double naive_fidelity_per_copy(double theta1, double theta2, int L) {
  if (L < 1) throw ParameterError("naive_fidelity_per_copy: L must be >= 1");
  const double c = 1.0 - 1.0 / L;
  return std::sqrt(std::max(0.0, 1.0 - 0.5 * c * c * (1.0 - std::cos(theta2 - theta1))));
}

DiscriminationReport naive_report(double theta1, double theta2, int L, int N) {
  if (N < 1) throw ParameterError("naive_report: N must be >= 1");
  const double per_copy = naive_fidelity_per_copy(theta1, theta2, L);
  const double f_n = std::pow(per_copy, N);
  const double overlap = std::abs(reservoir_overlap(theta1, theta2, L));
  const double floor = 0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - overlap * overlap)));
  return {theta1, theta2, L, N, per_copy, f_n, 0.5 * f_n, overlap, floor,
          0.5 * f_n < floor, std::nullopt, std::nullopt};
}

DiscriminationReport exact_report(double theta1, double theta2, int L, int N, int dense_cap) {
  DiscriminationReport r = naive_report(theta1, theta2, L, N);
  if (N > dense_cap) {
    throw CapacityError("exact_report: N = " + std::to_string(N) + " exceeds the dense cap of " +
                        std::to_string(dense_cap));
  }
  const int guard = default_guard(N);
  const auto gate = QubitGate::hadamard_like();
  const BranchState j1 = sequential_prepare(N, gate, make_eta(L, guard, theta1, guard), dense_cap);
  const BranchState j2 = sequential_prepare(N, gate, make_eta(L, guard, theta2, guard), dense_cap);
  // Every branch amplitude depends only on Hamming weight, so both states
  // should sit in the symmetric subspace. Use the (N+1)-dim form when they
  // do and the full 2^N matrices otherwise.
  const SymmetricQubitState s1 = symmetric_qubit_state(j1);
  const SymmetricQubitState s2 = symmetric_qubit_state(j2);
  const bool symmetric = std::abs(s1.captured - j1.global_norm_squared()) < 1e-12 &&
                         std::abs(s2.captured - j2.global_norm_squared()) < 1e-12;
  const double d = symmetric ? trace_distance(s1.rho, s2.rho)
                             : trace_distance(joint_qubit_state(j1, dense_cap),
                                              joint_qubit_state(j2, dense_cap));
  r.exact_trace_distance = d;
  r.exact_helstrom_error = 0.5 * (1.0 - d);
  if (*r.exact_helstrom_error < r.reservoir_error_floor - 1e-9) {
    throw std::logic_error("exact_report: qubit error " + std::to_string(*r.exact_helstrom_error) +
                           " beats the reservoir floor " + std::to_string(r.reservoir_error_floor));
  }
  return r;
}

}  // namespace catcoh
