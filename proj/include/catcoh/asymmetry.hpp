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

#include <utility>
#include <vector>

#include "catcoh/hermitian.hpp"
#include "catcoh/wigner.hpp"

namespace catcoh {

inline constexpr int kDenseAsymmetryCap = 4096;

/// U(1) charge of each basis vector. The twirl keeps only blocks of equal
/// charge. The Hamiltonian scale s and offset s0 only set a phase
/// convention and drop out of every twirled quantity; they are carried along
/// for bookkeeping.
struct TwirlSpec {
  std::vector<int> charges;
  double s = 1.0;
  double s0 = 0.0;

  // Hamming weight of each big-endian bitstring of an n-qubit register.
  static TwirlSpec qubit_register(int num_qubits);
  // Ladder level of each slot of a reservoir window.
  static TwirlSpec ladder(int window_min, int window_size);
};

HermitianMatrix twirl_dense(const HermitianMatrix& rho, const TwirlSpec& spec);

// Nats; eigenvalues at or below zero contribute nothing.
double von_neumann_entropy(const HermitianMatrix& rho);

// S(twirl(rho)) - S(rho).
double asymmetry_dense(const HermitianMatrix& rho, const TwirlSpec& spec,
                       int dense_cap = kDenseAsymmetryCap);

/// Which eigenvalue pair to assign to the single-use output state.
enum class EigenConvention {
  kEq12,       // lambda_- = 1/(2L), the spectrum of the actual channel output
  kAppendixA,  // lambda_- = 1/L
};

std::pair<double, double> single_copy_spectrum(int L, EigenConvention convention);

/// A(rho^(x)N) for a qubit state with eigenvalues (lambda_plus, lambda_minus)
/// and eigenbasis |+>, |->. Exact: the twirled state is diagonal in the
/// Dicke basis with eigenvalue
///   mu(J, M) = sum_k lambda_+^{N-k} lambda_-^k |d^J_{M,k-N/2}(pi/2)|^2
/// repeated Gamma_J times, so S(G[rho^N]) = -sum Gamma_J mu ln mu, and
/// S(rho^N) = N S(rho).
double asymmetry_exact_formula(int N, double lambda_plus, double lambda_minus,
                               const WignerCache& cache);
double asymmetry_exact_formula(int N, double lambda_plus, double lambda_minus);

/// The triple sum with the k-sum taken outside the logarithm,
///   -sum_{M,k,J} lambda_+^{N-k} lambda_-^k Gamma_J |d|^2 ln |d|^2.
/// It equals the exact value only for a pure input and is an upper bound
/// otherwise; kept for comparison.
double asymmetry_separated_sum(int N, double lambda_plus, double lambda_minus,
                               const WignerCache& cache);

// (1/2) ln(N pi e / 2).
double asymmetry_approx(int N);
// ln L.
double asymmetry_upper_bound(int L);

struct SectorTerm {
  int twoM;
  double p_M;
  double S_Q;      // entropy of the normalized projection Q_M
  double epsilon;  // S_Q - N S(rho)
};

struct EntropyDecomposition {
  double shannon_H_pM;
  double weighted_S_Q;  // sum_M p_M S(Q_M)
  double S_twirled;     // S(G[rho^N]) from the Dicke spectrum
  double S_product;     // N S(rho)
  std::vector<SectorTerm> sectors;
};

/// Splits S(G[rho^N]) = H({p_M}) + sum p_M S(Q_M). Throws std::logic_error if
/// the two sides differ by more than 1e-9.
EntropyDecomposition entropy_decomposition(int N, double lambda_plus, double lambda_minus,
                                           const WignerCache& cache);

struct AsymmetryReport {
  int N;
  int L;
  double lambda_plus;
  double lambda_minus;
  double A_exact;
  double A_approx;
  double A_bound;
  double shannon_H_pM;
  std::vector<SectorTerm> epsilon_terms;  // filled only on request
};

AsymmetryReport asymmetry_report(int N, int L, EigenConvention convention,
                                 const WignerCache& cache, bool with_sectors = false);

}  // namespace catcoh
