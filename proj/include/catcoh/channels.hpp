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

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "catcoh/hermitian.hpp"
#include "catcoh/laurent.hpp"
#include "catcoh/reservoir.hpp"

namespace catcoh {

inline constexpr int kDefaultDenseQubitCap = 12;

/// 2x2 unitary in the {|psi0>, |psi1>} energy basis, checked to 1e-12.
class QubitGate {
 public:
  QubitGate(Complex u00, Complex u01, Complex u10, Complex u11);

  // U|psi0> = (|psi0> + |psi1>)/sqrt(2), U|psi1> = (|psi0> - |psi1>)/sqrt(2).
  static QubitGate hadamard_like();
  static QubitGate identity();
  // U|psi0> = a|psi0> + b|psi1>, completed with U|psi1> = -b*|psi0> + a*|psi1>.
  static QubitGate from_column(Complex a, Complex b);

  Complex operator()(int row, int col) const noexcept { return u_[row][col]; }

 private:
  std::array<std::array<Complex, 2>, 2> u_;
};

/// Reservoir density operator on the same window as the pure state it came
/// from. Entries outside [support_min, support_max]^2 are exactly zero.
struct ReservoirDensity {
  int window_min;
  int support_min;
  int support_max;
  HermitianMatrix rho;

  static ReservoirDensity pure(const ReservoirState& state);
  int window_max() const noexcept { return window_min + rho.dim() - 1; }
};

// tr(Delta^a sigma).
Complex shift_expectation(const ReservoirDensity& sigma, int a);
// <psi| sigma |psi>; psi must share sigma's window.
double overlap_fidelity(const ReservoirDensity& sigma, const ReservoirState& psi);

/// Joint pure state of an n-qubit register and the reservoir,
///   sum_z |z> (x) P_z(Delta) |base>,
/// where each branch operator P_z is a Laurent polynomial in the shift
/// operator acting on one shared reservoir vector. When every qubit starts in
/// |psi0> each P_z stays a monomial c_z Delta^{-h(z)}. Bitstrings are
/// big-endian: qubit 0 is the most significant bit of z.
class BranchState {
 public:
  // All qubits in |psi0>.
  static BranchState ground(int num_qubits, ReservoirState base,
                            int dense_cap = kDefaultDenseQubitCap);
  // Product of arbitrary single-qubit pure states (amplitudes on psi0, psi1).
  static BranchState product(const std::vector<std::array<Complex, 2>>& qubits,
                             ReservoirState base, int dense_cap = kDefaultDenseQubitCap);

  int num_qubits() const noexcept { return num_qubits_; }
  // Number of V(U) applications so far.
  int uses() const noexcept { return uses_; }
  std::size_t num_branches() const noexcept { return branches_.size(); }
  const ReservoirState& base() const noexcept { return base_; }
  const LaurentCoeffs& branch(std::size_t z) const { return branches_.at(z); }
  // P_z(Delta)|base>, generally unnormalized.
  ReservoirState branch_reservoir(std::size_t z) const;

  double global_norm_squared() const;

 private:
  BranchState(int num_qubits, ReservoirState base, std::vector<LaurentCoeffs> branches)
      : num_qubits_(num_qubits), base_(std::move(base)), branches_(std::move(branches)) {}

  friend BranchState apply_VU(int qubit_index, const QubitGate& gate, const BranchState& joint);

  int num_qubits_;
  int uses_ = 0;
  ReservoirState base_;
  std::vector<LaurentCoeffs> branches_;
};

/// Applies the energy-conserving joint unitary
///   V(U) = sum_{n,n'} |n><n|U|n'><n'| (x) Delta^{n'-n}
/// to one qubit of the register. V for distinct qubits commute, so the
/// order of application does not matter.
BranchState apply_VU(int qubit_index, const QubitGate& gate, const BranchState& joint);

/// N uses of the reservoir on qubits that all start in |psi0>.
BranchState sequential_prepare(int num_qubits, const QubitGate& gate, const ReservoirState& eta,
                               int dense_cap = kDefaultDenseQubitCap);

/// Qubit register state after tracing out the reservoir (2^N x 2^N).
HermitianMatrix joint_qubit_state(const BranchState& joint, int dense_cap = kDefaultDenseQubitCap);

/// Reservoir state after tracing out the register.
ReservoirDensity reservoir_state(const BranchState& joint);

/// Qubit output tr_E[V(U)(rho0 (x) sigma)V(U)^dag].
HermitianMatrix phi_channel(const ReservoirState& sigma, const QubitGate& gate,
                            const HermitianMatrix& rho0);
HermitianMatrix phi_channel(const ReservoirDensity& sigma, const QubitGate& gate,
                            const HermitianMatrix& rho0);

/// The joint qubit state compressed onto the symmetric subspace: entry
/// (h, h') is <D_h|rho|D_h'>, with D_h the normalized uniform superposition
/// of Hamming-weight-h bitstrings. `captured` is its trace. When captured
/// equals global_norm_squared the state lives entirely in that subspace and
/// the compression is lossless (every spectral quantity is preserved).
struct SymmetricQubitState {
  HermitianMatrix rho;
  double captured;
};
SymmetricQubitState symmetric_qubit_state(const BranchState& joint);

/// Complementary channel tr_S[V(U)(rho0 (x) sigma)V(U)^dag] on the reservoir window.
ReservoirDensity lambda_channel(const ReservoirState& sigma, const QubitGate& gate,
                                const HermitianMatrix& rho0);
ReservoirDensity lambda_channel(const ReservoirDensity& sigma, const QubitGate& gate,
                                const HermitianMatrix& rho0);

struct InvarianceRow {
  int a;
  Complex before;
  Complex after;
};

/// tr(Delta^a sigma) against tr(Delta^a Lambda^uses(sigma)) for each a in
/// [a_min, a_max].
std::vector<InvarianceRow> delta_expectation_invariance_check(const ReservoirDensity& sigma,
                                                              const QubitGate& gate,
                                                              const HermitianMatrix& rho0,
                                                              int a_min, int a_max, int uses = 1);

/// Single-qubit marginals of the first and second qubit after two uses.
std::pair<HermitianMatrix, HermitianMatrix> second_use_marginal_check(const ReservoirState& eta,
                                                                      const QubitGate& gate);

// |psi0><psi0|.
HermitianMatrix ground_projector();

}  // namespace catcoh
