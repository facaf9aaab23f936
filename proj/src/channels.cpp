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

#include "catcoh/channels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "catcoh/errors.hpp"

namespace catcoh {
namespace {

constexpr double kUnitarityTol = 1e-12;
constexpr double kNormTol = 1e-12;

void require_normalized(const ReservoirState& s, const char* context) {
  if (std::abs(s.norm_squared() - 1.0) > kNormTol) {
    throw ParameterError(std::string(context) + ": reservoir state is not normalized");
  }
}

// Shifts n1 - n that V(U) actually applies to the reservoir for input rho0.
// A zero diagonal entry of a PSD matrix kills its whole row, so the diagonal
// is enough to decide which input components are present.
std::vector<int> used_shifts(const QubitGate& gate, const HermitianMatrix& rho0) {
  std::vector<int> shifts;
  for (int n1 = 0; n1 < 2; ++n1) {
    if (rho0(n1, n1) == Complex(0.0)) continue;
    for (int n = 0; n < 2; ++n) {
      if (gate(n, n1) == Complex(0.0)) continue;
      if (std::find(shifts.begin(), shifts.end(), n1 - n) == shifts.end()) {
        shifts.push_back(n1 - n);
      }
    }
  }
  std::sort(shifts.begin(), shifts.end());
  return shifts;
}

void check_headroom(const std::vector<int>& shifts, int support_min, int support_max,
                    int window_min, int window_max, const char* context) {
  if (shifts.empty() || support_min > support_max) return;
  if (support_min + shifts.front() < window_min || support_max + shifts.back() > window_max) {
    throw WindowOverflowError(std::string(context) + ": support [" +
                              std::to_string(support_min) + ", " +
                              std::to_string(support_max) + "] has no headroom in window [" +
                              std::to_string(window_min) + ", " + std::to_string(window_max) +
                              "]");
  }
}

void check_density(const HermitianMatrix& rho0, const char* context) {
  if (rho0.dim() != 2) throw ParameterError(std::string(context) + ": rho0 must be 2x2");
  require_density_matrix(rho0, context);
}

// rho_S[n][m] = sum U(n,n1) rho0(n1,n2) conj(U(m,n2)) f(n1 - n - n2 + m),
// with f(a) = tr(Delta^a sigma).
template <typename F>
HermitianMatrix phi_from_moments(const QubitGate& gate, const HermitianMatrix& rho0, F&& f) {
  Complex moments[5];
  for (int a = -2; a <= 2; ++a) moments[a + 2] = f(a);
  // Unit trace is a checked precondition; pinning it keeps the channel exactly
  // trace preserving instead of off by the last bit of the input norm.
  moments[2] = 1.0;
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  for (int n = 0; n < 2; ++n) {
    for (int m = 0; m < 2; ++m) {
      for (int n1 = 0; n1 < 2; ++n1) {
        for (int n2 = 0; n2 < 2; ++n2) {
          out(n, m) += gate(n, n1) * rho0(n1, n2) * std::conj(gate(m, n2)) *
                       moments[n1 - n - n2 + m + 2];
        }
      }
    }
  }
  return HermitianMatrix(out);
}

struct Term {
  int power;
  Complex coeff;
};

std::vector<Term> nonzero_terms(const LaurentCoeffs& p) {
  std::vector<Term> terms;
  for (int k = p.min_power(); !p.empty() && k <= p.max_power(); ++k) {
    const Complex c = p.coeff(k);
    if (c != Complex(0.0)) terms.push_back({k, c});
  }
  return terms;
}

}  // namespace

QubitGate::QubitGate(Complex u00, Complex u01, Complex u10, Complex u11)
    : u_{{{u00, u01}, {u10, u11}}} {
  Eigen::Matrix2cd u;
  u << u00, u01, u10, u11;
  const double err = (u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  if (!(err <= kUnitarityTol)) {
    throw ParameterError("QubitGate: matrix is not unitary (|U^dag U - 1| = " +
                         std::to_string(err) + ")");
  }
}

QubitGate QubitGate::hadamard_like() {
  const double r = 1.0 / std::sqrt(2.0);
  return QubitGate(r, r, r, -r);
}

QubitGate QubitGate::identity() { return QubitGate(1.0, 0.0, 0.0, 1.0); }

QubitGate QubitGate::from_column(Complex a, Complex b) {
  return QubitGate(a, -std::conj(b), b, std::conj(a));
}

ReservoirDensity ReservoirDensity::pure(const ReservoirState& state) {
  const auto amps = state.amplitudes();
  Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) v(static_cast<Eigen::Index>(i)) = amps[i];
  return {state.window_min(), state.support_min(), state.support_max(), HermitianMatrix::outer(v)};
}

Complex shift_expectation(const ReservoirDensity& sigma, int a) {
  // tr(Delta^a sigma) = sum_j sigma_{j-a, j}
  const int w = sigma.rho.dim();
  Complex sum = 0.0;
  for (int j = std::max(0, a); j < std::min(w, w + a); ++j) sum += sigma.rho(j - a, j);
  return sum;
}

double overlap_fidelity(const ReservoirDensity& sigma, const ReservoirState& psi) {
  if (sigma.window_min != psi.window_min() || sigma.rho.dim() != psi.window_size()) {
    throw ParameterError("overlap_fidelity: state and density live on different windows");
  }
  const auto amps = psi.amplitudes();
  Eigen::VectorXcd v(psi.window_size());
  for (int i = 0; i < psi.window_size(); ++i) v(i) = amps[static_cast<std::size_t>(i)];
  return (v.adjoint() * sigma.rho.matrix() * v)(0, 0).real();
}

BranchState BranchState::ground(int num_qubits, ReservoirState base, int dense_cap) {
  std::vector<std::array<Complex, 2>> qubits(static_cast<std::size_t>(std::max(num_qubits, 0)),
                                             {Complex(1.0), Complex(0.0)});
  if (num_qubits < 1) throw ParameterError("BranchState: need at least one qubit");
  return product(qubits, std::move(base), dense_cap);
}

BranchState BranchState::product(const std::vector<std::array<Complex, 2>>& qubits,
                                 ReservoirState base, int dense_cap) {
  const int n = static_cast<int>(qubits.size());
  if (n < 1) throw ParameterError("BranchState: need at least one qubit");
  if (n > dense_cap) {
    throw CapacityError("BranchState: " + std::to_string(n) + " qubits exceeds the cap of " +
                        std::to_string(dense_cap));
  }
  require_normalized(base, "BranchState");
  for (const auto& q : qubits) {
    if (std::abs(std::norm(q[0]) + std::norm(q[1]) - 1.0) > kNormTol) {
      throw ParameterError("BranchState: qubit amplitudes are not normalized");
    }
  }
  const std::size_t dim = std::size_t{1} << n;
  std::vector<LaurentCoeffs> branches(dim);
  for (std::size_t z = 0; z < dim; ++z) {
    Complex c = 1.0;
    for (int q = 0; q < n; ++q) c *= qubits[static_cast<std::size_t>(q)][(z >> (n - 1 - q)) & 1];
    if (c != Complex(0.0)) branches[z] = LaurentCoeffs::monomial(0, c);
  }
  return BranchState(n, std::move(base), std::move(branches));
}

ReservoirState BranchState::branch_reservoir(std::size_t z) const {
  return apply_laurent(base_, branches_.at(z));
}

double BranchState::global_norm_squared() const {
  double sum = 0.0;
  for (const auto& p : branches_) {
    if (!p.empty()) sum += laurent_expectation(base_, p.adjoint() * p).real();
  }
  return sum;
}

BranchState apply_VU(int qubit_index, const QubitGate& gate, const BranchState& joint) {
  const int n = joint.num_qubits();
  if (qubit_index < 0 || qubit_index >= n) {
    throw ParameterError("apply_VU: qubit index " + std::to_string(qubit_index) +
                         " outside register of " + std::to_string(n));
  }
  const std::size_t mask = std::size_t{1} << (n - 1 - qubit_index);
  std::vector<LaurentCoeffs> out(joint.branches_.size());
  for (std::size_t z = 0; z < joint.branches_.size(); ++z) {
    const LaurentCoeffs& p = joint.branches_[z];
    if (p.empty()) continue;
    const int n_in = (z & mask) ? 1 : 0;
    for (int n_out = 0; n_out < 2; ++n_out) {
      const Complex u = gate(n_out, n_in);
      if (u == Complex(0.0)) continue;
      const std::size_t target = n_out ? (z | mask) : (z & ~mask);
      out[target] += LaurentCoeffs::monomial(n_in - n_out, u) * p;
    }
  }
  const ReservoirState& base = joint.base();
  for (const auto& p : out) {
    if (p.empty()) continue;
    if (base.support_min() + p.min_power() < base.window_min() ||
        base.support_max() + p.max_power() > base.window_max()) {
      throw WindowOverflowError("apply_VU: branch shifts [" + std::to_string(p.min_power()) +
                                ", " + std::to_string(p.max_power()) +
                                "] leave the reservoir window; guard too small for " +
                                std::to_string(joint.uses() + 1) + " uses");
    }
  }
  BranchState result(n, base, std::move(out));
  result.uses_ = joint.uses_ + 1;
  return result;
}

BranchState sequential_prepare(int num_qubits, const QubitGate& gate, const ReservoirState& eta,
                               int dense_cap) {
  BranchState joint = BranchState::ground(num_qubits, eta, dense_cap);
  for (int q = 0; q < num_qubits; ++q) joint = apply_VU(q, gate, joint);
  return joint;
}

HermitianMatrix joint_qubit_state(const BranchState& joint, int dense_cap) {
  const int n = joint.num_qubits();
  if (n > dense_cap) {
    throw CapacityError("joint_qubit_state: " + std::to_string(n) +
                        " qubits exceeds the dense cap of " + std::to_string(dense_cap));
  }
  const std::size_t dim = joint.num_branches();
  std::vector<std::vector<Term>> terms(dim);
  int lo = 0, hi = 0;
  bool any = false;
  for (std::size_t z = 0; z < dim; ++z) {
    terms[z] = nonzero_terms(joint.branch(z));
    for (const auto& t : terms[z]) {
      lo = any ? std::min(lo, t.power) : t.power;
      hi = any ? std::max(hi, t.power) : t.power;
      any = true;
    }
  }
  const int span = hi - lo;
  std::vector<Complex> overlaps(static_cast<std::size_t>(2 * span + 1));
  for (int d = -span; d <= span; ++d) {
    overlaps[static_cast<std::size_t>(d + span)] = shift_overlap(joint.base(), d);
  }
  // rho[z][z'] = <r_z'|r_z> = sum conj(c'_k') c_k <base|Delta^{k-k'}|base>
  const auto d = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t z = 0; z < dim; ++z) {
    for (std::size_t zp = z; zp < dim; ++zp) {
      Complex sum = 0.0;
      for (const auto& a : terms[z]) {
        for (const auto& b : terms[zp]) {
          sum += std::conj(b.coeff) * a.coeff *
                 overlaps[static_cast<std::size_t>(a.power - b.power + span)];
        }
      }
      const auto i = static_cast<Eigen::Index>(z);
      const auto j = static_cast<Eigen::Index>(zp);
      rho(i, j) = sum;
      rho(j, i) = std::conj(sum);
    }
    rho(static_cast<Eigen::Index>(z), static_cast<Eigen::Index>(z)).imag(0.0);
  }
  return HermitianMatrix(std::move(rho));
}

ReservoirDensity reservoir_state(const BranchState& joint) {
  const ReservoirState& base = joint.base();
  const int w = base.window_size();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(w, w);
  int smin = 1, smax = 0;
  for (std::size_t z = 0; z < joint.num_branches(); ++z) {
    if (joint.branch(z).empty()) continue;
    const ReservoirState r = joint.branch_reservoir(z);
    if (r.is_zero()) continue;
    Eigen::VectorXcd v(w);
    for (int i = 0; i < w; ++i) v(i) = r.amplitudes()[static_cast<std::size_t>(i)];
    rho.noalias() += v * v.adjoint();
    if (smin > smax) {
      smin = r.support_min();
      smax = r.support_max();
    } else {
      smin = std::min(smin, r.support_min());
      smax = std::max(smax, r.support_max());
    }
  }
  return {base.window_min(), smin, smax, HermitianMatrix(std::move(rho), 1e-10)};
}

HermitianMatrix phi_channel(const ReservoirState& sigma, const QubitGate& gate,
                            const HermitianMatrix& rho0) {
  check_density(rho0, "phi_channel");
  require_normalized(sigma, "phi_channel");
  check_headroom(used_shifts(gate, rho0), sigma.support_min(), sigma.support_max(),
                 sigma.window_min(), sigma.window_max(), "phi_channel");
  return phi_from_moments(gate, rho0, [&](int a) { return shift_overlap(sigma, a); });
}

HermitianMatrix phi_channel(const ReservoirDensity& sigma, const QubitGate& gate,
                            const HermitianMatrix& rho0) {
  check_density(rho0, "phi_channel");
  require_density_matrix(sigma.rho, "phi_channel");
  check_headroom(used_shifts(gate, rho0), sigma.support_min, sigma.support_max,
                 sigma.window_min, sigma.window_max(), "phi_channel");
  return phi_from_moments(gate, rho0, [&](int a) { return shift_expectation(sigma, a); });
}

ReservoirDensity lambda_channel(const ReservoirState& sigma, const QubitGate& gate,
                                const HermitianMatrix& rho0) {
  require_normalized(sigma, "lambda_channel");
  return lambda_channel(ReservoirDensity::pure(sigma), gate, rho0);
}

ReservoirDensity lambda_channel(const ReservoirDensity& sigma, const QubitGate& gate,
                                const HermitianMatrix& rho0) {
  check_density(rho0, "lambda_channel");
  require_density_matrix(sigma.rho, "lambda_channel");
  const std::vector<int> shifts = used_shifts(gate, rho0);
  check_headroom(shifts, sigma.support_min, sigma.support_max, sigma.window_min,
                 sigma.window_max(), "lambda_channel");
  // Kraus form: sum_n sum_{n1,n2} U(n,n1) rho0(n1,n2) conj(U(n,n2))
  //             Delta^{n1-n} sigma Delta^{-(n2-n)}
  const int w = sigma.rho.dim();
  const Eigen::MatrixXcd& s = sigma.rho.matrix();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(w, w);
  for (int n = 0; n < 2; ++n) {
    for (int n1 = 0; n1 < 2; ++n1) {
      for (int n2 = 0; n2 < 2; ++n2) {
        const Complex c = gate(n, n1) * rho0(n1, n2) * std::conj(gate(n, n2));
        if (c == Complex(0.0)) continue;
        const int a = n1 - n;
        const int b = n2 - n;
        // (Delta^a s Delta^-b)(i, j) = s(i - a, j - b)
        const int r0 = std::max(0, a), r1 = std::min(w, w + a);
        const int c0 = std::max(0, b), c1 = std::min(w, w + b);
        if (r1 <= r0 || c1 <= c0) continue;
        out.block(r0, c0, r1 - r0, c1 - c0) += c * s.block(r0 - a, c0 - b, r1 - r0, c1 - c0);
      }
    }
  }
  int smin = sigma.support_min, smax = sigma.support_max;
  if (!shifts.empty() && smin <= smax) {
    smin += shifts.front();
    smax += shifts.back();
  }
  return {sigma.window_min, smin, smax, HermitianMatrix(std::move(out), 1e-10)};
}

std::vector<InvarianceRow> delta_expectation_invariance_check(const ReservoirDensity& sigma,
                                                              const QubitGate& gate,
                                                              const HermitianMatrix& rho0,
                                                              int a_min, int a_max, int uses) {
  if (a_min > a_max) throw ParameterError("delta_expectation_invariance_check: empty a range");
  if (uses < 0) throw ParameterError("delta_expectation_invariance_check: negative uses");
  ReservoirDensity after = sigma;
  for (int u = 0; u < uses; ++u) after = lambda_channel(after, gate, rho0);
  std::vector<InvarianceRow> rows;
  for (int a = a_min; a <= a_max; ++a) {
    rows.push_back({a, shift_expectation(sigma, a), shift_expectation(after, a)});
  }
  return rows;
}

SymmetricQubitState symmetric_qubit_state(const BranchState& joint) {
  const int n = joint.num_qubits();
  std::vector<LaurentCoeffs> q(static_cast<std::size_t>(n + 1));
  for (std::size_t z = 0; z < joint.num_branches(); ++z) {
    q[static_cast<std::size_t>(std::popcount(z))] += joint.branch(z);
  }
  double binom = 1.0;  // C(n, h)
  for (int h = 0; h <= n; ++h) {
    q[static_cast<std::size_t>(h)] *= Complex(1.0 / std::sqrt(binom));
    binom = binom * (n - h) / (h + 1);
  }
  Eigen::MatrixXcd m(n + 1, n + 1);
  for (int h = 0; h <= n; ++h) {
    for (int hp = h; hp <= n; ++hp) {
      const Complex v = laurent_expectation(
          joint.base(), q[static_cast<std::size_t>(hp)].adjoint() * q[static_cast<std::size_t>(h)]);
      m(h, hp) = v;
      m(hp, h) = std::conj(v);
    }
    m(h, h).imag(0.0);
  }
  const double captured = m.trace().real();
  return {HermitianMatrix(std::move(m)), captured};
}

std::pair<HermitianMatrix, HermitianMatrix> second_use_marginal_check(const ReservoirState& eta,
                                                                      const QubitGate& gate) {
  const HermitianMatrix joint = joint_qubit_state(sequential_prepare(2, gate, eta));
  return {qubit_marginal(joint, 2, 0), qubit_marginal(joint, 2, 1)};
}

HermitianMatrix ground_projector() {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = 1.0;
  return HermitianMatrix(m);
}

}  // namespace catcoh
