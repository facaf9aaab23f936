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

#include <bit>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "catcoh/errors.hpp"

namespace catcoh {
namespace {

double plus_weight(const HermitianMatrix& rho) {
  Eigen::Vector2cd plus(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
  return (plus.adjoint() * rho.matrix() * plus)(0, 0).real();
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

QubitGate random_gate(std::mt19937& rng) {
  std::normal_distribution<double> g;
  Complex a(g(rng), g(rng)), b(g(rng), g(rng));
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  return QubitGate::from_column(a / n, b / n);
}

// Independent oracle: the full joint vector on C^{2^N} (x) window, index z*W + j,
// with V(U) applied as an explicit matrix action.
struct DenseJoint {
  int n;
  int w;
  Eigen::VectorXcd psi;
};

DenseJoint dense_prepare(int n, const QubitGate& gate, const ReservoirState& eta) {
  const int w = eta.window_size();
  DenseJoint d{n, w, Eigen::VectorXcd::Zero((1 << n) * w)};
  for (int j = 0; j < w; ++j) d.psi(j) = eta.amplitudes()[static_cast<std::size_t>(j)];
  for (int q = 0; q < n; ++q) {
    const int mask = 1 << (n - 1 - q);
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(d.psi.size());
    for (int z = 0; z < (1 << n); ++z) {
      const int n_in = (z & mask) ? 1 : 0;
      for (int n_out = 0; n_out < 2; ++n_out) {
        const int zt = n_out ? (z | mask) : (z & ~mask);
        for (int j = 0; j < w; ++j) {
          const int jt = j + n_in - n_out;
          if (jt < 0 || jt >= w) continue;
          out(zt * w + jt) += gate(n_out, n_in) * d.psi(z * w + j);
        }
      }
    }
    d.psi = out;
  }
  return d;
}

Eigen::MatrixXcd dense_qubit_state(const DenseJoint& d) {
  const int dim = 1 << d.n;
  Eigen::MatrixXcd rho(dim, dim);
  for (int z = 0; z < dim; ++z)
    for (int zp = 0; zp < dim; ++zp)
      rho(z, zp) = d.psi.segment(zp * d.w, d.w).dot(d.psi.segment(z * d.w, d.w));
  return rho;
}

Eigen::MatrixXcd dense_reservoir_state(const DenseJoint& d) {
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d.w, d.w);
  for (int z = 0; z < (1 << d.n); ++z) {
    const Eigen::VectorXcd v = d.psi.segment(z * d.w, d.w);
    rho += v * v.adjoint();
  }
  return rho;
}

TEST(QubitGate, RejectsNonUnitary) {
  EXPECT_THROW(QubitGate(1.0, 1.0, 0.0, 1.0), ParameterError);
  EXPECT_THROW(QubitGate::from_column(1.0, 0.1), ParameterError);
  const auto u = QubitGate::from_column(Complex(0.6, 0.0), Complex(0.0, 0.8));
  EXPECT_EQ(u(0, 0), Complex(0.6));
  EXPECT_EQ(u(1, 0), Complex(0.0, 0.8));
}

TEST(ApplyVU, HadamardSplitsIntoShiftedBranches) {
  const auto eta = make_eta(6, 20, 0.0, 2);
  const auto out = apply_VU(0, QubitGate::hadamard_like(), BranchState::ground(1, eta));
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_EQ(out.branch(0), LaurentCoeffs::monomial(0, r));
  EXPECT_EQ(out.branch(1), LaurentCoeffs::monomial(-1, r));
  EXPECT_EQ(out.uses(), 1);
}

TEST(ApplyVU, IdentityLeavesStateUnchanged) {
  std::mt19937 rng(1);
  const auto eta = make_eta(5, 10, 0.4, 3);
  const auto start = sequential_prepare(3, random_gate(rng), eta);
  const auto out = apply_VU(1, QubitGate::identity(), start);
  for (std::size_t z = 0; z < start.num_branches(); ++z) EXPECT_EQ(out.branch(z), start.branch(z));
}

TEST(ApplyVU, DistinctQubitsCommute) {
  std::mt19937 rng(2);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::array<Complex, 2>> qubits(3);
    for (auto& q : qubits) {
      Complex a(g(rng), g(rng)), b(g(rng), g(rng));
      const double n = std::sqrt(std::norm(a) + std::norm(b));
      q = {a / n, b / n};
    }
    const auto eta = make_eta(4, 10, 0.9, 4);
    const auto start = BranchState::product(qubits, eta);
    const auto u1 = random_gate(rng);
    const auto u2 = random_gate(rng);
    const auto ab = apply_VU(2, u2, apply_VU(0, u1, start));
    const auto ba = apply_VU(0, u1, apply_VU(2, u2, start));
    for (std::size_t z = 0; z < ab.num_branches(); ++z) {
      const auto ra = ab.branch_reservoir(z);
      const auto rb = ba.branch_reservoir(z);
      for (int l = ra.window_min(); l <= ra.window_max(); ++l) {
        EXPECT_NEAR(std::abs(ra.amplitude(l) - rb.amplitude(l)), 0.0, 1e-12);
      }
    }
  }
}

TEST(ApplyVU, RejectsBadQubitIndex) {
  const auto joint = BranchState::ground(2, make_eta(3, 5, 0.0, 2));
  EXPECT_THROW(apply_VU(2, QubitGate::hadamard_like(), joint), ParameterError);
  EXPECT_THROW(apply_VU(-1, QubitGate::hadamard_like(), joint), ParameterError);
}

TEST(ApplyVU, OverflowWhenGuardTooSmall) {
  const auto eta = make_eta(4, 10, 0.0, 1);
  EXPECT_NO_THROW(sequential_prepare(1, QubitGate::hadamard_like(), eta));
  EXPECT_THROW(sequential_prepare(2, QubitGate::hadamard_like(), eta), WindowOverflowError);
}

TEST(PhiChannel, Examples) {
  const auto h = QubitGate::hadamard_like();
  const auto rho0 = ground_projector();
  EXPECT_NEAR(plus_weight(phi_channel(make_eta(2, 5, 0.0, 1), h, rho0)), 0.75, 1e-15);
  const auto id = phi_channel(make_eta(7, 5, 0.3, 1), QubitGate::identity(), rho0);
  EXPECT_EQ(id.matrix(), rho0.matrix());
  const auto rho100 = phi_channel(make_eta(100, 5, 0.0, 1), h, rho0);
  EXPECT_NEAR(std::abs(rho100(1, 0) - 0.495), 0.0, 1e-14);
}

TEST(PhiChannel, SingleUseSpectrum) {
  // (1 - 1/2L)|+><+| + (1/2L)|-><-|
  for (int L : {1, 2, 3, 10, 100, 1000}) {
    const auto rho = phi_channel(make_eta(L, 50, 0.0, 1), QubitGate::hadamard_like(),
                                 ground_projector());
    EXPECT_NEAR(plus_weight(rho), 1.0 - 0.5 / L, 1e-12) << L;
    const auto ev = rho.eigenvalues();
    EXPECT_NEAR(ev(0), 0.5 / L, 1e-12);
    EXPECT_NEAR(ev(1), 1.0 - 0.5 / L, 1e-12);
  }
}

TEST(PhiChannel, TraceDistanceToTargetIsHalfOverL) {
  for (int L : {1, 2, 5, 40}) {
    const auto rho = phi_channel(make_eta(L, 50, 0.0, 1), QubitGate::hadamard_like(),
                                 ground_projector());
    const Eigen::Vector2cd plus(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
    const auto target = HermitianMatrix::outer(plus);
    EXPECT_NEAR(0.5 * trace_norm(rho - target), 0.5 / L, 1e-12) << L;
  }
}

TEST(PhiChannel, MatchesDenseOracleForRandomInputs) {
  std::mt19937 rng(8);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    const auto gate = random_gate(rng);
    const auto eta = make_eta(3 + trial, 10, g(rng), 2);
    Complex a(g(rng), g(rng)), b(g(rng), g(rng));
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    a /= n;
    b /= n;
    const Eigen::Vector2cd v(a, b);
    const auto rho0 = HermitianMatrix::outer(v);
    const auto joint = apply_VU(0, gate, BranchState::product({{a, b}}, eta));
    const auto expect = joint_qubit_state(joint);
    EXPECT_LT(max_abs_diff(phi_channel(eta, gate, rho0).matrix(), expect.matrix()), 1e-12);
    EXPECT_LT(max_abs_diff(phi_channel(ReservoirDensity::pure(eta), gate, rho0).matrix(),
                           expect.matrix()),
              1e-12);
  }
}

TEST(PhiChannel, RejectsBadInputs) {
  const auto eta = make_eta(4, 10, 0.0, 0);
  EXPECT_THROW(phi_channel(eta, QubitGate::hadamard_like(), ground_projector()),
               WindowOverflowError);
  Eigen::Matrix2cd m;
  m << 0.7, 0.0, 0.0, 0.7;
  EXPECT_THROW(phi_channel(make_eta(4, 10, 0.0, 1), QubitGate::hadamard_like(),
                           HermitianMatrix(m)),
               ParameterError);
  // The identity gate never shifts the reservoir, so no headroom is needed.
  EXPECT_NO_THROW(phi_channel(eta, QubitGate::identity(), ground_projector()));
}

TEST(LambdaChannel, Examples) {
  const auto h = QubitGate::hadamard_like();
  const auto eta10 = make_eta(10, 20, 0.0, 1);
  EXPECT_NEAR(overlap_fidelity(lambda_channel(eta10, h, ground_projector()), eta10), 0.905,
              1e-12);
  const auto same = lambda_channel(eta10, QubitGate::identity(), ground_projector());
  EXPECT_LT(max_abs_diff(same.rho.matrix(), ReservoirDensity::pure(eta10).rho.matrix()), 1e-15);
  const auto ev = lambda_channel(make_eta(2, 20, 0.0, 1), h, ground_projector()).rho.eigenvalues();
  EXPECT_NEAR(ev(ev.size() - 1), 0.75, 1e-12);
  EXPECT_NEAR(ev(ev.size() - 2), 0.25, 1e-12);
  EXPECT_NEAR(ev.head(ev.size() - 2).cwiseAbs().maxCoeff(), 0.0, 1e-12);
}

TEST(LambdaChannel, SingleUseFidelityLaw) {
  for (int L : {1, 2, 10, 100}) {
    const auto eta = make_eta(L, 200, 0.7, 1);
    const double f = overlap_fidelity(lambda_channel(eta, QubitGate::hadamard_like(),
                                                     ground_projector()),
                                      eta);
    EXPECT_NEAR(f, 1.0 - (1.0 / L) * (1.0 - 0.5 / L), 1e-12) << L;
  }
}

TEST(LambdaChannel, TracksSupport) {
  const auto eta = make_eta(4, 10, 0.0, 2);
  const auto once = lambda_channel(eta, QubitGate::hadamard_like(), ground_projector());
  EXPECT_EQ(once.support_min, 9);
  EXPECT_EQ(once.support_max, 13);
  const auto twice = lambda_channel(once, QubitGate::hadamard_like(), ground_projector());
  EXPECT_EQ(twice.support_min, 8);
  EXPECT_THROW(lambda_channel(twice, QubitGate::hadamard_like(), ground_projector()),
               WindowOverflowError);
}

TEST(DeltaInvariance, Examples) {
  const auto h = QubitGate::hadamard_like();
  const auto sigma = ReservoirDensity::pure(make_eta(4, 10, 0.0, 3));
  const auto rows = delta_expectation_invariance_check(sigma, h, ground_projector(), 0, 2, 1);
  EXPECT_NEAR(rows[0].before.real(), 1.0, 1e-15);
  EXPECT_NEAR(rows[0].after.real(), 1.0, 1e-15);
  EXPECT_NEAR(rows[1].before.real(), 0.75, 1e-15);
  EXPECT_NEAR(rows[1].after.real(), 0.75, 1e-15);
  const auto two = delta_expectation_invariance_check(sigma, h, ground_projector(), 2, 2, 2);
  EXPECT_NEAR(two[0].before.real(), 0.5, 1e-15);
  EXPECT_NEAR(two[0].after.real(), 0.5, 1e-15);
}

TEST(DeltaInvariance, HoldsForRandomGatesAndInputs) {
  std::mt19937 rng(12);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 8; ++trial) {
    const auto gate = random_gate(rng);
    Eigen::Matrix2cd a;
    a << Complex(g(rng), g(rng)), Complex(g(rng), g(rng)), Complex(g(rng), g(rng)),
        Complex(g(rng), g(rng));
    Eigen::Matrix2cd r = a * a.adjoint();
    r /= r.trace().real();
    const HermitianMatrix rho0(r, 1e-12);
    const auto sigma = ReservoirDensity::pure(make_eta(5 + trial, 30, g(rng), 4));
    for (const auto& row : delta_expectation_invariance_check(sigma, gate, rho0, -6, 6, 4)) {
      EXPECT_NEAR(std::abs(row.before - row.after), 0.0, 1e-12) << row.a;
    }
  }
}

TEST(DeltaInvariance, MatchesDenseChannelApplication) {
  // Brute force: reservoir state after two uses from the dense joint vector.
  const auto eta = make_eta(4, 10, 0.0, 3);
  const auto d = dense_prepare(2, QubitGate::hadamard_like(), eta);
  const Eigen::MatrixXcd rho = dense_reservoir_state(d);
  Complex trace2 = 0.0;
  for (int j = 2; j < rho.rows(); ++j) trace2 += rho(j - 2, j);
  EXPECT_NEAR(trace2.real(), 0.5, 1e-14);
}

TEST(SequentialPrepare, BaseCaseMatchesApplyVU) {
  const auto eta = make_eta(7, 10, 0.2, 2);
  const auto a = sequential_prepare(1, QubitGate::hadamard_like(), eta);
  const auto b = apply_VU(0, QubitGate::hadamard_like(), BranchState::ground(1, eta));
  EXPECT_EQ(a.branch(0), b.branch(0));
  EXPECT_EQ(a.branch(1), b.branch(1));
}

TEST(SequentialPrepare, BranchesAreShiftedEta) {
  const int n = 5;
  const auto joint = sequential_prepare(n, QubitGate::hadamard_like(), make_eta(8, 10, 0.0, 7));
  for (std::size_t z = 0; z < joint.num_branches(); ++z) {
    const int h = std::popcount(z);
    EXPECT_EQ(joint.branch(z).min_power(), -h);
    EXPECT_EQ(joint.branch(z).max_power(), -h);
    EXPECT_NEAR(std::abs(joint.branch(z).coeff(-h) - std::pow(2.0, -0.5 * n)), 0.0, 1e-15);
  }
}

TEST(SequentialPrepare, TwoQubitTable) {
  for (int L : {10, 50, 100}) {
    const auto rho = joint_qubit_state(
        sequential_prepare(2, QubitGate::hadamard_like(), make_eta(L, 10, 0.0, 4)));
    Eigen::Vector2cd p(1.0, 1.0), m(1.0, -1.0);
    p /= std::sqrt(2.0);
    m /= std::sqrt(2.0);
    auto prob = [&](const Eigen::Vector2cd& a, const Eigen::Vector2cd& b) {
      Eigen::Vector4cd v;
      v << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
      return (v.adjoint() * rho.matrix() * v)(0, 0).real();
    };
    EXPECT_NEAR(prob(p, p), 1.0 - 0.75 / L, 1e-12);
    EXPECT_NEAR(prob(p, m), 0.25 / L, 1e-12);
    EXPECT_NEAR(prob(m, p), 0.25 / L, 1e-12);
    EXPECT_NEAR(prob(m, m), 0.25 / L, 1e-12);
  }
}

TEST(SequentialPrepare, GlobalNormIsOne) {
  for (int L : {2, 4, 12}) {
    for (int n = 1; n <= 12; ++n) {
      const auto joint =
          sequential_prepare(n, QubitGate::hadamard_like(), make_eta(L, 50, 0.0, default_guard(n)));
      EXPECT_NEAR(joint.global_norm_squared(), 1.0, 1e-12) << L << " " << n;
    }
  }
}

TEST(JointQubitState, MatchesDenseOracle) {
  std::mt19937 rng(21);
  std::normal_distribution<double> g;
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto gate = random_gate(rng);
      const auto eta = make_eta(2 + 3 * trial, 10, g(rng), n + 1);
      const auto ours = joint_qubit_state(sequential_prepare(n, gate, eta));
      const auto d = dense_prepare(n, gate, eta);
      EXPECT_LT(max_abs_diff(ours.matrix(), dense_qubit_state(d)), 1e-12);
    }
  }
}

TEST(JointQubitState, HammingWeightEntries) {
  const auto rho = joint_qubit_state(
      sequential_prepare(2, QubitGate::hadamard_like(), make_eta(50, 10, 0.0, 4)));
  EXPECT_NEAR(rho(0b00, 0b11).real(), 0.24, 1e-15);
  EXPECT_NEAR(rho(0b01, 0b10).real(), 0.25, 1e-15);
  for (int L : {2, 3, 9}) {
    const int n = 6;
    const auto big = joint_qubit_state(
        sequential_prepare(n, QubitGate::hadamard_like(), make_eta(L, 10, 0.0, n + 1)));
    for (int z = 0; z < (1 << n); ++z) {
      for (int zp = 0; zp < (1 << n); ++zp) {
        const int dh = std::abs(std::popcount(unsigned(z)) - std::popcount(unsigned(zp)));
        const double expect = std::pow(2.0, -n) * (1.0 - std::min(L, dh) / double(L));
        EXPECT_NEAR(std::abs(big(z, zp) - expect), 0.0, 1e-14);
      }
    }
  }
}

TEST(JointQubitState, SingleQubitEqualsPhi) {
  const auto eta = make_eta(100, 10, 0.0, 2);
  const auto rho = joint_qubit_state(sequential_prepare(1, QubitGate::hadamard_like(), eta));
  EXPECT_LT(max_abs_diff(rho.matrix(),
                         phi_channel(eta, QubitGate::hadamard_like(), ground_projector()).matrix()),
            1e-15);
}

TEST(JointQubitState, CapacityError) {
  const auto joint = sequential_prepare(5, QubitGate::hadamard_like(), make_eta(6, 10, 0.0, 6));
  EXPECT_THROW(joint_qubit_state(joint, 4), CapacityError);
  EXPECT_THROW(BranchState::ground(13, make_eta(6, 10, 0.0, 15)), CapacityError);
}

TEST(JointQubitState, EveryMarginalIsSingleUseOutput) {
  for (int L : {2, 5, 30}) {
    const auto eta = make_eta(L, 20, 0.0, 10);
    const auto rho_s = phi_channel(eta, QubitGate::hadamard_like(), ground_projector());
    for (int n = 1; n <= 8; ++n) {
      const auto joint = joint_qubit_state(sequential_prepare(n, QubitGate::hadamard_like(), eta));
      for (int q = 0; q < n; ++q) {
        EXPECT_LT(max_abs_diff(qubit_marginal(joint, n, q).matrix(), rho_s.matrix()), 1e-12)
            << L << " " << n << " " << q;
      }
    }
  }
}

// Dense projection onto normalized Dicke vectors.
Eigen::MatrixXcd dicke_projection(const HermitianMatrix& rho, int n) {
  Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(1 << n, n + 1);
  for (int z = 0; z < (1 << n); ++z) basis(z, std::popcount(static_cast<unsigned>(z))) = 1.0;
  for (int h = 0; h <= n; ++h) basis.col(h).normalize();
  return basis.adjoint() * rho.matrix() * basis;
}

TEST(SymmetricQubitState, MatchesDenseProjection) {
  std::mt19937 rng(21);
  for (int n = 1; n <= 6; ++n) {
    const auto gate = random_gate(rng);
    const auto joint = sequential_prepare(n, gate, make_eta(5, n + 2, 0.4 * n, n + 2));
    const auto sym = symmetric_qubit_state(joint);
    const auto dense = dicke_projection(joint_qubit_state(joint), n);
    EXPECT_LT((sym.rho.matrix() - dense).cwiseAbs().maxCoeff(), 1e-12) << n;
    // All-|psi0> input: amplitudes depend only on weight.
    EXPECT_NEAR(sym.captured, 1.0, 1e-12);
    const auto full = joint_qubit_state(joint).eigenvalues();
    const auto small = sym.rho.eigenvalues();
    for (int k = 0; k <= n; ++k)
      EXPECT_NEAR(small(n - k), full(full.size() - 1 - k), 1e-12) << n << " " << k;
  }
}

TEST(SymmetricQubitState, ReportsLostWeightForAsymmetricInput) {
  const auto eta = make_eta(6, 4, 0.0, 4);
  const auto start = BranchState::product({{Complex(1), Complex(0)}, {Complex(0), Complex(1)}}, eta);
  const auto sym = symmetric_qubit_state(start);  // |01>: half of it is symmetric
  EXPECT_NEAR(sym.captured, 0.5, 1e-12);
  EXPECT_LT((sym.rho.matrix() - dicke_projection(joint_qubit_state(start), 2)).cwiseAbs().maxCoeff(),
            1e-12);
}

TEST(ReservoirState, ComplementEqualsIteratedLambda) {
  std::mt19937 rng(31);
  for (int n = 1; n <= 5; ++n) {
    const auto gate = n % 2 ? QubitGate::hadamard_like() : random_gate(rng);
    const auto eta = make_eta(4 + n, 10, 0.3 * n, n + 1);
    const auto joint_view = reservoir_state(sequential_prepare(n, gate, eta));
    ReservoirDensity iterated = ReservoirDensity::pure(eta);
    for (int u = 0; u < n; ++u) iterated = lambda_channel(iterated, gate, ground_projector());
    EXPECT_LT(max_abs_diff(joint_view.rho.matrix(), iterated.rho.matrix()), 1e-12) << n;
    EXPECT_LT(max_abs_diff(joint_view.rho.matrix(), dense_reservoir_state(dense_prepare(n, gate, eta))),
              1e-12);
    EXPECT_EQ(joint_view.support_min, iterated.support_min);
  }
}

TEST(SecondUse, MarginalsMatchSingleUse) {
  const auto h = QubitGate::hadamard_like();
  const auto [a4, b4] = second_use_marginal_check(make_eta(4, 10, 0.0, 3), h);
  EXPECT_NEAR(plus_weight(a4), 0.875, 1e-12);
  EXPECT_NEAR(plus_weight(b4), 0.875, 1e-12);
  const auto [ai, bi] = second_use_marginal_check(make_eta(4, 10, 0.0, 3), QubitGate::identity());
  EXPECT_LT(max_abs_diff(ai.matrix(), ground_projector().matrix()), 1e-15);
  EXPECT_LT(max_abs_diff(bi.matrix(), ground_projector().matrix()), 1e-15);
  const auto eta12 = make_eta(12, 10, 0.0, 3);
  const auto [a12, b12] = second_use_marginal_check(eta12, h);
  EXPECT_LT(max_abs_diff(a12.matrix(), b12.matrix()), 1e-12);
  const auto d = dense_qubit_state(dense_prepare(2, h, eta12));
  const Eigen::MatrixXcd first = qubit_marginal(HermitianMatrix(d, 1e-12), 2, 0).matrix();
  EXPECT_LT(max_abs_diff(a12.matrix(), first), 1e-12);
}

}  // namespace
}  // namespace catcoh
