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

#include <bit>
#include <cmath>

#include <gtest/gtest.h>

#include "catcoh/channels.hpp"
#include "catcoh/errors.hpp"

namespace catcoh {
namespace {

// Floating-point route straight from the operator expression.
double p_seq_laurent(int n, int N, int L) {
  const LaurentCoeffs one_plus{{0, 1.0}, {1, 1.0}};
  const LaurentCoeffs one_minus{{0, 1.0}, {1, -1.0}};
  const LaurentCoeffs left = one_minus.pow(N - n) * one_plus.pow(n);
  const LaurentCoeffs poly = left * left.adjoint();
  return laurent_expectation(make_eta(L, 0, 0.0, 0), poly).real() / std::pow(4.0, N);
}

// Probability of each +/- record from the dense register state: rotate by
// H^(x)N (fast Walsh-Hadamard on rows and columns) and read the diagonal.
std::vector<double> record_probabilities(const HermitianMatrix& rho) {
  Eigen::MatrixXcd m = rho.matrix();
  const int dim = rho.dim();
  const double r = 1.0 / std::sqrt(2.0);
  for (int step = 1; step < dim; step <<= 1) {
    for (int i = 0; i < dim; ++i) {
      if (i & step) continue;
      const Eigen::RowVectorXcd a = m.row(i), b = m.row(i | step);
      m.row(i) = r * (a + b);
      m.row(i | step) = r * (a - b);
    }
    for (int j = 0; j < dim; ++j) {
      if (j & step) continue;
      const Eigen::VectorXcd a = m.col(j), b = m.col(j | step);
      m.col(j) = r * (a + b);
      m.col(j | step) = r * (a - b);
    }
  }
  std::vector<double> p(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) p[static_cast<std::size_t>(i)] = m(i, i).real();
  return p;
}

TEST(PSeqExact, TwoQubitValues) {
  EXPECT_NEAR(p_seq_exact(0, 2, 50), 0.005, 1e-15);
  EXPECT_NEAR(p_seq_exact(2, 2, 50), 0.985, 1e-15);
  EXPECT_NEAR(p_seq_exact(1, 2, 50), 0.005, 1e-15);
  EXPECT_NEAR(p_seq_exact(1, 1, 50), 0.99, 1e-15);
  for (int L : {10, 100}) {
    EXPECT_NEAR(p_seq_exact(2, 2, L), 1.0 - 0.75 / L, 1e-12);
    for (int n : {0, 1}) EXPECT_NEAR(p_seq_exact(n, 2, L), 0.25 / L, 1e-12);
  }
}

TEST(PSeqExact, RejectsBadArguments) {
  EXPECT_THROW(p_seq_exact(3, 2, 10), ParameterError);
  EXPECT_THROW(p_seq_exact(-1, 2, 10), ParameterError);
  EXPECT_THROW(p_seq_exact(0, 0, 10), ParameterError);
  EXPECT_THROW(p_count_exact(0, 2, 0), ParameterError);
}

TEST(PSeqExact, MatchesFloatingLaurentRoute) {
  for (int N = 1; N <= 12; ++N) {
    for (int L : {1, 2, 3, 7, N + 1, 40}) {
      for (int n = 0; n <= N; ++n) {
        EXPECT_NEAR(p_seq_exact(n, N, L), p_seq_laurent(n, N, L), 1e-12)
            << n << " " << N << " " << L;
      }
    }
  }
}

TEST(PSeqExact, MatchesDenseMeasurementStatistics) {
  for (int N = 1; N <= 10; ++N) {
    for (int L : {2, N + 1, 25}) {
      const auto rho = joint_qubit_state(
          sequential_prepare(N, QubitGate::hadamard_like(), make_eta(L, 40, 0.0, N + 1)));
      const auto p = record_probabilities(rho);
      for (std::size_t z = 0; z < p.size(); ++z) {
        const int pluses = N - std::popcount(z);
        EXPECT_NEAR(p[z], p_seq_exact(pluses, N, L), 1e-12) << N << " " << L << " " << z;
      }
    }
  }
}

TEST(PCountExact, Examples) {
  double sum = 0.0;
  for (int n = 0; n <= 6; ++n) sum += p_count_exact(n, 6, 20);
  EXPECT_NEAR(sum, 1.0, 1e-10);
  EXPECT_NEAR(p_count_exact(1, 2, 50), 0.01, 1e-15);
  EXPECT_NEAR(p_count_exact(1, 1, 2), 0.75, 1e-15);
}

TEST(SequenceStats, Normalization) {
  for (int N = 1; N <= 30; ++N) {
    for (int L : {N + 1, 10 * N, 1000}) {
      const auto s = sequence_stats(N, L);
      double sum = 0.0, product_sum = 0.0;
      for (int n = 0; n <= N; ++n) {
        const auto i = static_cast<std::size_t>(n);
        EXPECT_GE(s.p_seq[i], 0.0);
        EXPECT_LE(s.p_count[i], 1.0);
        sum += s.p_count[i];
        product_sum += s.product_p_count[i];
      }
      EXPECT_NEAR(sum, 1.0, 1e-10) << N << " " << L;
      EXPECT_NEAR(product_sum, 1.0, 1e-10) << N << " " << L;
    }
  }
}

TEST(SequenceStats, AgreesWithSingleCalls) {
  for (int N : {1, 5, 17}) {
    for (int L : {3, 50}) {
      const auto s = sequence_stats(N, L);
      for (int n = 0; n <= N; ++n) {
        const auto i = static_cast<std::size_t>(n);
        EXPECT_DOUBLE_EQ(s.p_seq[i], p_seq_exact(n, N, L));
        EXPECT_DOUBLE_EQ(s.p_count[i], p_count_exact(n, N, L));
        const double binom = std::round(std::exp(std::lgamma(N + 1.0) - std::lgamma(n + 1.0) -
                                                 std::lgamma(N - n + 1.0)));
        EXPECT_NEAR(s.p_count[i], binom * s.p_seq[i], 1e-12);
      }
    }
  }
}

TEST(SequenceStats, LargeRegisterStaysInRange) {
  const auto s = sequence_stats(256, 1000);
  double sum = 0.0;
  for (double p : s.p_count) {
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
    sum += p;
  }
  EXPECT_NEAR(sum, 1.0, 1e-10);
}

TEST(ConditionalSymmetry, OneMinusEqualsAllMinus) {
  for (int N = 2; N <= 30; ++N) {
    for (int L : {N + 1, 2 * N, 100, 1000}) {
      if (L <= N) continue;
      EXPECT_NEAR(p_seq_exact(N - 1, N, L), p_count_exact(0, N, L), 1e-12) << N << " " << L;
    }
  }
}

TEST(ConditionalSymmetry, MirroredSequences) {
  // m pluses among the N-1 qubits after a '-' is as likely as m minuses.
  for (int N = 3; N <= 12; ++N) {
    for (int m = 0; m < N; ++m) {
      EXPECT_NEAR(p_seq_exact(m, N, 50), p_seq_exact(N - 1 - m, N, 50), 1e-14);
    }
  }
}

TEST(Scaling, MinusRecordsFallAsOneOverL) {
  for (int N : {2, 5, 9}) {
    for (int n = 0; n < N; ++n) {
      const int L = 100 * N;
      const double ratio = p_seq_exact(n, N, 2 * L) / p_seq_exact(n, N, L);
      EXPECT_NEAR(ratio, 0.5, 0.01) << N << " " << n;
    }
  }
}

TEST(PSeqApprox, Examples) {
  EXPECT_NEAR(p_seq_approx(100, 100, 1000), 0.994358, 1e-6);
  EXPECT_NEAR(p_seq_approx(100, 101, 1000), 2.8209e-5, 1e-9);
  const double exact = p_seq_exact(64, 64, 1000);
  EXPECT_LT(std::abs(p_seq_approx(64, 64, 1000) - exact) / exact, 0.05);
}

TEST(PSeqApprox, MirrorsShareValues) {
  EXPECT_EQ(p_seq_approx(0, 20, 1000), p_seq_approx(19, 20, 1000));
  EXPECT_EQ(p_seq_approx(1, 20, 1000), p_seq_approx(18, 20, 1000));
  EXPECT_EQ(p_seq_approx(2, 20, 1000), p_seq_approx(17, 20, 1000));
}

TEST(PSeqApprox, UnsupportedCases) {
  EXPECT_THROW(p_seq_approx(3, 10, 1000), DomainError);
  EXPECT_THROW(p_seq_approx(1, 1, 1000), DomainError);
  EXPECT_FALSE(p_seq_approx_supported(5, 10));
  EXPECT_TRUE(p_seq_approx_supported(0, 2));
  // N = 2, n = 0 is the N-2 tail, which is singular; the mirror form applies.
  EXPECT_NEAR(p_seq_approx(0, 2, 100), 1.0 / (2.0 * std::sqrt(M_PI) * 100), 1e-15);
}

TEST(PSeqApprox, TailFormsCloseAtLargeN) {
  // The closed forms carry O(1/N) relative error; at N = 256 all four are
  // within the few-percent band.
  for (int k = 0; k <= 3; ++k) {
    const double exact = p_seq_exact(256 - k, 256, 1000);
    EXPECT_LT(std::abs(p_seq_approx(256 - k, 256, 1000) - exact) / exact, 0.05) << k;
  }
  for (int N : {4, 16, 64, 256}) {
    const double exact = p_seq_exact(N, N, 1000);
    EXPECT_LT(std::abs(p_seq_approx(N, N, 1000) - exact) / exact, 1e-4) << N;
  }
}

TEST(ProductStats, Examples) {
  EXPECT_NEAR(product_state_stats(3, 10).product_p_seq[0], 1.25e-4, 1e-18);
  EXPECT_NEAR(product_state_stats(2, 50).product_p_seq[1], 0.0099, 1e-15);
  for (int L : {10, 100}) {
    const auto s = product_state_stats(2, L);
    const double l = L;
    EXPECT_NEAR(s.product_p_seq[2], 1.0 - 1.0 / l + 0.25 / (l * l), 1e-15);
    EXPECT_NEAR(s.product_p_seq[1], 0.5 / l - 0.25 / (l * l), 1e-15);
    EXPECT_NEAR(s.product_p_seq[0], 0.25 / (l * l), 1e-18);
  }
}

TEST(ProductStats, MatchesTensorPower) {
  const auto rho_s = phi_channel(make_eta(7, 10, 0.0, 1), QubitGate::hadamard_like(),
                                 ground_projector());
  const auto p = record_probabilities(tensor_power(rho_s, 5));
  const auto s = product_state_stats(5, 7);
  for (std::size_t z = 0; z < p.size(); ++z) {
    EXPECT_NEAR(p[z], s.product_p_seq[static_cast<std::size_t>(5 - std::popcount(z))], 1e-14);
  }
}

TEST(Collapse, PostMinusReservoirHasTwoPeaks) {
  const auto r = conditional_collapse_demo(3, 4, 10);
  EXPECT_EQ(r.post_minus.populated_levels(), (std::vector<int>{9, 13}));
  EXPECT_NEAR(r.post_minus.amplitude(9).real(), -1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(r.post_minus.amplitude(13).real(), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Collapse, SymmetryExamples) {
  const auto a = conditional_collapse_demo(2, 50);
  EXPECT_NEAR(a.p_seq_one_minus, 0.005, 1e-15);
  EXPECT_NEAR(a.p_count_none, 0.005, 1e-15);
  const auto b = conditional_collapse_demo(5, 20);
  EXPECT_NEAR(b.p_seq_one_minus, b.p_count_none, 1e-14);
  EXPECT_NEAR(p_seq_laurent(4, 5, 20), p_seq_laurent(0, 5, 20), 1e-14);
  EXPECT_THROW(conditional_collapse_demo(1, 20), ParameterError);
  EXPECT_THROW(conditional_collapse_demo(5, 5), ParameterError);
}

}  // namespace
}  // namespace catcoh
