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

#include "catcoh/asymmetry.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "catcoh/errors.hpp"

namespace catcoh {
namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

void check_spectrum(int N, double lambda_plus, double lambda_minus, const WignerCache& cache,
                    const char* context) {
  if (N < 1) throw ParameterError(std::string(context) + ": N must be >= 1");
  if (!(lambda_plus >= 0.0) || !(lambda_minus >= 0.0) ||
      std::abs(lambda_plus + lambda_minus - 1.0) > 1e-12) {
    throw ParameterError(std::string(context) + ": invalid spectrum (" +
                         std::to_string(lambda_plus) + ", " + std::to_string(lambda_minus) + ")");
  }
  if (N > cache.max_twoJ()) {
    throw CapacityError(std::string(context) + ": N = " + std::to_string(N) +
                        " exceeds the Wigner tables (max " + std::to_string(cache.max_twoJ()) +
                        ")");
  }
}

// lambda_+^{N-k} lambda_-^k for k = 0..N.
std::vector<double> binomial_weights(int N, double lambda_plus, double lambda_minus) {
  std::vector<double> w(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) {
    w[static_cast<std::size_t>(k)] = std::pow(lambda_plus, N - k) * std::pow(lambda_minus, k);
  }
  return w;
}

std::vector<double> multiplicities(int N) {
  // Indexed by twoJ; zero where the parity does not match N.
  std::vector<double> gamma(static_cast<std::size_t>(N) + 1, 0.0);
  for (int twoJ = N % 2; twoJ <= N; twoJ += 2) {
    gamma[static_cast<std::size_t>(twoJ)] = detail::to_double(gamma_multiplicity(N, twoJ));
  }
  return gamma;
}

}  // namespace

TwirlSpec TwirlSpec::qubit_register(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 30) {
    throw ParameterError("TwirlSpec::qubit_register: bad register size");
  }
  TwirlSpec spec;
  spec.charges.resize(std::size_t{1} << num_qubits);
  for (std::size_t z = 0; z < spec.charges.size(); ++z) {
    spec.charges[z] = std::popcount(z);
  }
  return spec;
}

TwirlSpec TwirlSpec::ladder(int window_min, int window_size) {
  if (window_size < 1) throw ParameterError("TwirlSpec::ladder: empty window");
  TwirlSpec spec;
  spec.charges.resize(static_cast<std::size_t>(window_size));
  for (int i = 0; i < window_size; ++i) spec.charges[static_cast<std::size_t>(i)] = window_min + i;
  return spec;
}

HermitianMatrix twirl_dense(const HermitianMatrix& rho, const TwirlSpec& spec) {
  if (static_cast<int>(spec.charges.size()) != rho.dim()) {
    throw ParameterError("twirl_dense: TwirlSpec does not match the matrix dimension");
  }
  Eigen::MatrixXcd out = rho.matrix();
  for (int i = 0; i < rho.dim(); ++i) {
    for (int j = 0; j < rho.dim(); ++j) {
      if (spec.charges[static_cast<std::size_t>(i)] != spec.charges[static_cast<std::size_t>(j)]) {
        out(i, j) = 0.0;
      }
    }
  }
  return HermitianMatrix(std::move(out));
}

double von_neumann_entropy(const HermitianMatrix& rho) {
  const Eigen::VectorXd ev = rho.eigenvalues();
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) s -= xlogx(ev(i));
  return s;
}

double asymmetry_dense(const HermitianMatrix& rho, const TwirlSpec& spec, int dense_cap) {
  if (rho.dim() > dense_cap) {
    throw CapacityError("asymmetry_dense: dimension " + std::to_string(rho.dim()) +
                        " exceeds the cap of " + std::to_string(dense_cap));
  }
  return von_neumann_entropy(twirl_dense(rho, spec)) - von_neumann_entropy(rho);
}

std::pair<double, double> single_copy_spectrum(int L, EigenConvention convention) {
  if (L < 1) throw ParameterError("single_copy_spectrum: L must be >= 1");
  const double minus = convention == EigenConvention::kEq12 ? 0.5 / L : 1.0 / L;
  return {1.0 - minus, minus};
}

EntropyDecomposition entropy_decomposition(int N, double lambda_plus, double lambda_minus,
                                           const WignerCache& cache) {
  check_spectrum(N, lambda_plus, lambda_minus, cache, "entropy_decomposition");
  const auto w = binomial_weights(N, lambda_plus, lambda_minus);
  const auto gamma = multiplicities(N);
  const auto binom = detail::binomial_row(static_cast<unsigned>(N));
  const detail::BigInt two_n = detail::BigInt(1) << N;

  EntropyDecomposition out{};
  out.S_product = -N * (xlogx(lambda_plus) + xlogx(lambda_minus));
  for (int twoM = -N; twoM <= N; twoM += 2) {
    const double p = detail::ratio_to_double(binom[static_cast<std::size_t>((N + twoM) / 2)],
                                             two_n);
    double s_q = 0.0;
    for (int twoJ = std::abs(twoM); twoJ <= N; twoJ += 2) {
      const WignerTable& table = cache.table(twoJ);
      double mu = 0.0;
      for (int k = 0; k <= N; ++k) {
        const int twoMp = 2 * k - N;
        if (std::abs(twoMp) > twoJ) continue;
        mu += w[static_cast<std::size_t>(k)] * table.d_squared(twoM, twoMp);
      }
      const double g = gamma[static_cast<std::size_t>(twoJ)];
      out.S_twirled -= g * xlogx(mu);
      s_q -= g * xlogx(mu / p);
    }
    out.shannon_H_pM -= xlogx(p);
    out.weighted_S_Q += p * s_q;
    out.sectors.push_back({twoM, p, s_q, s_q - out.S_product});
  }
  const double residual = out.S_twirled - (out.shannon_H_pM + out.weighted_S_Q);
  if (std::abs(residual) > 1e-9) {
    throw std::logic_error("entropy_decomposition: identity violated by " +
                           std::to_string(residual));
  }
  return out;
}

double asymmetry_exact_formula(int N, double lambda_plus, double lambda_minus,
                               const WignerCache& cache) {
  const auto d = entropy_decomposition(N, lambda_plus, lambda_minus, cache);
  return d.S_twirled - d.S_product;
}

double asymmetry_exact_formula(int N, double lambda_plus, double lambda_minus) {
  return asymmetry_exact_formula(N, lambda_plus, lambda_minus, WignerCache(std::max(N, 0)));
}

double asymmetry_separated_sum(int N, double lambda_plus, double lambda_minus,
                               const WignerCache& cache) {
  check_spectrum(N, lambda_plus, lambda_minus, cache, "asymmetry_separated_sum");
  const auto w = binomial_weights(N, lambda_plus, lambda_minus);
  const auto gamma = multiplicities(N);
  double total = 0.0;
  for (int twoM = -N; twoM <= N; twoM += 2) {
    for (int twoJ = std::abs(twoM); twoJ <= N; twoJ += 2) {
      const WignerTable& table = cache.table(twoJ);
      for (int k = 0; k <= N; ++k) {
        const int twoMp = 2 * k - N;
        if (std::abs(twoMp) > twoJ) continue;
        total -= w[static_cast<std::size_t>(k)] * gamma[static_cast<std::size_t>(twoJ)] *
                 xlogx(table.d_squared(twoM, twoMp));
      }
    }
  }
  return total;
}

double asymmetry_approx(int N) {
  if (N < 1) throw ParameterError("asymmetry_approx: N must be >= 1");
  return 0.5 * std::log(N * M_PI * M_E / 2.0);
}

double asymmetry_upper_bound(int L) {
  if (L < 1) throw ParameterError("asymmetry_upper_bound: L must be >= 1");
  return std::log(static_cast<double>(L));
}

AsymmetryReport asymmetry_report(int N, int L, EigenConvention convention,
                                 const WignerCache& cache, bool with_sectors) {
  const auto [plus, minus] = single_copy_spectrum(L, convention);
  auto d = entropy_decomposition(N, plus, minus, cache);
  AsymmetryReport r{N,
                    L,
                    plus,
                    minus,
                    d.S_twirled - d.S_product,
                    asymmetry_approx(N),
                    asymmetry_upper_bound(L),
                    d.shannon_H_pM,
                    {}};
  if (with_sectors) r.epsilon_terms = std::move(d.sectors);
  return r;
}

}  // namespace catcoh
