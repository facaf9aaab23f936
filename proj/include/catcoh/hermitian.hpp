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

#include <string_view>
#include <utility>

#include <Eigen/Dense>

#include "catcoh/laurent.hpp"

namespace catcoh {

/// Dense complex Hermitian matrix. Construction checks Hermiticity to the
/// given tolerance and then stores the exactly-Hermitian part, so downstream
/// spectral routines see a symmetric input.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Eigen::MatrixXcd m, double tol = 1e-12);

  static HermitianMatrix zero(int dim);
  // Projector onto a (not necessarily normalized) vector.
  static HermitianMatrix outer(const Eigen::VectorXcd& v);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  double trace() const noexcept { return m_.trace().real(); }
  // True when every imaginary part is exactly zero.
  bool is_real() const noexcept;

  // Ascending.
  Eigen::VectorXd eigenvalues() const;

  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator*(double s, const HermitianMatrix& a);

 private:
  struct Trusted {};
  HermitianMatrix(Eigen::MatrixXcd m, Trusted) : m_(std::move(m)) {}

  Eigen::MatrixXcd m_;
};

// Unit trace within 1e-12 and smallest eigenvalue >= -1e-10, else ParameterError.
void require_density_matrix(const HermitianMatrix& rho, std::string_view context);

// Sum of absolute eigenvalues.
double trace_norm(const HermitianMatrix& a);

HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix tensor_power(const HermitianMatrix& a, int copies);

// Reduced state of one qubit of an n-qubit register. Qubit 0 is the most
// significant bit of the basis index.
HermitianMatrix qubit_marginal(const HermitianMatrix& joint, int num_qubits, int qubit);

// Principal square root; eigenvalues below zero are clamped to zero.
HermitianMatrix psd_sqrt(const HermitianMatrix& a);

}  // namespace catcoh
