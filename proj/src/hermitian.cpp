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

#include "catcoh/hermitian.hpp"

#include <cmath>
#include <string>

#include "catcoh/errors.hpp"

namespace catcoh {

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ParameterError("HermitianMatrix: matrix must be square and non-empty");
  }
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (!(defect <= tol)) {
    throw ParameterError("HermitianMatrix: not Hermitian (max |A - A^dag| = " +
                         std::to_string(defect) + ")");
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::zero(int dim) {
  return HermitianMatrix(Eigen::MatrixXcd::Zero(dim, dim), Trusted{});
}

HermitianMatrix HermitianMatrix::outer(const Eigen::VectorXcd& v) {
  return HermitianMatrix(v * v.adjoint(), Trusted{});
}

bool HermitianMatrix::is_real() const noexcept {
  return (m_.imag().array() == 0.0).all();
}

Eigen::VectorXd HermitianMatrix::eigenvalues() const {
  if (is_real()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m_.real(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw ParameterError("HermitianMatrix: dimension mismatch");
  return HermitianMatrix(a.m_ - b.m_, HermitianMatrix::Trusted{});
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw ParameterError("HermitianMatrix: dimension mismatch");
  return HermitianMatrix(a.m_ + b.m_, HermitianMatrix::Trusted{});
}

HermitianMatrix operator*(double s, const HermitianMatrix& a) {
  return HermitianMatrix(s * a.m_, HermitianMatrix::Trusted{});
}

void require_density_matrix(const HermitianMatrix& rho, std::string_view context) {
  const double tr = rho.trace();
  if (std::abs(tr - 1.0) > 1e-12) {
    throw ParameterError(std::string(context) + ": trace " + std::to_string(tr) + " != 1");
  }
  const double min_eig = rho.eigenvalues()(0);
  if (min_eig < -1e-10) {
    throw ParameterError(std::string(context) + ": negative eigenvalue " +
                         std::to_string(min_eig));
  }
}

double trace_norm(const HermitianMatrix& a) {
  return a.eigenvalues().cwiseAbs().sum();
}

HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b) {
  const int da = a.dim();
  const int db = b.dim();
  Eigen::MatrixXcd out(da * db, da * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a(i, j) * b.matrix();
    }
  }
  return HermitianMatrix(std::move(out));
}

HermitianMatrix tensor_power(const HermitianMatrix& a, int copies) {
  if (copies < 1) throw ParameterError("tensor_power: copies must be >= 1");
  HermitianMatrix out = a;
  for (int i = 1; i < copies; ++i) out = kron(out, a);
  return out;
}

HermitianMatrix qubit_marginal(const HermitianMatrix& joint, int num_qubits, int qubit) {
  if (joint.dim() != (1 << num_qubits) || qubit < 0 || qubit >= num_qubits) {
    throw ParameterError("qubit_marginal: register size / qubit index mismatch");
  }
  const int bit = num_qubits - 1 - qubit;
  const int mask = 1 << bit;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2, 2);
  for (int z = 0; z < joint.dim(); ++z) {
    if (z & mask) continue;
    // z has the target qubit in |0>; z | mask in |1>; the rest is summed over.
    out(0, 0) += joint(z, z);
    out(0, 1) += joint(z, z | mask);
    out(1, 0) += joint(z | mask, z);
    out(1, 1) += joint(z | mask, z | mask);
  }
  return HermitianMatrix(std::move(out));
}

HermitianMatrix psd_sqrt(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.matrix());
  Eigen::VectorXd roots = solver.eigenvalues();
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    roots(i) = roots(i) > 0.0 ? std::sqrt(roots(i)) : 0.0;
  }
  const Eigen::MatrixXcd& v = solver.eigenvectors();
  return HermitianMatrix(v * roots.asDiagonal() * v.adjoint(), 1e-9);
}

}  // namespace catcoh
