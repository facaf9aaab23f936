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

#include <complex>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace catcoh {

using Complex = std::complex<double>;

/// Finite Laurent polynomial sum_k c_k X^k, used as a formal expression in
/// the reservoir shift operator. Stored densely over [min_power, max_power];
/// coefficients are kept exactly as computed (no thresholding).
class LaurentCoeffs {
 public:
  LaurentCoeffs() = default;
  LaurentCoeffs(std::initializer_list<std::pair<const int, Complex>> terms);
  explicit LaurentCoeffs(const std::map<int, Complex>& terms);

  static LaurentCoeffs monomial(int power, Complex coeff = 1.0);

  bool empty() const noexcept { return coeffs_.empty(); }
  int min_power() const noexcept { return min_power_; }
  int max_power() const noexcept {
    return min_power_ + static_cast<int>(coeffs_.size()) - 1;
  }
  Complex coeff(int power) const noexcept;
  std::span<const Complex> coefficients() const noexcept { return coeffs_; }

  void add_term(int power, Complex coeff);

  // X -> X^{-1} with conjugated coefficients: the adjoint when X is unitary.
  LaurentCoeffs adjoint() const;
  LaurentCoeffs pow(unsigned exponent) const;

  LaurentCoeffs& operator+=(const LaurentCoeffs& other);
  LaurentCoeffs& operator-=(const LaurentCoeffs& other);
  LaurentCoeffs& operator*=(Complex scale);

  friend LaurentCoeffs operator+(LaurentCoeffs lhs, const LaurentCoeffs& rhs) {
    return lhs += rhs;
  }
  friend LaurentCoeffs operator-(LaurentCoeffs lhs, const LaurentCoeffs& rhs) {
    return lhs -= rhs;
  }
  friend LaurentCoeffs operator*(LaurentCoeffs lhs, Complex scale) {
    return lhs *= scale;
  }
  friend LaurentCoeffs operator*(Complex scale, LaurentCoeffs rhs) {
    return rhs *= scale;
  }
  // Discrete convolution.
  friend LaurentCoeffs operator*(const LaurentCoeffs& lhs, const LaurentCoeffs& rhs);

  friend bool operator==(const LaurentCoeffs&, const LaurentCoeffs&) = default;

 private:
  void extend_to(int power);

  int min_power_ = 0;
  std::vector<Complex> coeffs_;
};

}  // namespace catcoh
