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

#include "catcoh/laurent.hpp"

#include <algorithm>

namespace catcoh {

LaurentCoeffs::LaurentCoeffs(
    std::initializer_list<std::pair<const int, Complex>> terms) {
  for (const auto& [power, c] : terms) add_term(power, c);
}

LaurentCoeffs::LaurentCoeffs(const std::map<int, Complex>& terms) {
  for (const auto& [power, c] : terms) add_term(power, c);
}

LaurentCoeffs LaurentCoeffs::monomial(int power, Complex coeff) {
  LaurentCoeffs p;
  p.add_term(power, coeff);
  return p;
}

Complex LaurentCoeffs::coeff(int power) const noexcept {
  if (coeffs_.empty() || power < min_power_ || power > max_power()) return 0.0;
  return coeffs_[static_cast<std::size_t>(power - min_power_)];
}

void LaurentCoeffs::extend_to(int power) {
  if (coeffs_.empty()) {
    min_power_ = power;
    coeffs_.assign(1, 0.0);
    return;
  }
  if (power < min_power_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_power_ - power), 0.0);
    min_power_ = power;
  } else if (power > max_power()) {
    coeffs_.resize(static_cast<std::size_t>(power - min_power_ + 1), 0.0);
  }
}

void LaurentCoeffs::add_term(int power, Complex coeff) {
  extend_to(power);
  coeffs_[static_cast<std::size_t>(power - min_power_)] += coeff;
}

LaurentCoeffs LaurentCoeffs::adjoint() const {
  LaurentCoeffs out;
  if (empty()) return out;
  out.min_power_ = -max_power();
  out.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  for (auto& c : out.coeffs_) c = std::conj(c);
  return out;
}

LaurentCoeffs LaurentCoeffs::pow(unsigned exponent) const {
  LaurentCoeffs result = monomial(0, 1.0);
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

LaurentCoeffs& LaurentCoeffs::operator+=(const LaurentCoeffs& other) {
  for (int k = other.min_power(); !other.empty() && k <= other.max_power(); ++k) {
    add_term(k, other.coeff(k));
  }
  return *this;
}

LaurentCoeffs& LaurentCoeffs::operator-=(const LaurentCoeffs& other) {
  for (int k = other.min_power(); !other.empty() && k <= other.max_power(); ++k) {
    add_term(k, -other.coeff(k));
  }
  return *this;
}

LaurentCoeffs& LaurentCoeffs::operator*=(Complex scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

LaurentCoeffs operator*(const LaurentCoeffs& lhs, const LaurentCoeffs& rhs) {
  LaurentCoeffs out;
  if (lhs.empty() || rhs.empty()) return out;
  out.min_power_ = lhs.min_power_ + rhs.min_power_;
  out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

}  // namespace catcoh
