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

#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "catcoh/asymmetry.hpp"
#include "catcoh/channels.hpp"

namespace catcoh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParameter = 3;

// Malformed or out-of-range flag values. Reported with kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kText, kCsv, kJson };

struct Range {
  int first;
  int last;
};

struct RunConfig {
  std::string command;
  std::vector<int> L;
  Range N{1, 1};
  int stride = 1;
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::string gate_text = "hadamard";
  QubitGate gate = QubitGate::hadamard_like();
  std::optional<std::string> out_path;
  Format format = Format::kCsv;
  EigenConvention convention = EigenConvention::kEq12;

  std::vector<int> n_values() const;
  // One line, no leading '#'. Same config, same string.
  std::string stamp() const;
};

std::vector<int> parse_int_list(std::string_view text);
// "a:b" or a single integer.
Range parse_range(std::string_view text);
// "0.6", "-0.2i", "0.6+0.3i", "1e-3-2i".
Complex parse_complex(std::string_view text);
// "hadamard", "identity" or "a,b" giving the first column U|psi0>.
QubitGate parse_gate(std::string_view text);

std::string format_double(double x);  // %.12g

// Entry point behind the executable. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catcoh::cli
