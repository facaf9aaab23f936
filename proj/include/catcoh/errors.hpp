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

#include <stdexcept>
#include <string>

namespace catcoh {

// Invalid argument to a public operation (bad L, bad spectrum, non-density input).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A shift would move populated amplitude outside the reservoir window; the
// guard chosen at construction was smaller than the number of uses.
class WindowOverflowError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A dense computation was requested above its configured size cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Closed forms requested outside the cases they are defined for.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace catcoh
