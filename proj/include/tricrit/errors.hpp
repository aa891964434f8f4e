// Copyright 2026 The Tricrit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace tricrit {

/// Malformed or inconsistent input (bad dimensions, broken invariants,
/// unreadable files). Maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Request exceeds the supported problem size (qubit caps). Exit code 3.
class CapacityError : public std::runtime_error {
  public:
    explicit CapacityError(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace tricrit
