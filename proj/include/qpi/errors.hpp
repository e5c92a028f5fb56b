// Copyright 2026 The qpi Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qpi {

/// Raised when a caller breaks a documented precondition (bad qubit index,
/// overlapping registers, control already used, ...).
class ContractViolation : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a state would exceed the configured amplitude budget.
class ResourceError : public std::runtime_error {
  public:
    ResourceError(const std::string &what, std::uint64_t required_bytes)
        : std::runtime_error(what), required_bytes_(required_bytes) {}

    [[nodiscard]] std::uint64_t required_bytes() const noexcept {
        return required_bytes_;
    }

  private:
    std::uint64_t required_bytes_;
};

} // namespace qpi
