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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qpi/circuit.hpp"

namespace qpi {

struct SelftestOptions {
    /// Input width; accumulators get 2n qubits.
    std::size_t n{2};
    /// Flip the direction of one Fourier-space rotation in every family.
    bool inject_fault{false};
};

struct FamilyResult {
    std::string family;
    std::size_t cases{0};
    /// "(a, b, c)" style triples of failing basis inputs.
    std::vector<std::string> failures;

    [[nodiscard]] bool passed() const noexcept { return failures.empty(); }
};

/// Exhaustive basis-state checks of the adder, both multipliers and both
/// squarers against integer arithmetic.
[[nodiscard]] std::vector<FamilyResult> run_selftest(const SelftestOptions &options);

/// Copy of `circuit` with the `inverted` flag of the first PhaseRj with
/// j >= 2 that targets `fourier_reg` from a control outside it flipped.
/// R_1 is skipped because it is its own inverse.
[[nodiscard]] Circuit with_flipped_rotation(const Circuit &circuit,
                                            const QubitList &fourier_reg);

} // namespace qpi
