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

/**
 * @file
 * Gate-level IR element. The gate set is deliberately small: X, H, Swap and
 * the dyadic phase gate R_j = diag(1, exp(2 pi i / 2^j)), each with an
 * arbitrary set of control qubits.
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qpi {

using Qubit = std::uint32_t;
using QubitList = std::vector<Qubit>;

enum class GateKind : std::uint8_t { X, H, Swap, PhaseRj };

[[nodiscard]] std::string_view to_string(GateKind kind) noexcept;

struct GateOp {
    GateKind kind{GateKind::X};
    /// Dyadic exponent; only meaningful for PhaseRj.
    int j{0};
    /// PhaseRj only: selects exp(-2 pi i / 2^j).
    bool inverted{false};
    QubitList targets;
    /// Kept sorted ascending and duplicate-free.
    QubitList controls;

    [[nodiscard]] static GateOp x(Qubit target, QubitList controls = {});
    [[nodiscard]] static GateOp h(Qubit target, QubitList controls = {});
    [[nodiscard]] static GateOp swap(Qubit first, Qubit second,
                                     QubitList controls = {});
    [[nodiscard]] static GateOp phase(int j, Qubit target,
                                      QubitList controls = {},
                                      bool inverted = false);

    /// The inverse gate: PhaseRj flips `inverted`; X, H and Swap are
    /// self-inverse.
    [[nodiscard]] GateOp inverse() const;

    /// Structural checks: target arity, duplicate targets, targets disjoint
    /// from controls. Throws ContractViolation.
    void validate() const;

    /// Highest qubit index referenced, or -1 for a gate with no qubits.
    [[nodiscard]] std::int64_t max_qubit() const noexcept;

    [[nodiscard]] bool touches(Qubit q) const noexcept;

    /// `KIND targets [controls] (j, inverted)`; the trailing group only
    /// for PhaseRj.
    [[nodiscard]] std::string dump() const;

    friend bool operator==(const GateOp &, const GateOp &) = default;
};

} // namespace qpi
