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
#include <map>
#include <string>
#include <vector>

#include "qpi/gate.hpp"

namespace qpi {

struct GateCounts {
    std::size_t x{0};
    std::size_t h{0};
    std::size_t swap{0};
    std::size_t phase{0};
    /// PhaseRj gates with at least one control.
    std::size_t controlled_phase{0};

    [[nodiscard]] std::size_t total() const noexcept {
        return x + h + swap + phase;
    }
    friend bool operator==(const GateCounts &, const GateCounts &) = default;
};

/**
 * Ordered gate list over `num_qubits` qubits plus named registers.
 *
 * The width grows automatically when a gate references a higher index, so
 * builders can work from register lists alone. Use `widened()` to embed a
 * circuit into a larger state before simulation.
 */
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

    [[nodiscard]] std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    [[nodiscard]] const std::vector<GateOp> &gates() const noexcept {
        return gates_;
    }
    [[nodiscard]] const std::map<std::string, QubitList> &
    registers() const noexcept {
        return registers_;
    }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }

    /// Appends a validated gate. PhaseRj with j <= 0 is the identity and is
    /// silently dropped.
    Circuit &add(GateOp gate);
    /// Appends every gate of `other`; registers are not merged.
    Circuit &append(const Circuit &other);

    /// Registers must be non-empty, duplicate-free and disjoint from every
    /// other named register.
    void add_register(const std::string &name, QubitList qubits);
    [[nodiscard]] const QubitList &reg(const std::string &name) const;

    /// Same gates on a wider qubit space. Throws if `num_qubits` is smaller
    /// than the current width.
    [[nodiscard]] Circuit widened(std::size_t num_qubits) const;

    /// Gate list reversed, each gate replaced by its inverse.
    [[nodiscard]] Circuit inverse() const;

    /// Same unitary with adjacent gate/inverse pairs removed, repeatedly
    /// (so an IQFT followed by a QFT on the same register vanishes).
    /// Registers are kept.
    [[nodiscard]] Circuit cancel_inverse_pairs() const;

    /// Every gate gains `control`. Throws ContractViolation if any gate
    /// already references it.
    [[nodiscard]] Circuit with_control(Qubit control) const;

    [[nodiscard]] GateCounts gate_count() const noexcept;

    [[nodiscard]] bool touches(Qubit q) const noexcept;

    /// One gate per line, stable ordering.
    [[nodiscard]] std::string dump() const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    std::size_t num_qubits_{0};
    std::vector<GateOp> gates_;
    std::map<std::string, QubitList> registers_;
};

} // namespace qpi
