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

#include "qpi/circuit.hpp"

#include <algorithm>
#include <set>

#include "qpi/errors.hpp"

namespace qpi {

Circuit &Circuit::add(GateOp gate) {
    gate.validate();
    if (gate.kind == GateKind::PhaseRj && gate.j <= 0) {
        return *this;
    }
    num_qubits_ = std::max<std::size_t>(
        num_qubits_, static_cast<std::size_t>(gate.max_qubit() + 1));
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    num_qubits_ = std::max(num_qubits_, other.num_qubits_);
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

void Circuit::add_register(const std::string &name, QubitList qubits) {
    if (qubits.empty()) {
        throw ContractViolation("register '" + name + "' is empty");
    }
    if (registers_.contains(name)) {
        throw ContractViolation("register '" + name + "' already defined");
    }
    std::set<Qubit> seen(qubits.begin(), qubits.end());
    if (seen.size() != qubits.size()) {
        throw ContractViolation("register '" + name +
                                "' lists a qubit twice");
    }
    for (const auto &[other_name, other] : registers_) {
        for (Qubit q : other) {
            if (seen.contains(q)) {
                throw ContractViolation("register '" + name +
                                        "' overlaps '" + other_name + "'");
            }
        }
    }
    num_qubits_ = std::max<std::size_t>(num_qubits_, *seen.rbegin() + 1);
    registers_.emplace(name, std::move(qubits));
}

const QubitList &Circuit::reg(const std::string &name) const {
    auto it = registers_.find(name);
    if (it == registers_.end()) {
        throw ContractViolation("no register named '" + name + "'");
    }
    return it->second;
}

Circuit Circuit::widened(std::size_t num_qubits) const {
    if (num_qubits < num_qubits_) {
        throw ContractViolation("cannot narrow a " +
                                std::to_string(num_qubits_) +
                                "-qubit circuit to " +
                                std::to_string(num_qubits));
    }
    Circuit out = *this;
    out.num_qubits_ = num_qubits;
    return out;
}

Circuit Circuit::inverse() const {
    Circuit out(num_qubits_);
    out.registers_ = registers_;
    out.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.gates_.push_back(it->inverse());
    }
    return out;
}

Circuit Circuit::cancel_inverse_pairs() const {
    Circuit out(num_qubits_);
    out.registers_ = registers_;
    for (const GateOp &g : gates_) {
        if (!out.gates_.empty() && out.gates_.back() == g.inverse()) {
            out.gates_.pop_back();
        } else {
            out.gates_.push_back(g);
        }
    }
    return out;
}

Circuit Circuit::with_control(Qubit control) const {
    if (touches(control)) {
        throw ContractViolation("control qubit " + std::to_string(control) +
                                " is already used by the circuit");
    }
    Circuit out(std::max<std::size_t>(num_qubits_, control + 1));
    out.registers_ = registers_;
    out.gates_.reserve(gates_.size());
    for (const GateOp &g : gates_) {
        GateOp c = g;
        c.controls.insert(
            std::upper_bound(c.controls.begin(), c.controls.end(), control),
            control);
        out.gates_.push_back(std::move(c));
    }
    return out;
}

GateCounts Circuit::gate_count() const noexcept {
    GateCounts counts;
    for (const GateOp &g : gates_) {
        switch (g.kind) {
        case GateKind::X:
            ++counts.x;
            break;
        case GateKind::H:
            ++counts.h;
            break;
        case GateKind::Swap:
            ++counts.swap;
            break;
        case GateKind::PhaseRj:
            ++counts.phase;
            if (!g.controls.empty()) {
                ++counts.controlled_phase;
            }
            break;
        }
    }
    return counts;
}

bool Circuit::touches(Qubit q) const noexcept {
    return std::any_of(gates_.begin(), gates_.end(),
                       [q](const GateOp &g) { return g.touches(q); });
}

std::string Circuit::dump() const {
    std::string out;
    for (const GateOp &g : gates_) {
        out += g.dump();
        out += '\n';
    }
    return out;
}

} // namespace qpi
