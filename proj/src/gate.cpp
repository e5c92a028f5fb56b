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

#include "qpi/gate.hpp"

#include <algorithm>
#include <sstream>

#include "qpi/errors.hpp"

namespace qpi {

namespace {

QubitList normalized(QubitList controls) {
    std::sort(controls.begin(), controls.end());
    controls.erase(std::unique(controls.begin(), controls.end()),
                   controls.end());
    return controls;
}

void write_list(std::ostream &os, const QubitList &qubits) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (i != 0) {
            os << ',';
        }
        os << qubits[i];
    }
}

} // namespace

std::string_view to_string(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::X:
        return "X";
    case GateKind::H:
        return "H";
    case GateKind::Swap:
        return "SWAP";
    case GateKind::PhaseRj:
        return "R";
    }
    return "?";
}

GateOp GateOp::x(Qubit target, QubitList controls) {
    return GateOp{GateKind::X, 0, false, {target}, normalized(std::move(controls))};
}

GateOp GateOp::h(Qubit target, QubitList controls) {
    return GateOp{GateKind::H, 0, false, {target}, normalized(std::move(controls))};
}

GateOp GateOp::swap(Qubit first, Qubit second, QubitList controls) {
    return GateOp{GateKind::Swap, 0, false, {first, second},
                  normalized(std::move(controls))};
}

GateOp GateOp::phase(int j, Qubit target, QubitList controls, bool inverted) {
    return GateOp{GateKind::PhaseRj, j, inverted, {target},
                  normalized(std::move(controls))};
}

GateOp GateOp::inverse() const {
    GateOp inv = *this;
    if (kind == GateKind::PhaseRj) {
        inv.inverted = !inverted;
    }
    return inv;
}

void GateOp::validate() const {
    const std::size_t arity = kind == GateKind::Swap ? 2 : 1;
    if (targets.size() != arity) {
        throw ContractViolation(std::string(to_string(kind)) + " expects " +
                                std::to_string(arity) + " target(s), got " +
                                std::to_string(targets.size()));
    }
    if (arity == 2 && targets[0] == targets[1]) {
        throw ContractViolation("SWAP targets must differ");
    }
    if (!std::is_sorted(controls.begin(), controls.end()) ||
        std::adjacent_find(controls.begin(), controls.end()) != controls.end()) {
        throw ContractViolation("control set must be sorted and unique");
    }
    for (Qubit t : targets) {
        if (std::binary_search(controls.begin(), controls.end(), t)) {
            throw ContractViolation("qubit " + std::to_string(t) +
                                    " is both target and control");
        }
    }
}

std::int64_t GateOp::max_qubit() const noexcept {
    std::int64_t hi = -1;
    for (Qubit q : targets) {
        hi = std::max<std::int64_t>(hi, q);
    }
    if (!controls.empty()) {
        hi = std::max<std::int64_t>(hi, controls.back());
    }
    return hi;
}

bool GateOp::touches(Qubit q) const noexcept {
    return std::find(targets.begin(), targets.end(), q) != targets.end() ||
           std::binary_search(controls.begin(), controls.end(), q);
}

std::string GateOp::dump() const {
    std::ostringstream os;
    os << to_string(kind) << ' ';
    write_list(os, targets);
    os << " [";
    write_list(os, controls);
    os << ']';
    if (kind == GateKind::PhaseRj) {
        os << " (" << j << ", " << (inverted ? 1 : 0) << ')';
    }
    return os.str();
}

} // namespace qpi
