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

#include "qpi/selftest.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qpi/qft_arith.hpp"
#include "qpi/statevector.hpp"

namespace qpi {

namespace {

constexpr double kBasisTolerance = 1e-10;

QubitList iota(Qubit first, std::size_t count) {
    QubitList out(count);
    std::iota(out.begin(), out.end(), first);
    return out;
}

std::uint64_t place(const QubitList &reg, std::uint64_t value) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < reg.size(); ++i) {
        if ((value >> i) & 1U) {
            idx |= std::uint64_t{1} << reg[i];
        }
    }
    return idx;
}

std::uint64_t mod_mask(std::size_t bits) {
    return (std::uint64_t{1} << bits) - 1;
}

/// Runs `circuit` on one basis input and checks the output is the expected
/// basis state.
bool maps_to(const Circuit &circuit, std::uint64_t input, std::uint64_t expected) {
    StateVector state = StateVector::basis(circuit.num_qubits(), input);
    run(circuit, state);
    return std::norm(state[expected]) >= 1.0 - kBasisTolerance;
}

std::string triple(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
           std::to_string(c) + ")";
}

FamilyResult check_adder(std::size_t l, bool fault) {
    const QubitList x = iota(0, l);
    const QubitList y = iota(static_cast<Qubit>(l), l);
    Circuit c = build_qft_adder(x, y);
    if (fault) {
        c = with_flipped_rotation(c, y);
    }
    FamilyResult res{"qft-adder", 0, {}};
    for (std::uint64_t xv = 0; xv <= mod_mask(l); ++xv) {
        for (std::uint64_t yv = 0; yv <= mod_mask(l); ++yv) {
            ++res.cases;
            const std::uint64_t sum = (xv + yv) & mod_mask(l);
            if (!maps_to(c, place(x, xv) | place(y, yv),
                         place(x, xv) | place(y, sum))) {
                res.failures.push_back(triple(xv, yv, 0));
            }
        }
    }
    return res;
}

FamilyResult check_multiplier(const std::string &name, std::size_t n, bool fault,
                              const std::function<Circuit(const ArithRegisters &)> &build) {
    const std::size_t l = 2 * n;
    ArithRegisters regs;
    regs.a = iota(0, n);
    regs.b = iota(static_cast<Qubit>(n), n);
    regs.c = iota(static_cast<Qubit>(2 * n), l);
    Circuit c = build(regs);
    if (fault) {
        c = with_flipped_rotation(c, regs.c);
    }
    FamilyResult res{name, 0, {}};
    for (std::uint64_t a = 0; a <= mod_mask(n); ++a) {
        for (std::uint64_t b = 0; b <= mod_mask(n); ++b) {
            for (std::uint64_t cv = 0; cv <= mod_mask(l); ++cv) {
                ++res.cases;
                const std::uint64_t fixed = place(regs.a, a) | place(regs.b, b);
                const std::uint64_t out = (cv + a * b) & mod_mask(l);
                if (!maps_to(c, fixed | place(regs.c, cv), fixed | place(regs.c, out))) {
                    res.failures.push_back(triple(a, b, cv));
                }
            }
        }
    }
    return res;
}

FamilyResult check_squarer(const std::string &name, std::size_t n, bool fault,
                           bool with_ancilla) {
    const std::size_t m = 2 * n;
    ArithRegisters regs;
    regs.a = iota(0, n);
    regs.b = iota(static_cast<Qubit>(n), m);
    Circuit c;
    if (with_ancilla) {
        regs.ancilla = static_cast<Qubit>(n + m);
        c = build_sq_adder_based(regs);
    } else {
        c = build_sq_qft(regs.a, regs.b);
    }
    if (fault) {
        c = with_flipped_rotation(c, regs.b);
    }
    FamilyResult res{name, 0, {}};
    for (std::uint64_t a = 0; a <= mod_mask(n); ++a) {
        for (std::uint64_t b = 0; b <= mod_mask(m); ++b) {
            ++res.cases;
            const std::uint64_t out = (b + a * a) & mod_mask(m);
            if (!maps_to(c, place(regs.a, a) | place(regs.b, b),
                         place(regs.a, a) | place(regs.b, out))) {
                res.failures.push_back(triple(a, b, 0));
            }
        }
    }
    return res;
}

} // namespace

Circuit with_flipped_rotation(const Circuit &circuit, const QubitList &fourier_reg) {
    auto in_reg = [&](Qubit q) {
        return std::find(fourier_reg.begin(), fourier_reg.end(), q) != fourier_reg.end();
    };
    Circuit out(circuit.num_qubits());
    bool flipped = false;
    for (GateOp g : circuit.gates()) {
        if (!flipped && g.kind == GateKind::PhaseRj && g.j >= 2 && in_reg(g.targets[0]) &&
            std::any_of(g.controls.begin(), g.controls.end(),
                        [&](Qubit q) { return !in_reg(q); })) {
            g.inverted = !g.inverted;
            flipped = true;
        }
        out.add(std::move(g));
    }
    return out;
}

std::vector<FamilyResult> run_selftest(const SelftestOptions &options) {
    const std::size_t n = options.n;
    const bool fault = options.inject_fault;
    std::vector<FamilyResult> results;
    results.push_back(check_adder(2 * n, fault));
    results.push_back(check_multiplier("mul-schoolbook", n, fault, build_mul_schoolbook));
    results.push_back(check_multiplier("mul-qft", n, fault, build_mul_qft));
    results.push_back(check_squarer("sq-adder", n, fault, true));
    results.push_back(check_squarer("sq-qft", n, fault, false));
    return results;
}

} // namespace qpi
