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
 * Builders for Fourier-basis arithmetic circuits.
 *
 * Every register is an LSB-first qubit list. `build_qft` is the textbook
 * DFT (H/controlled-R cascade followed by terminal swaps), so after it the
 * Fourier digit phi_u = 0.c_u c_{u-1} ... c_0 of a size-l register lives
 * on qubit `reg[l - 1 - u]`; `fourier_qubit` performs that lookup and all
 * rotation blocks below address digits through it.
 *
 * Rotations R_j with j <= 0 are the identity and are never emitted.
 */
#pragma once

#include <cstddef>
#include <optional>

#include "qpi/circuit.hpp"

namespace qpi {

/// Registers of a multiply-accumulate or square-accumulate circuit.
///
/// Multipliers use a (n qubits), b (m qubits) and c (l qubits). Squarers use
/// a (n qubits) and b (m qubits) as the accumulator; the adder-based squarer
/// also needs `ancilla`.
struct ArithRegisters {
    QubitList a;
    QubitList b;
    QubitList c;
    std::optional<Qubit> ancilla;
};

/// Qubit holding Fourier digit `u` of `reg` after build_qft(reg).
[[nodiscard]] Qubit fourier_qubit(const QubitList &reg, std::size_t u);

[[nodiscard]] Circuit build_qft(const QubitList &reg);
[[nodiscard]] Circuit build_iqft(const QubitList &reg);

/// Adds the integer held in `addend` to the Fourier-encoded `target`:
/// a controlled-R_{u-t+1} from addend bit t to digit u for every pair with
/// a positive exponent. `shift` multiplies the addend by 2^shift.
[[nodiscard]] Circuit build_adder_rotations(const QubitList &addend,
                                            const QubitList &target,
                                            std::size_t shift = 0);

/// |x>|y> -> |x>|x + y mod 2^l> on the target. With `control`, only the
/// rotation block is controlled; QFT and IQFT cancel when it is suppressed.
[[nodiscard]] Circuit build_qft_adder(const QubitList &addend,
                                      const QubitList &target,
                                      std::optional<Qubit> control = std::nullopt);

/// |a>|b>|c> -> |a>|b>|c + ab mod 2^l> as n controlled QFT adders, adder s
/// controlled by a_s and targeting qubits s..l-1 of c.
[[nodiscard]] Circuit build_mul_schoolbook(const ArithRegisters &regs);

/// Same map as build_mul_schoolbook with a single QFT/IQFT pair around the
/// doubly-controlled R_{u-s-t+1} blocks.
[[nodiscard]] Circuit build_mul_qft(const ArithRegisters &regs);

/// |a>|b>|0>_anc -> |a>|b + a^2 mod 2^m>|0>_anc. For each s the ancilla
/// receives a copy of a_s, controls a QFT adder of a into qubits s..m-1 of
/// b, and is cleared again.
[[nodiscard]] Circuit build_sq_adder_based(const ArithRegisters &regs);

/// |a>|b> -> |a>|b + a^2 mod 2^m> without ancilla: cross terms a_s a_t use
/// doubly-controlled R_{u-s-t+1}, the self term a_s a_s = a_s uses a singly
/// controlled R_{u-2s+1}.
[[nodiscard]] Circuit build_sq_qft(const QubitList &a, const QubitList &b);

} // namespace qpi
