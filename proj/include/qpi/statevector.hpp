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
 * Dense statevector simulation kernel.
 *
 * Basis ordering is little-endian: qubit 0 is the least significant bit of
 * the amplitude index. Gates are applied in place by enumerating only the
 * amplitudes whose control bits are all 1, so a gate with k fixed qubits
 * touches 2^(q-k) entries and no gate matrix is ever expanded.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qpi/circuit.hpp"
#include "qpi/gate.hpp"
#include "qpi/rng.hpp"

namespace qpi {

using Amplitude = std::complex<double>;

/// Default amplitude budget: 2^26 amplitudes (1 GiB).
inline constexpr std::uint64_t kDefaultMaxAmplitudes = std::uint64_t{1} << 26;

/// Bytes needed for a dense state over `num_qubits` qubits.
[[nodiscard]] std::uint64_t state_bytes(std::size_t num_qubits) noexcept;

class StateVector {
  public:
    /// |0...0> on `num_qubits` qubits. Throws ResourceError if 2^num_qubits
    /// exceeds `max_amplitudes`.
    [[nodiscard]] static StateVector
    zero(std::size_t num_qubits,
         std::uint64_t max_amplitudes = kDefaultMaxAmplitudes);

    /// Computational basis state |index>.
    [[nodiscard]] static StateVector
    basis(std::size_t num_qubits, std::uint64_t index,
          std::uint64_t max_amplitudes = kDefaultMaxAmplitudes);

    /// Wraps caller-supplied amplitudes; size must be a power of two.
    [[nodiscard]] static StateVector from_amplitudes(std::vector<Amplitude> amps);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::span<Amplitude> amplitudes() noexcept { return amps_; }
    [[nodiscard]] const Amplitude &operator[](std::size_t i) const {
        return amps_[i];
    }

    [[nodiscard]] double norm_squared() const noexcept;

    friend bool operator==(const StateVector &, const StateVector &) = default;

  private:
    StateVector(std::size_t num_qubits, std::vector<Amplitude> amps)
        : num_qubits_(num_qubits), amps_(std::move(amps)) {}

    std::size_t num_qubits_{0};
    std::vector<Amplitude> amps_;
};

/// Applies one gate in place. Throws ContractViolation on out-of-range
/// indices or target/control overlap. PhaseRj with j <= 0 is a no-op.
void apply(StateVector &state, const GateOp &gate);

/// Left fold of apply over the gate list. The circuit width must equal the
/// state width.
void run(const Circuit &circuit, StateVector &state);

/// Probability of reading 1 on `qubit`. Summed in fixed-size chunks whose
/// partials are accumulated in index order, so the result is reproducible.
[[nodiscard]] double prob_one(const StateVector &state, Qubit qubit);

/// Probability that every qubit in `qubits` reads 0.
[[nodiscard]] double prob_all_zero(const StateVector &state,
                                   std::span<const Qubit> qubits);

/// `shots` independent Bernoulli(p) draws with p = prob_one(state, qubit).
[[nodiscard]] std::uint64_t sample_hits(const StateVector &state, Qubit qubit,
                                        std::uint64_t shots, RngStream &rng);

/// Bernoulli draws for an already-known probability.
[[nodiscard]] std::uint64_t sample_bernoulli(double p, std::uint64_t shots,
                                             RngStream &rng);

/// |<a|b>|^2.
[[nodiscard]] double fidelity(const StateVector &a, const StateVector &b);

} // namespace qpi
