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

#include "qpi/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qpi/errors.hpp"

namespace qpi {

namespace {

constexpr std::size_t kReduceChunk = std::size_t{1} << 16;

/// Enumerates the amplitude indices whose `fixed` bit positions carry the
/// bits of `fixed_ones` and whose remaining bits range over all values.
class MaskedIndices {
  public:
    MaskedIndices(std::size_t num_qubits, std::vector<Qubit> fixed,
                  std::uint64_t fixed_ones)
        : positions_(std::move(fixed)), ones_(fixed_ones) {
        std::sort(positions_.begin(), positions_.end());
        count_ = std::uint64_t{1} << (num_qubits - positions_.size());
    }

    [[nodiscard]] std::uint64_t count() const noexcept { return count_; }

    [[nodiscard]] std::uint64_t operator()(std::uint64_t r) const noexcept {
        for (Qubit p : positions_) {
            const std::uint64_t low = r & ((std::uint64_t{1} << p) - 1);
            r = ((r >> p) << (p + 1)) | low;
        }
        return r | ones_;
    }

    /// Calls fn(i) for every index, walking the contiguous run below the
    /// lowest fixed bit without recomputing the deposit.
    template <typename F> void for_each(F &&fn) const {
        const std::uint64_t run =
            positions_.empty() ? count_ : std::uint64_t{1} << positions_.front();
        for (std::uint64_t r = 0; r < count_; r += run) {
            const std::uint64_t base = (*this)(r);
            for (std::uint64_t lo = 0; lo < run; ++lo) {
                fn(base + lo);
            }
        }
    }

  private:
    std::vector<Qubit> positions_;
    std::uint64_t ones_;
    std::uint64_t count_{0};
};

void check_qubit(const StateVector &state, Qubit q) {
    if (q >= state.num_qubits()) {
        throw ContractViolation("qubit " + std::to_string(q) +
                                " out of range for a " +
                                std::to_string(state.num_qubits()) +
                                "-qubit state");
    }
}

std::uint64_t bit(Qubit q) { return std::uint64_t{1} << q; }

std::uint64_t mask_of(const QubitList &qubits) {
    std::uint64_t m = 0;
    for (Qubit q : qubits) {
        m |= bit(q);
    }
    return m;
}

void check_budget(std::size_t num_qubits, std::uint64_t max_amplitudes) {
    if (num_qubits >= 63 ||
        (std::uint64_t{1} << num_qubits) > max_amplitudes) {
        const std::uint64_t bytes = state_bytes(num_qubits);
        throw ResourceError(
            "a " + std::to_string(num_qubits) + "-qubit state needs " +
                std::to_string(bytes) + " bytes of amplitudes, above the " +
                std::to_string(max_amplitudes * sizeof(Amplitude)) +
                "-byte limit",
            bytes);
    }
}

} // namespace

std::uint64_t state_bytes(std::size_t num_qubits) noexcept {
    if (num_qubits >= 60) {
        return UINT64_MAX;
    }
    return (std::uint64_t{1} << num_qubits) * sizeof(Amplitude);
}

StateVector StateVector::zero(std::size_t num_qubits,
                              std::uint64_t max_amplitudes) {
    return basis(num_qubits, 0, max_amplitudes);
}

StateVector StateVector::basis(std::size_t num_qubits, std::uint64_t index,
                               std::uint64_t max_amplitudes) {
    check_budget(num_qubits, max_amplitudes);
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    if (index >= dim) {
        throw ContractViolation("basis index " + std::to_string(index) +
                                " out of range");
    }
    std::vector<Amplitude> amps(dim);
    amps[index] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
    if (amps.empty() || !std::has_single_bit(amps.size())) {
        throw ContractViolation("amplitude count must be a power of two");
    }
    const auto q = static_cast<std::size_t>(std::countr_zero(amps.size()));
    return StateVector(q, std::move(amps));
}

double StateVector::norm_squared() const noexcept {
    double total = 0.0;
    for (std::size_t start = 0; start < amps_.size(); start += kReduceChunk) {
        const std::size_t stop = std::min(amps_.size(), start + kReduceChunk);
        double partial = 0.0;
        for (std::size_t i = start; i < stop; ++i) {
            partial += std::norm(amps_[i]);
        }
        total += partial;
    }
    return total;
}

void apply(StateVector &state, const GateOp &gate) {
    gate.validate();
    for (Qubit q : gate.targets) {
        check_qubit(state, q);
    }
    for (Qubit q : gate.controls) {
        check_qubit(state, q);
    }
    if (gate.kind == GateKind::PhaseRj && gate.j <= 0) {
        return;
    }

    auto amps = state.amplitudes();
    const std::uint64_t ctrl = mask_of(gate.controls);
    std::vector<Qubit> fixed = gate.controls;
    fixed.insert(fixed.end(), gate.targets.begin(), gate.targets.end());

    switch (gate.kind) {
    case GateKind::X: {
        const std::uint64_t t = bit(gate.targets[0]);
        const MaskedIndices idx(state.num_qubits(), fixed, ctrl);
        idx.for_each([&](std::uint64_t i) { std::swap(amps[i], amps[i | t]); });
        break;
    }
    case GateKind::H: {
        const std::uint64_t t = bit(gate.targets[0]);
        const double s = std::numbers::sqrt2 / 2.0;
        const MaskedIndices idx(state.num_qubits(), fixed, ctrl);
        idx.for_each([&](std::uint64_t i) {
            const Amplitude a0 = amps[i];
            const Amplitude a1 = amps[i | t];
            amps[i] = s * (a0 + a1);
            amps[i | t] = s * (a0 - a1);
        });
        break;
    }
    case GateKind::Swap: {
        const std::uint64_t t0 = bit(gate.targets[0]);
        const std::uint64_t t1 = bit(gate.targets[1]);
        const MaskedIndices idx(state.num_qubits(), fixed, ctrl);
        idx.for_each([&](std::uint64_t i) { std::swap(amps[i | t0], amps[i | t1]); });
        break;
    }
    case GateKind::PhaseRj: {
        const double angle = std::ldexp(2.0 * std::numbers::pi, -gate.j);
        const Amplitude phase =
            std::polar(1.0, gate.inverted ? -angle : angle);
        const MaskedIndices idx(state.num_qubits(), fixed,
                                ctrl | bit(gate.targets[0]));
        idx.for_each([&](std::uint64_t i) { amps[i] *= phase; });
        break;
    }
    }
}

namespace {

/// Widest qubit support a fused diagonal run may have; the phase table has
/// 2^kMaxFusedSupport entries.
constexpr std::size_t kMaxFusedSupport = 20;
/// Finest rotation a fused run may contain; phases accumulate exactly as
/// multiples of 2 pi / 2^kMaxFusedJ.
constexpr int kMaxFusedJ = 62;

bool fusable(const GateOp &g) {
    return g.kind == GateKind::PhaseRj && g.j > 0 && g.j <= kMaxFusedJ;
}

/// Applies gates [first, last), all diagonal, in a single pass. Each basis
/// index gets the phase sum of the gates whose qubits are all 1, summed as
/// an integer numerator over 2^J so the result is exact before one polar().
void apply_diagonal_run(StateVector &state, std::span<const GateOp> run,
                        std::uint64_t support) {
    const auto width = static_cast<std::size_t>(std::popcount(support));
    int denom_bits = 0;
    for (const GateOp &g : run) {
        denom_bits = std::max(denom_bits, g.j);
    }

    // Compressed position of every support qubit.
    std::vector<Qubit> positions;
    for (std::uint64_t m = support; m != 0; m &= m - 1) {
        positions.push_back(static_cast<Qubit>(std::countr_zero(m)));
    }
    auto compress = [&](std::uint64_t full) {
        std::uint64_t c = 0;
        for (std::size_t k = 0; k < positions.size(); ++k) {
            c |= ((full >> positions[k]) & 1U) << k;
        }
        return c;
    };

    const std::uint64_t denom_mask =
        denom_bits >= 64 ? ~std::uint64_t{0}
                         : (std::uint64_t{1} << denom_bits) - 1;
    std::vector<std::uint64_t> numer(std::size_t{1} << width, 0);
    for (const GateOp &g : run) {
        const std::uint64_t m = compress(mask_of(g.controls) | bit(g.targets[0]));
        const std::uint64_t step = std::uint64_t{1} << (denom_bits - g.j);
        const std::uint64_t delta = g.inverted ? (0 - step) : step;
        for (std::uint64_t p = 0; p < numer.size(); ++p) {
            if ((p & m) == m) {
                numer[p] = (numer[p] + delta) & denom_mask;
            }
        }
    }
    std::vector<Amplitude> table(numer.size());
    const double unit = std::ldexp(2.0 * std::numbers::pi, -denom_bits);
    for (std::size_t p = 0; p < table.size(); ++p) {
        // Signed numerator keeps the angle in (-pi, pi] for accuracy.
        double turns = static_cast<double>(numer[p]);
        if (numer[p] > (denom_mask >> 1)) {
            turns -= std::ldexp(1.0, denom_bits);
        }
        table[p] = numer[p] == 0 ? Amplitude{1.0} : std::polar(1.0, unit * turns);
    }

    // Gather tables map 16-bit slices of an index to compressed bits.
    const std::size_t q = state.num_qubits();
    const std::size_t slice_bits = std::min<std::size_t>(16, q);
    const std::uint64_t slice_mask = (std::uint64_t{1} << slice_bits) - 1;
    const std::size_t slices = (q + slice_bits - 1) / slice_bits;
    std::vector<std::vector<std::uint32_t>> gather(slices);
    for (std::size_t s = 0; s < slices; ++s) {
        gather[s].resize(std::size_t{1} << slice_bits);
        for (std::uint64_t v = 0; v < gather[s].size(); ++v) {
            gather[s][v] = static_cast<std::uint32_t>(compress(v << (slice_bits * s)));
        }
    }
    auto amps = state.amplitudes();
    const std::uint64_t block = slice_mask + 1;
    const std::vector<std::uint32_t> &low = gather[0];
    for (std::uint64_t base = 0; base < amps.size(); base += block) {
        std::uint32_t high = 0;
        for (std::size_t s = 1; s < slices; ++s) {
            high |= gather[s][(base >> (slice_bits * s)) & slice_mask];
        }
        for (std::uint64_t lo = 0; lo < block; ++lo) {
            const std::uint32_t c = high | low[lo];
            if (c != 0) {
                amps[base + lo] *= table[c];
            }
        }
    }
}

} // namespace

void run(const Circuit &circuit, StateVector &state) {
    if (circuit.num_qubits() != state.num_qubits()) {
        throw ContractViolation("circuit has " +
                                std::to_string(circuit.num_qubits()) +
                                " qubits but the state has " +
                                std::to_string(state.num_qubits()));
    }
    const auto &gates = circuit.gates();
    const std::size_t q = state.num_qubits();
    // Fusion pays off once the table is well below the state size.
    const std::size_t max_support =
        q < 2 ? 0 : std::min(kMaxFusedSupport, q - 2);
    std::size_t i = 0;
    while (i < gates.size()) {
        std::uint64_t support = 0;
        std::size_t end = i;
        while (end < gates.size() && fusable(gates[end])) {
            gates[end].validate();
            const std::uint64_t widened =
                support | mask_of(gates[end].controls) | bit(gates[end].targets[0]);
            if (static_cast<std::size_t>(std::popcount(widened)) > max_support) {
                break;
            }
            support = widened;
            ++end;
        }
        if (end - i >= 2 && q <= 64) {
            for (std::size_t k = i; k < end; ++k) {
                check_qubit(state, gates[k].targets[0]);
                for (Qubit c : gates[k].controls) {
                    check_qubit(state, c);
                }
            }
            apply_diagonal_run(state, std::span(gates).subspan(i, end - i), support);
            i = end;
        } else {
            apply(state, gates[i]);
            ++i;
        }
    }
}

double prob_one(const StateVector &state, Qubit qubit) {
    check_qubit(state, qubit);
    const auto amps = state.amplitudes();
    const std::uint64_t b = bit(qubit);
    double total = 0.0;
    for (std::size_t start = 0; start < amps.size(); start += kReduceChunk) {
        const std::size_t stop = std::min(amps.size(), start + kReduceChunk);
        double partial = 0.0;
        for (std::size_t i = start; i < stop; ++i) {
            if ((i & b) != 0) {
                partial += std::norm(amps[i]);
            }
        }
        total += partial;
    }
    return total;
}

double prob_all_zero(const StateVector &state, std::span<const Qubit> qubits) {
    std::uint64_t m = 0;
    for (Qubit q : qubits) {
        check_qubit(state, q);
        m |= bit(q);
    }
    const auto amps = state.amplitudes();
    double total = 0.0;
    for (std::size_t start = 0; start < amps.size(); start += kReduceChunk) {
        const std::size_t stop = std::min(amps.size(), start + kReduceChunk);
        double partial = 0.0;
        for (std::size_t i = start; i < stop; ++i) {
            if ((i & m) == 0) {
                partial += std::norm(amps[i]);
            }
        }
        total += partial;
    }
    return total;
}

std::uint64_t sample_bernoulli(double p, std::uint64_t shots, RngStream &rng) {
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < shots; ++s) {
        if (rng.next_uniform() < p) {
            ++hits;
        }
    }
    return hits;
}

std::uint64_t sample_hits(const StateVector &state, Qubit qubit,
                          std::uint64_t shots, RngStream &rng) {
    return sample_bernoulli(prob_one(state, qubit), shots, rng);
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw ContractViolation("fidelity of states with different widths");
    }
    Amplitude overlap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        overlap += std::conj(a[i]) * b[i];
    }
    return std::norm(overlap);
}

} // namespace qpi
