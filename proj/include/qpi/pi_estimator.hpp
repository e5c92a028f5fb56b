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
 * Quarter-circle lattice experiment: estimate pi/4 as the fraction of the
 * 2^(2n) lattice points (x, y) with x^2 + y^2 < 2^(2n), using amplitude
 * estimation on a 4n+1 qubit circuit.
 *
 * Qubit layout (LSB first within each register):
 *
 *     x        0 .. n-1
 *     y        n .. 2n-1
 *     ancilla  2n .. 4n-1     low 2n bits of the accumulator
 *     flag     4n             accumulator MSB
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qpi/amplitude_estimation.hpp"
#include "qpi/circuit.hpp"

namespace qpi {

class PiLayout {
  public:
    /// Throws ContractViolation for n < 1 or n > 15.
    explicit PiLayout(std::size_t n);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] const QubitList &x_reg() const noexcept { return x_; }
    [[nodiscard]] const QubitList &y_reg() const noexcept { return y_; }
    [[nodiscard]] const QubitList &ancilla() const noexcept { return anc_; }
    [[nodiscard]] Qubit flag() const noexcept { return flag_; }
    /// ancilla followed by flag: the (2n+1)-qubit sum-of-squares register.
    [[nodiscard]] QubitList accumulator() const;
    [[nodiscard]] std::size_t total_qubits() const noexcept {
        return 4 * n_ + 1;
    }

  private:
    std::size_t n_;
    QubitList x_;
    QubitList y_;
    QubitList anc_;
    Qubit flag_;
};

/// 1 iff x^2 + y^2 < 2^(2n). Throws ContractViolation if x or y >= 2^n.
[[nodiscard]] int f_xy(std::uint64_t x, std::uint64_t y, std::size_t n);

struct LatticeFraction {
    std::uint64_t inside{0};
    std::uint64_t total{0};

    [[nodiscard]] double value() const noexcept {
        return static_cast<double>(inside) / static_cast<double>(total);
    }
};

/// Exhaustive count over all 2^(2n) lattice points.
[[nodiscard]] LatticeFraction exact_fraction(std::size_t n);

/// Hadamard on every x and y qubit.
[[nodiscard]] Circuit build_P(const PiLayout &layout);

/// Square x and y into the accumulator, flip the flag, then uncompute the
/// ancilla with inverse squarers of y and x on the ancilla alone.
[[nodiscard]] Circuit build_R(const PiLayout &layout);

/// A = R P with the reflection domain x, y and flag.
[[nodiscard]] AmplitudeProblem make_problem(const PiLayout &layout);

struct PiExperimentConfig {
    std::size_t n{2};
    std::size_t k_max{1};
    std::uint64_t shots{100};
    std::size_t repetitions{100};
    std::uint64_t seed{0};
    EstimationMode mode{EstimationMode::Sampled};
    std::uint64_t max_amplitudes{kDefaultMaxAmplitudes};
};

struct PiRepetition {
    std::size_t rep{0};
    /// RNG substream id used by this repetition.
    std::uint64_t stream{0};
    double theta_hat{0.0};
    double a_hat{0.0};
    double pi_hat{0.0};
    std::vector<double> hits;
    /// Sampling plus likelihood maximization for this repetition.
    double wall_time_ms{0.0};
};

struct PiEstimate {
    PiExperimentConfig config;
    std::vector<PiRepetition> repetitions;
    /// Exact flag probabilities shared by every repetition.
    std::vector<double> flag_probabilities;
    double mean_pi{0.0};
    /// Population standard deviation over repetitions.
    double stddev_pi{0.0};
    double classical_exact{0.0};
    std::uint64_t query_count{0};
    std::size_t qubit_count{0};
    /// Lattice discretization scale 2^-n (reference only).
    double epsilon_sampling{0.0};
    double epsilon_amplitude{0.0};
    /// Simulation time for the shared flag probabilities.
    double simulation_ms{0.0};
};

/// Simulates Q^{m_k} A |0> once per schedule entry, then runs every
/// repetition r against RNG substream r of `config.seed`.
[[nodiscard]] PiEstimate estimate_pi(const PiExperimentConfig &config);

/// Plain Monte Carlo over uniformly drawn lattice points: 4 * hits / samples.
[[nodiscard]] double classical_monte_carlo(std::size_t n, std::uint64_t samples,
                                           RngStream &rng);

} // namespace qpi
