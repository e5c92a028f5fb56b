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
 * Maximum-likelihood quantum amplitude estimation.
 *
 * Given a state-preparation circuit A whose flag qubit reads 1 with
 * probability a = sin^2(theta), the Grover operator Q is applied m_k times
 * for a schedule m_0 = 0, m_k = 2^(k-1). Each circuit Q^m_k A |0> is
 * sampled `shots` times and theta is recovered by maximizing
 *
 *   sum_k h_k ln sin^2((2 m_k + 1) theta)
 *       + (N - h_k) ln cos^2((2 m_k + 1) theta).
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qpi/circuit.hpp"
#include "qpi/rng.hpp"
#include "qpi/statevector.hpp"

namespace qpi {

struct AmplitudeProblem {
    /// The operator A; must leave every ancilla qubit in |0> when applied
    /// to |0...0>.
    Circuit a_circuit;
    /// Qubits reflected by S_0. Contains the flag.
    QubitList domain_qubits;
    Qubit flag_qubit{0};
    QubitList ancilla_qubits;

    [[nodiscard]] std::size_t num_qubits() const noexcept {
        return a_circuit.num_qubits();
    }
};

/// Structural checks (flag in domain, ancillas disjoint from domain, indices
/// in range). Throws ContractViolation.
void check_problem(const AmplitudeProblem &problem);

/// Structural checks plus a simulation of A|0>: throws ContractViolation if
/// any ancilla has prob_one above 1e-12.
void validate_problem(const AmplitudeProblem &problem,
                      std::uint64_t max_amplitudes = kDefaultMaxAmplitudes);

struct MlqaeSchedule {
    std::size_t k_max{0};
    std::uint64_t shots{100};
    std::vector<std::uint64_t> m_values;
};

/// m_0 = 0, m_k = 2^(k-1).
[[nodiscard]] MlqaeSchedule make_schedule(std::size_t k_max,
                                          std::uint64_t shots);

/// Total applications of A and A^-1: sum_k shots * (2 m_k + 1).
[[nodiscard]] std::uint64_t query_count(const MlqaeSchedule &schedule);

/// Error scale 1 / sqrt(sum_k shots (2 m_k + 1)^2). Reported for reference
/// only; it is not estimated from data.
[[nodiscard]] double epsilon_target(const MlqaeSchedule &schedule);

enum class EstimationMode { Sampled, Exact };

struct AmplitudeEstimate {
    double theta_hat{0.0};
    double a_hat{0.0};
    /// Fractional in exact mode.
    std::vector<double> hits;
    std::uint64_t query_count{0};
    double epsilon_target{0.0};
};

/// Q = A S_0 A^-1 S_chi, S_chi applied first. S_chi is Z on the flag, S_0 is
/// an X-conjugated multi-controlled Z over the domain qubits.
[[nodiscard]] Circuit build_grover(const AmplitudeProblem &problem);

/// Exact flag probabilities p_k of Q^{m_k} A |0>, one per schedule entry.
/// The state is advanced incrementally, so the largest m is simulated once.
[[nodiscard]] std::vector<double>
flag_probabilities(const AmplitudeProblem &problem,
                   const MlqaeSchedule &schedule,
                   std::uint64_t max_amplitudes = kDefaultMaxAmplitudes);

/// Hit counts from known probabilities: Bernoulli draws in sampled mode,
/// shots * p_k in exact mode (rng untouched).
[[nodiscard]] std::vector<double>
hits_from_probabilities(const std::vector<double> &probabilities,
                        const MlqaeSchedule &schedule, RngStream &rng,
                        EstimationMode mode);

/// flag_probabilities followed by hits_from_probabilities.
[[nodiscard]] std::vector<double>
run_schedule(const AmplitudeProblem &problem, const MlqaeSchedule &schedule,
             RngStream &rng, EstimationMode mode = EstimationMode::Sampled,
             std::uint64_t max_amplitudes = kDefaultMaxAmplitudes);

/// Lower end of the admissible theta interval; the upper end is
/// pi/2 - kThetaClamp.
inline constexpr double kThetaClamp = 1e-8;
inline constexpr std::size_t kLikelihoodGridPoints = 100000;

[[nodiscard]] double log_likelihood(double theta,
                                    const std::vector<double> &hits,
                                    const MlqaeSchedule &schedule);

/// Grid search over [kThetaClamp, pi/2 - kThetaClamp] followed by
/// golden-section refinement of the bracketing cell to width 1e-10.
/// Grid ties resolve to the smallest theta.
[[nodiscard]] AmplitudeEstimate mle_theta(const std::vector<double> &hits,
                                          const MlqaeSchedule &schedule);

} // namespace qpi
