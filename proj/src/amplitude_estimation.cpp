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

#include "qpi/amplitude_estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <string>

#include "qpi/errors.hpp"

namespace qpi {

namespace {

constexpr double kGoldenWidth = 1e-10;

double clamp_log(double x) {
    return std::log(std::max(x, std::numeric_limits<double>::min()));
}

/// Golden-section search for the maximum of `f` on [lo, hi].
template <typename F> double golden_max(F &&f, double lo, double hi) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > kGoldenWidth) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

void check_problem(const AmplitudeProblem &problem) {
    const std::size_t q = problem.num_qubits();
    std::set<Qubit> domain(problem.domain_qubits.begin(),
                           problem.domain_qubits.end());
    if (domain.size() != problem.domain_qubits.size()) {
        throw ContractViolation("domain qubits must be distinct");
    }
    if (!domain.contains(problem.flag_qubit)) {
        throw ContractViolation("flag qubit must be part of the domain");
    }
    for (Qubit a : problem.ancilla_qubits) {
        if (domain.contains(a)) {
            throw ContractViolation("ancilla qubit " + std::to_string(a) +
                                    " is also a domain qubit");
        }
    }
    for (const QubitList *list :
         {&problem.domain_qubits, &problem.ancilla_qubits}) {
        for (Qubit x : *list) {
            if (x >= q) {
                throw ContractViolation("qubit " + std::to_string(x) +
                                        " outside the A circuit");
            }
        }
    }
}

void validate_problem(const AmplitudeProblem &problem,
                      std::uint64_t max_amplitudes) {
    check_problem(problem);
    StateVector state = StateVector::zero(problem.num_qubits(), max_amplitudes);
    run(problem.a_circuit, state);
    for (Qubit a : problem.ancilla_qubits) {
        const double p = prob_one(state, a);
        if (p > 1e-12) {
            throw ContractViolation("A leaves ancilla qubit " +
                                    std::to_string(a) +
                                    " excited with probability " +
                                    std::to_string(p));
        }
    }
}

MlqaeSchedule make_schedule(std::size_t k_max, std::uint64_t shots) {
    if (k_max > 62) {
        throw ContractViolation("k_max too large");
    }
    MlqaeSchedule schedule{k_max, shots, {0}};
    for (std::size_t k = 1; k <= k_max; ++k) {
        schedule.m_values.push_back(std::uint64_t{1} << (k - 1));
    }
    return schedule;
}

std::uint64_t query_count(const MlqaeSchedule &schedule) {
    std::uint64_t total = 0;
    for (std::uint64_t m : schedule.m_values) {
        total += schedule.shots * (2 * m + 1);
    }
    return total;
}

double epsilon_target(const MlqaeSchedule &schedule) {
    double info = 0.0;
    for (std::uint64_t m : schedule.m_values) {
        const double depth = 2.0 * static_cast<double>(m) + 1.0;
        info += static_cast<double>(schedule.shots) * depth * depth;
    }
    return info > 0.0 ? 1.0 / std::sqrt(info) : 0.0;
}

Circuit build_grover(const AmplitudeProblem &problem) {
    check_problem(problem);
    const QubitList &domain = problem.domain_qubits;
    Circuit q(problem.num_qubits());
    q.add(GateOp::phase(1, problem.flag_qubit));
    q.append(problem.a_circuit.inverse());
    for (Qubit d : domain) {
        q.add(GateOp::x(d));
    }
    q.add(GateOp::phase(1, domain.back(),
                        QubitList(domain.begin(), domain.end() - 1)));
    for (Qubit d : domain) {
        q.add(GateOp::x(d));
    }
    q.append(problem.a_circuit);
    return q;
}

std::vector<double> flag_probabilities(const AmplitudeProblem &problem,
                                       const MlqaeSchedule &schedule,
                                       std::uint64_t max_amplitudes) {
    check_problem(problem);
    if (!std::is_sorted(schedule.m_values.begin(), schedule.m_values.end())) {
        throw ContractViolation("schedule m values must be non-decreasing");
    }
    StateVector state = StateVector::zero(problem.num_qubits(), max_amplitudes);
    run(problem.a_circuit.cancel_inverse_pairs(), state);
    const Circuit grover =
        schedule.m_values.empty() || schedule.m_values.back() == 0
            ? Circuit(problem.num_qubits())
            : build_grover(problem).cancel_inverse_pairs();

    std::vector<double> probs;
    probs.reserve(schedule.m_values.size());
    std::uint64_t applied = 0;
    for (std::uint64_t m : schedule.m_values) {
        for (; applied < m; ++applied) {
            run(grover, state);
        }
        probs.push_back(std::clamp(prob_one(state, problem.flag_qubit), 0.0, 1.0));
    }
    return probs;
}

std::vector<double> hits_from_probabilities(
    const std::vector<double> &probabilities, const MlqaeSchedule &schedule,
    RngStream &rng, EstimationMode mode) {
    if (probabilities.size() != schedule.m_values.size()) {
        throw ContractViolation("one probability per schedule entry expected");
    }
    std::vector<double> hits;
    hits.reserve(probabilities.size());
    for (double p : probabilities) {
        if (mode == EstimationMode::Exact) {
            hits.push_back(static_cast<double>(schedule.shots) * p);
        } else {
            hits.push_back(
                static_cast<double>(sample_bernoulli(p, schedule.shots, rng)));
        }
    }
    return hits;
}

std::vector<double> run_schedule(const AmplitudeProblem &problem,
                                 const MlqaeSchedule &schedule, RngStream &rng,
                                 EstimationMode mode,
                                 std::uint64_t max_amplitudes) {
    return hits_from_probabilities(
        flag_probabilities(problem, schedule, max_amplitudes), schedule, rng,
        mode);
}

double log_likelihood(double theta, const std::vector<double> &hits,
                      const MlqaeSchedule &schedule) {
    const double lo = kThetaClamp;
    const double hi = std::numbers::pi / 2.0 - kThetaClamp;
    theta = std::clamp(theta, lo, hi);
    const auto shots = static_cast<double>(schedule.shots);
    double total = 0.0;
    for (std::size_t k = 0; k < hits.size() && k < schedule.m_values.size();
         ++k) {
        const double angle =
            (2.0 * static_cast<double>(schedule.m_values[k]) + 1.0) * theta;
        const double s = std::sin(angle);
        const double c = std::cos(angle);
        const double h = hits[k];
        const double miss = shots - h;
        if (h > 0.0) {
            total += h * clamp_log(s * s);
        }
        if (miss > 0.0) {
            total += miss * clamp_log(c * c);
        }
    }
    return total;
}

AmplitudeEstimate mle_theta(const std::vector<double> &hits,
                            const MlqaeSchedule &schedule) {
    if (hits.size() != schedule.m_values.size()) {
        throw ContractViolation("expected " +
                                std::to_string(schedule.m_values.size()) +
                                " hit counts, got " +
                                std::to_string(hits.size()));
    }
    const double lo = kThetaClamp;
    const double hi = std::numbers::pi / 2.0 - kThetaClamp;
    const std::size_t points = kLikelihoodGridPoints;
    const double step = (hi - lo) / static_cast<double>(points - 1);
    auto grid = [&](std::size_t i) {
        return i + 1 == points ? hi : lo + static_cast<double>(i) * step;
    };
    auto objective = [&](double t) { return log_likelihood(t, hits, schedule); };

    std::size_t best = 0;
    double best_value = objective(grid(0));
    for (std::size_t i = 1; i < points; ++i) {
        const double v = objective(grid(i));
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }

    const double left = grid(best == 0 ? 0 : best - 1);
    const double right = grid(best + 1 == points ? best : best + 1);
    double theta = grid(best);
    const double refined = golden_max(objective, left, right);
    if (objective(refined) > best_value) {
        theta = refined;
    }

    AmplitudeEstimate est;
    est.theta_hat = theta;
    const double s = std::sin(theta);
    est.a_hat = s * s;
    est.hits = hits;
    est.query_count = query_count(schedule);
    est.epsilon_target = epsilon_target(schedule);
    return est;
}

} // namespace qpi
