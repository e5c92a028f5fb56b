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

#include "qpi/pi_estimator.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "qpi/errors.hpp"
#include "qpi/qft_arith.hpp"

namespace qpi {

namespace {

QubitList span_of(std::size_t first, std::size_t count) {
    QubitList out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = static_cast<Qubit>(first + i);
    }
    return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - since)
        .count();
}

std::size_t checked_bits(std::size_t n) {
    if (n < 1 || n > 15) {
        throw ContractViolation("bits per axis must be in 1..15, got " +
                                std::to_string(n));
    }
    return n;
}

} // namespace

PiLayout::PiLayout(std::size_t n)
    : n_(checked_bits(n)), x_(span_of(0, n)), y_(span_of(n, n)),
      anc_(span_of(2 * n, 2 * n)), flag_(static_cast<Qubit>(4 * n)) {}

QubitList PiLayout::accumulator() const {
    QubitList acc = anc_;
    acc.push_back(flag_);
    return acc;
}

int f_xy(std::uint64_t x, std::uint64_t y, std::size_t n) {
    if (n < 1 || n > 31) {
        throw ContractViolation("bits per axis must be in 1..31");
    }
    const std::uint64_t side = std::uint64_t{1} << n;
    if (x >= side || y >= side) {
        throw ContractViolation("lattice point outside [0, 2^n)^2");
    }
    return x * x + y * y < side * side ? 1 : 0;
}

LatticeFraction exact_fraction(std::size_t n) {
    if (n < 1 || n > 31) {
        throw ContractViolation("bits per axis must be in 1..31");
    }
    const std::uint64_t side = std::uint64_t{1} << n;
    LatticeFraction frac{0, side * side};
    for (std::uint64_t x = 0; x < side; ++x) {
        for (std::uint64_t y = 0; y < side; ++y) {
            frac.inside += static_cast<std::uint64_t>(f_xy(x, y, n));
        }
    }
    return frac;
}

Circuit build_P(const PiLayout &layout) {
    Circuit p(layout.total_qubits());
    for (Qubit q : layout.x_reg()) {
        p.add(GateOp::h(q));
    }
    for (Qubit q : layout.y_reg()) {
        p.add(GateOp::h(q));
    }
    return p;
}

Circuit build_R(const PiLayout &layout) {
    const QubitList acc = layout.accumulator();
    Circuit r(layout.total_qubits());
    r.append(build_sq_qft(layout.x_reg(), acc));
    r.append(build_sq_qft(layout.y_reg(), acc));
    r.add(GateOp::x(layout.flag()));
    r.append(build_sq_qft(layout.y_reg(), layout.ancilla()).inverse());
    r.append(build_sq_qft(layout.x_reg(), layout.ancilla()).inverse());
    r.add_register("x", layout.x_reg());
    r.add_register("y", layout.y_reg());
    r.add_register("ancilla", layout.ancilla());
    r.add_register("flag", {layout.flag()});
    return r;
}

AmplitudeProblem make_problem(const PiLayout &layout) {
    AmplitudeProblem problem;
    problem.a_circuit = Circuit(layout.total_qubits());
    problem.a_circuit.append(build_P(layout));
    problem.a_circuit.append(build_R(layout));
    problem.domain_qubits = layout.x_reg();
    problem.domain_qubits.insert(problem.domain_qubits.end(),
                                 layout.y_reg().begin(), layout.y_reg().end());
    problem.domain_qubits.push_back(layout.flag());
    problem.flag_qubit = layout.flag();
    problem.ancilla_qubits = layout.ancilla();
    return problem;
}

PiEstimate estimate_pi(const PiExperimentConfig &config) {
    if (config.repetitions < 1) {
        throw ContractViolation("at least one repetition is required");
    }
    const PiLayout layout(config.n);
    const MlqaeSchedule schedule = make_schedule(config.k_max, config.shots);

    PiEstimate out;
    out.config = config;
    out.qubit_count = layout.total_qubits();
    out.query_count = query_count(schedule);
    out.classical_exact = 4.0 * exact_fraction(config.n).value();
    out.epsilon_sampling = std::ldexp(1.0, -static_cast<int>(config.n));
    out.epsilon_amplitude = epsilon_target(schedule);

    const auto sim_start = std::chrono::steady_clock::now();
    out.flag_probabilities = flag_probabilities(make_problem(layout), schedule,
                                                config.max_amplitudes);
    out.simulation_ms = elapsed_ms(sim_start);

    out.repetitions.resize(config.repetitions);
    for (std::size_t r = 0; r < config.repetitions; ++r) {
        const auto start = std::chrono::steady_clock::now();
        RngStream rng(config.seed, r);
        std::vector<double> hits = hits_from_probabilities(
            out.flag_probabilities, schedule, rng, config.mode);
        const AmplitudeEstimate est = mle_theta(hits, schedule);
        PiRepetition &rec = out.repetitions[r];
        rec.rep = r;
        rec.stream = r;
        rec.theta_hat = est.theta_hat;
        rec.a_hat = est.a_hat;
        rec.pi_hat = 4.0 * est.a_hat;
        rec.hits = std::move(hits);
        rec.wall_time_ms = elapsed_ms(start);
    }

    double sum = 0.0;
    for (const PiRepetition &rec : out.repetitions) {
        sum += rec.pi_hat;
    }
    const auto count = static_cast<double>(out.repetitions.size());
    out.mean_pi = sum / count;
    double sq = 0.0;
    for (const PiRepetition &rec : out.repetitions) {
        sq += (rec.pi_hat - out.mean_pi) * (rec.pi_hat - out.mean_pi);
    }
    out.stddev_pi = std::sqrt(sq / count);
    return out;
}

double classical_monte_carlo(std::size_t n, std::uint64_t samples,
                             RngStream &rng) {
    if (samples == 0) {
        throw ContractViolation("classical Monte Carlo needs samples > 0");
    }
    if (n < 1 || n > 31) {
        throw ContractViolation("bits per axis must be in 1..31");
    }
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    std::uint64_t inside = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const std::uint64_t x = rng.next_u64() & mask;
        const std::uint64_t y = rng.next_u64() & mask;
        inside += static_cast<std::uint64_t>(f_xy(x, y, n));
    }
    return 4.0 * static_cast<double>(inside) / static_cast<double>(samples);
}

} // namespace qpi
