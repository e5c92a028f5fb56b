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

#include "qpi/run_record.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace qpi {

namespace {

constexpr std::size_t kColumns = 14;

std::vector<std::string_view> split(std::string_view row) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = row.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(row.substr(start));
            return fields;
        }
        fields.push_back(row.substr(start, comma - start));
        start = comma + 1;
    }
}

template <typename T> T parse_number(std::string_view field, const char *name) {
    T value{};
    const auto *first = field.data();
    const auto *last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw std::invalid_argument(std::string("bad value for ") + name +
                                    ": '" + std::string(field) + "'");
    }
    return value;
}

} // namespace

std::string_view csv_header() {
    return "n,rep,kmax,shots,seed,mode,theta_hat,a_hat,pi_hat,queries,qubits,"
           "wall_time_ms,pi_std,pi_exact";
}

std::string_view mode_name(EstimationMode mode) noexcept {
    return mode == EstimationMode::Exact ? "exact" : "sampled";
}

EstimationMode parse_mode(std::string_view text) {
    if (text == "sampled") {
        return EstimationMode::Sampled;
    }
    if (text == "exact") {
        return EstimationMode::Exact;
    }
    throw std::invalid_argument("mode must be 'sampled' or 'exact', got '" +
                                std::string(text) + "'");
}

std::string format_float(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::string to_csv_row(const RunRecord &r) {
    std::string row;
    row += std::to_string(r.n) + ',';
    row += std::to_string(r.rep) + ',';
    row += std::to_string(r.k_max) + ',';
    row += std::to_string(r.shots) + ',';
    row += std::to_string(r.seed) + ',';
    row += r.mode + ',';
    row += format_float(r.theta_hat) + ',';
    row += format_float(r.a_hat) + ',';
    row += format_float(r.pi_hat) + ',';
    row += std::to_string(r.queries) + ',';
    row += std::to_string(r.qubits) + ',';
    row += format_float(r.wall_time_ms) + ',';
    row += (r.pi_std ? format_float(*r.pi_std) : std::string()) + ',';
    row += format_float(r.pi_exact);
    return row;
}

RunRecord parse_csv_row(std::string_view row) {
    const auto f = split(row);
    if (f.size() != kColumns) {
        throw std::invalid_argument("expected " + std::to_string(kColumns) +
                                    " columns, got " +
                                    std::to_string(f.size()));
    }
    RunRecord r;
    r.n = parse_number<std::size_t>(f[0], "n");
    r.rep = parse_number<std::int64_t>(f[1], "rep");
    r.k_max = parse_number<std::size_t>(f[2], "kmax");
    r.shots = parse_number<std::uint64_t>(f[3], "shots");
    r.seed = parse_number<std::uint64_t>(f[4], "seed");
    r.mode = std::string(mode_name(parse_mode(f[5])));
    r.theta_hat = parse_number<double>(f[6], "theta_hat");
    r.a_hat = parse_number<double>(f[7], "a_hat");
    r.pi_hat = parse_number<double>(f[8], "pi_hat");
    r.queries = parse_number<std::uint64_t>(f[9], "queries");
    r.qubits = parse_number<std::size_t>(f[10], "qubits");
    r.wall_time_ms = parse_number<double>(f[11], "wall_time_ms");
    if (!f[12].empty()) {
        r.pi_std = parse_number<double>(f[12], "pi_std");
    }
    r.pi_exact = parse_number<double>(f[13], "pi_exact");
    return r;
}

std::vector<RunRecord> records_for(const PiEstimate &est) {
    const PiExperimentConfig &cfg = est.config;
    RunRecord base;
    base.n = cfg.n;
    base.k_max = cfg.k_max;
    base.shots = cfg.shots;
    base.seed = cfg.seed;
    base.mode = std::string(mode_name(cfg.mode));
    base.queries = est.query_count;
    base.qubits = est.qubit_count;
    base.pi_exact = est.classical_exact;

    std::vector<RunRecord> rows;
    rows.reserve(est.repetitions.size() + 1);
    double theta_sum = 0.0;
    double a_sum = 0.0;
    double time_sum = est.simulation_ms;
    for (const PiRepetition &rep : est.repetitions) {
        RunRecord r = base;
        r.rep = static_cast<std::int64_t>(rep.rep);
        r.theta_hat = rep.theta_hat;
        r.a_hat = rep.a_hat;
        r.pi_hat = rep.pi_hat;
        r.wall_time_ms = rep.wall_time_ms;
        theta_sum += rep.theta_hat;
        a_sum += rep.a_hat;
        time_sum += rep.wall_time_ms;
        rows.push_back(std::move(r));
    }

    const auto count = static_cast<double>(est.repetitions.size());
    RunRecord summary = base;
    summary.rep = -1;
    summary.theta_hat = theta_sum / count;
    summary.a_hat = a_sum / count;
    summary.pi_hat = est.mean_pi;
    summary.wall_time_ms = time_sum;
    summary.pi_std = est.stddev_pi;
    rows.push_back(std::move(summary));
    return rows;
}

} // namespace qpi
