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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpi/pi_estimator.hpp"

namespace qpi {

/// One CSV row of a pi experiment. Summary rows carry rep = -1, the mean
/// estimate in theta_hat/a_hat/pi_hat, and the spread in pi_std.
struct RunRecord {
    std::size_t n{0};
    std::int64_t rep{0};
    std::size_t k_max{0};
    std::uint64_t shots{0};
    std::uint64_t seed{0};
    std::string mode;
    double theta_hat{0.0};
    double a_hat{0.0};
    double pi_hat{0.0};
    std::uint64_t queries{0};
    std::size_t qubits{0};
    double wall_time_ms{0.0};
    /// Summary rows only.
    std::optional<double> pi_std;
    /// 4 * exact lattice fraction.
    double pi_exact{0.0};

    friend bool operator==(const RunRecord &, const RunRecord &) = default;
};

[[nodiscard]] std::string_view csv_header();

[[nodiscard]] std::string_view mode_name(EstimationMode mode) noexcept;
/// Throws std::invalid_argument for anything but "sampled" / "exact".
[[nodiscard]] EstimationMode parse_mode(std::string_view text);

/// Floats are written with 12 significant digits.
[[nodiscard]] std::string format_float(double value);

[[nodiscard]] std::string to_csv_row(const RunRecord &record);

/// Throws std::invalid_argument on a malformed row.
[[nodiscard]] RunRecord parse_csv_row(std::string_view row);

/// One record per repetition followed by the summary record.
[[nodiscard]] std::vector<RunRecord> records_for(const PiEstimate &estimate);

} // namespace qpi
