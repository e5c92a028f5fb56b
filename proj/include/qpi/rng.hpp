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

#include <cstdint>
#include <random>
#include <string_view>

namespace qpi {

/**
 * Seeded random stream. Each (seed, stream_id) pair expands through
 * std::seed_seq into an independent std::mt19937_64 state, so repetitions
 * can draw from their own substream regardless of execution order.
 */
class RngStream {
  public:
    static constexpr std::string_view kAlgorithm = "mt19937_64/seed_seq";

    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
    [[nodiscard]] std::uint64_t stream_id() const noexcept {
        return stream_id_;
    }

    /// Substream `id` of the same seed.
    [[nodiscard]] RngStream substream(std::uint64_t id) const {
        return RngStream(seed_, id);
    }

    [[nodiscard]] std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    [[nodiscard]] double next_uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
};

} // namespace qpi
