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

#include <gtest/gtest.h>

#include <sstream>

#include "qpi/cli.hpp"
#include "qpi/run_record.hpp"
#include "qpi/selftest.hpp"

namespace qpi {
namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

/// Row with the wall-clock column blanked.
std::string without_time(const std::string &row) {
    RunRecord r = parse_csv_row(row);
    r.wall_time_ms = 0.0;
    return to_csv_row(r);
}

TEST(CliPi, SmallSampledRun) {
    const auto r = invoke({"pi", "--n", "2", "--kmax", "1", "--reps", "3", "--seed", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 5U);
    EXPECT_EQ(rows[0], csv_header());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const RunRecord rec = parse_csv_row(rows[i]);
        EXPECT_EQ(to_csv_row(rec), rows[i]);
        EXPECT_EQ(rec.queries, 400U);
        EXPECT_EQ(rec.qubits, 9U);
        EXPECT_EQ(rec.seed, 7U);
        EXPECT_EQ(rec.mode, "sampled");
        EXPECT_DOUBLE_EQ(rec.pi_exact, 3.75);
        EXPECT_EQ(rec.rep, i < 4 ? static_cast<std::int64_t>(i - 1) : -1);
        EXPECT_EQ(rec.pi_std.has_value(), i == 4);
    }
    EXPECT_NE(r.err.find("mt19937_64"), std::string::npos);
}

TEST(CliPi, ExactMode) {
    const auto r = invoke({"pi", "--n", "2", "--mode", "exact", "--kmax", "1", "--reps", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 3U);
    EXPECT_NEAR(parse_csv_row(rows[1]).pi_hat, 3.75, 1e-5);
}

TEST(CliPi, SameSeedSameRows) {
    const std::vector<std::string> args{"pi", "--n", "2", "--kmax", "1,2", "--reps", "4",
                                        "--seed", "123"};
    const auto a = lines(invoke(args).out);
    const auto b = lines(invoke(args).out);
    ASSERT_EQ(a.size(), b.size());
    ASSERT_EQ(a.size(), 11U);
    for (std::size_t i = 1; i < a.size(); ++i) {
        EXPECT_EQ(without_time(a[i]), without_time(b[i]));
    }
}

TEST(CliPi, RejectsInvalidArguments) {
    EXPECT_EQ(invoke({"pi", "--n", "0"}).code, 2);
    EXPECT_EQ(invoke({"pi", "--n", "16"}).code, 2);
    EXPECT_EQ(invoke({"pi", "--mode", "fast"}).code, 2);
    EXPECT_EQ(invoke({"pi", "--shots", "0"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"bogus"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(CliPi, RefusesLargeStateWithoutOptIn) {
    const auto r = invoke({"pi", "--n", "6", "--kmax", "1", "--reps", "1"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("536870912"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("--allow-big"), std::string::npos);
}

TEST(CliPi, RefusesBeyondHardLimitEvenWithOptIn) {
    const auto r = invoke({"pi", "--n", "7", "--kmax", "0", "--reps", "1", "--allow-big"});
    EXPECT_EQ(r.code, 3);
}

TEST(CliSelftest, PassesAndDetectsInjectedFault) {
    const auto ok = invoke({"selftest"});
    EXPECT_EQ(ok.code, 0) << ok.err;
    EXPECT_EQ(ok.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(invoke({"selftest", "--n", "3"}).code, 0);

    const auto bad = invoke({"selftest", "--inject-fault"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("("), std::string::npos);
}

TEST(Selftest, EveryFamilyCatchesFault) {
    for (const FamilyResult &r : run_selftest({2, true})) {
        EXPECT_FALSE(r.passed()) << r.family;
    }
    for (const FamilyResult &r : run_selftest({2, false})) {
        EXPECT_TRUE(r.passed()) << r.family;
        EXPECT_GT(r.cases, 0U);
    }
}

TEST(CliGatecount, PrintsEveryBuilder) {
    const auto r = invoke({"gatecount", "--min-n", "2", "--max-n", "3"});
    ASSERT_EQ(r.code, 0);
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 13U);
    EXPECT_EQ(rows[0], "builder,n,qubits,ancilla,x,h,swap,phase,controlled_phase,total");
    EXPECT_EQ(rows[6].rfind("sq-qft,2,6,0,", 0), 0U) << rows[6];
    EXPECT_EQ(invoke({"gatecount", "--min-n", "4", "--max-n", "3"}).code, 2);
}

TEST(RunRecordCsv, RoundTrip) {
    RunRecord r;
    r.n = 3;
    r.rep = -1;
    r.k_max = 5;
    r.shots = 100;
    r.seed = 42;
    r.mode = "exact";
    r.theta_hat = 1.2094292028881888;
    r.a_hat = 0.875;
    r.pi_hat = 3.5;
    r.queries = 6800;
    r.qubits = 13;
    r.wall_time_ms = 12.5;
    r.pi_std = 0.0123;
    r.pi_exact = 3.5;
    const std::string row = to_csv_row(r);
    EXPECT_EQ(to_csv_row(parse_csv_row(row)), row);

    r.pi_std.reset();
    const std::string data_row = to_csv_row(r);
    EXPECT_FALSE(parse_csv_row(data_row).pi_std.has_value());
    EXPECT_THROW((void)parse_csv_row("1,2,3"), std::invalid_argument);
    EXPECT_THROW((void)parse_csv_row("x,0,1,100,0,sampled,1,1,1,1,1,1,,1"),
                 std::invalid_argument);
}

TEST(RunRecordCsv, FloatFormat) {
    EXPECT_EQ(format_float(3.75), "3.75");
    EXPECT_EQ(format_float(1.0 / 3.0), "0.333333333333");
}

} // namespace
} // namespace qpi
