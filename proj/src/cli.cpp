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

#include "qpi/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>

#include <CLI11.hpp>

#include "qpi/errors.hpp"
#include "qpi/pi_estimator.hpp"
#include "qpi/qft_arith.hpp"
#include "qpi/run_record.hpp"
#include "qpi/selftest.hpp"

namespace qpi {

namespace {

/// Amplitude budget without --allow-big: 2^24 amplitudes (256 MiB), enough
/// for n <= 5 (21 qubits).
constexpr std::uint64_t kSmallBudget = std::uint64_t{1} << 24;

struct PiFlags {
    std::vector<std::size_t> n{2};
    std::vector<std::size_t> k_max{1, 5};
    std::uint64_t shots{100};
    std::size_t reps{100};
    std::uint64_t seed{0};
    std::string mode{"sampled"};
    std::string out;
    bool allow_big{false};
    std::uint64_t classical_samples{0};
};

struct SelftestFlags {
    std::size_t n{2};
    bool inject_fault{false};
};

struct GatecountFlags {
    std::size_t min_n{2};
    std::size_t max_n{8};
};

int cmd_pi(const PiFlags &flags, std::ostream &out, std::ostream &err) {
    std::ofstream file;
    std::ostream *sink = &out;
    if (!flags.out.empty()) {
        file.open(flags.out);
        if (!file) {
            err << "cannot open " << flags.out << " for writing\n";
            return kExitUsage;
        }
        sink = &file;
    }
    err << "# rng=" << RngStream::kAlgorithm << '\n';
    *sink << csv_header() << '\n';
    for (std::size_t n : flags.n) {
        for (std::size_t k_max : flags.k_max) {
            PiExperimentConfig cfg;
            cfg.n = n;
            cfg.k_max = k_max;
            cfg.shots = flags.shots;
            cfg.repetitions = flags.reps;
            cfg.seed = flags.seed;
            cfg.mode = parse_mode(flags.mode);
            cfg.max_amplitudes =
                flags.allow_big ? kDefaultMaxAmplitudes : kSmallBudget;
            PiEstimate est;
            try {
                est = estimate_pi(cfg);
            } catch (const ResourceError &e) {
                err << "n=" << n << " needs " << e.required_bytes()
                    << " bytes of state (" << (4 * n + 1) << " qubits): "
                    << e.what();
                if (!flags.allow_big) {
                    err << "; pass --allow-big to raise the limit";
                }
                err << '\n';
                return kExitResource;
            }
            for (const RunRecord &r : records_for(est)) {
                *sink << to_csv_row(r) << '\n';
            }
            sink->flush();
        }
        if (flags.classical_samples > 0) {
            RngStream rng(flags.seed, 0xC1A55ULL + n);
            err << "# classical-mc n=" << n
                << " samples=" << flags.classical_samples << " pi="
                << format_float(classical_monte_carlo(n, flags.classical_samples, rng))
                << '\n';
        }
    }
    return kExitOk;
}

int cmd_selftest(const SelftestFlags &flags, std::ostream &out, std::ostream &err) {
    const auto results = run_selftest({flags.n, flags.inject_fault});
    out << std::left << std::setw(16) << "family" << std::setw(8) << "cases"
        << "result\n";
    bool ok = true;
    for (const FamilyResult &r : results) {
        out << std::setw(16) << r.family << std::setw(8) << r.cases
            << (r.passed() ? "PASS" : "FAIL") << '\n';
        if (!r.passed()) {
            ok = false;
            err << r.family << ": " << r.failures.size() << " failing input(s):";
            const std::size_t shown = std::min<std::size_t>(r.failures.size(), 10);
            for (std::size_t i = 0; i < shown; ++i) {
                err << ' ' << r.failures[i];
            }
            if (shown < r.failures.size()) {
                err << " ...";
            }
            err << '\n';
        }
    }
    return ok ? kExitOk : kExitCheckFailed;
}

QubitList iota(Qubit first, std::size_t count) {
    QubitList q(count);
    std::iota(q.begin(), q.end(), first);
    return q;
}

void count_row(std::ostream &out, std::string_view name, std::size_t n,
               const Circuit &c, std::size_t ancilla) {
    const GateCounts g = c.gate_count();
    out << name << ',' << n << ',' << c.num_qubits() << ',' << ancilla << ','
        << g.x << ',' << g.h << ',' << g.swap << ',' << g.phase << ','
        << g.controlled_phase << ',' << g.total() << '\n';
}

int cmd_gatecount(const GatecountFlags &flags, std::ostream &out) {
    out << "builder,n,qubits,ancilla,x,h,swap,phase,controlled_phase,total\n";
    for (std::size_t n = flags.min_n; n <= flags.max_n; ++n) {
        const auto q = [](std::size_t v) { return static_cast<Qubit>(v); };
        ArithRegisters mul{iota(0, n), iota(q(n), n), iota(q(2 * n), 2 * n), {}};
        ArithRegisters sq{iota(0, n), iota(q(n), 2 * n), {}, q(3 * n)};
        count_row(out, "qft", n, build_qft(iota(0, n)), 0);
        count_row(out, "qft-adder", n, build_qft_adder(iota(0, n), iota(q(n), n)), 0);
        count_row(out, "mul-schoolbook", n, build_mul_schoolbook(mul), 0);
        count_row(out, "mul-qft", n, build_mul_qft(mul), 0);
        count_row(out, "sq-adder", n, build_sq_adder_based(sq), 1);
        count_row(out, "sq-qft", n, build_sq_qft(sq.a, sq.b), 0);
    }
    return kExitOk;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Statevector simulation of QFT arithmetic and amplitude "
                 "estimation of pi",
                 "qpi"};
    app.require_subcommand(1);

    PiFlags pi;
    auto *pi_cmd = app.add_subcommand("pi", "Run the pi estimation experiment");
    pi_cmd->add_option("--n", pi.n, "Bits per axis (comma-separated list)")
        ->delimiter(',')
        ->check(CLI::Range(1, 15));
    pi_cmd->add_option("--kmax", pi.k_max, "Largest schedule index (list)")
        ->delimiter(',')
        ->check(CLI::Range(0, 20));
    pi_cmd->add_option("--shots", pi.shots, "Shots per circuit")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
    pi_cmd->add_option("--reps", pi.reps, "Repetitions per (n, kmax)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 24));
    pi_cmd->add_option("--seed", pi.seed, "RNG seed");
    pi_cmd->add_option("--mode", pi.mode, "sampled or exact")
        ->check(CLI::IsMember({"sampled", "exact"}));
    pi_cmd->add_option("--out", pi.out, "CSV output path (default stdout)");
    pi_cmd->add_flag("--allow-big", pi.allow_big,
                     "Allow states up to 2^26 amplitudes (needed for n = 6)");
    pi_cmd->add_option("--classical-mc", pi.classical_samples,
                       "Also report a plain Monte Carlo estimate with this "
                       "many samples (stderr)");

    SelftestFlags st;
    auto *st_cmd = app.add_subcommand("selftest",
                                      "Exhaustive basis checks of the arithmetic circuits");
    st_cmd->add_option("--n", st.n, "Input register width")->check(CLI::Range(1, 4));
    st_cmd->add_flag("--inject-fault", st.inject_fault)->group("");

    GatecountFlags gc;
    auto *gc_cmd = app.add_subcommand("gatecount", "Gate counts of every builder");
    gc_cmd->add_option("--min-n", gc.min_n)->check(CLI::Range(1, 64));
    gc_cmd->add_option("--max-n", gc.max_n)->check(CLI::Range(1, 64));

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (pi_cmd->parsed()) {
            return cmd_pi(pi, out, err);
        }
        if (st_cmd->parsed()) {
            return cmd_selftest(st, out, err);
        }
        if (gc.min_n > gc.max_n) {
            err << "--min-n must not exceed --max-n\n";
            return kExitUsage;
        }
        return cmd_gatecount(gc, out);
    } catch (const ResourceError &e) {
        err << e.what() << '\n';
        return kExitResource;
    } catch (const ContractViolation &e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace qpi
