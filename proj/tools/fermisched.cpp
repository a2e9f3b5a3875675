// Copyright 2026 The fermisched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "fermisched/cover.hpp"
#include "fermisched/fock.hpp"
#include "fermisched/lp_export.hpp"
#include "fermisched/reference_settings.hpp"
#include "fermisched/schedule_io.hpp"
#include "fermisched/tiling.hpp"
#include "fermisched/two_point.hpp"

namespace fs = std::filesystem;
using namespace fermisched;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

void emit(const Schedule &s, const std::string &output) {
    if (output.empty() || output == "-") {
        std::cout << schedule_to_json(s);
    } else {
        write_schedule_file(output, s);
    }
    std::cerr << "settings: " << s.settings.size() << "\n";
    if (!s.metadata.status.empty()) {
        std::cerr << "status: " << s.metadata.status << "\n";
    }
    if (auto lb = s.metadata.count("lower_bound")) {
        std::cerr << "lower bound: " << *lb << "\n";
    }
}

void write_text(const std::string &text, const std::string &output) {
    if (output.empty() || output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out) {
        throw std::runtime_error("cannot write " + output);
    }
    out << text;
}

std::vector<FockState> trial_states(int n, int trials, std::uint64_t seed, std::optional<int> sector) {
    std::mt19937_64 rng(seed);
    std::vector<FockState> states;
    for (int t = 0; t < trials; t++) {
        states.push_back(random_state(n, sector, rng()));
    }
    return states;
}

// Options shared by the heuristic paths.
struct HeuristicFlags {
    int restarts = 20;
    std::uint64_t seed = 0;
    int threads = 1;

    void attach(CLI::App *app) {
        app->add_option("--restarts", restarts, "Heuristic restarts")->check(CLI::PositiveNumber);
        app->add_option("--seed", seed, "Random seed")->envname("FERMISCHED_SEED");
        app->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    }
    HeuristicOptions options() const {
        return {restarts, seed, threads};
    }
};

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Measurement schedules for fermionic correlators"};
    app.require_subcommand(1);
    std::string output;

    // schedule-two-point
    auto *two = app.add_subcommand("schedule-two-point", "Settings for all two-point correlators on a graph");
    int two_modes = 0;
    std::string graph_file;
    std::string two_lattice;
    int two_rows = 0;
    int two_cols = 0;
    auto *two_modes_opt = two->add_option("--modes", two_modes, "Complete graph on N modes")->check(CLI::PositiveNumber);
    auto *graph_opt = two->add_option("--graph", graph_file, "Edge list, 1-based, one 'u v' per line");
    auto *lattice_opt = two->add_option("--lattice", two_lattice, "square|triangular|hexagonal|kagome nearest neighbours");
    two->add_option("--rows", two_rows, "Lattice rows")->needs(lattice_opt);
    two->add_option("--cols", two_cols, "Lattice columns")->needs(lattice_opt);
    two_modes_opt->excludes(graph_opt)->excludes(lattice_opt);
    graph_opt->excludes(lattice_opt);
    two->add_option("-o,--output", output, "Schedule JSON (default stdout)");

    // schedule-four-point
    auto *four = app.add_subcommand("schedule-four-point", "Settings for all four-point correlators of N modes");
    int four_modes = 0;
    std::string four_method = "exact";
    std::optional<double> budget;
    HeuristicFlags four_flags;
    four->add_option("--modes", four_modes, "Mode count")->required()->check(CLI::Range(2, 64));
    four->add_option("--method", four_method, "exact|heuristic")->check(CLI::IsMember({"exact", "heuristic"}));
    four->add_option("--budget", budget, "Exact solver time budget in seconds")->check(CLI::PositiveNumber);
    four_flags.attach(four);
    four->add_option("-o,--output", output, "Schedule JSON (default stdout)");

    // schedule-lattice
    auto *lattice = app.add_subcommand("schedule-lattice", "Constant-size four-point schedules for lattices");
    std::string lattice_kind;
    int rows = 0;
    int cols = 0;
    std::string lattice_method = "tiling";
    HeuristicFlags lattice_flags;
    lattice->add_option("--lattice", lattice_kind, "square|triangular|hexagonal|kagome")->required();
    lattice->add_option("--rows", rows, "Rows")->required()->check(CLI::PositiveNumber);
    lattice->add_option("--cols", cols, "Columns")->required()->check(CLI::PositiveNumber);
    lattice->add_option("--method", lattice_method, "tiling|heuristic")->check(CLI::IsMember({"tiling", "heuristic"}));
    lattice_flags.attach(lattice);
    lattice->add_option("-o,--output", output, "Schedule JSON (default stdout)");

    // verify
    auto *verify = app.add_subcommand("verify", "Check a schedule against the exact simulator");
    std::string schedule_file;
    int trials = 20;
    std::uint64_t verify_seed = 0;
    std::optional<long long> shots;
    std::optional<int> sector;
    double tol = 1e-9;
    int verify_threads = 1;
    verify->add_option("--schedule", schedule_file, "Schedule JSON")->required();
    verify->add_option("--trials", trials, "Random states")->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_seed, "Random seed")->envname("FERMISCHED_SEED");
    verify->add_option("--shots", shots, "Sample this many shots per setting (5 sigma acceptance)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--sector", sector, "Fixed particle number for the random states")->check(CLI::NonNegativeNumber);
    verify->add_option("--tol", tol, "Absolute tolerance of the exact check");
    verify->add_option("--threads", verify_threads, "Worker threads")->check(CLI::PositiveNumber);

    // sample
    auto *sample = app.add_subcommand("sample", "Dump shot counts of one setting as CSV");
    std::string sample_schedule;
    int setting_id = 1;
    long long sample_shots = 1000;
    std::uint64_t sample_seed = 0;
    std::uint64_t state_seed = 0;
    sample->add_option("--schedule", sample_schedule, "Schedule JSON")->required();
    sample->add_option("--setting", setting_id, "Setting id");
    sample->add_option("--shots", sample_shots, "Shots")->check(CLI::PositiveNumber);
    sample->add_option("--seed", sample_seed, "Sampling seed")->envname("FERMISCHED_SEED");
    sample->add_option("--state-seed", state_seed, "Seed of the random state");
    sample->add_option("-o,--output", output, "CSV file (default stdout)");

    // validate
    auto *validate = app.add_subcommand("validate", "Structural and coverage check of a schedule");
    std::string validate_file;
    validate->add_option("--schedule", validate_file, "Schedule JSON")->required();

    // export-ilp
    auto *ilp = app.add_subcommand("export-ilp", "Write the covering problem as a binary program (LP format)");
    int ilp_modes = 0;
    std::string model = "given-cliques";
    std::optional<int> n_c;
    ilp->add_option("--modes", ilp_modes, "Mode count")->required()->check(CLI::Range(2, 64));
    ilp->add_option("--model", model, "given-cliques|clique-search");
    ilp->add_option("--nc", n_c, "Clique slots for clique-search")->check(CLI::NonNegativeNumber);
    ilp->add_option("-o,--output", output, "LP file (default stdout)");

    // fixtures
    auto *fixtures = app.add_subcommand("fixtures", "Write or check the published 3/4/6-mode setting lists");
    std::string fixture_dir = "fixtures";
    bool fixture_check = false;
    fixtures->add_option("--dir", fixture_dir, "Fixture directory");
    fixtures->add_flag("--check", fixture_check, "Compare existing files instead of writing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*two) {
            Graph g;
            if (*two_modes_opt) {
                g = complete_graph(two_modes);
            } else if (*graph_opt) {
                std::ifstream in(graph_file);
                if (!in) {
                    throw std::invalid_argument("cannot read graph file " + graph_file);
                }
                g = parse_edge_list(in);
            } else if (*lattice_opt) {
                g = build_lattice({parse_lattice_kind(two_lattice), two_rows, two_cols}).graph;
            } else {
                throw std::invalid_argument("give --modes, --graph or --lattice");
            }
            emit(two_point_schedule(g), output);
            return kOk;
        }
        if (*four) {
            FourPointOptions options;
            options.method =
                four_method == "exact" ? FourPointOptions::Method::Exact : FourPointOptions::Method::Heuristic;
            options.time_budget_seconds = budget;
            options.heuristic = four_flags.options();
            emit(four_point_schedule(four_modes, options), output);
            return kOk;
        }
        if (*lattice) {
            TileCover cover = tile_lattice({parse_lattice_kind(lattice_kind), rows, cols});
            Schedule s = lattice_method == "tiling" ? compose_tiled_schedule(cover, default_tile_settings())
                                                    : heuristic_lattice_schedule(cover, lattice_flags.options());
            if (!cover.omitted.empty()) {
                std::cerr << "note: " << cover.omitted.size() << " hexagon tiles of the third class are not tiled\n";
            }
            emit(s, output);
            return kOk;
        }
        if (*verify) {
            Schedule s = read_schedule_file(schedule_file);
            auto states = trial_states(s.n_modes, trials, verify_seed, sector);
            VerifyReport report = shots ? verify_schedule_sampled(s, states, *shots, verify_seed)
                                        : verify_schedule(s, states, tol, verify_threads);
            std::cout << (report.passed() ? "PASS" : "FAIL") << ": " << report.correlators << " correlators x "
                      << report.states << " states, max error " << report.max_error << "\n";
            for (const auto &f : report.failures) {
                std::cout << "  " << f << "\n";
            }
            return report.passed() ? kOk : kVerifyFailed;
        }
        if (*sample) {
            Schedule s = read_schedule_file(sample_schedule);
            const Setting *setting = s.find_setting(setting_id);
            if (setting == nullptr) {
                throw std::invalid_argument("schedule has no setting " + std::to_string(setting_id));
            }
            FockState state = random_state(s.n_modes, std::nullopt, state_seed);
            Counts counts = sample_setting(state, *setting, sample_shots, sample_seed);
            std::ostringstream csv;
            write_counts_csv(csv, counts, s.n_modes);
            write_text(csv.str(), output);
            return kOk;
        }
        if (*validate) {
            Schedule s = read_schedule_file(validate_file);
            auto problems = check_schedule(s);
            if (problems.empty() && s.n_modes >= 2) {
                std::vector<CorrelatorSpec> specs;
                for (const auto &e : s.reconstruction) {
                    specs.push_back(e.correlator.canonical());
                }
                MeasurementGraph gm(s.n_modes);
                CoverReport report = validate_cover(gm, build_target_graph(s.n_modes, specs), s.settings);
                for (const auto &nc : report.non_cliques) {
                    problems.push_back("not a clique: " + nc);
                }
                for (const auto &[a, b] : report.uncovered) {
                    problems.push_back("uncovered: " + to_label(a) + " -- " + to_label(b));
                }
            }
            std::cout << (problems.empty() ? "VALID" : "INVALID") << ": " << s.settings.size() << " settings, "
                      << s.reconstruction.size() << " correlators\n";
            for (const auto &p : problems) {
                std::cout << "  " << p << "\n";
            }
            return problems.empty() ? kOk : kVerifyFailed;
        }
        if (*ilp) {
            MeasurementGraph gm(ilp_modes);
            auto specs = enumerate_canonical_fourpoint(ilp_modes);
            TargetGraph gt = build_target_graph(ilp_modes, specs);
            IlpStats stats;
            write_text(export_ilp(gm, gt, parse_ilp_model(model), n_c, &stats), output);
            std::cerr << "variables: " << stats.variables << ", constraints: " << stats.constraints << "\n";
            return kOk;
        }
        if (*fixtures) {
            bool all_match = true;
            for (int n : {3, 4, 6}) {
                fs::path path = fs::path(fixture_dir) / ("four_point_" + std::to_string(n) + "_modes.json");
                Schedule s = reference_schedule(n);
                if (fixture_check) {
                    bool same = fs::exists(path) && read_schedule_file(path) == s;
                    std::cout << path.string() << ": " << (same ? "up to date" : "differs") << "\n";
                    all_match = all_match && same;
                } else {
                    fs::create_directories(fixture_dir);
                    write_schedule_file(path, s);
                    std::cout << "wrote " << path.string() << " (" << s.settings.size() << " settings)\n";
                }
            }
            return all_match ? kOk : kVerifyFailed;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
