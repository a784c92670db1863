// Copyright 2026 The xorgame Authors
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

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "xorgame/classical.hpp"
#include "xorgame/errors.hpp"
#include "xorgame/game.hpp"
#include "xorgame/quantum.hpp"
#include "xorgame/reproduce.hpp"
#include "xorgame/strategy.hpp"
#include "xorgame/sweep.hpp"

using namespace xorgame;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitAcceptance = 2;
constexpr int kExitNumeric = 3;

/// Thrown for output files that cannot be written.
class OutputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct SolverFlags {
    uint64_t seed = 0;
    int rank = 0;
    int restarts = 32;
    double tol = 1e-12;
    int max_questions = 24;

    QuantumOptions quantum() const {
        QuantumOptions o;
        o.seed = seed;
        o.rank = rank;
        o.restarts = restarts;
        o.tol = tol;
        return o;
    }
    ClassicalOptions classical() const {
        ClassicalOptions o;
        o.max_questions = max_questions;
        return o;
    }
};

void add_solver_flags(CLI::App *cmd, SolverFlags &flags) {
    cmd->add_option("--seed", flags.seed, "Seed for restarts and sampling")->capture_default_str();
    cmd->add_option("--rank", flags.rank, "Gram vector dimension (0 = m + n)")->capture_default_str();
    cmd->add_option("--restarts", flags.restarts, "Alternating-ascent restarts")->capture_default_str();
    cmd->add_option("--tol", flags.tol, "Ascent stopping tolerance")->capture_default_str();
    cmd->add_option("--max-questions", flags.max_questions, "Classical enumeration guard")->capture_default_str();
}

nlohmann::json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot read " + path);
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw DomainError(path + ": " + e.what());
    }
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out || !(out << text) || !out.flush()) {
        throw OutputError("cannot write " + path);
    }
}

double parse_double(const std::string &s) {
    size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        throw DomainError("not a number: " + s);
    }
    if (used != s.size()) {
        throw DomainError("not a number: " + s);
    }
    return v;
}

/// and:P:Q | magic-square | distributed:PATH | game:PATH
XorGame parse_game_spec(const std::string &spec) {
    if (spec == "magic-square") {
        return build_magic_square_game();
    }
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "and") {
        auto sep = rest.find(':');
        if (sep == std::string::npos) {
            throw DomainError("expected and:P:Q, got " + spec);
        }
        return build_perturbed_and_game(parse_double(rest.substr(0, sep)), parse_double(rest.substr(sep + 1)));
    }
    if (kind == "distributed" && !rest.empty()) {
        return build_distributed_game(knowledge_spec_from_json(read_json_file(rest)));
    }
    if (kind == "game" && !rest.empty()) {
        return game_from_json(read_json_file(rest));
    }
    throw DomainError("unknown game spec '" + spec + "' (expected and:P:Q, magic-square, distributed:PATH or game:PATH)");
}

std::string fmt(double v) {
    return format_number(v);
}

int run_bias(const XorGame &game, const SolverFlags &flags, const std::string &out_path, const std::string &save_game) {
    ClassicalResult classical = classical_bias_exact(game, flags.classical());
    BiasCertificate quantum = quantum_bias(game, flags.quantum());
    std::cout << "game            " << game.label() << " (" << game.m() << " x " << game.n() << " questions)\n"
              << "classical bias  " << fmt(classical.bias) << "\n"
              << "classical value " << fmt(classical.value) << "\n"
              << "quantum lower   " << fmt(quantum.lower) << "\n"
              << "quantum upper   " << fmt(quantum.upper) << "\n"
              << "quantum slack   " << fmt(quantum.slack) << "\n"
              << "quantum value   " << fmt(0.5 * (1.0 + quantum.lower)) << "\n";
    if (!save_game.empty()) {
        write_text_file(save_game, to_json(game).dump(2) + "\n");
    }
    if (!out_path.empty()) {
        nlohmann::json report = {{"game", game.label()},
                                 {"m", game.m()},
                                 {"n", game.n()},
                                 {"classical", to_json(classical)},
                                 {"quantum", to_json(quantum)}};
        write_text_file(out_path, report.dump(2) + "\n");
    }
    return 0;
}

void print_report(const ConstructionReport &r) {
    std::cout << "region          " << r.region << " at p = " << fmt(r.p) << ", q = " << fmt(r.q) << "\n";
    if (r.beta) {
        std::cout << "beta            " << fmt(*r.beta) << " (cos beta = " << fmt(std::cos(*r.beta))
                  << "; closed expression gives " << fmt(*r.formula_cos_beta) << ")\n";
    }
    std::cout << "A_01 divided by N_10: involution defect " << fmt(r.swapped_divisor_a01_defect) << "\n";
    for (int x = 0; x < 4; x++) {
        std::cout << "A_" << (x >> 1) << (x & 1) << "  normalization " << fmt(r.normalizations[x])
                  << "  hermitian defect " << fmt(r.raw_reports[x].hermitian_defect) << "  involution defect "
                  << fmt(r.raw_reports[x].involution_defect) << (r.repaired[x] ? "  (repaired by spectral sign)" : "")
                  << "\n";
    }
}

int run_verify(int region, double p, double q, uint64_t rounds, uint64_t seed, const std::string &out_path) {
    if (region != 1 && region != 2) {
        throw DomainError("region must be 1 or 2");
    }
    RegionStrategy built = region == 1 ? build_region1_strategy(p, q) : build_region2_strategy(p, q);
    XorGame game = build_perturbed_and_game(p, q);
    print_report(built.report);
    double worst = 0.0;
    for (const auto *ops : {&built.strategy.alice_ops(), &built.strategy.bob_ops()}) {
        for (const auto &o : *ops) {
            ObservableReport r = validate_observable(o, 1e-8);
            worst = std::max({worst, r.hermitian_defect, r.involution_defect});
        }
    }
    SimulationResult sim = simulate_rounds(game, built.strategy, rounds, seed);
    std::cout << "max observable defect " << fmt(worst) << "\n"
              << "exact bias      " << fmt(built.report.bias) << "\n"
              << "closed form     " << fmt(built.report.target) << "\n"
              << "difference      " << fmt(std::abs(built.report.bias - built.report.target)) << "\n"
              << "win rate        " << fmt(sim.win_rate) << " over " << sim.rounds << " rounds (exact "
              << fmt(sim.exact_win_probability) << ")\n";
    if (!out_path.empty()) {
        nlohmann::json report = {{"construction", to_json(built.report)},
                                 {"strategy", to_json(built.strategy)},
                                 {"simulation", to_json(sim)},
                                 {"max_observable_defect", worst}};
        write_text_file(out_path, report.dump(2) + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Classical and quantum biases of two-prover XOR games"};
    app.require_subcommand(1);

    // bias
    auto *bias = app.add_subcommand("bias", "Classical bias and certified quantum bias of a game");
    bias->require_subcommand(1);
    SolverFlags flags;
    std::string out_path, save_game;
    auto add_common = [&](CLI::App *cmd) {
        add_solver_flags(cmd, flags);
        cmd->add_option("--out", out_path, "Write a JSON report");
        cmd->add_option("--save-game", save_game, "Write the game as JSON");
    };
    double p = 0.5, q = 0.5;
    auto *bias_and = bias->add_subcommand("and", "Perturbed nonlocal AND game G_AND^{p,q}");
    bias_and->add_option("--p", p, "Alice's knowledge probability")->required();
    bias_and->add_option("--q", q, "Bob's knowledge probability")->required();
    add_common(bias_and);
    std::string spec_file;
    auto *bias_dist = bias->add_subcommand("distributed", "Distributed-knowledge game from a JSON spec");
    bias_dist->add_option("--spec-file", spec_file, "Knowledge spec JSON")->required();
    add_common(bias_dist);
    auto *bias_magic = bias->add_subcommand("magic-square", "Nonlocal AND with magic-square distribution");
    add_common(bias_magic);
    std::vector<std::string> parts;
    auto *bias_sum = bias->add_subcommand("sum", "Sum of games: and:P:Q, magic-square, distributed:PATH, game:PATH");
    bias_sum->add_option("specs", parts, "Game specs to sum")->required()->expected(1, -1);
    add_common(bias_sum);
    std::string game_file;
    auto *bias_game = bias->add_subcommand("game", "Game loaded from a JSON document");
    bias_game->add_option("--file", game_file, "Game JSON")->required();
    add_common(bias_game);

    // sweep
    auto *sweep = app.add_subcommand("sweep", "Tabulate biases of G_AND^{p,q} over a grid");
    SweepOptions sweep_options;
    SolverFlags sweep_flags;
    std::string sweep_out;
    sweep->add_option("--p-from", sweep_options.p_from)->capture_default_str();
    sweep->add_option("--p-to", sweep_options.p_to)->capture_default_str();
    sweep->add_option("--q-from", sweep_options.q_from)->capture_default_str();
    sweep->add_option("--q-to", sweep_options.q_to)->capture_default_str();
    sweep->add_option("--step", sweep_options.step)->capture_default_str();
    sweep->add_option("--out", sweep_out, "CSV output path")->required();
    add_solver_flags(sweep, sweep_flags);

    // reproduce
    auto *reproduce = app.add_subcommand("reproduce", "Run every acceptance check");
    ReproduceOptions reproduce_options;
    std::string reproduce_out;
    reproduce->add_option("--out", reproduce_out, "JSON report path");
    reproduce->add_option("--seed", reproduce_options.seed)->capture_default_str();
    reproduce->add_option("--rounds", reproduce_options.mc_rounds, "Monte Carlo rounds")->capture_default_str();

    // verify-strategy
    auto *verify = app.add_subcommand("verify-strategy", "Build and check an explicit region strategy");
    int region = 1;
    double vp = 0.5, vq = 0.5;
    uint64_t rounds = 100000, verify_seed = 0;
    std::string verify_out;
    verify->add_option("region", region, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    verify->add_option("--p", vp)->required();
    verify->add_option("--q", vq)->required();
    verify->add_option("--rounds", rounds)->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_seed)->capture_default_str();
    verify->add_option("--out", verify_out, "JSON report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (bias->parsed()) {
            XorGame game = [&] {
                if (bias_and->parsed()) {
                    return build_perturbed_and_game(p, q);
                }
                if (bias_dist->parsed()) {
                    return build_distributed_game(knowledge_spec_from_json(read_json_file(spec_file)));
                }
                if (bias_magic->parsed()) {
                    return build_magic_square_game();
                }
                if (bias_game->parsed()) {
                    return game_from_json(read_json_file(game_file));
                }
                XorGame g = parse_game_spec(parts.front());
                for (size_t i = 1; i < parts.size(); i++) {
                    g = sum_games(g, parse_game_spec(parts[i]));
                }
                return g;
            }();
            return run_bias(game, flags, out_path, save_game);
        }
        if (sweep->parsed()) {
            sweep_options.quantum = sweep_flags.quantum();
            sweep_options.classical = sweep_flags.classical();
            auto rows = run_sweep(sweep_options);
            std::ostringstream csv;
            write_sweep_csv(csv, rows);
            write_text_file(sweep_out, csv.str());
            std::cout << "wrote " << rows.size() << " rows to " << sweep_out << "\n";
            return 0;
        }
        if (reproduce->parsed()) {
            auto results = run_acceptance(reproduce_options);
            bool all = true;
            for (const auto &r : results) {
                std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.description << "\n";
                all = all && r.passed;
            }
            if (!reproduce_out.empty()) {
                write_text_file(reproduce_out, to_json(results).dump(2) + "\n");
            }
            if (!all) {
                for (const auto &r : results) {
                    if (!r.passed) {
                        std::cerr << "failed: " << r.id << " " << r.measured.dump() << "\n";
                    }
                }
                return kExitAcceptance;
            }
            return 0;
        }
        if (verify->parsed()) {
            return run_verify(region, vp, vq, rounds, verify_seed, verify_out);
        }
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConstructionError &e) {
        std::cerr << "construction error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
