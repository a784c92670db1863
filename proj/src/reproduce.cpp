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

#include "xorgame/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "xorgame/classical.hpp"
#include "xorgame/game.hpp"
#include "xorgame/operators.hpp"
#include "xorgame/quantum.hpp"
#include "xorgame/strategy.hpp"
#include "xorgame/sweep.hpp"

namespace xorgame {

namespace {

CheckResult make(int criterion, std::string id, std::string description, bool passed, nlohmann::json measured) {
    return {criterion, std::move(id), std::move(description), passed, std::move(measured)};
}

QuantumOptions quantum_options(const ReproduceOptions &options) {
    QuantumOptions q;
    q.seed = options.seed;
    return q;
}

XorGame random_game(std::mt19937_64 &rng) {
    int m = 2 + static_cast<int>(rng() % 5);
    int n = 2 + static_cast<int>(rng() % 5);
    Matrix pi(m, n);
    BitMatrix f(m, n);
    for (int x = 0; x < m; x++) {
        for (int y = 0; y < n; y++) {
            pi(x, y) = uniform_unit(rng);
            f(x, y) = static_cast<uint8_t>(rng() & 1);
        }
    }
    pi /= pi.sum();
    return XorGame(std::move(pi), std::move(f), "random");
}

ComplexMatrix random_observable(int d, std::mt19937_64 &rng) {
    ComplexMatrix h(d, d);
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            h(i, j) = Complex(2 * uniform_unit(rng) - 1, 2 * uniform_unit(rng) - 1);
        }
    }
    return spectral_sign(0.5 * (h + h.adjoint()));
}

double max_defect(const OperatorStrategy &s) {
    double worst = 0.0;
    for (const auto *ops : {&s.alice_ops(), &s.bob_ops()}) {
        for (const auto &o : *ops) {
            ObservableReport r = validate_observable(o, 1e-8);
            worst = std::max({worst, r.hermitian_defect, r.involution_defect});
        }
    }
    return worst;
}

}  // namespace

std::vector<std::pair<double, double>> region_interior_points(int region, int count) {
    std::vector<std::pair<double, double>> points;
    for (int i = 0; i < count; i++) {
        double frac = 0.1 + 0.8 * static_cast<double>((7 * i) % count) / std::max(1, count - 1);
        if (region == 1) {
            double q = 0.5 + 0.45 * (i + 0.5) / count;
            double t = 1.0 / (2.0 * q);
            points.emplace_back(0.5 + (t - 0.5) * frac, q);
        } else {
            double q = 0.55 + 0.44 * (i + 0.5) / count;
            double t = 1.0 / (2.0 * q);
            points.emplace_back(t + (1.0 - t) * frac, q);
        }
    }
    return points;
}

std::vector<CheckResult> check_classical_flatness(const ReproduceOptions &) {
    double worst = 0.0;
    int points = 0;
    for (int i = 0; i <= 10; i++) {
        for (int j = 0; j <= 10; j++) {
            double p = 0.5 + 0.05 * i, q = 0.5 + 0.05 * j;
            worst = std::max(worst, std::abs(classical_bias_exact(build_perturbed_and_game(p, q)).bias - 0.5));
            points++;
        }
    }
    return {make(1, "1.classical_flatness", "classical bias of G_AND^{p,q} is 1/2 on the 11x11 grid",
                 points == 121 && worst <= 1e-9, {{"points", points}, {"max_abs_error", worst}})};
}

std::vector<CheckResult> check_chsh_endpoints(const ReproduceOptions &options) {
    const XorGame g = build_perturbed_and_game(1.0, 1.0);
    const double target = 1.0 / std::numbers::sqrt2;
    std::vector<CheckResult> out;
    double classical = classical_bias_exact(g).bias;
    out.push_back(make(2, "2.chsh_classical", "classical bias of G_AND^{1,1} is exactly 1/2", classical == 0.5,
                       {{"classical_bias", classical}}));
    BiasCertificate c = quantum_bias(g, quantum_options(options));
    out.push_back(make(2, "2.chsh_quantum", "quantum certificate lower = upper = 1/sqrt(2) within 1e-6",
                       std::abs(c.lower - target) <= 1e-6 && std::abs(c.upper - target) <= 1e-6,
                       {{"lower", c.lower}, {"upper", c.upper}, {"target", target}}));
    RegionStrategy s = build_region2_strategy(1.0, 1.0);
    SimulationResult sim = simulate_rounds(g, s.strategy, options.mc_rounds, options.seed);
    const double expected = 0.85355;
    const double sigma = std::sqrt(expected * (1 - expected) / static_cast<double>(options.mc_rounds));
    out.push_back(make(2, "2.chsh_monte_carlo", "Monte Carlo win rate within 3 sigma of 0.85355",
                       std::abs(sim.win_rate - expected) <= 3 * sigma,
                       {{"win_rate", sim.win_rate}, {"rounds", sim.rounds}, {"sigma", sigma}}));
    return out;
}

std::vector<CheckResult> check_region_closed_forms(const ReproduceOptions &options) {
    std::vector<CheckResult> out;
    for (int region : {1, 2}) {
        double worst_gap = 0.0, worst_slack = 0.0;
        for (auto [p, q] : region_interior_points(region, 20)) {
            double cf = region == 1 ? closed_form_region1(p, q) : closed_form_region2(p, q);
            BiasCertificate c = quantum_bias(build_perturbed_and_game(p, q), quantum_options(options));
            worst_gap = std::max(worst_gap, std::abs(c.lower - cf));
            worst_slack = std::max(worst_slack, c.slack);
        }
        std::string id = "3.region" + std::to_string(region) + "_closed_form";
        out.push_back(make(3, id, "quantum lower matches the closed form and slack <= 1e-6 at 20 interior points",
                           worst_gap <= 1e-6 && worst_slack <= 1e-6,
                           {{"max_gap", worst_gap}, {"max_slack", worst_slack}, {"points", 20}}));
    }
    return out;
}

std::vector<CheckResult> check_strict_advantage(const ReproduceOptions &options) {
    const double p = 0.5001, q = 0.5001;
    const XorGame g = build_perturbed_and_game(p, q);
    double classical = classical_bias_exact(g).bias;
    BiasCertificate c = quantum_bias(g, quantum_options(options));
    double cf = closed_form_region1(p, q);
    double advantage = c.lower - classical;
    bool ok = advantage >= cf - 0.5 - 1e-7 && advantage > 0.0;
    return {make(4, "4.strict_advantage", "quantum advantage at (0.5001, 0.5001) is positive and near the closed form",
                 ok, {{"advantage", advantage}, {"closed_form_advantage", cf - 0.5}, {"lower", c.lower},
                      {"classical_bias", classical}})};
}

std::vector<CheckResult> check_sums(const ReproduceOptions &options) {
    std::vector<CheckResult> out;
    const XorGame base = build_perturbed_and_game(0.5, 0.5);
    for (int k = 1; k <= 2; k++) {
        XorGame g = power_sum(base, k);
        double expected = std::pow(0.5, k);
        ClassicalOptions copt;
        copt.max_questions = 24;
        double classical = classical_bias_exact(g, copt).bias;
        BiasCertificate c = quantum_bias(g, quantum_options(options));
        bool ok = std::abs(classical - expected) <= 1e-6 && std::abs(c.lower - expected) <= 1e-6 &&
                  std::abs(c.upper - expected) <= 1e-6;
        out.push_back(make(5, "5.sum_k" + std::to_string(k), "classical and quantum bias of G_AND(k) equal (1/2)^k",
                           ok,
                           {{"k", k}, {"questions", g.m()}, {"classical_bias", classical}, {"lower", c.lower},
                            {"upper", c.upper}, {"expected", expected}}));
    }
    const std::vector<XorGame> pool = {base, build_perturbed_and_game(1.0, 1.0), build_perturbed_and_game(0.8, 0.6)};
    std::vector<double> lowers;
    for (const auto &g : pool) {
        lowers.push_back(quantum_bias(g, quantum_options(options)).lower);
    }
    double worst = 0.0;
    nlohmann::json pairs = nlohmann::json::array();
    for (size_t i = 0; i < pool.size(); i++) {
        for (size_t j = i; j < pool.size(); j++) {
            double direct = quantum_bias(sum_games(pool[i], pool[j]), quantum_options(options)).lower;
            double product = quantum_bias_of_sum(std::vector<double>{lowers[i], lowers[j]});
            worst = std::max(worst, std::abs(direct - product));
            pairs.push_back({{"games", {pool[i].label(), pool[j].label()}}, {"direct", direct}, {"product", product}});
        }
    }
    out.push_back(make(5, "5.multiplicativity", "quantum bias of a sum equals the product of lowers within 1e-5",
                       worst <= 1e-5, {{"max_gap", worst}, {"pairs", pairs}}));
    return out;
}

std::vector<CheckResult> check_perturbed_sums(const ReproduceOptions &options) {
    std::vector<CheckResult> out;
    const XorGame base = build_perturbed_and_game(0.5, 0.5);
    for (double p : {0.6, 0.75, 0.9}) {
        XorGame g = sum_games(base, build_perturbed_and_game(p, 0.5));
        double expected = 0.5 * std::sqrt(0.5) * std::sqrt(p * p + (1 - p) * (1 - p));
        double lower = quantum_bias(g, quantum_options(options)).lower;
        out.push_back(make(6, "6.perturbed_sum_p" + format_number(p),
                           "quantum bias of G_AND(2)^{p,1/2} matches the product formula within 1e-5",
                           std::abs(lower - expected) <= 1e-5,
                           {{"p", p}, {"lower", lower}, {"expected", expected}}));
    }
    return out;
}

std::vector<CheckResult> check_flat_start(const ReproduceOptions &options) {
    auto value = [&](double p) {
        return quantum_bias(build_perturbed_and_game(p, 0.5), quantum_options(options)).lower;
    };
    const double h = 1e-4;
    const double derivative = (value(0.5 + h) - value(0.5)) / h;
    std::vector<CheckResult> out;
    out.push_back(make(7, "7.derivative_at_half", "forward difference of the quantum bias at p = 1/2 is <= 1e-3",
                       std::abs(derivative) <= 1e-3, {{"h", h}, {"finite_difference", derivative}}));
    std::vector<double> values;
    bool monotone = true;
    for (int i = 0; i < 10; i++) {
        values.push_back(value(0.5 + 0.05 * i));
        if (i > 0 && values[i] < values[i - 1] - 1e-12) {
            monotone = false;
        }
    }
    out.push_back(make(7, "7.monotone", "quantum bias of G_AND^{p,1/2} is non-decreasing on p = 0.5..0.95",
                       monotone, {{"values", values}}));
    return out;
}

std::vector<CheckResult> check_magic_square(const ReproduceOptions &options) {
    const XorGame g = build_magic_square_game();
    std::vector<CheckResult> out;
    ClassicalResult classical = classical_bias_exact(g);
    out.push_back(make(8, "8.magic_classical", "exhaustive classical bias of the magic-square game is 1/2",
                       std::abs(classical.bias - 0.5) <= 1e-12 && g.m() == 4,
                       {{"classical_bias", classical.bias}, {"alice_sign_vectors", 1 << (g.m() - 1)}}));
    BiasCertificate c = quantum_bias(g, quantum_options(options));
    out.push_back(make(8, "8.magic_quantum", "quantum lower bound of the magic-square game is >= 0.5910",
                       c.lower >= 0.5910, {{"lower", c.lower}, {"upper", c.upper}}));
    Marginals mg = marginals(g);
    double worst = std::max((mg.alice.array() - 0.25).abs().maxCoeff(), (mg.bob.array() - 0.25).abs().maxCoeff());
    out.push_back(make(8, "8.magic_marginals", "both marginals are uniform 1/4 within 1e-12", worst <= 1e-12,
                       {{"max_abs_error", worst}}));
    return out;
}

std::vector<CheckResult> check_properties(const ReproduceOptions &options) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(options.seed);
    std::vector<XorGame> games;
    for (int i = 0; i < 100; i++) {
        games.push_back(random_game(rng));
    }

    double worst_drop = 0.0;
    for (const auto &g : games) {
        double previous = -std::numeric_limits<double>::infinity();
        alternating_ascent(g, random_unit_rows(g.m(), g.m() + g.n(), rng()), 1e-12, 100000, [&](double v) {
            worst_drop = std::max(worst_drop, previous - v);
            previous = v;
        });
    }
    out.push_back(make(9, "9.ascent_monotone", "alternating ascent never decreases (100 random games)",
                       worst_drop <= 1e-12, {{"max_decrease", worst_drop}}));

    std::vector<XorGame> tested = games;
    tested.push_back(build_perturbed_and_game(0.5, 0.5));
    tested.push_back(build_perturbed_and_game(1.0, 1.0));
    tested.push_back(build_perturbed_and_game(0.8, 0.6));
    tested.push_back(build_magic_square_game());
    double worst_violation = -std::numeric_limits<double>::infinity();
    for (const auto &g : tested) {
        double classical = classical_bias_exact(g).bias;
        double upper = quantum_bias(g, quantum_options(options)).upper;
        worst_violation = std::max(worst_violation, classical - upper);
    }
    out.push_back(make(9, "9.classical_below_quantum", "classical bias <= quantum upper bound + 1e-9",
                       worst_violation <= 1e-9, {{"games", tested.size()}, {"max_classical_minus_upper", worst_violation}}));

    double worst_gauge = 0.0;
    for (const auto &g : games) {
        ClassicalStrategy s;
        for (int x = 0; x < g.m(); x++) {
            s.a_signs.push_back(rng() & 1 ? 1 : -1);
        }
        for (int y = 0; y < g.n(); y++) {
            s.b_signs.push_back(rng() & 1 ? 1 : -1);
        }
        ClassicalStrategy flipped = s;
        for (int &a : flipped.a_signs) {
            a = -a;
        }
        for (int &b : flipped.b_signs) {
            b = -b;
        }
        worst_gauge = std::max(worst_gauge, std::abs(strategy_bias(g, s) - strategy_bias(g, flipped)));
    }
    out.push_back(make(9, "9.gauge_invariance", "flipping all signs leaves the classical bias unchanged",
                       worst_gauge <= 1e-15, {{"max_difference", worst_gauge}}));

    double worst_identity = 0.0;
    for (int trial = 0; trial < 50; trial++) {
        int d = 2 + trial % 3;
        ComplexMatrix a = random_observable(d, rng), b = random_observable(d, rng);
        Complex via_trace = correlator_trace(a, b);
        Complex via_contraction = correlator_contraction(a, b, maximally_entangled_state(d));
        worst_identity = std::max(worst_identity, std::abs(via_trace - via_contraction));
    }
    out.push_back(make(9, "9.trace_identity", "trace identity agrees with explicit contraction within 1e-12",
                       worst_identity <= 1e-12, {{"max_difference", worst_identity}}));

    double worst_defect = 0.0;
    int built = 0;
    for (int region : {1, 2}) {
        for (auto [p, q] : region_interior_points(region, 10)) {
            RegionStrategy s = region == 1 ? build_region1_strategy(p, q) : build_region2_strategy(p, q);
            worst_defect = std::max(worst_defect, max_defect(s.strategy));
            built++;
        }
    }
    worst_defect = std::max(worst_defect, max_defect(build_region2_strategy(1.0, 1.0).strategy));
    built++;
    out.push_back(make(9, "9.observable_defects", "built strategies are valid observables within 1e-8",
                       worst_defect <= 1e-8, {{"strategies", built}, {"max_defect", worst_defect}}));
    return out;
}

std::vector<CheckResult> run_acceptance(const ReproduceOptions &options) {
    std::vector<CheckResult> all;
    for (auto check : {check_classical_flatness, check_chsh_endpoints, check_region_closed_forms,
                       check_strict_advantage, check_sums, check_perturbed_sums, check_flat_start,
                       check_magic_square, check_properties}) {
        auto part = check(options);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

nlohmann::json to_json(const std::vector<CheckResult> &results) {
    nlohmann::json items = nlohmann::json::array();
    bool all = true;
    for (const auto &r : results) {
        items.push_back({{"criterion", r.criterion},
                         {"id", r.id},
                         {"description", r.description},
                         {"passed", r.passed},
                         {"measured", r.measured}});
        all = all && r.passed;
    }
    return {{"all_passed", all}, {"items", items}};
}

}  // namespace xorgame
