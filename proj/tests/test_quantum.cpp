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

#include "xorgame/quantum.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "xorgame/classical.hpp"
#include "xorgame/errors.hpp"
#include "xorgame/reproduce.hpp"

using namespace xorgame;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

XorGame random_game(std::mt19937_64 &rng) {
    int m = 2 + rng() % 5, n = 2 + rng() % 5;
    Matrix pi(m, n);
    BitMatrix f(m, n);
    for (int x = 0; x < m; x++) {
        for (int y = 0; y < n; y++) {
            pi(x, y) = static_cast<double>(rng() % 1000 + 1);
            f(x, y) = rng() & 1;
        }
    }
    pi /= pi.sum();
    return XorGame(pi, f, "random");
}

}  // namespace

TEST(QuantumBias, known_values) {
    BiasCertificate chsh = quantum_bias(build_perturbed_and_game(1.0, 1.0));
    EXPECT_NEAR(chsh.lower, kInvSqrt2, 1e-6);
    EXPECT_NEAR(chsh.upper, kInvSqrt2, 1e-6);

    BiasCertificate center = quantum_bias(build_perturbed_and_game(0.5, 0.5));
    EXPECT_NEAR(center.lower, 0.5, 1e-6);
    EXPECT_NEAR(center.upper, 0.5, 1e-6);

    BiasCertificate r1 = quantum_bias(build_perturbed_and_game(0.75, 0.5));
    EXPECT_NEAR(r1.lower, std::sqrt(0.5) * std::sqrt(0.625), 1e-6);
    EXPECT_NEAR(r1.lower, 0.559017, 1e-6);

    BiasCertificate magic = quantum_bias(build_magic_square_game());
    EXPECT_GE(magic.lower, 0.5911 - 1e-4);
    EXPECT_LE(magic.slack, 1e-6);
}

TEST(QuantumBias, certificate_fields) {
    QuantumOptions o;
    o.seed = 42;
    o.restarts = 5;
    BiasCertificate c = quantum_bias(build_magic_square_game(), o);
    EXPECT_EQ(c.rank, build_magic_square_game().m() + build_magic_square_game().n());
    EXPECT_EQ(c.restarts, 5);
    EXPECT_EQ(c.seed, 42u);
    EXPECT_NEAR(c.slack, c.upper - c.lower, 1e-15);
    EXPECT_LE(c.lower, c.upper + 1e-12);
    EXPECT_GE(c.min_eig, -1e-8);
    for (int i = 0; i < c.strategy.u.rows(); i++) {
        EXPECT_NEAR(c.strategy.u.row(i).norm(), 1.0, 1e-10);
    }
    for (int i = 0; i < c.strategy.v.rows(); i++) {
        EXPECT_NEAR(c.strategy.v.row(i).norm(), 1.0, 1e-10);
    }
    EXPECT_NEAR(vector_objective(build_magic_square_game(), c.strategy), c.lower, 1e-15);

    auto j = to_json(c);
    for (const char *key : {"lower", "upper", "slack", "min_eig", "rank", "restarts", "seed"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
}

TEST(QuantumBias, handles_zero_probability_questions) {
    // p = q = 1 leaves Bob questions with y1 = 1 and Alice questions with x2 = 1 unused.
    BiasCertificate c = quantum_bias(build_perturbed_and_game(1.0, 0.5));
    EXPECT_NEAR(c.lower, kInvSqrt2, 1e-6);
    EXPECT_TRUE(c.strategy.u.allFinite());
    EXPECT_TRUE(c.strategy.v.allFinite());
}

TEST(QuantumBias, deterministic_across_runs_and_workers) {
    QuantumOptions one, many;
    one.threads = 1;
    many.threads = 4;
    one.seed = many.seed = 7;
    XorGame g = build_perturbed_and_game(0.8, 0.6);
    BiasCertificate a = quantum_bias(g, one), b = quantum_bias(g, many), c = quantum_bias(g, one);
    EXPECT_EQ(a.lower, b.lower);
    EXPECT_EQ(a.upper, b.upper);
    EXPECT_EQ(a.min_eig, b.min_eig);
    EXPECT_EQ(a.strategy.u, b.strategy.u);
    EXPECT_EQ(a.lower, c.lower);
    EXPECT_EQ(a.strategy.v, c.strategy.v);
}

TEST(QuantumBias, invalid_settings) {
    XorGame g = build_perturbed_and_game(0.5, 0.5);
    QuantumOptions o;
    o.restarts = 0;
    EXPECT_THROW(quantum_bias(g, o), DomainError);
    Eigen::MatrixXd bad = Eigen::MatrixXd::Constant(4, 2, std::nan(""));
    EXPECT_THROW(alternating_ascent(g, bad, 1e-12, 10), DomainError);
    EXPECT_THROW(alternating_ascent(g, Eigen::MatrixXd::Ones(3, 2), 1e-12, 10), DomainError);
}

TEST(AlternatingAscent, monotone_half_steps) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; trial++) {
        XorGame g = random_game(rng);
        double previous = -10.0;
        int steps = 0;
        alternating_ascent(g, random_unit_rows(g.m(), g.m() + g.n(), rng()), 1e-12, 100000, [&](double v) {
            EXPECT_GE(v, previous - 1e-12);
            previous = v;
            steps++;
        });
        EXPECT_GE(steps, 2);
    }
}

TEST(Certificate, sound_on_random_games) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; trial++) {
        XorGame g = random_game(rng);
        QuantumOptions o;
        o.restarts = 8;
        o.seed = trial;
        BiasCertificate c = quantum_bias(g, o);
        EXPECT_GE(c.upper, c.lower - 1e-12);
        // The certified upper bound must dominate any other feasible point.
        for (int k = 0; k < 5; k++) {
            AscentResult other = alternating_ascent(g, random_unit_rows(g.m(), 3, rng()), 1e-6, 50);
            EXPECT_LE(other.objective, c.upper + 1e-12);
        }
        EXPECT_LE(classical_bias_exact(g).bias, c.upper + 1e-9);
    }
}

TEST(Certificate, sound_away_from_optimum) {
    // A poor feasible point still yields a valid (looser) upper bound.
    XorGame g = build_perturbed_and_game(1.0, 1.0);
    VectorStrategy s;
    s.rank = 2;
    s.u = Eigen::MatrixXd::Zero(4, 2);
    s.v = Eigen::MatrixXd::Zero(4, 2);
    s.u.col(0).setOnes();
    s.v.col(0).setOnes();
    BiasCertificate c = certify(g, s);
    EXPECT_NEAR(c.lower, 0.5, 1e-15);
    EXPECT_GE(c.upper, kInvSqrt2 - 1e-12);
}

TEST(QuantumBias, matches_closed_forms_in_both_regions) {
    for (int region : {1, 2}) {
        for (auto [p, q] : region_interior_points(region, 20)) {
            double cf = region == 1 ? closed_form_region1(p, q) : closed_form_region2(p, q);
            BiasCertificate c = quantum_bias(build_perturbed_and_game(p, q));
            EXPECT_NEAR(c.lower, cf, 1e-6) << "region " << region << " p " << p << " q " << q;
            EXPECT_NEAR(c.upper, cf, 1e-6) << "region " << region << " p " << p << " q " << q;
            EXPECT_LE(c.slack, 1e-6);
        }
    }
}

TEST(QuantumBias, multiplicative_over_sums) {
    std::vector<XorGame> pool = {build_perturbed_and_game(0.5, 0.5), build_perturbed_and_game(1.0, 1.0),
                                 build_perturbed_and_game(0.8, 0.6)};
    for (const auto &g1 : pool) {
        for (const auto &g2 : pool) {
            double direct = quantum_bias(sum_games(g1, g2)).lower;
            double product = quantum_bias(g1).lower * quantum_bias(g2).lower;
            EXPECT_NEAR(direct, product, 1e-5) << g1.label() << " + " << g2.label();
        }
    }
}

TEST(QuantumBias, flat_start_and_monotone_in_p) {
    auto value = [](double p) { return quantum_bias(build_perturbed_and_game(p, 0.5)).lower; };
    double previous = value(0.5);
    for (int i = 1; i < 10; i++) {
        double v = value(0.5 + 0.05 * i);
        EXPECT_GE(v, previous - 1e-12);
        previous = v;
    }
    EXPECT_LE(std::abs(value(0.5001) - value(0.5)) / 1e-4, 1e-3);
}

TEST(ClosedForms, region_predicates) {
    EXPECT_TRUE(in_region1(0.6, 0.8));
    EXPECT_FALSE(in_region2(0.6, 0.8));
    EXPECT_TRUE(in_region2(0.75, 0.75));
    EXPECT_FALSE(in_region1(0.75, 0.75));
    EXPECT_FALSE(in_region1(0.5, 1.0));
    EXPECT_TRUE(in_region2(0.5, 1.0));
    EXPECT_TRUE(in_region1(0.5, 0.5));
}

TEST(ClosedForms, region1) {
    EXPECT_THROW(closed_form_region1(0.5, 1.0), DomainError);
    try {
        closed_form_region1(0.5, 1.0);
    } catch (const DomainError &e) {
        EXPECT_NE(std::string(e.what()).find("1/(2q) > p"), std::string::npos);
    }
    EXPECT_NEAR(closed_form_region1(0.6, 0.5), std::sqrt(0.5) * std::sqrt(0.52), 1e-15);
    EXPECT_NEAR(closed_form_region1(0.6, 0.5), 0.509902, 1e-6);
    double eps = 1e-6;
    EXPECT_GT(closed_form_region1(0.5 + eps, 0.5 + eps), 0.5);
    EXPECT_THROW(closed_form_region1(0.4, 0.6), DomainError);
    EXPECT_THROW(closed_form_region1(0.6, 0.4), DomainError);
}

TEST(ClosedForms, region2) {
    EXPECT_NEAR(closed_form_region2(1.0, 1.0), kInvSqrt2, 1e-15);
    for (double q : {0.5, 0.7, 1.0}) {
        EXPECT_NEAR(closed_form_region2(1.0, q), kInvSqrt2, 1e-15);
    }
    EXPECT_NEAR(closed_form_region2(0.75, 0.75), 0.875 * kInvSqrt2, 1e-15);
    EXPECT_NEAR(closed_form_region2(0.75, 0.75), 0.618718, 1e-6);
    EXPECT_THROW(closed_form_region2(0.6, 0.8), DomainError);
    EXPECT_THROW(closed_form_region2(1.1, 0.8), DomainError);
}

TEST(ClosedForms, agree_on_shared_boundary) {
    for (double q : {0.55, 0.7, 0.9, 1.0}) {
        double p = 1.0 / (2.0 * q);
        EXPECT_NEAR(closed_form_region2(p, q),
                    std::sqrt(q * q + (1 - q) * (1 - q)) * std::sqrt(p * p + (1 - p) * (1 - p)), 1e-12);
    }
}

TEST(QuantumBiasOfSum, products) {
    for (int k = 1; k <= 5; k++) {
        std::vector<double> halves(k, 0.5);
        EXPECT_DOUBLE_EQ(quantum_bias_of_sum(halves), std::pow(0.5, k));
    }
    std::vector<double> with_one = {0.37, 1.0};
    EXPECT_DOUBLE_EQ(quantum_bias_of_sum(with_one), 0.37);
    for (int k : {1, 2, 3}) {
        for (double p : {0.6, 0.9}) {
            std::vector<double> parts(k - 1, 0.5);
            parts.push_back(closed_form_region1(p, 0.5));
            EXPECT_NEAR(quantum_bias_of_sum(parts),
                        std::pow(2.0, -(k - 1)) * std::sqrt(0.5) * std::sqrt(p * p + (1 - p) * (1 - p)), 1e-15);
        }
    }
    std::vector<double> bad = {1.5};
    EXPECT_THROW(quantum_bias_of_sum(bad), DomainError);
}

TEST(QuantumBias, composed_games_match_products) {
    XorGame base = build_perturbed_and_game(0.5, 0.5);
    BiasCertificate k2 = quantum_bias(power_sum(base, 2));
    EXPECT_NEAR(k2.lower, 0.25, 1e-6);
    EXPECT_NEAR(k2.upper, 0.25, 1e-6);
    for (double p : {0.6, 0.75, 0.9}) {
        double lower = quantum_bias(sum_games(base, build_perturbed_and_game(p, 0.5))).lower;
        EXPECT_NEAR(lower, 0.5 * std::sqrt(0.5) * std::sqrt(p * p + (1 - p) * (1 - p)), 1e-5);
    }
}
