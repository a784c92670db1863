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

#include "xorgame/classical.hpp"

#include <random>

#include "gtest/gtest.h"
#include "xorgame/errors.hpp"

using namespace xorgame;

namespace {

// Brute force over every A and B, no gauge fixing or column rule.
double brute_force_bias(const XorGame &g) {
    double best = -2.0;
    for (uint64_t am = 0; am < (uint64_t{1} << g.m()); am++) {
        for (uint64_t bm = 0; bm < (uint64_t{1} << g.n()); bm++) {
            double v = 0.0;
            for (int x = 0; x < g.m(); x++) {
                for (int y = 0; y < g.n(); y++) {
                    v += g.cost()(x, y) * ((am >> x) & 1 ? -1 : 1) * ((bm >> y) & 1 ? -1 : 1);
                }
            }
            best = std::max(best, v);
        }
    }
    return best;
}

XorGame random_game(std::mt19937_64 &rng, int m, int n) {
    Matrix pi(m, n);
    BitMatrix f(m, n);
    for (int x = 0; x < m; x++) {
        for (int y = 0; y < n; y++) {
            pi(x, y) = 1.0 + static_cast<double>(rng() % 100);
            f(x, y) = rng() & 1;
        }
    }
    pi /= pi.sum();
    return XorGame(pi, f, "random");
}

ClassicalStrategy random_strategy(std::mt19937_64 &rng, int m, int n) {
    ClassicalStrategy s;
    for (int x = 0; x < m; x++) {
        s.a_signs.push_back(rng() & 1 ? 1 : -1);
    }
    for (int y = 0; y < n; y++) {
        s.b_signs.push_back(rng() & 1 ? 1 : -1);
    }
    return s;
}

// Win probability of the shared-randomness protocol on G_AND^{1,1}, by
// enumerating z and the shared bits, then converted to a bias.
double reduction_oracle(const ClassicalStrategy &s, double p, double q) {
    double win = 0.0;
    for (int z1 = 0; z1 < 2; z1++) {
        for (int z2 = 0; z2 < 2; z2++) {
            for (int r1 = 0; r1 < 2; r1++) {
                for (int r2 = 0; r2 < 2; r2++) {
                    double w = 0.25 * (r1 == 0 ? p : 1 - p) * (r2 == 0 ? q : 1 - q);
                    // Full knowledge: x = (z1, 0), y = (0, z2).
                    int x = 2 * (z1 ^ r1) + r2;
                    int y = 2 * r1 + (z2 ^ r2);
                    int a = s.a_signs[x] == 1 ? 0 : 1;
                    int b = s.b_signs[y] == 1 ? 0 : 1;
                    if ((a ^ b) == (z1 & z2)) {
                        win += w;
                    }
                }
            }
        }
    }
    return 2 * win - 1;
}

}  // namespace

TEST(ClassicalBias, known_values) {
    EXPECT_NEAR(classical_bias_exact(build_perturbed_and_game(0.5, 0.5)).bias, 0.5, 1e-15);
    EXPECT_EQ(classical_bias_exact(build_perturbed_and_game(1.0, 1.0)).bias, 0.5);
    ClassicalResult magic = classical_bias_exact(build_magic_square_game());
    EXPECT_NEAR(magic.bias, 0.5, 1e-15);
    EXPECT_DOUBLE_EQ(magic.value, 0.75);
}

TEST(ClassicalBias, trivial_target_gives_bias_one) {
    Matrix pi = Matrix::Constant(3, 2, 1.0 / 6);
    XorGame g(pi, BitMatrix::Zero(3, 2), "zero");
    ClassicalResult r = classical_bias_exact(g);
    EXPECT_NEAR(r.bias, 1.0, 1e-15);
    EXPECT_EQ(r.strategy.a_signs, (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(r.strategy.b_signs, (std::vector<int>{1, 1}));
}

TEST(ClassicalBias, matches_brute_force_and_reports_consistent_strategy) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; trial++) {
        XorGame g = random_game(rng, 1 + rng() % 6, 1 + rng() % 6);
        ClassicalResult r = classical_bias_exact(g);
        EXPECT_NEAR(r.bias, brute_force_bias(g), 1e-13);
        EXPECT_NEAR(strategy_bias(g, r.strategy), r.bias, 1e-12);
        EXPECT_NEAR(r.value, 0.5 * (1 + r.bias), 1e-15);
        EXPECT_EQ(r.strategy.a_signs[0], 1);
    }
}

TEST(ClassicalBias, dominates_random_strategies) {
    std::mt19937_64 rng(5);
    std::vector<XorGame> games = {build_perturbed_and_game(0.5, 0.5), build_perturbed_and_game(0.7, 0.9),
                                  build_magic_square_game(), random_game(rng, 5, 4)};
    for (const auto &g : games) {
        double best = classical_bias_exact(g).bias;
        for (int i = 0; i < 1000; i++) {
            EXPECT_LE(strategy_bias(g, random_strategy(rng, g.m(), g.n())), best + 1e-15);
        }
    }
}

TEST(ClassicalBias, lexicographically_smallest_maximizer) {
    // The second row carries no weight, so both choices of A_1 tie.
    Matrix pi(2, 1);
    pi << 1.0, 0.0;
    XorGame g(pi, BitMatrix::Zero(2, 1), "tie");
    ClassicalResult r = classical_bias_exact(g);
    EXPECT_EQ(r.strategy.a_signs, (std::vector<int>{1, -1}));
    EXPECT_EQ(r.strategy.b_signs, (std::vector<int>{1}));

    // Zero column sum: B breaks to +1.
    Matrix pi2(2, 2);
    pi2 << 0.25, 0.25, 0.25, 0.25;
    BitMatrix f(2, 2);
    f << 0, 0, 0, 1;
    ClassicalResult r2 = classical_bias_exact(XorGame(pi2, f, "zero-column"));
    EXPECT_NEAR(r2.bias, 0.5, 1e-15);
    EXPECT_EQ(r2.strategy.a_signs, (std::vector<int>{1, -1}));
    EXPECT_EQ(r2.strategy.b_signs, (std::vector<int>{1, 1}));
}

TEST(ClassicalBias, independent_of_worker_count) {
    std::mt19937_64 rng(9);
    XorGame g = random_game(rng, 15, 6);
    ClassicalOptions one, many;
    one.threads = 1;
    many.threads = 4;
    ClassicalResult a = classical_bias_exact(g, one), b = classical_bias_exact(g, many);
    EXPECT_EQ(a.bias, b.bias);
    EXPECT_EQ(a.strategy.a_signs, b.strategy.a_signs);
    EXPECT_EQ(a.strategy.b_signs, b.strategy.b_signs);
}

TEST(ClassicalBias, size_guard) {
    XorGame g = power_sum(build_perturbed_and_game(0.5, 0.5), 2);
    ClassicalOptions tight;
    tight.max_questions = 8;
    EXPECT_THROW(classical_bias_exact(g, tight), SizeError);
    EXPECT_NEAR(classical_bias_exact(g).bias, 0.25, 1e-12);
}

TEST(ClassicalBias, flat_over_perturbation_grid) {
    for (int i = 0; i <= 10; i++) {
        for (int j = 0; j <= 10; j++) {
            double p = 0.5 + 0.05 * i, q = 0.5 + 0.05 * j;
            EXPECT_NEAR(classical_bias_exact(build_perturbed_and_game(p, q)).bias, 0.5, 1e-9) << p << " " << q;
        }
    }
}

TEST(ClassicalBias, product_strategy_lower_bounds_sum) {
    std::vector<XorGame> games = {build_perturbed_and_game(0.5, 0.5), build_perturbed_and_game(0.9, 0.6),
                                  build_magic_square_game()};
    for (const auto &g1 : games) {
        for (const auto &g2 : games) {
            ClassicalResult r1 = classical_bias_exact(g1), r2 = classical_bias_exact(g2);
            XorGame sum = sum_games(g1, g2);
            ClassicalStrategy product;
            for (int a1 : r1.strategy.a_signs) {
                for (int a2 : r2.strategy.a_signs) {
                    product.a_signs.push_back(a1 * a2);
                }
            }
            for (int b1 : r1.strategy.b_signs) {
                for (int b2 : r2.strategy.b_signs) {
                    product.b_signs.push_back(b1 * b2);
                }
            }
            EXPECT_NEAR(strategy_bias(sum, product), r1.bias * r2.bias, 1e-14);
            EXPECT_GE(classical_bias_exact(sum).bias, r1.bias * r2.bias - 1e-14);
        }
    }
}

TEST(StrategyBias, examples_and_gauge_invariance) {
    XorGame center = build_perturbed_and_game(0.5, 0.5);
    ClassicalStrategy plus{{1, 1, 1, 1}, {1, 1, 1, 1}};
    EXPECT_NEAR(strategy_bias(center, plus), 0.5, 1e-15);

    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; i++) {
        XorGame g = random_game(rng, 1 + rng() % 5, 1 + rng() % 5);
        ClassicalStrategy s = random_strategy(rng, g.m(), g.n());
        ClassicalStrategy t = s;
        for (int &a : t.a_signs) {
            a = -a;
        }
        for (int &b : t.b_signs) {
            b = -b;
        }
        double v = strategy_bias(g, s);
        EXPECT_NEAR(v, strategy_bias(g, t), 1e-15);
        EXPECT_LE(std::abs(v), 1.0 + 1e-15);
    }

    ClassicalResult chsh = classical_bias_exact(build_perturbed_and_game(1.0, 1.0));
    EXPECT_EQ(strategy_bias(build_perturbed_and_game(1.0, 1.0), chsh.strategy), 0.5);
}

TEST(StrategyBias, dimension_and_sign_errors) {
    XorGame g = build_perturbed_and_game(0.5, 0.5);
    EXPECT_THROW(strategy_bias(g, ClassicalStrategy{{1, 1, 1}, {1, 1, 1, 1}}), DomainError);
    EXPECT_THROW(strategy_bias(g, ClassicalStrategy{{1, 1, 1, 0}, {1, 1, 1, 1}}), DomainError);
}

TEST(StrategyBias, affine_in_p) {
    for (double q : {0.5, 0.7, 1.0}) {
        ClassicalStrategy s = classical_bias_exact(build_perturbed_and_game(0.6, q)).strategy;
        double v5 = strategy_bias(build_perturbed_and_game(0.5, q), s);
        double v7 = strategy_bias(build_perturbed_and_game(0.7, q), s);
        double v9 = strategy_bias(build_perturbed_and_game(0.9, q), s);
        EXPECT_NEAR(v7 - v5, v9 - v7, 1e-12);
    }
}

TEST(Reduction, transfers_bias_to_full_knowledge_game) {
    ClassicalStrategy any{{1, -1, -1, 1}, {1, 1, -1, 1}};
    XorGame chsh = build_perturbed_and_game(1.0, 1.0);
    EXPECT_NEAR(reduce_to_full_knowledge(any, 1.0, 1.0), strategy_bias(chsh, any), 1e-15);

    ClassicalStrategy opt = classical_bias_exact(build_perturbed_and_game(0.75, 0.6)).strategy;
    EXPECT_NEAR(reduce_to_full_knowledge(opt, 0.75, 0.6), 0.5, 1e-12);

    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; i++) {
        ClassicalStrategy s = random_strategy(rng, 4, 4);
        double p = 0.5 + 0.5 * (rng() % 101) / 100.0, q = 0.5 + 0.5 * (rng() % 101) / 100.0;
        double reduced = reduce_to_full_knowledge(s, p, q);
        EXPECT_NEAR(reduced, strategy_bias(build_perturbed_and_game(p, q), s), 1e-12);
        EXPECT_NEAR(reduced, reduction_oracle(s, p, q), 1e-12);
    }
    ClassicalStrategy s = random_strategy(rng, 4, 4);
    EXPECT_NEAR(reduce_to_full_knowledge(s, 0.5, 0.5), strategy_bias(build_perturbed_and_game(0.5, 0.5), s), 1e-12);
    EXPECT_THROW(reduce_to_full_knowledge(s, 0.4, 0.5), DomainError);
}

TEST(ClassicalJson, fields) {
    auto j = to_json(classical_bias_exact(build_perturbed_and_game(1.0, 1.0)));
    EXPECT_EQ(j.at("bias").get<double>(), 0.5);
    EXPECT_EQ(j.at("value").get<double>(), 0.75);
    EXPECT_EQ(j.at("a_signs").size(), 4u);
    EXPECT_EQ(j.at("b_signs").size(), 4u);
}
