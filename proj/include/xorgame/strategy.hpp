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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "xorgame/game.hpp"
#include "xorgame/operators.hpp"

namespace xorgame {

/// Observables for each question on a maximally entangled state of local
/// dimension d. Outcome bit 0 corresponds to eigenvalue +1.
class OperatorStrategy {
   public:
    /// Throws DomainError unless every operator is a d x d observable within
    /// 1e-8 (Hermitian within 1e-10).
    OperatorStrategy(std::vector<ComplexMatrix> alice_ops, std::vector<ComplexMatrix> bob_ops);

    int local_dim() const {
        return local_dim_;
    }
    const std::vector<ComplexMatrix> &alice_ops() const {
        return alice_ops_;
    }
    const std::vector<ComplexMatrix> &bob_ops() const {
        return bob_ops_;
    }
    const ComplexVector &state() const {
        return state_;
    }

   private:
    int local_dim_;
    std::vector<ComplexMatrix> alice_ops_;
    std::vector<ComplexMatrix> bob_ops_;
    ComplexVector state_;
};

/// How a region strategy was assembled.
struct ConstructionReport {
    int region = 0;
    double p = 0.0;
    double q = 0.0;
    /// Resolved angle (region 1 only) and the value of the closed cos(beta)
    /// expression, which is >= 1 away from p = 1/2.
    std::optional<double> beta;
    std::optional<double> formula_cos_beta;
    /// Normalizations N_xx / M_xx indexed by Alice question.
    std::array<double, 4> normalizations{};
    /// Involution defect of A_01 when divided by N_10 / M_10
    /// instead of N_01 / M_01.
    double swapped_divisor_a01_defect = 0.0;
    /// Per Alice question: whether the normalized combination needed repair
    /// by spectral sign, and its defects before repair.
    std::array<bool, 4> repaired{};
    std::array<ObservableReport, 4> raw_reports{};
    double bias = 0.0;
    double target = 0.0;
};

struct RegionStrategy {
    OperatorStrategy strategy;
    ConstructionReport report;
};

/// Four-qubit strategy for G_AND^{p,q} in region 1. beta is found by
/// maximizing the bias; throws ConstructionError if the best bias misses the
/// region-1 closed form by more than 1e-8.
RegionStrategy build_region1_strategy(double p, double q);

/// Two-qubit strategy for region 2. Throws DegeneracyError at p = 1/2.
RegionStrategy build_region2_strategy(double p, double q);

/// sum_{x,y} G[x][y] <psi|A_x (x) B_y|psi>.
double operator_bias(const XorGame &g, const OperatorStrategy &s);

/// Joint outcome distribution for questions (x, y), indexed 2a + b.
std::array<double, 4> outcome_distribution(const OperatorStrategy &s, int x, int y);

struct RoundSample {
    int x = 0;
    int y = 0;
    int a = 0;
    int b = 0;
    bool win = false;
};

/// Draws rounds of the game: questions from pi, then outcomes from the
/// strategy's joint measurement distribution.
class RoundSampler {
   public:
    RoundSampler(const XorGame &g, const OperatorStrategy &s);

    RoundSample draw(std::mt19937_64 &rng) const;

    /// (1 + operator_bias) / 2.
    double exact_win_probability() const {
        return exact_win_;
    }

   private:
    int n_;
    std::vector<double> question_cdf_;
    std::vector<std::array<double, 4>> outcome_cdf_;
    BitMatrix f_;
    double exact_win_;
};

struct SimulationResult {
    double win_rate = 0.0;
    uint64_t rounds = 0;
    uint64_t wins = 0;
    unsigned shards = 1;
    /// Counts of (a, b) outcome pairs, indexed 2a + b.
    std::array<uint64_t, 4> outcome_counts{};
    double exact_win_probability = 0.0;
};

/// Monte Carlo rounds. Shard i plays its share of rounds with
/// mt19937_64(seed + i); results are reproducible for a fixed shard count.
SimulationResult simulate_rounds(
    const XorGame &g, const OperatorStrategy &s, uint64_t rounds, uint64_t seed, unsigned shards = 1);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(std::mt19937_64 &rng);

/// {local_dim, alice_ops, bob_ops}; each operator is an interleaved re/im
/// row-major array.
nlohmann::json to_json(const OperatorStrategy &s);
nlohmann::json to_json(const ConstructionReport &r);
nlohmann::json to_json(const SimulationResult &r);

}  // namespace xorgame
