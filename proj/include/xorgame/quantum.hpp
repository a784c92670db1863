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

#include <cstdint>
#include <functional>
#include <span>

#include "json.hpp"
#include "xorgame/game.hpp"

namespace xorgame {

/// Real unit vectors u_x (rows of u) and v_y (rows of v); the Gram-vector
/// form of a quantum strategy, <psi|A_x B_y|psi> = <u_x, v_y>.
struct VectorStrategy {
    int rank = 0;
    Eigen::MatrixXd u;
    Eigen::MatrixXd v;
};

/// sum_{x,y} G[x][y] <u_x, v_y>.
double vector_objective(const XorGame &g, const VectorStrategy &s);

struct BiasCertificate {
    double lower = 0.0;
    double upper = 0.0;
    double slack = 0.0;
    double min_eig = 0.0;
    VectorStrategy strategy;
    int rank = 0;
    int restarts = 0;
    uint64_t seed = 0;
};

struct QuantumOptions {
    /// 0 means m + n.
    int rank = 0;
    int restarts = 32;
    uint64_t seed = 0;
    double tol = 1e-12;
    int max_iterations = 100000;
    /// 0 = worker_count() default.
    unsigned threads = 0;
};

struct AscentResult {
    VectorStrategy strategy;
    double objective = 0.0;
    int iterations = 0;
};

/// Called with the objective after every half-step (first the v update, then
/// the u update).
using AscentObserver = std::function<void(double)>;

/// Alternating ascent from the given Alice vectors (rows of u0 are normalized
/// first). Stops when a full iteration changes the objective by less than tol.
AscentResult alternating_ascent(
    const XorGame &g, Eigen::MatrixXd u0, double tol, int max_iterations, const AscentObserver &observer = {});

/// Random starting vectors for restart `stream`: entries uniform on [-1, 1]
/// from mt19937_64(stream), rows normalized.
Eigen::MatrixXd random_unit_rows(int rows, int rank, uint64_t stream);

/// Upper bound from the dual matrix diag(lambda/2, mu/2) - W built at the
/// given strategy, where W has off-diagonal blocks G/2 and G^T/2.
BiasCertificate certify(const XorGame &g, const VectorStrategy &s);

/// Best of `restarts` alternating ascents (stream seed + r), certified.
BiasCertificate quantum_bias(const XorGame &g, const QuantumOptions &options = {});

/// Region 1: 1 >= 1/(2q) > p >= 1/2.
bool in_region1(double p, double q);
/// Region 2: 1 >= p >= 1/(2q) >= 1/2.
bool in_region2(double p, double q);

/// sqrt(q^2 + (1-q)^2) * sqrt(p^2 + (1-p)^2); DomainError outside region 1.
double closed_form_region1(double p, double q);
/// (1 - 2(1-p)(1-q)) / sqrt(2); DomainError outside region 2.
double closed_form_region2(double p, double q);

/// Quantum bias of a sum of games: the product of the summands' biases.
double quantum_bias_of_sum(std::span<const double> biases);

nlohmann::json to_json(const BiasCertificate &c);

}  // namespace xorgame
