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

#include <vector>

#include "json.hpp"
#include "xorgame/game.hpp"

namespace xorgame {

/// Deterministic answers as signs: A_x = (-1)^{a(x)}, B_y = (-1)^{b(y)}.
struct ClassicalStrategy {
    std::vector<int> a_signs;
    std::vector<int> b_signs;

    void validate_for(const XorGame &g) const;
};

struct ClassicalResult {
    double bias = 0.0;
    double value = 0.5;
    ClassicalStrategy strategy;
};

struct ClassicalOptions {
    /// Enumeration guard on the number of Alice questions.
    int max_questions = 24;
    /// 0 = worker_count() default.
    unsigned threads = 0;
};

/// Exact classical bias by enumerating Alice's sign vectors with A_0 = +1 and
/// answering each Bob question with the sign of its column sum.
///
/// Among maximizers (within 1e-13) the lexicographically smallest A is
/// reported, ordering -1 before +1; ties in B's column sums go to +1. The
/// result does not depend on the worker count.
ClassicalResult classical_bias_exact(const XorGame &g, const ClassicalOptions &options = {});

/// sum_{x,y} G[x][y] A_x B_y.
double strategy_bias(const XorGame &g, const ClassicalStrategy &s);

/// Expected bias on G_AND^{1,1} of the shared-randomness strategy that plays
/// `s` (a strategy for G_AND^{p,q}) on inputs x xor r, y xor r with
/// Pr[r1 = 0] = p and Pr[r2 = 0] = q. Equals strategy_bias(G_AND^{p,q}, s).
double reduce_to_full_knowledge(const ClassicalStrategy &s, double p, double q);

nlohmann::json to_json(const ClassicalResult &r);

}  // namespace xorgame
