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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "xorgame/errors.hpp"
#include "xorgame/parallel.hpp"

namespace xorgame {

namespace {

constexpr double kTieTolerance = 1e-13;
// Masks per work item; keeps the partition independent of the worker count.
constexpr uint64_t kChunk = uint64_t{1} << 12;

// Mask bit (m-1-i) set means A_i = +1, so integer order is lexicographic
// order with -1 < +1. A_0 is fixed to +1.
void signs_from_mask(uint64_t mask, int m, std::vector<int> &a) {
    a[0] = 1;
    for (int i = 1; i < m; i++) {
        a[i] = ((mask >> (m - 1 - i)) & 1) ? 1 : -1;
    }
}

double best_response_value(const Matrix &cost, const std::vector<int> &a, std::vector<double> &cols) {
    const int m = static_cast<int>(cost.rows()), n = static_cast<int>(cost.cols());
    std::fill(cols.begin(), cols.end(), 0.0);
    for (int x = 0; x < m; x++) {
        const double s = a[x];
        for (int y = 0; y < n; y++) {
            cols[y] += s * cost(x, y);
        }
    }
    double total = 0.0;
    for (double c : cols) {
        total += std::abs(c);
    }
    return total;
}

}  // namespace

void ClassicalStrategy::validate_for(const XorGame &g) const {
    if (static_cast<int>(a_signs.size()) != g.m() || static_cast<int>(b_signs.size()) != g.n()) {
        throw DomainError("strategy dimensions do not match the game");
    }
    for (int s : a_signs) {
        if (s != 1 && s != -1) {
            throw DomainError("strategy signs must be +1 or -1");
        }
    }
    for (int s : b_signs) {
        if (s != 1 && s != -1) {
            throw DomainError("strategy signs must be +1 or -1");
        }
    }
}

ClassicalResult classical_bias_exact(const XorGame &g, const ClassicalOptions &options) {
    const int m = g.m(), n = g.n();
    if (m > options.max_questions || m > 62) {
        std::ostringstream ss;
        ss << "classical enumeration over " << m << " Alice questions exceeds the guard of "
           << options.max_questions;
        throw SizeError(ss.str());
    }
    const Matrix &cost = g.cost();
    const uint64_t total = uint64_t{1} << (m - 1);
    const uint64_t chunks = (total + kChunk - 1) / kChunk;
    const unsigned workers = worker_count(options.threads);

    std::vector<double> chunk_best(chunks, -std::numeric_limits<double>::infinity());
    parallel_for(chunks, workers, [&](size_t c) {
        std::vector<int> a(m);
        std::vector<double> cols(n);
        uint64_t end = std::min(total, (c + 1) * kChunk);
        double best = -std::numeric_limits<double>::infinity();
        for (uint64_t mask = c * kChunk; mask < end; mask++) {
            signs_from_mask(mask, m, a);
            best = std::max(best, best_response_value(cost, a, cols));
        }
        chunk_best[c] = best;
    });
    const double best = *std::max_element(chunk_best.begin(), chunk_best.end());

    // First mask reaching the maximum, scanning chunks in order.
    std::vector<uint64_t> chunk_first(chunks, total);
    parallel_for(chunks, workers, [&](size_t c) {
        if (chunk_best[c] < best - kTieTolerance) {
            return;
        }
        std::vector<int> a(m);
        std::vector<double> cols(n);
        uint64_t end = std::min(total, (c + 1) * kChunk);
        for (uint64_t mask = c * kChunk; mask < end; mask++) {
            signs_from_mask(mask, m, a);
            if (best_response_value(cost, a, cols) >= best - kTieTolerance) {
                chunk_first[c] = mask;
                return;
            }
        }
    });
    const uint64_t winner = *std::min_element(chunk_first.begin(), chunk_first.end());

    ClassicalResult result;
    result.strategy.a_signs.assign(m, 1);
    signs_from_mask(winner, m, result.strategy.a_signs);
    std::vector<double> cols(n);
    best_response_value(cost, result.strategy.a_signs, cols);
    result.strategy.b_signs.resize(n);
    for (int y = 0; y < n; y++) {
        result.strategy.b_signs[y] = cols[y] >= 0.0 ? 1 : -1;
    }
    result.bias = best;
    result.value = 0.5 * (1.0 + best);
    return result;
}

double strategy_bias(const XorGame &g, const ClassicalStrategy &s) {
    s.validate_for(g);
    double total = 0.0;
    for (int x = 0; x < g.m(); x++) {
        for (int y = 0; y < g.n(); y++) {
            total += g.cost()(x, y) * s.a_signs[x] * s.b_signs[y];
        }
    }
    return total;
}

double reduce_to_full_knowledge(const ClassicalStrategy &s, double p, double q) {
    const XorGame chsh = build_perturbed_and_game(1.0, 1.0);
    if (!(p >= 0.5 && p <= 1.0) || !(q >= 0.5 && q <= 1.0)) {
        throw DomainError("p and q must lie in [1/2, 1]");
    }
    s.validate_for(chsh);
    double expected = 0.0;
    for (int r1 = 0; r1 < 2; r1++) {
        for (int r2 = 0; r2 < 2; r2++) {
            double weight = (r1 == 0 ? p : 1.0 - p) * (r2 == 0 ? q : 1.0 - q);
            if (weight == 0.0) {
                continue;
            }
            int r = 2 * r1 + r2;
            double bias = 0.0;
            for (int x = 0; x < 4; x++) {
                for (int y = 0; y < 4; y++) {
                    bias += chsh.cost()(x, y) * s.a_signs[x ^ r] * s.b_signs[y ^ r];
                }
            }
            expected += weight * bias;
        }
    }
    return expected;
}

nlohmann::json to_json(const ClassicalResult &r) {
    return {{"bias", r.bias},
            {"value", r.value},
            {"a_signs", r.strategy.a_signs},
            {"b_signs", r.strategy.b_signs}};
}

}  // namespace xorgame
