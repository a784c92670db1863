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
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include "json.hpp"

namespace xorgame {

/// Fixed-width bit string. Bit 1 (the first bit of the string) is the most
/// significant bit of `value`, so a question x1...xn has index sum x_i 2^(n-i).
struct BitString {
    uint64_t value = 0;
    unsigned width = 0;

    BitString() = default;
    BitString(uint64_t value, unsigned width);

    /// Bit i, 1-based from the left.
    bool bit(unsigned i) const;
    BitString with_bit(unsigned i, bool b) const;
    BitString operator^(const BitString &other) const;
    bool operator==(const BitString &other) const = default;
    std::string to_string() const;
};

using Matrix = Eigen::MatrixXd;
using BitMatrix = Eigen::Matrix<uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

/// A two-prover XOR game: question distribution pi(x, y), target bits f(x, y)
/// and the signed cost matrix G = pi * (-1)^f. Immutable once built.
class XorGame {
   public:
    /// Validates pi >= 0, sum(pi) = 1 within 1e-12 and f in {0, 1}.
    XorGame(Matrix pi, BitMatrix f, std::string label);

    int m() const {
        return static_cast<int>(pi_.rows());
    }
    int n() const {
        return static_cast<int>(pi_.cols());
    }
    const Matrix &cost() const {
        return cost_;
    }
    const Matrix &pi() const {
        return pi_;
    }
    const BitMatrix &f() const {
        return f_;
    }
    const std::string &label() const {
        return label_;
    }

    /// Relabels Alice's questions: row x of the result is row perm[x] of this game.
    XorGame permute_alice(const std::vector<int> &perm) const;
    XorGame permute_bob(const std::vector<int> &perm) const;

   private:
    Matrix pi_;
    BitMatrix f_;
    Matrix cost_;
    std::string label_;
};

enum class Side { alice, bob };

/// Distributed-knowledge game description: bit i of z is partly revealed to
/// the prover on side partition[i], who receives z_i with probability probs[i].
struct KnowledgeSpec {
    unsigned n_bits = 0;
    std::vector<Side> partition;
    std::vector<double> probs;
    /// Probability of each z, indexed big-endian like questions.
    std::vector<double> input_dist;
    /// Truth table of g, indexed like input_dist.
    std::vector<uint8_t> g;

    /// Throws DomainError describing the first violated invariant.
    void validate() const;
    bool has_no_knowledge() const;

    /// Uniform input distribution over 2^n_bits values.
    static std::vector<double> uniform_inputs(unsigned n_bits);
};

XorGame build_perturbed_and_game(double p, double q);
XorGame build_distributed_game(const KnowledgeSpec &spec);
XorGame build_magic_square_game();
XorGame sum_games(const XorGame &g1, const XorGame &g2);
/// k-fold sum of the given game with itself (k >= 1).
XorGame power_sum(const XorGame &g, int k);
/// The single-question game with pi = 1 and f = 0; identity for sum_games.
XorGame trivial_game();

struct Marginals {
    Eigen::VectorXd alice;
    Eigen::VectorXd bob;
};

Marginals marginals(const XorGame &g);

/// {label, m, n, pi, f}, row-major; cost is never serialized.
nlohmann::json to_json(const XorGame &g);
XorGame game_from_json(const nlohmann::json &j);

/// {n_bits, partition: ["A"|"B"...], probs, input_dist (optional), g}.
nlohmann::json to_json(const KnowledgeSpec &spec);
KnowledgeSpec knowledge_spec_from_json(const nlohmann::json &j);

}  // namespace xorgame
