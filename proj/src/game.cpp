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

#include "xorgame/game.hpp"

#include <cmath>
#include <sstream>

#include "xorgame/errors.hpp"

namespace xorgame {

namespace {

constexpr double kSumTolerance = 1e-12;

double check_probability(double p, const char *name) {
    if (!(p >= 0.5 && p <= 1.0)) {
        std::ostringstream ss;
        ss << name << " = " << p << " is outside [1/2, 1]";
        throw DomainError(ss.str());
    }
    return p;
}

}  // namespace

BitString::BitString(uint64_t value, unsigned width) : value(value), width(width) {
    if (width > 63 || value >> width != 0) {
        throw DomainError("bit string value does not fit its width");
    }
}

bool BitString::bit(unsigned i) const {
    return (value >> (width - i)) & 1;
}

BitString BitString::with_bit(unsigned i, bool b) const {
    uint64_t mask = uint64_t{1} << (width - i);
    return BitString(b ? (value | mask) : (value & ~mask), width);
}

BitString BitString::operator^(const BitString &other) const {
    if (width != other.width) {
        throw DomainError("xor of bit strings of different widths");
    }
    return BitString(value ^ other.value, width);
}

std::string BitString::to_string() const {
    std::string s;
    for (unsigned i = 1; i <= width; i++) {
        s.push_back(bit(i) ? '1' : '0');
    }
    return s;
}

XorGame::XorGame(Matrix pi, BitMatrix f, std::string label)
    : pi_(std::move(pi)), f_(std::move(f)), label_(std::move(label)) {
    if (pi_.rows() == 0 || pi_.cols() == 0) {
        throw DomainError("game must have at least one question per prover");
    }
    if (f_.rows() != pi_.rows() || f_.cols() != pi_.cols()) {
        throw DomainError("pi and f have different shapes");
    }
    double total = 0.0;
    for (Eigen::Index x = 0; x < pi_.rows(); x++) {
        for (Eigen::Index y = 0; y < pi_.cols(); y++) {
            double w = pi_(x, y);
            if (!std::isfinite(w) || w < 0.0) {
                throw DomainError("pi entries must be finite and nonnegative");
            }
            if (f_(x, y) > 1) {
                throw DomainError("f entries must be 0 or 1");
            }
            total += w;
        }
    }
    if (std::abs(total - 1.0) > kSumTolerance) {
        std::ostringstream ss;
        ss.precision(17);
        ss << "pi sums to " << total << ", not 1";
        throw DomainError(ss.str());
    }
    cost_ = pi_;
    for (Eigen::Index x = 0; x < pi_.rows(); x++) {
        for (Eigen::Index y = 0; y < pi_.cols(); y++) {
            if (f_(x, y)) {
                cost_(x, y) = -pi_(x, y);
            }
        }
    }
}

namespace {

void check_permutation(const std::vector<int> &perm, int size) {
    if (static_cast<int>(perm.size()) != size) {
        throw DomainError("permutation has the wrong length");
    }
    std::vector<bool> seen(size, false);
    for (int i : perm) {
        if (i < 0 || i >= size || seen[i]) {
            throw DomainError("not a permutation");
        }
        seen[i] = true;
    }
}

}  // namespace

XorGame XorGame::permute_alice(const std::vector<int> &perm) const {
    check_permutation(perm, m());
    Matrix pi(m(), n());
    BitMatrix f(m(), n());
    for (int x = 0; x < m(); x++) {
        pi.row(x) = pi_.row(perm[x]);
        f.row(x) = f_.row(perm[x]);
    }
    return XorGame(std::move(pi), std::move(f), label_);
}

XorGame XorGame::permute_bob(const std::vector<int> &perm) const {
    check_permutation(perm, n());
    Matrix pi(m(), n());
    BitMatrix f(m(), n());
    for (int y = 0; y < n(); y++) {
        pi.col(y) = pi_.col(perm[y]);
        f.col(y) = f_.col(perm[y]);
    }
    return XorGame(std::move(pi), std::move(f), label_);
}

void KnowledgeSpec::validate() const {
    if (n_bits == 0 || n_bits > 12) {
        throw DomainError("n_bits must be in [1, 12]");
    }
    size_t size = size_t{1} << n_bits;
    if (partition.size() != n_bits || probs.size() != n_bits) {
        throw DomainError("partition and probs must have one entry per bit");
    }
    if (g.size() != size) {
        throw DomainError("truth table of g must have 2^n_bits entries");
    }
    if (input_dist.size() != size) {
        throw DomainError("input distribution must have 2^n_bits entries");
    }
    for (double p : probs) {
        check_probability(p, "knowledge probability");
    }
    double total = 0.0;
    for (double w : input_dist) {
        if (!std::isfinite(w) || w < 0.0) {
            throw DomainError("input distribution entries must be nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > kSumTolerance) {
        throw DomainError("input distribution does not sum to 1");
    }
    for (uint8_t b : g) {
        if (b > 1) {
            throw DomainError("truth table entries must be 0 or 1");
        }
    }
}

bool KnowledgeSpec::has_no_knowledge() const {
    for (double p : probs) {
        if (p != 0.5) {
            return false;
        }
    }
    return true;
}

std::vector<double> KnowledgeSpec::uniform_inputs(unsigned n_bits) {
    size_t size = size_t{1} << n_bits;
    return std::vector<double>(size, 1.0 / static_cast<double>(size));
}

XorGame build_perturbed_and_game(double p, double q) {
    check_probability(p, "p");
    check_probability(q, "q");
    Matrix pi(4, 4);
    BitMatrix f(4, 4);
    for (int x = 0; x < 4; x++) {
        for (int y = 0; y < 4; y++) {
            int x1 = x >> 1, x2 = x & 1;
            int y1 = y >> 1, y2 = y & 1;
            // y1 = 0 iff Alice's first bit equals z1; x2 = 0 iff Bob's second equals z2.
            double w1 = y1 == 0 ? p : 1.0 - p;
            double w2 = x2 == 0 ? q : 1.0 - q;
            pi(x, y) = 0.25 * w1 * w2;
            f(x, y) = static_cast<uint8_t>((x1 ^ y1) & (x2 ^ y2));
        }
    }
    std::ostringstream label;
    label << "and(p=" << p << ",q=" << q << ")";
    return XorGame(std::move(pi), std::move(f), label.str());
}

XorGame build_distributed_game(const KnowledgeSpec &spec) {
    spec.validate();
    const unsigned k = spec.n_bits;
    const size_t size = size_t{1} << k;
    Matrix pi = Matrix::Zero(size, size);
    BitMatrix f(size, size);
    for (size_t x = 0; x < size; x++) {
        for (size_t y = 0; y < size; y++) {
            f(x, y) = spec.g[x ^ y];
        }
    }
    // Branch mask bit i set: the prover holding bit i receives z_i xor 1.
    for (size_t z = 0; z < size; z++) {
        if (spec.input_dist[z] == 0.0) {
            continue;
        }
        BitString zs(z, k);
        for (size_t branch = 0; branch < size; branch++) {
            BitString bs(branch, k);
            BitString xs(0, k), ys(0, k);
            double w = spec.input_dist[z];
            for (unsigned i = 1; i <= k; i++) {
                bool flipped = bs.bit(i);
                bool zi = zs.bit(i);
                double pi_i = spec.probs[i - 1];
                w *= flipped ? 1.0 - pi_i : pi_i;
                if (spec.partition[i - 1] == Side::alice) {
                    xs = xs.with_bit(i, zi ^ flipped);
                    ys = ys.with_bit(i, flipped);
                } else {
                    ys = ys.with_bit(i, zi ^ flipped);
                    xs = xs.with_bit(i, flipped);
                }
            }
            pi(xs.value, ys.value) += w;
        }
    }
    return XorGame(std::move(pi), std::move(f), "distributed(n=" + std::to_string(k) + ")");
}

XorGame build_magic_square_game() {
    static const int square[4][4] = {{4, 14, 15, 1}, {9, 7, 6, 12}, {5, 11, 10, 8}, {16, 2, 3, 13}};
    Matrix pi(4, 4);
    BitMatrix f(4, 4);
    for (int x = 0; x < 4; x++) {
        for (int y = 0; y < 4; y++) {
            pi(x, y) = square[x][y] / 136.0;
            int z = x ^ y;
            f(x, y) = static_cast<uint8_t>((z >> 1) & z & 1);
        }
    }
    return XorGame(std::move(pi), std::move(f), "magic-square");
}

XorGame sum_games(const XorGame &g1, const XorGame &g2) {
    const int m1 = g1.m(), n1 = g1.n(), m2 = g2.m(), n2 = g2.n();
    Matrix pi(m1 * m2, n1 * n2);
    BitMatrix f(m1 * m2, n1 * n2);
    for (int x1 = 0; x1 < m1; x1++) {
        for (int y1 = 0; y1 < n1; y1++) {
            for (int x2 = 0; x2 < m2; x2++) {
                for (int y2 = 0; y2 < n2; y2++) {
                    int x = x1 * m2 + x2, y = y1 * n2 + y2;
                    pi(x, y) = g1.pi()(x1, y1) * g2.pi()(x2, y2);
                    f(x, y) = g1.f()(x1, y1) ^ g2.f()(x2, y2);
                }
            }
        }
    }
    return XorGame(std::move(pi), std::move(f), g1.label() + "+" + g2.label());
}

XorGame power_sum(const XorGame &g, int k) {
    if (k < 1) {
        throw DomainError("power_sum needs k >= 1");
    }
    XorGame result = g;
    for (int i = 1; i < k; i++) {
        result = sum_games(result, g);
    }
    return result;
}

XorGame trivial_game() {
    return XorGame(Matrix::Ones(1, 1), BitMatrix::Zero(1, 1), "trivial");
}

Marginals marginals(const XorGame &g) {
    return {g.pi().rowwise().sum(), g.pi().colwise().sum().transpose()};
}

nlohmann::json to_json(const XorGame &g) {
    std::vector<double> pi;
    std::vector<int> f;
    for (int x = 0; x < g.m(); x++) {
        for (int y = 0; y < g.n(); y++) {
            pi.push_back(g.pi()(x, y));
            f.push_back(g.f()(x, y));
        }
    }
    return {{"label", g.label()}, {"m", g.m()}, {"n", g.n()}, {"pi", pi}, {"f", f}};
}

XorGame game_from_json(const nlohmann::json &j) {
    try {
        int m = j.at("m").get<int>();
        int n = j.at("n").get<int>();
        auto pi_flat = j.at("pi").get<std::vector<double>>();
        auto f_flat = j.at("f").get<std::vector<int>>();
        if (m <= 0 || n <= 0 || pi_flat.size() != size_t(m) * n || f_flat.size() != size_t(m) * n) {
            throw DomainError("game arrays do not match m x n");
        }
        Matrix pi(m, n);
        BitMatrix f(m, n);
        for (int x = 0; x < m; x++) {
            for (int y = 0; y < n; y++) {
                pi(x, y) = pi_flat[x * n + y];
                int b = f_flat[x * n + y];
                if (b != 0 && b != 1) {
                    throw DomainError("f entries must be 0 or 1");
                }
                f(x, y) = static_cast<uint8_t>(b);
            }
        }
        return XorGame(std::move(pi), std::move(f), j.value("label", std::string("game")));
    } catch (const nlohmann::json::exception &e) {
        throw DomainError(std::string("malformed game document: ") + e.what());
    }
}

nlohmann::json to_json(const KnowledgeSpec &spec) {
    std::vector<std::string> sides;
    for (Side s : spec.partition) {
        sides.push_back(s == Side::alice ? "A" : "B");
    }
    std::vector<int> g(spec.g.begin(), spec.g.end());
    return {{"n_bits", spec.n_bits},
            {"partition", sides},
            {"probs", spec.probs},
            {"input_dist", spec.input_dist},
            {"g", g}};
}

KnowledgeSpec knowledge_spec_from_json(const nlohmann::json &j) {
    try {
        KnowledgeSpec spec;
        spec.n_bits = j.at("n_bits").get<unsigned>();
        if (spec.n_bits == 0 || spec.n_bits > 12) {
            throw DomainError("n_bits must be in [1, 12]");
        }
        for (const auto &s : j.at("partition").get<std::vector<std::string>>()) {
            if (s == "A") {
                spec.partition.push_back(Side::alice);
            } else if (s == "B") {
                spec.partition.push_back(Side::bob);
            } else {
                throw DomainError("partition entries must be \"A\" or \"B\"");
            }
        }
        spec.probs = j.at("probs").get<std::vector<double>>();
        spec.input_dist = j.contains("input_dist") ? j.at("input_dist").get<std::vector<double>>()
                                                   : KnowledgeSpec::uniform_inputs(spec.n_bits);
        for (int b : j.at("g").get<std::vector<int>>()) {
            if (b != 0 && b != 1) {
                throw DomainError("truth table entries must be 0 or 1");
            }
            spec.g.push_back(static_cast<uint8_t>(b));
        }
        spec.validate();
        return spec;
    } catch (const nlohmann::json::exception &e) {
        throw DomainError(std::string("malformed knowledge spec: ") + e.what());
    }
}

}  // namespace xorgame
