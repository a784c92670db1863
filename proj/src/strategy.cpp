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

#include "xorgame/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "xorgame/errors.hpp"
#include "xorgame/parallel.hpp"
#include "xorgame/quantum.hpp"

namespace xorgame {

namespace {

constexpr double kObservableTolerance = 1e-8;
constexpr double kHermitianTolerance = 1e-10;
constexpr double kBetaMatchTolerance = 1e-8;
constexpr int kBetaScanPoints = 721;
constexpr double kGoldenTolerance = 1e-10;

/// Bob observables ordered by question index y = 2 y1 + y2.
using BobOps = std::array<ComplexMatrix, 4>;

/// The four weighted combinations of conjugated Bob observables from which
/// Alice's observables are formed, ordered by Alice question x = 2 x1 + x2.
std::array<ComplexMatrix, 4> alice_combinations(const BobOps &b, double p) {
    const ComplexMatrix b00 = b[0].conjugate(), b01 = b[1].conjugate();
    const ComplexMatrix b10 = b[2].conjugate(), b11 = b[3].conjugate();
    const double r = 1.0 - p;
    return {p * (b00 + b01) + r * (b10 - b11),
            p * (b00 + b01) + r * (-b10 + b11),
            p * (b00 - b01) + r * (b10 + b11),
            p * (-b00 + b01) + r * (b10 + b11)};
}

BobOps region1_bob_ops(double beta) {
    const ComplexMatrix x = pauli_x(), y = pauli_y(), z = pauli_z(), id = pauli_i();
    const ComplexMatrix rotated = std::cos(beta) * x + std::sin(beta) * z;
    return {kron(x, id), kron(y, x), kron(rotated, id), -kron(y, rotated)};
}

BobOps region2_bob_ops() {
    const ComplexMatrix x = pauli_x(), z = pauli_z();
    return {x, z, x, -z};
}

/// Bias of Alice's best response to the given Bob observables:
/// sum_x Tr|sum_y G[x][y] conj(B_y)| / d.
double best_response_bias(const XorGame &g, const BobOps &bob) {
    const Eigen::Index d = bob[0].rows();
    double total = 0.0;
    for (int x = 0; x < 4; x++) {
        ComplexMatrix h = ComplexMatrix::Zero(d, d);
        for (int y = 0; y < 4; y++) {
            h += g.cost()(x, y) * bob[y].conjugate();
        }
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);
        total += solver.eigenvalues().cwiseAbs().sum();
    }
    return total / static_cast<double>(d);
}

template <typename F>
double golden_section_max(F f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? c : d;
}

/// Normalizes each combination, repairing with spectral sign where the
/// result is not an observable.
std::vector<ComplexMatrix> assemble_alice(
    const std::array<ComplexMatrix, 4> &combos, const std::array<double, 4> &norms, ConstructionReport &report) {
    std::vector<ComplexMatrix> ops;
    for (int x = 0; x < 4; x++) {
        ComplexMatrix raw = combos[x] / norms[x];
        report.raw_reports[x] = validate_observable(raw, kObservableTolerance);
        if (report.raw_reports[x].pass) {
            ops.push_back(0.5 * (raw + raw.adjoint()));
        } else {
            report.repaired[x] = true;
            ops.push_back(spectral_sign(0.5 * (raw + raw.adjoint())));
        }
    }
    return ops;
}

std::vector<ComplexMatrix> to_vector(const BobOps &b) {
    return {b.begin(), b.end()};
}

}  // namespace

OperatorStrategy::OperatorStrategy(std::vector<ComplexMatrix> alice_ops, std::vector<ComplexMatrix> bob_ops)
    : alice_ops_(std::move(alice_ops)), bob_ops_(std::move(bob_ops)) {
    if (alice_ops_.empty() || bob_ops_.empty()) {
        throw DomainError("strategy needs at least one observable per prover");
    }
    local_dim_ = static_cast<int>(alice_ops_[0].rows());
    auto check = [&](const ComplexMatrix &o) {
        if (o.rows() != local_dim_ || o.cols() != local_dim_) {
            throw DomainError("observables must all be d x d");
        }
        ObservableReport r = validate_observable(o, kObservableTolerance);
        if (!r.pass || r.hermitian_defect > kHermitianTolerance || !o.allFinite()) {
            std::ostringstream ss;
            ss << "not an observable (hermitian defect " << r.hermitian_defect << ", involution defect "
               << r.involution_defect << ")";
            throw DomainError(ss.str());
        }
    };
    for (const auto &o : alice_ops_) {
        check(o);
    }
    for (const auto &o : bob_ops_) {
        check(o);
    }
    state_ = maximally_entangled_state(local_dim_);
}

RegionStrategy build_region1_strategy(double p, double q) {
    const double target = closed_form_region1(p, q);
    const XorGame game = build_perturbed_and_game(p, q);

    auto bias_at = [&](double beta) { return best_response_bias(game, region1_bob_ops(beta)); };
    int best_i = 0;
    double best_scan = -1.0;
    for (int i = 0; i < kBetaScanPoints; i++) {
        double v = bias_at(std::numbers::pi * i / (kBetaScanPoints - 1));
        if (v > best_scan) {
            best_scan = v;
            best_i = i;
        }
    }
    const double step = std::numbers::pi / (kBetaScanPoints - 1);
    const double lo = std::max(0.0, (best_i - 1) * step);
    const double hi = std::min(std::numbers::pi, (best_i + 1) * step);
    double beta = golden_section_max(bias_at, lo, hi, kGoldenTolerance);
    double best = bias_at(beta);
    if (best_scan > best) {
        beta = best_i * step;
        best = best_scan;
    }
    if (std::abs(best - target) > kBetaMatchTolerance) {
        std::ostringstream ss;
        ss.precision(12);
        ss << "no beta in [0, pi] reaches the region-1 bias " << target << "; best " << best << " at beta = " << beta;
        throw ConstructionError(ss.str(), best);
    }

    ConstructionReport report;
    report.region = 1;
    report.p = p;
    report.q = q;
    report.beta = beta;
    const double sp = p * p + (1 - p) * (1 - p);
    const double sq = q * q + (1 - q) * (1 - q);
    report.formula_cos_beta = 0.5 * sp * sq / (p * (1 - p) * sq);
    const double n00 = 2.0 * q * std::sqrt(sp / sq);
    const double n01 = (1 - q) / q * n00;
    report.normalizations = {n00, n01, n00, n01};

    const BobOps bob = region1_bob_ops(beta);
    const auto combos = alice_combinations(bob, p);
    report.swapped_divisor_a01_defect = validate_observable(combos[1] / n00, kObservableTolerance).involution_defect;
    auto alice = assemble_alice(combos, report.normalizations, report);
    OperatorStrategy strategy(std::move(alice), to_vector(bob));
    report.bias = operator_bias(game, strategy);
    report.target = target;
    return {std::move(strategy), report};
}

RegionStrategy build_region2_strategy(double p, double q) {
    if (std::abs(2.0 * p - 1.0) < 1e-12) {
        throw DegeneracyError("region-2 normalization M_01 = sqrt(2)(2p - 1) vanishes at p = 1/2");
    }
    const double target = closed_form_region2(p, q);
    const XorGame game = build_perturbed_and_game(p, q);

    ConstructionReport report;
    report.region = 2;
    report.p = p;
    report.q = q;
    const double m00 = std::numbers::sqrt2;
    const double m01 = std::numbers::sqrt2 * (2.0 * p - 1.0);
    report.normalizations = {m00, m01, m00, m01};

    const BobOps bob = region2_bob_ops();
    const auto combos = alice_combinations(bob, p);
    report.swapped_divisor_a01_defect = validate_observable(combos[1] / m00, kObservableTolerance).involution_defect;
    auto alice = assemble_alice(combos, report.normalizations, report);
    OperatorStrategy strategy(std::move(alice), to_vector(bob));
    report.bias = operator_bias(game, strategy);
    report.target = target;
    return {std::move(strategy), report};
}

double operator_bias(const XorGame &g, const OperatorStrategy &s) {
    if (static_cast<int>(s.alice_ops().size()) != g.m() || static_cast<int>(s.bob_ops().size()) != g.n()) {
        throw DomainError("strategy has the wrong number of observables for the game");
    }
    Complex total = 0.0;
    for (int x = 0; x < g.m(); x++) {
        for (int y = 0; y < g.n(); y++) {
            if (g.cost()(x, y) != 0.0) {
                total += g.cost()(x, y) * correlator_trace(s.alice_ops()[x], s.bob_ops()[y]);
            }
        }
    }
    if (std::abs(total.imag()) > 1e-10) {
        throw DomainError("operator bias has a non-negligible imaginary part");
    }
    return total.real();
}

std::array<double, 4> outcome_distribution(const OperatorStrategy &s, int x, int y) {
    const int d = s.local_dim();
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    const ComplexMatrix &a = s.alice_ops().at(x);
    const ComplexMatrix &b = s.bob_ops().at(y);
    std::array<ComplexMatrix, 2> pa = {0.5 * (id + a), 0.5 * (id - a)};
    std::array<ComplexMatrix, 2> pb = {0.5 * (id + b), 0.5 * (id - b)};
    std::array<double, 4> probs{};
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            probs[2 * i + j] = correlator_trace(pa[i], pb[j]).real();
        }
    }
    return probs;
}

double uniform_unit(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

RoundSampler::RoundSampler(const XorGame &g, const OperatorStrategy &s) : n_(g.n()), f_(g.f()) {
    exact_win_ = 0.5 * (1.0 + operator_bias(g, s));
    double acc = 0.0;
    for (int x = 0; x < g.m(); x++) {
        for (int y = 0; y < g.n(); y++) {
            acc += g.pi()(x, y);
            question_cdf_.push_back(acc);
            std::array<double, 4> probs = outcome_distribution(s, x, y);
            std::array<double, 4> cdf{};
            double run = 0.0;
            for (int k = 0; k < 4; k++) {
                run += std::max(0.0, probs[k]);
                cdf[k] = run;
            }
            for (double &c : cdf) {
                c /= run;
            }
            outcome_cdf_.push_back(cdf);
        }
    }
    for (double &c : question_cdf_) {
        c /= acc;
    }
}

RoundSample RoundSampler::draw(std::mt19937_64 &rng) const {
    const double u = uniform_unit(rng);
    auto it = std::upper_bound(question_cdf_.begin(), question_cdf_.end(), u);
    size_t idx;
    if (it == question_cdf_.end()) {
        // Rounding left the last cdf entry below u; take the last question pair
        // with positive mass.
        idx = question_cdf_.size() - 1;
        while (idx > 0 && question_cdf_[idx] == question_cdf_[idx - 1]) {
            idx--;
        }
    } else {
        idx = static_cast<size_t>(it - question_cdf_.begin());
    }
    const double v = uniform_unit(rng);
    const auto &cdf = outcome_cdf_[idx];
    int k = 0;
    while (k < 3 && !(v < cdf[k])) {
        k++;
    }
    RoundSample sample;
    sample.x = static_cast<int>(idx) / n_;
    sample.y = static_cast<int>(idx) % n_;
    sample.a = k >> 1;
    sample.b = k & 1;
    sample.win = (sample.a ^ sample.b) == f_(sample.x, sample.y);
    return sample;
}

SimulationResult simulate_rounds(
    const XorGame &g, const OperatorStrategy &s, uint64_t rounds, uint64_t seed, unsigned shards) {
    if (rounds < 1) {
        throw DomainError("simulate_rounds needs at least one round");
    }
    if (shards < 1) {
        throw DomainError("simulate_rounds needs at least one shard");
    }
    const RoundSampler sampler(g, s);
    std::vector<SimulationResult> parts(shards);
    parallel_for(shards, worker_count(), [&](size_t i) {
        uint64_t count = rounds / shards + (i < rounds % shards ? 1 : 0);
        std::mt19937_64 rng(seed + i);
        SimulationResult &part = parts[i];
        for (uint64_t r = 0; r < count; r++) {
            RoundSample sample = sampler.draw(rng);
            part.wins += sample.win ? 1 : 0;
            part.outcome_counts[2 * sample.a + sample.b]++;
        }
        part.rounds = count;
    });
    SimulationResult result;
    result.shards = shards;
    for (const auto &part : parts) {
        result.rounds += part.rounds;
        result.wins += part.wins;
        for (int k = 0; k < 4; k++) {
            result.outcome_counts[k] += part.outcome_counts[k];
        }
    }
    result.win_rate = static_cast<double>(result.wins) / static_cast<double>(result.rounds);
    result.exact_win_probability = sampler.exact_win_probability();
    return result;
}

namespace {

nlohmann::json interleaved(const ComplexMatrix &o) {
    nlohmann::json arr = nlohmann::json::array();
    for (Eigen::Index i = 0; i < o.rows(); i++) {
        for (Eigen::Index j = 0; j < o.cols(); j++) {
            arr.push_back(o(i, j).real());
            arr.push_back(o(i, j).imag());
        }
    }
    return arr;
}

}  // namespace

nlohmann::json to_json(const OperatorStrategy &s) {
    nlohmann::json alice = nlohmann::json::array(), bob = nlohmann::json::array();
    for (const auto &o : s.alice_ops()) {
        alice.push_back(interleaved(o));
    }
    for (const auto &o : s.bob_ops()) {
        bob.push_back(interleaved(o));
    }
    return {{"local_dim", s.local_dim()}, {"alice_ops", alice}, {"bob_ops", bob}};
}

nlohmann::json to_json(const ConstructionReport &r) {
    nlohmann::json j = {{"region", r.region},
                        {"p", r.p},
                        {"q", r.q},
                        {"normalizations", r.normalizations},
                        {"swapped_divisor_a01_defect", r.swapped_divisor_a01_defect},
                        {"repaired", r.repaired},
                        {"bias", r.bias},
                        {"target", r.target}};
    nlohmann::json raw = nlohmann::json::array();
    for (const auto &rep : r.raw_reports) {
        raw.push_back({{"hermitian_defect", rep.hermitian_defect}, {"involution_defect", rep.involution_defect}});
    }
    j["raw_defects"] = raw;
    j["beta"] = r.beta ? nlohmann::json(*r.beta) : nlohmann::json(nullptr);
    j["formula_cos_beta"] = r.formula_cos_beta ? nlohmann::json(*r.formula_cos_beta) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const SimulationResult &r) {
    return {{"win_rate", r.win_rate},
            {"rounds", r.rounds},
            {"wins", r.wins},
            {"shards", r.shards},
            {"outcome_counts", r.outcome_counts},
            {"exact_win_probability", r.exact_win_probability}};
}

}  // namespace xorgame
