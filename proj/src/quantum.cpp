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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "xorgame/errors.hpp"
#include "xorgame/parallel.hpp"
#include "xorgame/strategy.hpp"
#include "xorgame/symmetric_eigen.hpp"

namespace xorgame {

namespace {

// Rows with smaller norm are treated as zero and replaced by e_1.
constexpr double kZeroNorm = 1e-14;

void normalize_rows(Eigen::MatrixXd &a) {
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        double norm = a.row(i).norm();
        if (norm <= kZeroNorm) {
            a.row(i).setZero();
            a(i, 0) = 1.0;
        } else {
            a.row(i) /= norm;
        }
    }
}

void check_finite(const XorGame &g) {
    if (!g.cost().allFinite()) {
        throw DomainError("game has non-finite entries");
    }
}

}  // namespace

double vector_objective(const XorGame &g, const VectorStrategy &s) {
    return (g.cost().array() * (s.u * s.v.transpose()).array()).sum();
}

Eigen::MatrixXd random_unit_rows(int rows, int rank, uint64_t stream) {
    std::mt19937_64 rng(stream);
    Eigen::MatrixXd a(rows, rank);
    for (int i = 0; i < rows; i++) {
        for (int j = 0; j < rank; j++) {
            a(i, j) = 2.0 * uniform_unit(rng) - 1.0;
        }
    }
    normalize_rows(a);
    return a;
}

AscentResult alternating_ascent(
    const XorGame &g, Eigen::MatrixXd u0, double tol, int max_iterations, const AscentObserver &observer) {
    check_finite(g);
    if (u0.rows() != g.m() || u0.cols() < 1 || !u0.allFinite()) {
        throw DomainError("starting vectors do not match the game");
    }
    const Matrix &cost = g.cost();
    AscentResult result;
    VectorStrategy &s = result.strategy;
    s.rank = static_cast<int>(u0.cols());
    s.u = std::move(u0);
    normalize_rows(s.u);

    double previous = -std::numeric_limits<double>::infinity();
    double objective = previous;
    int it = 0;
    while (it < max_iterations) {
        it++;
        s.v = cost.transpose() * s.u;
        normalize_rows(s.v);
        if (observer) {
            observer(vector_objective(g, s));
        }
        s.u = cost * s.v;
        normalize_rows(s.u);
        objective = vector_objective(g, s);
        if (observer) {
            observer(objective);
        }
        if (std::abs(objective - previous) < tol) {
            break;
        }
        previous = objective;
    }
    result.objective = objective;
    result.iterations = it;
    return result;
}

BiasCertificate certify(const XorGame &g, const VectorStrategy &s) {
    const int m = g.m(), n = g.n();
    if (s.u.rows() != m || s.v.rows() != n || s.u.cols() != s.v.cols()) {
        throw DomainError("vector strategy does not match the game");
    }
    const Matrix &cost = g.cost();
    Eigen::VectorXd lambda = (cost * s.v).rowwise().norm();
    Eigen::VectorXd mu = (cost.transpose() * s.u).rowwise().norm();

    Eigen::MatrixXd dual = Eigen::MatrixXd::Zero(m + n, m + n);
    dual.topRightCorner(m, n) = -0.5 * cost;
    dual.bottomLeftCorner(n, m) = -0.5 * cost.transpose();
    dual.diagonal().head(m) = 0.5 * lambda;
    dual.diagonal().tail(n) = 0.5 * mu;

    BiasCertificate c;
    c.strategy = s;
    c.rank = s.rank;
    c.lower = vector_objective(g, s);
    c.min_eig = min_eigenvalue(dual);
    c.upper = 0.5 * (lambda.sum() + mu.sum()) + std::max(0.0, -c.min_eig) * (m + n);
    c.slack = std::max(0.0, c.upper - c.lower);
    return c;
}

BiasCertificate quantum_bias(const XorGame &g, const QuantumOptions &options) {
    check_finite(g);
    if (options.restarts < 1) {
        throw DomainError("quantum_bias needs at least one restart");
    }
    if (options.rank < 0 || !(options.tol > 0.0) || options.max_iterations < 1) {
        throw DomainError("invalid quantum solver settings");
    }
    const int rank = options.rank > 0 ? options.rank : g.m() + g.n();
    std::vector<AscentResult> runs(options.restarts);
    parallel_for(options.restarts, worker_count(options.threads), [&](size_t r) {
        runs[r] = alternating_ascent(
            g, random_unit_rows(g.m(), rank, options.seed + r), options.tol, options.max_iterations);
    });
    size_t best = 0;
    for (size_t r = 1; r < runs.size(); r++) {
        if (runs[r].objective > runs[best].objective) {
            best = r;
        }
    }
    BiasCertificate c = certify(g, runs[best].strategy);
    c.restarts = options.restarts;
    c.seed = options.seed;
    return c;
}

bool in_region1(double p, double q) {
    if (!(q > 0.0) || !(p >= 0.5)) {
        return false;
    }
    double t = 1.0 / (2.0 * q);
    return 1.0 >= t && t > p && p >= 0.5;
}

bool in_region2(double p, double q) {
    if (!(q > 0.0)) {
        return false;
    }
    double t = 1.0 / (2.0 * q);
    return 1.0 >= p && p >= t && t >= 0.5;
}

double closed_form_region1(double p, double q) {
    if (!(q > 0.0)) {
        throw DomainError("region 1 requires q > 0");
    }
    double t = 1.0 / (2.0 * q);
    std::ostringstream why;
    if (!(1.0 >= t)) {
        why << "region 1 requires 1 >= 1/(2q), got 1/(2q) = " << t;
    } else if (!(t > p)) {
        why << "region 1 requires 1/(2q) > p, got 1/(2q) = " << t << " and p = " << p;
    } else if (!(p >= 0.5)) {
        why << "region 1 requires p >= 1/2, got p = " << p;
    }
    if (!why.str().empty()) {
        throw DomainError(why.str());
    }
    return std::sqrt(q * q + (1 - q) * (1 - q)) * std::sqrt(p * p + (1 - p) * (1 - p));
}

double closed_form_region2(double p, double q) {
    if (!(q > 0.0)) {
        throw DomainError("region 2 requires q > 0");
    }
    double t = 1.0 / (2.0 * q);
    std::ostringstream why;
    if (!(1.0 >= p)) {
        why << "region 2 requires p <= 1, got p = " << p;
    } else if (!(p >= t)) {
        why << "region 2 requires p >= 1/(2q), got p = " << p << " and 1/(2q) = " << t;
    } else if (!(t >= 0.5)) {
        why << "region 2 requires 1/(2q) >= 1/2, got 1/(2q) = " << t;
    }
    if (!why.str().empty()) {
        throw DomainError(why.str());
    }
    return (1.0 - 2.0 * (1 - p) * (1 - q)) / std::sqrt(2.0);
}

double quantum_bias_of_sum(std::span<const double> biases) {
    double product = 1.0;
    for (double b : biases) {
        if (!(b >= 0.0 && b <= 1.0)) {
            throw DomainError("biases must lie in [0, 1]");
        }
        product *= b;
    }
    return product;
}

nlohmann::json to_json(const BiasCertificate &c) {
    return {{"lower", c.lower},
            {"upper", c.upper},
            {"slack", c.slack},
            {"min_eig", c.min_eig},
            {"rank", c.rank},
            {"restarts", c.restarts},
            {"seed", c.seed}};
}

}  // namespace xorgame
