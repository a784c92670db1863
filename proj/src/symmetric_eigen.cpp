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

#include "xorgame/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>

#include "xorgame/errors.hpp"

namespace xorgame {

namespace {

constexpr double kSymmetryTolerance = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Eigen::MatrixXd &a) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = i + 1; j < a.cols(); j++) {
            s += a(i, j) * a(i, j);
        }
    }
    return std::sqrt(s);
}

}  // namespace

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd &sym) {
    if (sym.rows() != sym.cols()) {
        throw DomainError("eigenvalues need a square matrix");
    }
    if (sym.size() > 0 && (sym - sym.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance) {
        throw DomainError("matrix is not symmetric within 1e-12");
    }
    const Eigen::Index n = sym.rows();
    Eigen::MatrixXd a = 0.5 * (sym + sym.transpose());
    const double scale = std::max(a.cwiseAbs().maxCoeff(), 1e-300);

    for (int sweep = 0; sweep < kMaxSweeps; sweep++) {
        if (off_diagonal_norm(a) <= 1e-15 * scale) {
            break;
        }
        for (Eigen::Index p = 0; p < n; p++) {
            for (Eigen::Index q = p + 1; q < n; q++) {
                const double apq = a(p, q);
                if (std::abs(apq) <= 1e-300) {
                    continue;
                }
                // Rotation angle zeroing a(p, q); t is the smaller root of
                // t^2 + 2 theta t - 1 = 0.
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (Eigen::Index k = 0; k < n; k++) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; k++) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }
    Eigen::VectorXd evals = a.diagonal();
    std::sort(evals.data(), evals.data() + evals.size());
    return evals;
}

double min_eigenvalue(const Eigen::MatrixXd &sym) {
    if (sym.rows() == 0) {
        throw DomainError("min_eigenvalue of an empty matrix");
    }
    return symmetric_eigenvalues(sym)(0);
}

}  // namespace xorgame
