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

#include "xorgame/operators.hpp"

#include <cmath>
#include <limits>

#include "xorgame/errors.hpp"

namespace xorgame {

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kZeroEigenvalue = 1e-10;

}  // namespace

ComplexMatrix pauli_i() {
    return ComplexMatrix::Identity(2, 2);
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_y() {
    const Complex i(0, 1);
    ComplexMatrix m(2, 2);
    m << 0, -i, i, 0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ObservableReport validate_observable(const ComplexMatrix &o, double tol) {
    ObservableReport r;
    if (o.rows() != o.cols() || o.rows() == 0) {
        r.hermitian_defect = r.involution_defect = std::numeric_limits<double>::infinity();
        return r;
    }
    r.hermitian_defect = (o - o.adjoint()).cwiseAbs().maxCoeff();
    r.involution_defect = (o * o - ComplexMatrix::Identity(o.rows(), o.cols())).cwiseAbs().maxCoeff();
    r.pass = r.hermitian_defect <= tol && r.involution_defect <= tol;
    return r;
}

ComplexMatrix spectral_sign(const ComplexMatrix &o) {
    if (o.rows() != o.cols() || o.rows() == 0) {
        throw DomainError("spectral_sign needs a nonempty square matrix");
    }
    if ((o - o.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
        throw DomainError("spectral_sign needs a Hermitian matrix");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (o + o.adjoint()));
    if (solver.info() != Eigen::Success) {
        throw DegeneracyError("eigendecomposition failed");
    }
    Eigen::VectorXd signs(o.rows());
    for (Eigen::Index i = 0; i < signs.size(); i++) {
        double ev = solver.eigenvalues()(i);
        if (std::abs(ev) < kZeroEigenvalue) {
            throw DegeneracyError("operator has a zero eigenvalue; its sign is not determined");
        }
        signs(i) = ev > 0 ? 1.0 : -1.0;
    }
    const ComplexMatrix &vecs = solver.eigenvectors();
    ComplexMatrix out = vecs * signs.cast<Complex>().asDiagonal() * vecs.adjoint();
    return 0.5 * (out + out.adjoint());
}

ComplexVector maximally_entangled_state(int d) {
    if (d < 1) {
        throw DomainError("local dimension must be positive");
    }
    ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(d) * d);
    for (int i = 0; i < d; i++) {
        psi(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
    }
    return psi;
}

Complex correlator_trace(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.rows() != a.cols() || b.rows() != b.cols()) {
        throw DomainError("correlator needs square operators of equal size");
    }
    return (a.cwiseProduct(b)).sum() / static_cast<double>(a.rows());
}

Complex correlator_contraction(const ComplexMatrix &a, const ComplexMatrix &b, const ComplexVector &psi) {
    if (a.rows() != b.rows() || a.rows() != a.cols() || b.rows() != b.cols() ||
        psi.size() != a.rows() * b.rows()) {
        throw DomainError("correlator dimensions do not match the state");
    }
    return psi.dot(kron(a, b) * psi);
}

}  // namespace xorgame
