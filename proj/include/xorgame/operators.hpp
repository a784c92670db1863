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

#include <complex>

#include <Eigen/Dense>

namespace xorgame {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

ComplexMatrix pauli_i();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

struct ObservableReport {
    double hermitian_defect = 0.0;
    double involution_defect = 0.0;
    bool pass = false;
};

/// Max-entry defects |O - O^dagger| and |O^2 - I|; pass iff both <= tol.
/// Non-square input reports infinite defects.
ObservableReport validate_observable(const ComplexMatrix &o, double tol);

/// Replaces each eigenvalue of a Hermitian matrix by its sign. Throws
/// DomainError if o is not Hermitian within 1e-10 and DegeneracyError if any
/// eigenvalue has magnitude below 1e-10.
ComplexMatrix spectral_sign(const ComplexMatrix &o);

/// (1/sqrt(d)) sum_i |i>|i>.
ComplexVector maximally_entangled_state(int d);

/// <psi|A (x) B|psi> for the maximally entangled state, as Tr(A B^T) / d.
Complex correlator_trace(const ComplexMatrix &a, const ComplexMatrix &b);

/// <psi|A (x) B|psi> by explicit contraction over the d^2-dimensional space.
Complex correlator_contraction(const ComplexMatrix &a, const ComplexMatrix &b, const ComplexVector &psi);

}  // namespace xorgame
