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

#include <Eigen/Dense>

namespace xorgame {

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, sorted
/// ascending. Throws DomainError if the input is not symmetric within 1e-12.
Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd &sym);

double min_eigenvalue(const Eigen::MatrixXd &sym);

}  // namespace xorgame
