// Copyright 2026 The fermiqca Authors
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

#ifndef FERMIQCA_LINALG_HPP
#define FERMIQCA_LINALG_HPP

#include "fermiqca/common.hpp"

namespace fermiqca {

/// exp(-i t H) for Hermitian H through its eigendecomposition.
Matrix expm_hermitian(const Matrix &h, double t = 1.0);

/// exp(a) by scaling and squaring a Taylor series summed to degree
/// rows + 30. Entries reached first at high degree keep their relative
/// accuracy, which eigendecomposition does not give.
Matrix expm_taylor(const Matrix &a);

/// Principal logarithm of a unitary: returns Hermitian K with U = exp(iK)
/// and eigenphases of K in (-pi, pi].
Matrix logm_unitary(const Matrix &u);

/// Largest singular value. Exact for small matrices, power iteration above
/// `exact_limit` rows.
double spectral_norm(const Matrix &m, Eigen::Index exact_limit = 512);
double spectral_norm(const SparseMatrix &m, Eigen::Index exact_limit = 512);

/// Frobenius norm, which bounds the spectral norm from above.
double frobenius_norm(const SparseMatrix &m);

/// Operator-norm residual policy used by certificates: the Frobenius norm
/// when it is already at most `tol`, the spectral norm otherwise.
double certified_norm(const SparseMatrix &m, double tol);

/// Eigenphases of a unitary, sorted ascending, in (-pi, pi].
Eigen::VectorXd eigenphases(const Matrix &u);

double unitarity_defect(const Matrix &u);
double unitarity_defect(const SparseMatrix &u);

/// Kronecker product a (x) b with b acting on the low bits.
Matrix kron(const Matrix &a, const Matrix &b);

}  // namespace fermiqca

#endif  // FERMIQCA_LINALG_HPP
