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

#ifndef FERMIQCA_COMMON_HPP
#define FERMIQCA_COMMON_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace fermiqca {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<cplx>;
using Triplet = Eigen::Triplet<cplx>;

/// Operators over the 2^N occupation basis. Storage is sparse; the meaning
/// is always the dense matrix it represents.
using MatrixOperator = SparseMatrix;

/// Amplitudes over the 2^N occupation basis.
using StateVector = Vector;

/// Unknown mode, malformed argument, dimension mismatch.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Request that would exceed a configured size limit.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A documented precondition of the operation does not hold.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr cplx kI{0.0, 1.0};

/// Dense mode cap. Reads FERMIQCA_MAX_MODES once; defaults to 16.
int max_modes();

inline int popcount(uint64_t x) { return __builtin_popcountll(x); }

}  // namespace fermiqca

#endif  // FERMIQCA_COMMON_HPP
