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


#ifndef FERMIQCA_KERNELS_HPP
#define FERMIQCA_KERNELS_HPP

#include <cstdint>

#include "fermiqca/common.hpp"

namespace fermiqca::kernels {

enum class Backend : uint8_t { scalar, avx2, neon };

const char *backend_name(Backend b);
bool backend_supported(Backend b);

/// Backend chosen at first use: the best supported one, unless the
/// FERMIQCA_SIMD environment variable names another (scalar, avx2, neon).
Backend active_backend();
/// Throws DomainError when the backend is not supported on this machine.
void set_backend(Backend b);

/// C += A * B, all column-major with leading dimensions.
void cgemm_acc(int64_t m, int64_t n, int64_t k, const cplx *a, int64_t lda, const cplx *b, int64_t ldb, cplx *c,
               int64_t ldc);

/// Applies a 2^k x 2^k column-major gate to `state` (2^num_qubits
/// amplitudes). Bit j of the gate's local index is qubit qubits[j].
void apply_gate(cplx *state, int num_qubits, const int *qubits, int k, const cplx *gate);

/// Multiplies amplitude i by (-1)^popcount(i & mask).
void parity_sign(cplx *state, uint64_t dim, uint64_t mask);

/// Dense product through cgemm_acc.
Matrix gemm(const Matrix &a, const Matrix &b);

// Per-backend entry points, exposed for equivalence tests.
namespace scalar {
void cgemm_acc(int64_t m, int64_t n, int64_t k, const cplx *a, int64_t lda, const cplx *b, int64_t ldb, cplx *c,
               int64_t ldc);
void apply_gate(cplx *state, int num_qubits, const int *qubits, int k, const cplx *gate);
void parity_sign(cplx *state, uint64_t dim, uint64_t mask);
}  // namespace scalar

namespace avx2 {
void cgemm_acc(int64_t m, int64_t n, int64_t k, const cplx *a, int64_t lda, const cplx *b, int64_t ldb, cplx *c,
               int64_t ldc);
void apply_gate(cplx *state, int num_qubits, const int *qubits, int k, const cplx *gate);
void parity_sign(cplx *state, uint64_t dim, uint64_t mask);
}  // namespace avx2

namespace neon {
void cgemm_acc(int64_t m, int64_t n, int64_t k, const cplx *a, int64_t lda, const cplx *b, int64_t ldb, cplx *c,
               int64_t ldc);
void apply_gate(cplx *state, int num_qubits, const int *qubits, int k, const cplx *gate);
void parity_sign(cplx *state, uint64_t dim, uint64_t mask);
}  // namespace neon

namespace detail {
/// Indices with the gate qubits cleared, in ascending order, and the 2^k
/// offsets of the gate's local basis states.
uint64_t spread_bits(uint64_t x, const int *sorted_qubits, int k);
void gate_offsets(const int *qubits, int k, uint64_t *offsets);
void sorted_copy(const int *qubits, int k, int *out);
}  // namespace detail

}  // namespace fermiqca::kernels

#endif  // FERMIQCA_KERNELS_HPP
