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


#include "fermiqca/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>
#include <vector>

namespace fermiqca::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

bool cpu_has_neon() {
#if defined(__ARM_NEON)
  return true;
#else
  return false;
#endif
}

Backend detect() {
  if (const char *env = std::getenv("FERMIQCA_SIMD")) {
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon})
      if (std::strcmp(env, backend_name(b)) == 0 && backend_supported(b)) return b;
  }
  if (cpu_has_avx2()) return Backend::avx2;
  if (cpu_has_neon()) return Backend::neon;
  return Backend::scalar;
}

std::atomic<int> g_backend{-1};

}  // namespace

const char *backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "?";
}

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::scalar: return true;
    case Backend::avx2: return cpu_has_avx2();
    case Backend::neon: return cpu_has_neon();
  }
  return false;
}

Backend active_backend() {
  int b = g_backend.load(std::memory_order_relaxed);
  if (b < 0) {
    b = static_cast<int>(detect());
    g_backend.store(b, std::memory_order_relaxed);
  }
  return static_cast<Backend>(b);
}

void set_backend(Backend b) {
  if (!backend_supported(b)) throw DomainError(std::string("SIMD backend not supported here: ") + backend_name(b));
  g_backend.store(static_cast<int>(b), std::memory_order_relaxed);
}

void cgemm_acc(int64_t m, int64_t n, int64_t k, const cplx *a, int64_t lda, const cplx *b, int64_t ldb, cplx *c,
               int64_t ldc) {
  switch (active_backend()) {
    case Backend::avx2: return avx2::cgemm_acc(m, n, k, a, lda, b, ldb, c, ldc);
    case Backend::neon: return neon::cgemm_acc(m, n, k, a, lda, b, ldb, c, ldc);
    default: return scalar::cgemm_acc(m, n, k, a, lda, b, ldb, c, ldc);
  }
}

void apply_gate(cplx *state, int num_qubits, const int *qubits, int k, const cplx *gate) {
  if (k < 1 || k > num_qubits) throw DomainError("apply_gate: gate arity out of range");
  for (int j = 0; j < k; ++j) {
    if (qubits[j] < 0 || qubits[j] >= num_qubits) throw DomainError("apply_gate: qubit out of range");
    for (int i = 0; i < j; ++i)
      if (qubits[i] == qubits[j]) throw DomainError("apply_gate: repeated qubit");
  }
  switch (active_backend()) {
    case Backend::avx2: return avx2::apply_gate(state, num_qubits, qubits, k, gate);
    case Backend::neon: return neon::apply_gate(state, num_qubits, qubits, k, gate);
    default: return scalar::apply_gate(state, num_qubits, qubits, k, gate);
  }
}

void parity_sign(cplx *state, uint64_t dim, uint64_t mask) {
  switch (active_backend()) {
    case Backend::avx2: return avx2::parity_sign(state, dim, mask);
    case Backend::neon: return neon::parity_sign(state, dim, mask);
    default: return scalar::parity_sign(state, dim, mask);
  }
}

Matrix gemm(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows()) throw DomainError("gemm: inner dimensions differ");
  Matrix c = Matrix::Zero(a.rows(), b.cols());
  if (c.size() == 0 || a.cols() == 0) return c;
  cgemm_acc(a.rows(), b.cols(), a.cols(), a.data(), a.rows(), b.data(), b.rows(), c.data(), c.rows());
  return c;
}

namespace detail {

void sorted_copy(const int *qubits, int k, int *out) {
  std::copy(qubits, qubits + k, out);
  std::sort(out, out + k);
}

uint64_t spread_bits(uint64_t x, const int *sorted_qubits, int k) {
  for (int j = 0; j < k; ++j) {
    const uint64_t q = static_cast<uint64_t>(sorted_qubits[j]);
    const uint64_t low = x & ((uint64_t{1} << q) - 1);
    x = low | ((x >> q) << (q + 1));
  }
  return x;
}

void gate_offsets(const int *qubits, int k, uint64_t *offsets) {
  for (uint64_t r = 0; r < (uint64_t{1} << k); ++r) {
    uint64_t off = 0;
    for (int j = 0; j < k; ++j)
      if ((r >> j) & 1) off |= uint64_t{1} << qubits[j];
    offsets[r] = off;
  }
}

}  // namespace detail

namespace scalar {

void cgemm_acc(int64_t m, int64_t n, int64_t k, const cplx *a, int64_t lda, const cplx *b, int64_t ldb, cplx *c,
               int64_t ldc) {
  for (int64_t j = 0; j < n; ++j)
    for (int64_t p = 0; p < k; ++p) {
      const cplx s = b[p + j * ldb];
      if (s == cplx(0.0)) continue;
      const cplx *ap = a + p * lda;
      cplx *cj = c + j * ldc;
      for (int64_t i = 0; i < m; ++i) cj[i] += ap[i] * s;
    }
}

void apply_gate(cplx *state, int num_qubits, const int *qubits, int k, const cplx *gate) {
  const uint64_t g = uint64_t{1} << k;
  std::vector<int> sorted(k);
  detail::sorted_copy(qubits, k, sorted.data());
  std::vector<uint64_t> off(g);
  detail::gate_offsets(qubits, k, off.data());
  std::vector<cplx> in(g), out(g);
  const uint64_t bases = uint64_t{1} << (num_qubits - k);
  for (uint64_t t = 0; t < bases; ++t) {
    const uint64_t base = detail::spread_bits(t, sorted.data(), k);
    for (uint64_t r = 0; r < g; ++r) in[r] = state[base | off[r]];
    for (uint64_t r = 0; r < g; ++r) {
      cplx acc = 0.0;
      for (uint64_t col = 0; col < g; ++col) acc += gate[r + col * g] * in[col];
      out[r] = acc;
    }
    for (uint64_t r = 0; r < g; ++r) state[base | off[r]] = out[r];
  }
}

void parity_sign(cplx *state, uint64_t dim, uint64_t mask) {
  for (uint64_t i = 0; i < dim; ++i)
    if (popcount(i & mask) & 1) state[i] = -state[i];
}

}  // namespace scalar

}  // namespace fermiqca::kernels
