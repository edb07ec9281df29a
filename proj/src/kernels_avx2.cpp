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


#include <algorithm>
#include <vector>

#include "fermiqca/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define FERMIQCA_AVX2 __attribute__((target("avx2,fma")))

namespace fermiqca::kernels::avx2 {

namespace {

constexpr int64_t kRowBlock = 64;
constexpr int64_t kDepthBlock = 128;

// (re, im) accumulators hold a * Re(b) and a * Im(b); this folds them into a * b.
FERMIQCA_AVX2 inline __m256d fold(__m256d re, __m256d im) {
  return _mm256_addsub_pd(re, _mm256_permute_pd(im, 0x5));
}

// C[0:4, 0:3] += A[0:4, 0:k] B[0:k, 0:3].
FERMIQCA_AVX2 void micro_4x3(int64_t k, const cplx *a, int64_t lda, const cplx *b, int64_t ldb, cplx *c,
                             int64_t ldc) {
  __m256d re[3][2], im[3][2];
  for (int q = 0; q < 3; ++q)
    for (int h = 0; h < 2; ++h) re[q][h] = im[q][h] = _mm256_setzero_pd();
  for (int64_t p = 0; p < k; ++p) {
    const double *ap = reinterpret_cast<const double *>(a + p * lda);
    const __m256d a0 = _mm256_loadu_pd(ap);
    const __m256d a1 = _mm256_loadu_pd(ap + 4);
    for (int q = 0; q < 3; ++q) {
      const double *bp = reinterpret_cast<const double *>(b + p + q * ldb);
      const __m256d br = _mm256_broadcast_sd(bp);
      const __m256d bi = _mm256_broadcast_sd(bp + 1);
      re[q][0] = _mm256_fmadd_pd(a0, br, re[q][0]);
      re[q][1] = _mm256_fmadd_pd(a1, br, re[q][1]);
      im[q][0] = _mm256_fmadd_pd(a0, bi, im[q][0]);
      im[q][1] = _mm256_fmadd_pd(a1, bi, im[q][1]);
    }
  }
  for (int q = 0; q < 3; ++q) {
    double *cp = reinterpret_cast<double *>(c + q * ldc);
    _mm256_storeu_pd(cp, _mm256_add_pd(_mm256_loadu_pd(cp), fold(re[q][0], im[q][0])));
    _mm256_storeu_pd(cp + 4, _mm256_add_pd(_mm256_loadu_pd(cp + 4), fold(re[q][1], im[q][1])));
  }
}

// C[0:2, 0:1] += A[0:2, 0:k] B[0:k, 0].
FERMIQCA_AVX2 void micro_2x1(int64_t k, const cplx *a, int64_t lda, const cplx *b, cplx *c) {
  __m256d re = _mm256_setzero_pd(), im = _mm256_setzero_pd();
  for (int64_t p = 0; p < k; ++p) {
    const __m256d av = _mm256_loadu_pd(reinterpret_cast<const double *>(a + p * lda));
    const double *bp = reinterpret_cast<const double *>(b + p);
    re = _mm256_fmadd_pd(av, _mm256_broadcast_sd(bp), re);
    im = _mm256_fmadd_pd(av, _mm256_broadcast_sd(bp + 1), im);
  }
  double *cp = reinterpret_cast<double *>(c);
  _mm256_storeu_pd(cp, _mm256_add_pd(_mm256_loadu_pd(cp), fold(re, im)));
}

void edge(int64_t m, int64_t n, int64_t k, const cplx *a, int64_t lda, const cplx *b, int64_t ldb, cplx *c,
          int64_t ldc) {
  for (int64_t j = 0; j < n; ++j)
    for (int64_t i = 0; i < m; ++i) {
      cplx acc = 0.0;
      for (int64_t p = 0; p < k; ++p) acc += a[i + p * lda] * b[p + j * ldb];
      c[i + j * ldc] += acc;
    }
}

}  // namespace

FERMIQCA_AVX2 void cgemm_acc(int64_t m, int64_t n, int64_t k, const cplx *a, int64_t lda, const cplx *b,
                             int64_t ldb, cplx *c, int64_t ldc) {
  for (int64_t p0 = 0; p0 < k; p0 += kDepthBlock) {
    const int64_t kb = std::min(kDepthBlock, k - p0);
    for (int64_t i0 = 0; i0 < m; i0 += kRowBlock) {
      const int64_t mb = std::min(kRowBlock, m - i0);
      const int64_t m4 = mb - mb % 4;
      const cplx *ablk = a + i0 + p0 * lda;
      int64_t j = 0;
      for (; j + 3 <= n; j += 3) {
        const cplx *bj = b + p0 + j * ldb;
        for (int64_t i = 0; i < m4; i += 4) micro_4x3(kb, ablk + i, lda, bj, ldb, c + i0 + i + j * ldc, ldc);
        edge(mb - m4, 3, kb, ablk + m4, lda, bj, ldb, c + i0 + m4 + j * ldc, ldc);
      }
      for (; j < n; ++j) {
        const cplx *bj = b + p0 + j * ldb;
        const int64_t m2 = mb - mb % 2;
        for (int64_t i = 0; i < m2; i += 2) micro_2x1(kb, ablk + i, lda, bj, c + i0 + i + j * ldc);
        edge(mb - m2, 1, kb, ablk + m2, lda, bj, ldb, c + i0 + m2 + j * ldc, ldc);
      }
    }
  }
}

FERMIQCA_AVX2 void apply_gate(cplx *state, int num_qubits, const int *qubits, int k, const cplx *gate) {
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
    for (uint64_t r = 0; r < g; r += 2) {
      __m256d re = _mm256_setzero_pd(), im = _mm256_setzero_pd();
      for (uint64_t col = 0; col < g; ++col) {
        const __m256d av = _mm256_loadu_pd(reinterpret_cast<const double *>(gate + r + col * g));
        const double *vp = reinterpret_cast<const double *>(in.data() + col);
        re = _mm256_fmadd_pd(av, _mm256_broadcast_sd(vp), re);
        im = _mm256_fmadd_pd(av, _mm256_broadcast_sd(vp + 1), im);
      }
      _mm256_storeu_pd(reinterpret_cast<double *>(out.data() + r), fold(re, im));
    }
    for (uint64_t r = 0; r < g; ++r) state[base | off[r]] = out[r];
  }
}

FERMIQCA_AVX2 void parity_sign(cplx *state, uint64_t dim, uint64_t mask) {
  double *s = reinterpret_cast<double *>(state);
  uint64_t i = 0;
  for (; i + 2 <= dim; i += 2) {
    const double f0 = (popcount(i & mask) & 1) ? -0.0 : 0.0;
    const double f1 = (popcount((i + 1) & mask) & 1) ? -0.0 : 0.0;
    const __m256d flip = _mm256_set_pd(f1, f1, f0, f0);
    _mm256_storeu_pd(s + 2 * i, _mm256_xor_pd(_mm256_loadu_pd(s + 2 * i), flip));
  }
  for (; i < dim; ++i)
    if (popcount(i & mask) & 1) state[i] = -state[i];
}

}  // namespace fermiqca::kernels::avx2

#else

namespace fermiqca::kernels::avx2 {

void cgemm_acc(int64_t m, int64_t n, int64_t k, const cplx *a, int64_t lda, const cplx *b, int64_t ldb, cplx *c,
               int64_t ldc) {
  scalar::cgemm_acc(m, n, k, a, lda, b, ldb, c, ldc);
}
void apply_gate(cplx *state, int num_qubits, const int *qubits, int k, const cplx *gate) {
  scalar::apply_gate(state, num_qubits, qubits, k, gate);
}
void parity_sign(cplx *state, uint64_t dim, uint64_t mask) { scalar::parity_sign(state, dim, mask); }

}  // namespace fermiqca::kernels::avx2

#endif
