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


#include <vector>

#include "fermiqca/kernels.hpp"

#if defined(__ARM_NEON) && defined(__aarch64__)
#include <arm_neon.h>

namespace fermiqca::kernels::neon {

namespace {

// One complex per register: re holds a * Re(b), im holds a * Im(b).
inline float64x2_t fold(float64x2_t re, float64x2_t im) {
  const float64x2_t swapped = vextq_f64(im, im, 1);
  const float64x2_t sign = {-1.0, 1.0};
  return vfmaq_f64(re, swapped, sign);
}

}  // namespace

void cgemm_acc(int64_t m, int64_t n, int64_t k, const cplx *a, int64_t lda, const cplx *b, int64_t ldb, cplx *c,
               int64_t ldc) {
  for (int64_t j = 0; j < n; ++j) {
    int64_t i = 0;
    for (; i + 2 <= m; i += 2) {
      float64x2_t re0 = vdupq_n_f64(0.0), im0 = re0, re1 = re0, im1 = re0;
      for (int64_t p = 0; p < k; ++p) {
        const double *ap = reinterpret_cast<const double *>(a + i + p * lda);
        const double *bp = reinterpret_cast<const double *>(b + p + j * ldb);
        const float64x2_t a0 = vld1q_f64(ap), a1 = vld1q_f64(ap + 2);
        re0 = vfmaq_n_f64(re0, a0, bp[0]);
        im0 = vfmaq_n_f64(im0, a0, bp[1]);
        re1 = vfmaq_n_f64(re1, a1, bp[0]);
        im1 = vfmaq_n_f64(im1, a1, bp[1]);
      }
      double *cp = reinterpret_cast<double *>(c + i + j * ldc);
      vst1q_f64(cp, vaddq_f64(vld1q_f64(cp), fold(re0, im0)));
      vst1q_f64(cp + 2, vaddq_f64(vld1q_f64(cp + 2), fold(re1, im1)));
    }
    for (; i < m; ++i) {
      cplx acc = 0.0;
      for (int64_t p = 0; p < k; ++p) acc += a[i + p * lda] * b[p + j * ldb];
      c[i + j * ldc] += acc;
    }
  }
}

void apply_gate(cplx *state, int num_qubits, const int *qubits, int k, const cplx *gate) {
  const uint64_t g = uint64_t{1} << k;
  std::vector<int> sorted(k);
  detail::sorted_copy(qubits, k, sorted.data());
  std::vector<uint64_t> off(g);
  detail::gate_offsets(qubits, k, off.data());
  std::vector<cplx> in(g);
  const uint64_t bases = uint64_t{1} << (num_qubits - k);
  for (uint64_t t = 0; t < bases; ++t) {
    const uint64_t base = detail::spread_bits(t, sorted.data(), k);
    for (uint64_t r = 0; r < g; ++r) in[r] = state[base | off[r]];
    for (uint64_t r = 0; r < g; ++r) {
      float64x2_t re = vdupq_n_f64(0.0), im = re;
      for (uint64_t col = 0; col < g; ++col) {
        const float64x2_t av = vld1q_f64(reinterpret_cast<const double *>(gate + r + col * g));
        const double *vp = reinterpret_cast<const double *>(in.data() + col);
        re = vfmaq_n_f64(re, av, vp[0]);
        im = vfmaq_n_f64(im, av, vp[1]);
      }
      vst1q_f64(reinterpret_cast<double *>(state + (base | off[r])), fold(re, im));
    }
  }
}

void parity_sign(cplx *state, uint64_t dim, uint64_t mask) {
  for (uint64_t i = 0; i < dim; ++i)
    if (popcount(i & mask) & 1) {
      double *s = reinterpret_cast<double *>(state + i);
      vst1q_f64(s, vnegq_f64(vld1q_f64(s)));
    }
}

}  // namespace fermiqca::kernels::neon

#else

namespace fermiqca::kernels::neon {

void cgemm_acc(int64_t m, int64_t n, int64_t k, const cplx *a, int64_t lda, const cplx *b, int64_t ldb, cplx *c,
               int64_t ldc) {
  scalar::cgemm_acc(m, n, k, a, lda, b, ldb, c, ldc);
}
void apply_gate(cplx *state, int num_qubits, const int *qubits, int k, const cplx *gate) {
  scalar::apply_gate(state, num_qubits, qubits, k, gate);
}
void parity_sign(cplx *state, uint64_t dim, uint64_t mask) { scalar::parity_sign(state, dim, mask); }

}  // namespace fermiqca::kernels::neon

#endif
