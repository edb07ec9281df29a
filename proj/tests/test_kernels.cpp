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


#include <gtest/gtest.h>

#include "fermiqca/kernels.hpp"
#include "fermiqca/random.hpp"

using namespace fermiqca;
namespace k = fermiqca::kernels;

namespace {

using GemmFn = void (*)(int64_t, int64_t, int64_t, const cplx *, int64_t, const cplx *, int64_t, cplx *, int64_t);
using GateFn = void (*)(cplx *, int, const int *, int, const cplx *);
using ParityFn = void (*)(cplx *, uint64_t, uint64_t);

struct Variant {
  k::Backend backend;
  GemmFn gemm;
  GateFn gate;
  ParityFn parity;
};

std::vector<Variant> supported() {
  std::vector<Variant> out;
  if (k::backend_supported(k::Backend::avx2))
    out.push_back({k::Backend::avx2, k::avx2::cgemm_acc, k::avx2::apply_gate, k::avx2::parity_sign});
  if (k::backend_supported(k::Backend::neon))
    out.push_back({k::Backend::neon, k::neon::cgemm_acc, k::neon::apply_gate, k::neon::parity_sign});
  return out;
}

Matrix random_matrix(Rng &rng, Eigen::Index r, Eigen::Index c) {
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = rng.complex_normal();
  return m;
}

class BackendGuard {
 public:
  BackendGuard() : saved_(k::active_backend()) {}
  ~BackendGuard() { k::set_backend(saved_); }

 private:
  k::Backend saved_;
};

}  // namespace

TEST(Kernels, ScalarGemmMatchesEigen) {
  Rng rng(1);
  for (auto [m, n, kk] : {std::tuple{1, 1, 1}, std::tuple{7, 5, 3}, std::tuple{70, 33, 130}}) {
    const Matrix a = random_matrix(rng, m, kk), b = random_matrix(rng, kk, n);
    Matrix c = random_matrix(rng, m, n);
    const Matrix want = c + a * b;
    k::scalar::cgemm_acc(m, n, kk, a.data(), m, b.data(), kk, c.data(), m);
    EXPECT_LT((c - want).cwiseAbs().maxCoeff(), 1e-11);
  }
}

TEST(Kernels, SimdGemmMatchesScalar) {
  Rng rng(2);
  for (const auto &v : supported())
    for (auto [m, n, kk] : {std::tuple{1, 1, 1}, std::tuple{4, 3, 2}, std::tuple{5, 7, 9}, std::tuple{67, 131, 129},
                            std::tuple{128, 6, 300}}) {
      // Embedded in larger buffers to exercise leading dimensions.
      const Matrix a = random_matrix(rng, m + 3, kk), b = random_matrix(rng, kk + 1, n);
      Matrix c1 = random_matrix(rng, m + 2, n), c2 = c1;
      k::scalar::cgemm_acc(m, n, kk, a.data(), m + 3, b.data(), kk + 1, c1.data(), m + 2);
      v.gemm(m, n, kk, a.data(), m + 3, b.data(), kk + 1, c2.data(), m + 2);
      EXPECT_LT((c1 - c2).cwiseAbs().maxCoeff(), 1e-11) << k::backend_name(v.backend) << " " << m << "x" << n;
      EXPECT_EQ(c1.bottomRows(2), c2.bottomRows(2));
    }
}

TEST(Kernels, SimdGateMatchesScalar) {
  Rng rng(3);
  for (const auto &v : supported())
    for (int arity = 1; arity <= 6; ++arity)
      for (int trial = 0; trial < 4; ++trial) {
        const int n = 8;
        std::vector<int> qs{0, 1, 2, 3, 4, 5, 6, 7};
        for (int i = 7; i > 0; --i) std::swap(qs[i], qs[rng.below(i + 1)]);
        qs.resize(arity);
        const Matrix g = random_matrix(rng, 1 << arity, 1 << arity);
        Vector s1 = random_matrix(rng, 1 << n, 1), s2 = s1;
        k::scalar::apply_gate(s1.data(), n, qs.data(), arity, g.data());
        v.gate(s2.data(), n, qs.data(), arity, g.data());
        EXPECT_LT((s1 - s2).cwiseAbs().maxCoeff(), 1e-12) << k::backend_name(v.backend) << " arity " << arity;
      }
}

TEST(Kernels, SimdParityMatchesScalar) {
  Rng rng(4);
  for (const auto &v : supported())
    for (uint64_t mask : {0x0ull, 0x1ull, 0x5ull, 0x3Full}) {
      Vector s1 = random_matrix(rng, 63, 1), s2 = s1;
      k::scalar::parity_sign(s1.data(), 63, mask);
      v.parity(s2.data(), 63, mask);
      EXPECT_EQ(s1, s2);
    }
}

TEST(Kernels, ScalarGateMatchesDefinition) {
  // Single X on qubit 1 of 3 qubits swaps amplitudes i and i ^ 2.
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  Vector s(8);
  for (int i = 0; i < 8; ++i) s(i) = double(i);
  const int q = 1;
  k::scalar::apply_gate(s.data(), 3, &q, 1, x.data());
  for (int i = 0; i < 8; ++i) EXPECT_EQ(s(i), cplx(double(i ^ 2)));
}

TEST(Kernels, DispatchAndValidation) {
  BackendGuard guard;
  EXPECT_TRUE(k::backend_supported(k::Backend::scalar));
  EXPECT_TRUE(k::backend_supported(k::active_backend()));
  k::set_backend(k::Backend::scalar);
  EXPECT_EQ(k::active_backend(), k::Backend::scalar);
  for (auto b : {k::Backend::avx2, k::Backend::neon})
    if (!k::backend_supported(b)) EXPECT_THROW(k::set_backend(b), DomainError);
  Vector s = Vector::Zero(4);
  const Matrix g = Matrix::Identity(4, 4);
  const int bad[2] = {0, 0};
  EXPECT_THROW(k::apply_gate(s.data(), 2, bad, 2, g.data()), DomainError);
  const int out_of_range[1] = {2};
  EXPECT_THROW(k::apply_gate(s.data(), 2, out_of_range, 1, g.data()), DomainError);
  EXPECT_THROW(k::gemm(Matrix::Zero(2, 3), Matrix::Zero(2, 3)), DomainError);
}

TEST(Kernels, GemmWrapperUsesActiveBackend) {
  BackendGuard guard;
  Rng rng(5);
  const Matrix a = random_matrix(rng, 37, 41), b = random_matrix(rng, 41, 29);
  for (auto backend : {k::Backend::scalar, k::Backend::avx2, k::Backend::neon}) {
    if (!k::backend_supported(backend)) continue;
    k::set_backend(backend);
    EXPECT_LT((k::gemm(a, b) - a * b).cwiseAbs().maxCoeff(), 1e-11) << k::backend_name(backend);
  }
}
