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

#include <chrono>

#include "fermiqca/causality.hpp"
#include "fermiqca/decomposition.hpp"
#include "fermiqca/linalg.hpp"
#include "fermiqca/random.hpp"
#include "oracles.hpp"

using namespace fermiqca;

namespace {

struct System {
  Lattice lat;
  Ordering ord;
};

System line(int sites, int labels) {
  Lattice lat = Lattice::line(sites, false, labels);
  return {lat, Ordering::row_major(lat)};
}

double dense_diff(const MatrixOperator &a, const MatrixOperator &b) { return spectral_norm(Matrix(a - b)); }

}  // namespace

TEST(FermionicSwap, ExchangesModes) {
  const System s = line(3, 1);
  const Mode a = s.ord.mode(0), b = s.ord.mode(2);
  const MatrixOperator sw = fermionic_swap(a, b, s.ord);
  EXPECT_LT(dense_diff(sw * sw, identity_operator(s.ord)), 1e-15);
  EXPECT_LT(dense_diff(sw, MatrixOperator(sw.adjoint())), 1e-15);
  EXPECT_LT(dense_diff(sw * annihilation_matrix(a, s.ord) * sw, annihilation_matrix(b, s.ord)), 1e-15);
  EXPECT_LT(dense_diff(sw * annihilation_matrix(s.ord.mode(1), s.ord) * sw, annihilation_matrix(s.ord.mode(1), s.ord)),
            1e-15);
  // exp(i pi/2 G) from the generator agrees with the closed form.
  const Matrix g = to_dense(lower(swap_generator(a, b), s.ord));
  EXPECT_LT((oracle::expm_minus_i(-M_PI / 2 * g) - to_dense(sw)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_THROW(fermionic_swap(a, a, s.ord), DomainError);
}

TEST(FermionicSwap, ModePermutationMatchesOracle) {
  const System s = line(4, 1);
  std::map<Mode, Mode> perm;
  const std::vector<int> map{1, 3, 0, 2};
  for (int k = 0; k < 4; ++k) perm[s.ord.mode(k)] = s.ord.mode(map[k]);
  const Matrix v = to_dense(mode_permutation_unitary(perm, s.ord));
  EXPECT_EQ((v - oracle::mode_permutation(map)).cwiseAbs().maxCoeff(), 0.0);
}

TEST(DoubledSystem, LayoutAndCopies) {
  const System s = line(2, 2);
  const DoubledSystem ds = DoubledSystem::make(s.lat, s.ord);
  ASSERT_EQ(ds.order.size(), 8);
  for (int k = 0; k < 4; ++k) {
    EXPECT_EQ(ds.order.mode(2 * k), s.ord.mode(k));
    EXPECT_EQ(ds.order.mode(2 * k + 1), DoubledSystem::copy_of(s.ord.mode(k)));
  }
  EXPECT_EQ(ds.copy_mask(ds.order), 0xAAu);
  const Ordering blocked = ds.blocked_order();
  EXPECT_EQ(blocked.mode(0).kind, ModeKind::copy);
  EXPECT_EQ(blocked.mode(4), s.ord.mode(0));
}

TEST(DoubledSystem, CopyUnitaryIsSwapConjugate) {
  const System s = line(2, 1);
  const DoubledSystem ds = DoubledSystem::make(s.lat, s.ord);
  Rng rng(4);
  const MatrixOperator u = random_causal_brickwork(rng, s.lat, s.ord);
  const MatrixOperator ua = embed_physical(u, ds);
  const MatrixOperator g = global_swap(ds, ds.order);
  EXPECT_LT(dense_diff(build_UB(u, ds), g * ua * g), 1e-13);
  // U_A and U_B act on different modes and are both even, so they commute.
  const MatrixOperator ub = build_UB(u, ds);
  EXPECT_LT(dense_diff(ua * ub, ub * ua), 1e-13);
}

TEST(Factorize, FactorizesRandomCausalUnitaries) {
  for (auto [sites, labels] : {std::pair{3, 1}, std::pair{2, 2}, std::pair{3, 2}}) {
    const System s = line(sites, labels);
    const DoubledSystem ds = DoubledSystem::make(s.lat, s.ord);
    for (uint64_t seed = 1; seed <= (labels == 2 && sites == 3 ? 1u : 4u); ++seed) {
      Rng rng(seed);
      const MatrixOperator u = random_causal_brickwork(rng, s.lat, s.ord);
      const Theorem1Result r = theorem1_factorize(u, ds);
      EXPECT_TRUE(r.certified);
      EXPECT_TRUE(r.pass()) << sites << "x" << labels << " seed " << seed;
      EXPECT_LT(r.product_residual, 1e-10);
      EXPECT_LT(r.max_conjugated_commutator, 1e-12);
      EXPECT_LT(r.max_swap_commutator, 1e-12);
      for (double x : r.localization) EXPECT_LT(x, 1e-10);
      const size_t n = static_cast<size_t>(s.ord.size());
      ASSERT_EQ(r.factors.size(), 2 * n);
      for (size_t i = 0; i < n; ++i) {
        EXPECT_EQ(r.factors[i].tag, FactorTag::conjugated_swap);
        EXPECT_EQ(r.factors[i].layer, 0);
        EXPECT_EQ(r.factors[n + i].tag, FactorTag::swap);
        EXPECT_EQ(r.factors[n + i].layer, 1);
      }
    }
  }
}

TEST(Factorize, DenseProductMatchesTarget) {
  // Independent of the certificate: multiply the factor matrices directly.
  const System s = line(2, 1);
  const DoubledSystem ds = DoubledSystem::make(s.lat, s.ord);
  Rng rng(8);
  const MatrixOperator u = random_causal_brickwork(rng, s.lat, s.ord);
  Theorem1Options opt;
  opt.certify = false;
  const Theorem1Result r = theorem1_factorize(u, ds, opt);
  Matrix prod = Matrix::Identity(16, 16);
  for (const auto &f : r.factors) prod = to_dense(factor_matrix(f, ds.order)) * prod;
  const Matrix target = to_dense(embed_physical(u, ds)) * to_dense(build_UB(u, ds)).adjoint();
  EXPECT_LT(spectral_norm(Matrix(prod - target)), 1e-12);
}

TEST(Factorize, RejectsNonCausalInput) {
  const System s = line(3, 1);
  const DoubledSystem ds = DoubledSystem::make(s.lat, s.ord);
  const MatrixOperator sw = fermionic_swap(s.ord.mode(0), s.ord.mode(2), s.ord);
  try {
    theorem1_factorize(sw, ds);
    FAIL() << "expected ContractError";
  } catch (const ContractError &e) {
    EXPECT_NE(std::string(e.what()).find("a(0;0)"), std::string::npos) << e.what();
  }
}

TEST(Factorize, CertificateHasAModeLimit) {
  const System s = line(7, 1);
  const DoubledSystem ds = DoubledSystem::make(s.lat, s.ord);
  EXPECT_THROW(theorem1_factorize(identity_operator(s.ord), ds), ResourceError);
}

TEST(Factorize, MeasurementEquivalence) {
  const System s = line(2, 1);
  const DoubledSystem ds = DoubledSystem::make(s.lat, s.ord);
  Rng rng(12);
  const MatrixOperator u = random_causal_brickwork(rng, s.lat, s.ord);
  const MatrixOperator n0 = creation_matrix(s.ord.mode(0), s.ord) * annihilation_matrix(s.ord.mode(0), s.ord);
  const StateVector psi = random_state(rng, ds.order, ~ds.copy_mask(ds.order) & (ds.order.dim() - 1));
  EXPECT_LT(measurement_equivalence_check(u, ds, n0, psi), 1e-12);
  const StateVector bad = random_state(rng, ds.order, ds.order.dim() - 1);
  EXPECT_THROW(measurement_equivalence_check(u, ds, n0, bad), ContractError);
}

TEST(Factorize, Json) {
  const System s = line(2, 1);
  const DoubledSystem ds = DoubledSystem::make(s.lat, s.ord);
  Rng rng(2);
  const Theorem1Result r = theorem1_factorize(random_causal_brickwork(rng, s.lat, s.ord), ds);
  const nlohmann::json j = to_json(r, ds.order, true);
  EXPECT_TRUE(j.contains("product_residual"));
  ASSERT_EQ(j["factors"].size(), 4u);
  const auto &f = j["factors"][0];
  EXPECT_TRUE(f.contains("support_region"));
  EXPECT_EQ(f["matrix"]["re"].size(), 16u);
  EXPECT_EQ(f["matrix"]["im"][0].size(), 16u);
}

TEST(ShiftSearch, SmallRingAdmitsSwapFactorization) {
  const ShiftSearchResult r3 = search_shift_factorization(3, 3);
  EXPECT_TRUE(r3.found);
  EXPECT_GE(r3.witness.size(), 1u);
}

TEST(ShiftSearch, FiveRingHasNoShallowSwapFactorization) {
  const ShiftSearchResult r5 = search_shift_factorization(5, 3);
  EXPECT_FALSE(r5.found);
  EXPECT_GT(r5.candidates, 0);
  EXPECT_THROW(search_shift_factorization(2, 1), DomainError);
}
