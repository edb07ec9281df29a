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

#include "fermiqca/dirac1d.hpp"
#include "fermiqca/jwmap.hpp"
#include "fermiqca/linalg.hpp"
#include "fermiqca/majorana.hpp"
#include "fermiqca/random.hpp"

using namespace fermiqca;

namespace {

// Line of `sites` with one physical mode per site and the given pairs.
struct Fixture {
  Lattice lat;
  std::vector<AncillaPair> pairs;
  Ordering ord;
  Fixture(int sites, std::vector<AncillaPair> ps) : lat(Lattice::line(sites, false)), pairs(std::move(ps)) {
    ord = with_ancillas(Ordering::row_major(lat), pairs);
  }
  Mode a(int x) const { return Mode{{x}, 0}; }
};

double norm2(const Matrix &m) { return spectral_norm(m); }

SymbolicOperator hop(const Mode &x, const Mode &y, cplx t) {
  SymbolicOperator h = t * SymbolicOperator::create(x) * SymbolicOperator::annihilate(y);
  return h + h.adjoint();
}

}  // namespace

TEST(Majorana, AncillaPlacementFollowsHostSite) {
  const Fixture fx(3, {make_ancilla_pair(0, {0}, {2})});
  ASSERT_EQ(fx.ord.size(), 5);
  EXPECT_EQ(fx.ord.pi(fx.pairs[0].c_at_x), 1);
  EXPECT_EQ(fx.ord.pi(fx.pairs[0].c_at_y), 4);
  EXPECT_TRUE(fx.ord.same_site_consecutive());
  EXPECT_EQ(ancillas_per_site(fx.pairs).at({0}), 1);
  const Lattice lat = with_ancillas(fx.lat, fx.pairs);
  EXPECT_TRUE(lat.contains(fx.pairs[0].c_at_y));
}

TEST(Majorana, MOperatorIsAnInvolution) {
  const Fixture fx(3, {make_ancilla_pair(0, {0}, {2})});
  const Matrix m = to_dense(m_operator(fx.pairs[0], fx.ord));
  const Eigen::Index d = m.rows();
  EXPECT_LT(norm2(m * m - Matrix::Identity(d, d)), 1e-14);
  EXPECT_LT(norm2(m - m.adjoint()), 1e-14);
  const Matrix p = to_dense(plus_projector(fx.pairs, fx.ord));
  EXPECT_NEAR(p.trace().real(), d / 2.0, 1e-12);
  EXPECT_LT(norm2(m * p - p), 1e-14);
  // Even in the ancillas: commutes with every physical bilinear.
  const Matrix h = to_dense(lower(hop(fx.a(0), fx.a(1), {0.3, 0.2}), fx.ord));
  EXPECT_LT(norm2(m * h - h * m), 1e-14);
  const Matrix mo = to_dense(majorana_op(fx.pairs[0].c_at_x, fx.ord));
  EXPECT_LT(norm2(mo * mo - Matrix::Identity(d, d)), 1e-14);
  EXPECT_THROW(majorana_op(fx.a(0), fx.ord), DomainError);
}

TEST(Majorana, PlusStateIsJointEigenstate) {
  const Fixture fx(4, {make_ancilla_pair(0, {0}, {2}), make_ancilla_pair(1, {1}, {3})});
  const StateVector psi = prepare_plus_state(fx.pairs, fx.ord);
  EXPECT_NEAR(psi.norm(), 1.0, 1e-14);
  for (const auto &p : fx.pairs) EXPECT_LT((m_operator(p, fx.ord) * psi - psi).norm(), 1e-12);
  const Fixture bad(3, {make_ancilla_pair(0, {0}, {2})});
  AncillaPair twin = bad.pairs[0];
  EXPECT_THROW(prepare_plus_state({bad.pairs[0], twin}, bad.ord), DomainError);
}

TEST(Majorana, BRotationPreparesPlusState) {
  const Fixture fx(3, {make_ancilla_pair(0, {0}, {2})});
  const Matrix b = to_dense(lower(b_symbol(fx.pairs[0]), fx.ord));
  const Eigen::Index d = b.rows();
  EXPECT_LT(norm2(b * b - Matrix::Identity(d, d)), 1e-14);
  const StateVector out = b_unitary(fx.pairs[0], fx.ord, M_PI / 2) * vacuum(fx.ord);
  const StateVector want = kI * prepare_plus_state(fx.pairs, fx.ord);
  EXPECT_LT((out - want).norm(), 1e-14);
}

TEST(Majorana, SubstitutionAgreesOnPlusSpace) {
  const Fixture fx(3, {make_ancilla_pair(0, {0}, {2})});
  const Matrix p = to_dense(plus_projector(fx.pairs, fx.ord));
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const cplx t = rng.complex_normal(), w = rng.complex_normal();
    SymbolicOperator op = hop(fx.a(0), fx.a(2), t);
    SymbolicOperator q = w * SymbolicOperator::create(fx.a(2)) * SymbolicOperator::annihilate(fx.a(0)) *
                         SymbolicOperator::create(fx.a(1)) * SymbolicOperator::annihilate(fx.a(1));
    op += q + q.adjoint();
    const SymbolicOperator sub = substitute(op, fx.pairs[0]);
    const Matrix diff = to_dense(lower(sub, fx.ord)) - to_dense(lower(op, fx.ord));
    EXPECT_LT(norm2(diff * p), 1e-10);
    EXPECT_GT(norm2(diff), 0.1);  // the operators differ off the plus space
  }
}

TEST(Majorana, SubstitutedHoppingIsQubitLocal) {
  const Lattice lat = dirac_lattice(5);
  AncillaRegistry reg;
  reg.add({4}, {0});
  const Ordering ord = with_ancillas(dirac_ordering(lat), reg.pairs());
  const Lattice lat2 = with_ancillas(lat, reg.pairs());
  const SymbolicOperator h = hop(Mode{{0}, kLeft}, Mode{{4}, kRight}, 1.0);
  EXPECT_FALSE(jw_locality_report(h, ord, lat2)[0].local);
  for (const auto &e : jw_locality_report(substitute(h, reg), ord, lat2)) EXPECT_TRUE(e.local);
}

TEST(Majorana, OverlappingRepairedFactorsCommuteLikeOriginals) {
  const Fixture fx(4, {make_ancilla_pair(0, {0}, {2}), make_ancilla_pair(1, {1}, {3})});
  AncillaRegistry reg;
  for (const auto &p : fx.pairs) reg.insert(p);
  const Matrix p = to_dense(plus_projector(fx.pairs, fx.ord));
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const SymbolicOperator h1 = hop(fx.a(0), fx.a(2), rng.complex_normal());
    SymbolicOperator q = rng.complex_normal() * SymbolicOperator::create(fx.a(2)) *
                         SymbolicOperator::annihilate(fx.a(0)) * SymbolicOperator::create(fx.a(3)) *
                         SymbolicOperator::annihilate(fx.a(1));
    const SymbolicOperator h2 = hop(fx.a(1), fx.a(3), rng.complex_normal()) + q + q.adjoint();
    const Matrix u1 = expm_hermitian(to_dense(lower(substitute(h1, reg), fx.ord)));
    const Matrix u2 = expm_hermitian(to_dense(lower(substitute(h2, reg), fx.ord)));
    const Matrix v1 = expm_hermitian(to_dense(lower(h1, fx.ord)));
    const Matrix v2 = expm_hermitian(to_dense(lower(h2, fx.ord)));
    EXPECT_LT(norm2((u1 * u2 - v1 * v2) * p), 1e-10);
    EXPECT_LT(norm2((u2 * u1 - v2 * v1) * p), 1e-10);
  }
}

TEST(Majorana, SubstituteRejectsUnsupportedTerms) {
  const Fixture fx(3, {make_ancilla_pair(0, {0}, {2})});
  const SymbolicOperator cubic = SymbolicOperator::create(fx.a(0)) * SymbolicOperator::create(fx.a(1)) *
                                 SymbolicOperator::annihilate(fx.a(2));
  EXPECT_THROW(substitute(cubic, fx.pairs[0]), DomainError);
  AncillaRegistry reg;
  reg.insert(fx.pairs[0]);
  EXPECT_THROW(substitute(hop(fx.a(0), fx.a(1), 1.0), reg), DomainError);
  EXPECT_THROW(make_ancilla_pair(0, {1}, {1}), DomainError);
  EXPECT_THROW(reg.insert(fx.pairs[0]), DomainError);
}

TEST(Majorana, SubstituteLeavesLocalTermsWithWarning) {
  const Fixture fx(3, {make_ancilla_pair(0, {0}, {2})});
  const Lattice lat = with_ancillas(fx.lat, fx.pairs);
  std::vector<std::string> warnings;
  const SymbolicOperator h = hop(fx.a(0), fx.a(1), 1.0);
  const SymbolicOperator out = substitute(h, fx.pairs[0], SubstituteContext{&fx.ord, &lat}, &warnings);
  EXPECT_EQ(warnings.size(), 2u);
  EXPECT_LT(frobenius_norm(lower(out, fx.ord) - lower(h, fx.ord)), 1e-15);
}

TEST(Majorana, LocalizeRepairsDiracBoundarySwap) {
  const DiracParams p = DiracParams::lattice_units(5, 0.0);
  const Lattice lat = dirac_lattice(5);
  const Ordering ord = dirac_ordering(lat);
  AncillaRegistry reg;
  const auto factors = swap_decompose_T(p, ord);
  int repaired = 0;
  Ordering cur = ord;
  Lattice cur_lat = lat;
  for (const auto &f : factors) {
    const LocalizeResult r = localize(f, cur, cur_lat, reg);
    repaired += static_cast<int>(r.new_pairs.size());
    cur = r.ordering;
    cur_lat = r.lattice;
    ASSERT_TRUE(r.factor.generator.has_value());
    for (const auto &e : jw_locality_report(*r.factor.generator, cur, cur_lat)) EXPECT_TRUE(e.local);
  }
  EXPECT_EQ(repaired, 1);
  EXPECT_EQ(reg.pairs().size(), 1u);
  EXPECT_EQ(cur.size(), 12);
  // A second pass reuses the registered pair.
  const LocalizeResult again = localize(factors[0], cur, cur_lat, reg);
  EXPECT_TRUE(again.new_pairs.empty());
  const nlohmann::json j = reg.to_json(cur);
  for (const char *key : {"pair_id", "site_x", "site_y", "pi_positions"}) EXPECT_TRUE(j[0].contains(key)) << key;
}

TEST(Majorana, ExtractGeneratorFromMatrix) {
  const Fixture fx(3, {});
  LocalUnitaryFactor f;
  const SymbolicOperator h = hop(fx.a(0), fx.a(1), {0.4, -0.7});
  f.matrix = to_sparse(expm_hermitian(to_dense(lower(h, fx.ord))));
  f.support_region.sites = {{0}, {1}};
  const SymbolicOperator g = extract_generator(f, fx.ord);
  const Matrix back = expm_hermitian(to_dense(lower(g, fx.ord)));
  EXPECT_LT(norm2(back - to_dense(f.matrix)), 1e-10);
  f.matrix = annihilation_matrix(fx.a(0), fx.ord) + creation_matrix(fx.a(0), fx.ord);
  EXPECT_THROW(extract_generator(f, fx.ord), ContractError);
}
