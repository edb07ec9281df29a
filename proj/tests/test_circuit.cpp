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

#include "fermiqca/circuit.hpp"
#include "fermiqca/jwmap.hpp"
#include "fermiqca/linalg.hpp"
#include "fermiqca/random.hpp"
#include "oracles.hpp"

using namespace fermiqca;

namespace {

Matrix random_unitary(Rng &rng, int k) {
  const Eigen::Index d = Eigen::Index{1} << k;
  Matrix h(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) h(i, j) = rng.complex_normal();
  return oracle::expm_minus_i(0.5 * (h + h.adjoint()));
}

// Dense embedding of a gate by explicit basis enumeration.
Matrix embed_gate(const Gate &g, int n) {
  const Eigen::Index d = Eigen::Index{1} << n;
  Matrix out = Matrix::Zero(d, d);
  const int k = static_cast<int>(g.qubits.size());
  for (Eigen::Index col = 0; col < d; ++col) {
    Eigen::Index lc = 0;
    for (int j = 0; j < k; ++j) lc |= ((col >> g.qubits[j]) & 1) << j;
    for (Eigen::Index lr = 0; lr < (Eigen::Index{1} << k); ++lr) {
      Eigen::Index row = col;
      for (int j = 0; j < k; ++j) row = (row & ~(Eigen::Index{1} << g.qubits[j])) | (((lr >> j) & 1) << g.qubits[j]);
      out(row, col) += g.matrix(lr, lc);
    }
  }
  return out;
}

struct Line {
  Lattice lat;
  Ordering ord;
};

Line line(int sites) {
  Lattice lat = Lattice::line(sites, false);
  return {lat, Ordering::row_major(lat)};
}

}  // namespace

TEST(Circuit, GateValidation) {
  Rng rng(1);
  Gate ok{{0, 2}, random_unitary(rng, 2)};
  EXPECT_NO_THROW(ok.validate());
  EXPECT_THROW((Gate{{0, 0}, ok.matrix}.validate()), DomainError);
  EXPECT_THROW((Gate{{0}, ok.matrix}.validate()), DomainError);
  EXPECT_THROW((Gate{{0, 1}, Matrix::Ones(4, 4)}.validate()), DomainError);
  EXPECT_THROW((Gate{{0, 1, 2, 3, 4, 5, 6}, Matrix::Identity(128, 128)}.validate()), DomainError);
  Circuit c;
  c.num_qubits = 3;
  c.layers = {{ok, Gate{{2}, Matrix::Identity(2, 2)}}};
  EXPECT_THROW(c.validate(), DomainError);
  c.layers = {{Gate{{3}, Matrix::Identity(2, 2)}}};
  EXPECT_THROW(c.validate(), DomainError);
}

TEST(Circuit, SimulationMatchesDenseEmbedding) {
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c;
    c.num_qubits = 7;
    Matrix want = Matrix::Identity(128, 128);
    for (int l = 0; l < 4; ++l) {
      const int k = 1 + static_cast<int>(rng.below(6));
      std::vector<int> qs{0, 1, 2, 3, 4, 5, 6};
      for (int i = 6; i > 0; --i) std::swap(qs[i], qs[rng.below(i + 1)]);
      qs.resize(k);
      Gate g{qs, random_unitary(rng, k)};
      want = embed_gate(g, 7) * want;
      c.layers.push_back({g});
    }
    EXPECT_LT((circuit_matrix(c) - want).cwiseAbs().maxCoeff(), 1e-12);
  }
  Circuit c;
  c.num_qubits = 2;
  EXPECT_THROW(simulate(c, StateVector::Zero(3)), DomainError);
}

TEST(Circuit, GreedyScheduleIsFirstFit) {
  const std::vector<std::set<int>> s{{0, 1}, {1, 2}, {3}, {2, 3}, {0}};
  EXPECT_EQ(greedy_schedule(s), (std::vector<int>{0, 1, 0, 2, 1}));
  EXPECT_TRUE(greedy_schedule({}).empty());
}

TEST(Circuit, JsonRoundTripIsExact) {
  Rng rng(3);
  Circuit c;
  c.num_qubits = 4;
  c.layers = {{Gate{{0, 3}, random_unitary(rng, 2)}, Gate{{1}, random_unitary(rng, 1)}}, {Gate{{2, 1, 0}, random_unitary(rng, 3)}}};
  const std::string text = c.to_json().dump();
  const Circuit back = Circuit::from_json(nlohmann::json::parse(text));
  EXPECT_EQ(back.to_json().dump(), text);
  for (size_t l = 0; l < c.layers.size(); ++l)
    for (size_t g = 0; g < c.layers[l].size(); ++g) EXPECT_EQ(back.layers[l][g].matrix, c.layers[l][g].matrix);
  EXPECT_THROW(Circuit::from_json(nlohmann::json::parse(R"({"layers": []})")), DomainError);
  EXPECT_THROW(Circuit::from_json(nlohmann::json::parse(
                   R"({"num_qubits": 1, "layers": [[{"qubits": [0], "re": [[1, 0]], "im": [[0, 0]]}]]})")),
               DomainError);
}

TEST(ParityLadder, ConjugatesZStringToFlag) {
  const Circuit ladder = parity_ladder({3, 0, 2, 1}, 4, 5);
  EXPECT_EQ(ladder.gate_count(), 4u);
  const Matrix l = circuit_matrix(ladder);
  const Matrix zf = oracle::pauli_string({'I', 'I', 'I', 'I', 'Z'});
  const Matrix zall = oracle::pauli_string({'Z', 'Z', 'Z', 'Z', 'Z'});
  EXPECT_LT((zf * l - l * zall).cwiseAbs().maxCoeff(), 1e-13);
  // Flag collects the parity of the targets.
  for (int x = 0; x < 16; ++x) {
    StateVector in = StateVector::Unit(32, x);
    const StateVector out = simulate(ladder, in);
    EXPECT_EQ(std::abs(out(x | ((popcount(x) & 1) << 4))), 1.0);
  }
  EXPECT_THROW(parity_ladder({0, 4}, 4, 5), DomainError);
  EXPECT_THROW(parity_ladder({0, 0}, 4, 5), DomainError);
  EXPECT_THROW(parity_ladder({0}, 5, 5), DomainError);
}

TEST(MajoranaCircuit, PreparesPlusStates) {
  for (const std::vector<std::pair<int, int>> &spec :
       {std::vector<std::pair<int, int>>{{0, 1}}, {{0, 2}}, {{2, 0}}, {{0, 3}, {1, 2}}, {{0, 2}, {1, 3}}}) {
    const Lattice lat = Lattice::line(4, false);
    std::vector<AncillaPair> pairs;
    for (size_t i = 0; i < spec.size(); ++i) pairs.push_back(make_ancilla_pair(int(i), {spec[i].first}, {spec[i].second}));
    const Ordering ord = with_ancillas(Ordering::row_major(lat), pairs);
    const Circuit c = prepare_majorana_circuit(pairs, ord);
    const StateVector want = prepare_plus_state(pairs, ord);
    StateVector zero = StateVector::Zero(Eigen::Index{1} << c.num_qubits);
    zero(0) = 1.0;
    const StateVector got = simulate(c, zero);
    // Flag (if any) returns to |0>: all weight sits in the first 2^N amplitudes.
    EXPECT_NEAR(got.head(want.size()).norm(), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(want.dot(got.head(want.size()))), 1.0, 1e-12) << spec[0].first << spec[0].second;
  }
  const Lattice lat = Lattice::line(2, false);
  const Ordering ord = Ordering::row_major(lat);
  AncillaPair fake{ord.mode(0), ord.mode(1)};
  EXPECT_THROW(prepare_majorana_circuit({fake}, ord), DomainError);
}

TEST(Compile, FactorizedUnitaryBecomesLocalGates) {
  const Line s = line(3);
  const DoubledSystem ds = DoubledSystem::make(s.lat, s.ord);
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    Rng rng(seed);
    const MatrixOperator u = random_causal_brickwork(rng, s.lat, s.ord);
    const Theorem1Result r = theorem1_factorize(u, ds);
    const Circuit c = compile(r.factors, ds.order, ds.lattice);
    for (const auto &layer : c.layers)
      for (const auto &g : layer) EXPECT_LE(g.qubits.size(), 6u);
    const Matrix target = to_dense(embed_physical(u, ds)) * to_dense(build_UB(u, ds)).adjoint();
    EXPECT_LT(spectral_norm(Matrix(circuit_matrix(c) - target)), 1e-10) << seed;
  }
}

TEST(Compile, GeneratorGateKeepsPhase) {
  const Line s = line(2);
  LocalUnitaryFactor f;
  SymbolicOperator h = SymbolicOperator::create(s.ord.mode(0)) * SymbolicOperator::annihilate(s.ord.mode(0));
  h += 0.3 * SymbolicOperator::create(s.ord.mode(0)) * SymbolicOperator::annihilate(s.ord.mode(1));
  h += 0.3 * SymbolicOperator::create(s.ord.mode(1)) * SymbolicOperator::annihilate(s.ord.mode(0));
  f.generator = h;
  const Circuit c = compile({f}, s.ord, s.lat);
  ASSERT_EQ(c.gate_count(), 1u);
  EXPECT_LT((circuit_matrix(c) - expm_hermitian(to_dense(lower(h, s.ord)))).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Compile, RejectsNonLocalFactors) {
  const Lattice lat = dirac_lattice(5);
  const Ordering ord = dirac_ordering(lat);
  const auto swaps = swap_decompose_T(DiracParams::lattice_units(5, 0.0), ord);
  std::vector<LocalUnitaryFactor> gen_only = swaps;
  for (auto &f : gen_only) f.matrix = MatrixOperator();
  EXPECT_THROW(compile(gen_only, ord, lat), ContractError);
  // Matrix path: the long swap is not identity outside its region.
  std::vector<LocalUnitaryFactor> mat_only = swaps;
  for (auto &f : mat_only) f.generator.reset();
  EXPECT_THROW(compile(mat_only, ord, lat), ContractError);
}

TEST(Compile, WideGatesAreRefused) {
  const Lattice lat = Lattice::line(5, false, 2);
  const Ordering ord = Ordering::row_major(lat);
  LocalUnitaryFactor f;
  f.matrix = identity_operator(ord);
  f.support_region.sites = {{0}, {1}, {2}, {3}};
  EXPECT_THROW(compile({f}, ord, lat), ResourceError);
}

TEST(Compile, IdentityFactorsAreDropped) {
  const Line s = line(2);
  LocalUnitaryFactor f;
  f.matrix = identity_operator(s.ord);
  f.support_region.sites = {{0}};
  EXPECT_EQ(compile({f}, s.ord, s.lat).gate_count(), 0u);
}

TEST(DiracCompile, SmallRingMatchesFockEvolution) {
  const DiracCompiled c = compile_dirac1d_step(DiracParams::lattice_units(3, 0.5));
  EXPECT_TRUE(c.registry.pairs().empty());
  EXPECT_EQ(c.circuit.depth(), 4u);
  EXPECT_EQ(c.circuit.gate_count(), 9u);
  EXPECT_GE(dirac_step_fidelity(c, 5, 7), 1.0 - 1e-9);
}

TEST(DiracCompile, RepairedRingMatchesFockEvolution) {
  const DiracCompiled c = compile_dirac1d_step(DiracParams::lattice_units(5, 0.8));
  ASSERT_EQ(c.registry.pairs().size(), 1u);
  EXPECT_EQ(c.ordering.size(), 12);
  EXPECT_GE(dirac_step_fidelity(c, 3, 11), 1.0 - 1e-9);
  for (const auto &layer : c.circuit.layers)
    for (const auto &g : layer) EXPECT_LE(g.qubits.size(), 6u);
}

TEST(DiracCompile, DepthIsIndependentOfRingSize) {
  const DiracCompiled c9 = compile_dirac1d_step(DiracParams::lattice_units(9, 0.5));
  const DiracCompiled c15 = compile_dirac1d_step(DiracParams::lattice_units(15, 0.5));
  EXPECT_EQ(c9.circuit.depth(), c15.circuit.depth());
  EXPECT_EQ(c15.circuit.gate_count() * 9, c9.circuit.gate_count() * 15);
  EXPECT_THROW(dirac_step_fidelity(c15, 1, 1), ResourceError);
  const DiracCompiled massless = compile_dirac1d_step(DiracParams::lattice_units(9, 0.0));
  EXPECT_EQ(massless.circuit.gate_count(), 18u);
}
