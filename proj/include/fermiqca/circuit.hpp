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


#ifndef FERMIQCA_CIRCUIT_HPP
#define FERMIQCA_CIRCUIT_HPP

#include <set>
#include <string>
#include <vector>

#include "fermiqca/decomposition.hpp"
#include "fermiqca/dirac1d.hpp"
#include "fermiqca/majorana.hpp"
#include "json.hpp"

namespace fermiqca {

inline constexpr int kMaxGateQubits = 6;

/// Dense gate; bit j of the local index is qubit qubits[j].
struct Gate {
  std::vector<int> qubits;
  Matrix matrix;

  /// Arity, size, distinct qubits and unitarity within tol.
  void validate(double tol = 1e-12) const;
};

struct Circuit {
  int num_qubits = 0;
  std::vector<std::vector<Gate>> layers;

  size_t gate_count() const;
  size_t depth() const { return layers.size(); }
  /// Qubit ranges and pairwise disjointness within each layer.
  void validate(double tol = 1e-12) const;
  /// Appends the other circuit's layers.
  void append(const Circuit &other);

  nlohmann::json to_json() const;
  static Circuit from_json(const nlohmann::json &j);
};

StateVector simulate(const Circuit &c, const StateVector &state);
/// Dense matrix of the circuit, column by column.
Matrix circuit_matrix(const Circuit &c);

/// First-fit assignment of qubit sets to sublayers: each set goes to the
/// earliest sublayer whose sets it does not meet.
std::vector<int> greedy_schedule(const std::vector<std::set<int>> &supports);

struct CompileOptions {
  double tol = 1e-10;
  /// Gates within this distance of the identity are dropped.
  double identity_tol = 1e-14;
};

/// One gate per factor on its qubit support. Generator factors use the
/// support of jw(H); matrix factors use the qubits of their region and must
/// act as identity elsewhere. Consecutive factors with equal `layer` are
/// scheduled together by greedy_schedule. ContractError names any factor
/// that is not qubit-local.
Circuit compile(const std::vector<LocalUnitaryFactor> &factors, const Ordering &ord, const Lattice &lat,
                const CompileOptions &opts = {});

/// CNOTs from each target (ascending) onto the flag, one per layer.
Circuit parity_ladder(const std::vector<int> &targets, int flag, int num_qubits);

/// Prepares the jw image of prepare_plus_state (up to a global phase) from
/// |0...0>. Pairs whose ancilla qubits are not adjacent use a parity ladder
/// onto one extra flag qubit (index ord.size()), which returns to |0>.
Circuit prepare_majorana_circuit(const std::vector<AncillaPair> &pairs, const Ordering &ord);

struct DiracCompiled {
  DiracParams params;
  Lattice lattice;  // with ancillas
  Ordering ordering;
  AncillaRegistry registry;
  std::vector<LocalUnitaryFactor> factors;  // after repair
  Circuit circuit;
};

/// One step U = W T of the Dirac ring compiled to qubit gates, with the
/// boundary swap repaired by one ancilla pair when it is not qubit-local.
DiracCompiled compile_dirac1d_step(const DiracParams &p);

/// |<U^steps psi | C^steps psi>|^2 for a seeded random psi in the +1
/// eigenspace of the ancilla pairs, with U = W T on the physical modes.
/// ResourceError when the ordering exceeds the dense cap.
double dirac_step_fidelity(const DiracCompiled &c, int steps, uint64_t seed);

}  // namespace fermiqca

#endif  // FERMIQCA_CIRCUIT_HPP
