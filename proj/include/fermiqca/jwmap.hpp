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

#ifndef FERMIQCA_JWMAP_HPP
#define FERMIQCA_JWMAP_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fermiqca/fock.hpp"

namespace fermiqca {

/// Single-qubit letters. Plus = |1><0| and Minus = |0><1|.
enum class Letter : uint8_t { X, Y, Z, Plus, Minus };

char letter_char(Letter l);

struct PauliTerm {
  cplx coeff{1.0, 0.0};
  std::map<int, Letter> letters;  // empty map is a scaled identity
};

class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(std::vector<PauliTerm> terms) : terms_(std::move(terms)) {}

  const std::vector<PauliTerm> &terms() const { return terms_; }

  /// Merges equal letter maps and drops terms with |coeff| <= tol.
  PauliSum canonical(double tol = 0.0) const;
  /// Rewrites Plus/Minus as (X -+ iY)/2.
  PauliSum expanded_xy() const;
  PauliSum adjoint() const;

  /// One `coeff * [X3 Z1 +0]` line per term, letters by descending qubit.
  std::string to_text() const;
  static PauliSum from_text(const std::string &text);

  PauliSum &operator+=(const PauliSum &o);

 private:
  std::vector<PauliTerm> terms_;
};

/// Jordan-Wigner image: a^dagger_x -> Plus_x prod_{pi(y)<pi(x)} Z_y.
PauliSum jw(const SymbolicOperator &op, const Ordering &ord);

/// Qubit-basis matrix with qubit k on bit k.
MatrixOperator pauli_matrix(const PauliSum &p, int num_qubits);
Matrix pauli_matrix_on(const PauliSum &p, const std::vector<int> &qubits);

std::set<int> support(const PauliSum &p);

struct LocalityEntry {
  size_t term = 0;
  std::set<Site> fermionic_sites;
  std::set<int> qubit_support;
  std::set<int> allowed;  // pi-image of the neighborhood of fermionic_sites
  bool local = true;
};

/// Qubit support of each monomial against the pi-image of the neighborhood
/// (union over the monomial's sites) of its fermionic support.
std::vector<LocalityEntry> jw_locality_report(const SymbolicOperator &op, const Ordering &ord, const Lattice &lat);

/// Pi-image of all ordering modes sitting on the given sites.
std::set<int> qubits_of_sites(const std::set<Site> &sites, const Ordering &ord);

/// Union of neighborhoods.
std::set<Site> neighborhood_of(const std::set<Site> &sites, const Lattice &lat);

}  // namespace fermiqca

#endif  // FERMIQCA_JWMAP_HPP
