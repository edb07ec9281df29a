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

#ifndef FERMIQCA_DECOMPOSITION_HPP
#define FERMIQCA_DECOMPOSITION_HPP

#include <map>
#include <optional>
#include <vector>

#include "fermiqca/causality.hpp"
#include "fermiqca/fock.hpp"
#include "json.hpp"

namespace fermiqca {

enum class FactorTag : uint8_t { swap, conjugated_swap, onsite, generic };

const char *tag_name(FactorTag t);

/// A local unitary together with the region it is certified on. Factors in a
/// list are applied in list order; factors sharing `layer` commute.
struct LocalUnitaryFactor {
  MatrixOperator matrix;  // may be empty when only the generator is known
  Region support_region;
  FactorTag tag = FactorTag::generic;
  int layer = 0;
  std::vector<Mode> modes;                 // modes the factor was built from
  std::optional<SymbolicOperator> generator;  // factor = exp(-i H) when present
};

/// The factor's matrix under `ord`, built from the generator when present.
MatrixOperator factor_matrix(const LocalUnitaryFactor &f, const Ordering &ord);

/// Physical system plus an identical copy. Each copy mode b follows its
/// physical partner a directly in `order`.
struct DoubledSystem {
  Lattice base;
  Ordering base_order;
  Lattice lattice;
  Ordering order;

  static DoubledSystem make(const Lattice &base, const Ordering &base_order);
  static Mode copy_of(const Mode &m);
  /// Copy modes (in base order) followed by physical modes (in base order).
  Ordering blocked_order() const;
  /// Bit mask of copy modes under `ord`.
  uint64_t copy_mask(const Ordering &ord) const;
};

/// S = exp[i (pi/2) (a2^dag - a1^dag)(a2 - a1)] = I - (a2^dag - a1^dag)(a2 - a1).
MatrixOperator fermionic_swap(const Mode &m1, const Mode &m2, const Ordering &ord);
SymbolicOperator swap_generator(const Mode &m1, const Mode &m2);

/// Signed permutation implementing a -> perm(a) on every mode with the
/// vacuum fixed: V a_m V^dagger = a_{perm(m)}.
MatrixOperator mode_permutation_unitary(const std::map<Mode, Mode> &perm, const Ordering &ord);

/// Embeds an operator on the physical modes (given in base_order) into the
/// doubled space under `ord`.
MatrixOperator embed_physical(const MatrixOperator &op, const DoubledSystem &ds, const Ordering &ord);
MatrixOperator embed_physical(const MatrixOperator &op, const DoubledSystem &ds);

/// Product of the swaps S_{x mu} over all physical modes.
MatrixOperator global_swap(const DoubledSystem &ds, const Ordering &ord);

/// U_B = S U_A S, the copy of U_A acting on the b modes.
MatrixOperator build_UB(const MatrixOperator &u_a, const DoubledSystem &ds);
MatrixOperator build_UB(const MatrixOperator &u_a, const DoubledSystem &ds, const Ordering &ord);

struct Theorem1Options {
  bool certify = true;
  double tol = 1e-10;
  double commute_tol = 1e-12;
};

struct Theorem1Result {
  /// Conjugated swaps U_B S_y U_B^dagger (layer 0, ascending pi) followed by
  /// plain swaps S_x (layer 1, ascending pi).
  std::vector<LocalUnitaryFactor> factors;
  double product_residual = -1.0;          // || prod factors - U_A U_B^dagger ||
  double max_conjugated_commutator = -1.0;
  double max_swap_commutator = -1.0;
  std::vector<double> localization;        // per conjugated swap
  bool certified = false;
  bool pass(const Theorem1Options &o = {}) const;
};

/// Requires U_A causal on the base lattice; ContractError names the first
/// offending mode. Certificates are computed when options.certify is set.
Theorem1Result theorem1_factorize(const MatrixOperator &u_a, const DoubledSystem &ds, const Ordering &ord,
                                  const Theorem1Options &options = {});
Theorem1Result theorem1_factorize(const MatrixOperator &u_a, const DoubledSystem &ds,
                                  const Theorem1Options &options = {});

/// |<psi| U_B U_A^dag M U_A U_B^dag |psi> - <psi| U_A^dag M U_A |psi>| with
/// psi on the doubled space (ds.order) and U_A, M_A on the physical modes.
double measurement_equivalence_check(const MatrixOperator &u_a, const DoubledSystem &ds, const MatrixOperator &m_a,
                                     const StateVector &psi);

/// Exhaustive search over products of at most `max_depth` layers, each a set
/// of disjoint nearest-neighbour fermionic swaps, for one equal (up to phase)
/// to the one-step shift on a ring with one mode per site.
struct ShiftSearchResult {
  bool found = false;
  long candidates = 0;
  std::vector<std::vector<std::pair<int, int>>> witness;
};
ShiftSearchResult search_shift_factorization(int ring_sites, int max_depth);

nlohmann::json to_json(const LocalUnitaryFactor &f, const Ordering &ord, bool include_matrix = true);
nlohmann::json to_json(const Theorem1Result &r, const Ordering &ord, bool include_matrices = false);

}  // namespace fermiqca

#endif  // FERMIQCA_DECOMPOSITION_HPP
