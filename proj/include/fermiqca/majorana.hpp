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


#ifndef FERMIQCA_MAJORANA_HPP
#define FERMIQCA_MAJORANA_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fermiqca/decomposition.hpp"
#include "fermiqca/fock.hpp"
#include "json.hpp"

namespace fermiqca {

/// Two ancilla modes c_(x,y) at site x and c_(y,x) at site y. Both carry the
/// pair id as their label.
struct AncillaPair {
  Mode c_at_x;
  Mode c_at_y;

  int id() const { return c_at_x.label; }
  const Site &x() const { return c_at_x.site; }
  const Site &y() const { return c_at_y.site; }
};

AncillaPair make_ancilla_pair(int id, const Site &x, const Site &y);

/// Pairs introduced so far, looked up by their unordered site pair.
class AncillaRegistry {
 public:
  const std::vector<AncillaPair> &pairs() const { return pairs_; }
  int next_id() const { return next_id_; }
  /// First registered pair joining the two sites, in either orientation.
  const AncillaPair *find(const Site &a, const Site &b) const;
  const AncillaPair &add(const Site &x, const Site &y);
  /// Registers an existing pair; its id must not be in use.
  void insert(const AncillaPair &p);

  nlohmann::json to_json(const Ordering &ord) const;

 private:
  std::vector<AncillaPair> pairs_;
  int next_id_ = 0;
};

/// m = c + c^dagger for an ancilla mode.
MatrixOperator majorana_op(const Mode &anc, const Ordering &ord);

/// M = i m_(x,y) m_(y,x), symbolic and lowered.
SymbolicOperator m_symbol(const AncillaPair &p);
MatrixOperator m_operator(const AncillaPair &p, const Ordering &ord);

/// Projector onto the joint +1 eigenspace of the pairs' M operators.
MatrixOperator plus_projector(const std::vector<AncillaPair> &pairs, const Ordering &ord);

/// Hermitian B = d + d^dagger with d^dagger = (c^dagger_(x,y) - i c^dagger_(y,x)) / sqrt(2);
/// B^2 = I and exp(i (pi/2) B) |vacuum> = i d^dagger |vacuum>.
SymbolicOperator b_symbol(const AncillaPair &p);
MatrixOperator b_unitary(const AncillaPair &p, const Ordering &ord, double theta);

/// Ordering with each missing ancilla inserted directly after the last mode
/// of its host site. Modes of one site must already be consecutive.
Ordering with_ancillas(const Ordering &ord, const std::vector<AncillaPair> &pairs);
Lattice with_ancillas(const Lattice &lat, const std::vector<AncillaPair> &pairs);

/// Number of ancilla modes hosted by each site.
std::map<Site, int> ancillas_per_site(const std::vector<AncillaPair> &pairs);

struct SubstituteContext {
  const Ordering *ordering = nullptr;
  const Lattice *lattice = nullptr;
};

/// Inserts M between the two halves of a quadratic monomial, or after the
/// first and third factor of a quartic one, whenever the factors on either
/// side sit on different sites. Pairs come from the registry. Monomials of
/// other degrees are rejected with DomainError. With a context, monomials
/// that are already qubit-local are left alone and reported in `warnings`.
SymbolicOperator substitute(const SymbolicOperator &op, const AncillaRegistry &reg,
                            const SubstituteContext &ctx = {}, std::vector<std::string> *warnings = nullptr);
SymbolicOperator substitute(const SymbolicOperator &op, const AncillaPair &pair,
                            const SubstituteContext &ctx = {}, std::vector<std::string> *warnings = nullptr);

/// prod_k (c^dagger_(x,y) - i c^dagger_(y,x)) / sqrt(2) |vacuum>, pairs taken
/// in list order. Pairs sharing a mode raise DomainError.
StateVector prepare_plus_state(const std::vector<AncillaPair> &pairs, const Ordering &ord);

/// Generator H of a factor exp(-iH): the stored generator, or the even part
/// of the principal logarithm expanded in monomials over the factor's
/// region. ContractError when the matrix is not of that form.
SymbolicOperator extract_generator(const LocalUnitaryFactor &f, const Ordering &ord, double tol = 1e-10);

struct LocalizeResult {
  LocalUnitaryFactor factor;
  std::vector<AncillaPair> new_pairs;
  Ordering ordering;  // input ordering plus every registry ancilla
  Lattice lattice;
  std::vector<std::string> warnings;
};

/// Repairs the qubit locality of a factor by Majorana substitution. With
/// `reuse` set, pairs already in the registry for a site pair are used
/// again; otherwise each call introduces its own pairs.
LocalizeResult localize(const LocalUnitaryFactor &factor, const Ordering &ord, const Lattice &lat,
                        AncillaRegistry &reg, bool reuse = true);

}  // namespace fermiqca

#endif  // FERMIQCA_MAJORANA_HPP
