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

#ifndef FERMIQCA_FOCK_HPP
#define FERMIQCA_FOCK_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fermiqca/common.hpp"

namespace fermiqca {

using Site = std::vector<int>;

enum class ModeKind : uint8_t { physical = 0, copy = 1, ancilla = 2 };

const char *kind_name(ModeKind k);

struct Mode {
  Site site;
  int label = 0;
  ModeKind kind = ModeKind::physical;

  auto operator<=>(const Mode &) const = default;
  bool operator==(const Mode &) const = default;

  std::string str() const;
};

/// Finite hypercubic lattice with per-axis periodicity and a list of modes.
class Lattice {
 public:
  Lattice(std::vector<int> extents, std::vector<bool> periodic, std::vector<Mode> modes = {});

  /// Line of n sites with `labels` modes per site.
  static Lattice line(int n, bool periodic, int labels = 1);

  int dims() const { return static_cast<int>(extents_.size()); }
  const std::vector<int> &extents() const { return extents_; }
  const std::vector<bool> &periodic() const { return periodic_; }
  const std::vector<Mode> &modes() const { return modes_; }

  void add_mode(const Mode &m);
  bool contains(const Mode &m) const;
  bool contains_site(const Site &s) const;

  /// All sites in row-major order (last axis fastest).
  std::vector<Site> sites() const;

  /// Side-3 hypercube centered on s, wrapped along periodic axes.
  std::set<Site> neighborhood(const Site &s) const;

  std::vector<Mode> modes_at(const std::set<Site> &sites) const;

 private:
  std::vector<int> extents_;
  std::vector<bool> periodic_;
  std::vector<Mode> modes_;
  std::set<Mode> index_;
};

/// Jordan-Wigner enumeration pi: Mode -> {0..N-1}; modes()[k] has pi = k.
class Ordering {
 public:
  Ordering() = default;
  explicit Ordering(std::vector<Mode> modes_by_pi);

  /// Row-major sites, same-site modes consecutive in ascending label order.
  static Ordering row_major(const Lattice &lat);

  int size() const { return static_cast<int>(modes_.size()); }
  const std::vector<Mode> &modes() const { return modes_; }
  const Mode &mode(int pi) const { return modes_.at(pi); }
  bool contains(const Mode &m) const { return pi_.count(m) != 0; }
  /// Throws DomainError for modes outside the domain.
  int pi(const Mode &m) const;

  bool same_site_consecutive() const;
  uint64_t dim() const { return uint64_t{1} << modes_.size(); }

 private:
  std::vector<Mode> modes_;
  std::map<Mode, int> pi_;
};

enum class FactorKind : uint8_t { create, annihilate, majorana };

struct Factor {
  FactorKind kind;
  Mode mode;
  bool operator==(const Factor &) const = default;
};

struct Monomial {
  cplx coeff{1.0, 0.0};
  std::vector<Factor> factors;  // written order, leftmost acts last
};

/// Complex-weighted sum of products of creation, annihilation and Majorana
/// operators. Products are kept in written order.
class SymbolicOperator {
 public:
  SymbolicOperator() = default;
  explicit SymbolicOperator(std::vector<Monomial> terms) : terms_(std::move(terms)) {}

  static SymbolicOperator identity(cplx c = 1.0);
  static SymbolicOperator create(const Mode &m);
  static SymbolicOperator annihilate(const Mode &m);
  /// c + c^dagger for the given mode.
  static SymbolicOperator majorana(const Mode &m);

  const std::vector<Monomial> &terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  SymbolicOperator adjoint() const;
  /// Drops terms whose coefficient magnitude is at most tol.
  SymbolicOperator pruned(double tol = 0.0) const;
  std::set<Mode> modes() const;
  std::string str() const;

  SymbolicOperator &operator+=(const SymbolicOperator &o);
  SymbolicOperator &operator*=(cplx c);

  friend SymbolicOperator operator+(SymbolicOperator a, const SymbolicOperator &b) { return a += b; }
  friend SymbolicOperator operator-(SymbolicOperator a, const SymbolicOperator &b) { return a += b * cplx(-1.0); }
  friend SymbolicOperator operator*(SymbolicOperator a, cplx c) { return a *= c; }
  friend SymbolicOperator operator*(cplx c, SymbolicOperator a) { return a *= c; }
  friend SymbolicOperator operator*(const SymbolicOperator &a, const SymbolicOperator &b);

 private:
  std::vector<Monomial> terms_;
};

/// a^dagger_mode in the occupation basis. Bit k of a basis index is the
/// occupation of the mode with pi = k.
MatrixOperator creation_matrix(const Mode &mode, const Ordering &ord);
MatrixOperator annihilation_matrix(const Mode &mode, const Ordering &ord);
StateVector vacuum(const Ordering &ord);
MatrixOperator lower(const SymbolicOperator &op, const Ordering &ord);
/// Global parity prod(I - 2 n_i), diagonal.
MatrixOperator parity_operator(const Ordering &ord);
MatrixOperator identity_operator(const Ordering &ord);
/// Total number operator.
MatrixOperator number_operator(const Ordering &ord);

/// Result of applying one monomial to one basis state.
struct BasisImage {
  uint64_t index = 0;
  int sign = 0;  // 0 means the monomial annihilates the state
};

/// Acts with the monomial's factors (right to left) on basis state `col`.
/// Majorana factors are not allowed here.
BasisImage apply_monomial(const std::vector<Factor> &factors, const Ordering &ord, uint64_t col);

/// Signed permutation Q with Q a_m Q^dagger (in `from`) = a_m (in `to`).
/// Both orderings must cover the same modes.
struct Reordering {
  std::vector<uint64_t> target;  // target[i] = image of basis index i
  std::vector<int8_t> sign;

  MatrixOperator apply(const MatrixOperator &op) const;  // Q op Q^dagger
  StateVector apply(const StateVector &v) const;
  MatrixOperator matrix() const;
};

Reordering make_reordering(const Ordering &from, const Ordering &to);

/// Signed permutation sending the basis state with occupied set {k} to the
/// state with occupied set {map[k]}, with the sign from reordering the
/// creation operators into ascending order.
Reordering reordering_from_map(const std::vector<int> &map);

/// sum_ij h(i, j) a^dagger_{modes[i]} a_{modes[j]}.
SymbolicOperator quadratic_form(const Matrix &h, const std::vector<Mode> &modes);

/// Fock unitary G fixing the vacuum with G a^dagger_j G^dagger =
/// sum_i u(i, j) a^dagger_i over `modes` (single-particle unitary u).
MatrixOperator lift_single_particle(const Matrix &u, const std::vector<Mode> &modes, const Ordering &ord);

/// Throws ResourceError when the ordering exceeds max_modes().
void check_dense_cap(const Ordering &ord);

Matrix to_dense(const MatrixOperator &op);
MatrixOperator to_sparse(const Matrix &m, double drop = 0.0);

}  // namespace fermiqca

#endif  // FERMIQCA_FOCK_HPP
