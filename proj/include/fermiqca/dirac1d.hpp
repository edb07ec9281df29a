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


#ifndef FERMIQCA_DIRAC1D_HPP
#define FERMIQCA_DIRAC1D_HPP

#include <string>
#include <vector>

#include "fermiqca/decomposition.hpp"
#include "fermiqca/fock.hpp"

namespace fermiqca {

/// Labels of the two internal states at each ring site.
inline constexpr int kLeft = 0;
inline constexpr int kRight = 1;

struct DiracParams {
  int sites = 3;             // N, odd
  double ring_length = 3.0;  // L
  double spacing = 1.0;      // epsilon = L / N
  double mass = 0.0;         // m
  double mass_coupling = 0.0;  // M = m * epsilon
  int steps = 1;             // tau
  double time = 1.0;         // t = tau * epsilon

  /// Lattice units (epsilon = 1, L = N, m = M).
  static DiracParams lattice_units(int sites, double mass_coupling, int steps = 1);
  static DiracParams physical(int sites, double ring_length, double mass, int steps);
  void validate() const;
};

using Mat2 = Eigen::Matrix2cd;

struct SingleParticleBlock {
  double momentum = 0.0;
  Mat2 matrix;  // basis (r, l)
};

Lattice dirac_lattice(int sites);
/// pi(n, l) = 2n, pi(n, r) = 2n + 1.
Ordering dirac_ordering(const Lattice &lat);

/// Momenta 2 pi k / N for k = -(N-1)/2 .. (N-1)/2.
std::vector<int> momentum_indices(int sites);

/// Conditional shift as the mode permutation r: n -> n+1, l: n -> n-1.
MatrixOperator build_T(const DiracParams &p, const Ordering &ord);
/// The same shift as exp(-i sum_p p psi_p^dagger alpha_1 psi_p).
MatrixOperator build_T_momentum(const DiracParams &p, const Ordering &ord);

/// prod_n exp(-i M psi_n^dagger beta psi_n), each factor in closed form.
MatrixOperator build_W(const DiracParams &p, const Ordering &ord);
/// exp(-i M sum_n psi_n^dagger beta psi_n) by a dense exponential.
MatrixOperator build_W_dense(const DiracParams &p, const Ordering &ord);
/// exp(-i M (a^dagger b + b^dagger a)) = I + (cos M - 1) Q - i sin M h with Q
/// the projector onto single occupancy of {a, b}.
MatrixOperator onsite_hop_unitary(const Mode &a, const Mode &b, double angle, const Ordering &ord);

/// Swaps psi_{n,l} <-> psi_{n-1,r} (layer 0) then psi_{n,r} <-> psi_{n,l}
/// (layer 1), ascending n. Matrices are filled when the ordering fits the
/// dense cap; generators are always set.
std::vector<LocalUnitaryFactor> swap_decompose_T(const DiracParams &p, const Ordering &ord);
/// On-site mass factors (layer 2); empty when M = 0.
std::vector<LocalUnitaryFactor> mass_factors(const DiracParams &p, const Ordering &ord);
/// swap_decompose_T followed by mass_factors: one step U = W T.
std::vector<LocalUnitaryFactor> step_factors(const DiracParams &p, const Ordering &ord);

/// exp(-i M beta) exp(-i p alpha_1).
SingleParticleBlock block_step(double momentum, double mass_coupling);

/// Eigenphases of the block, sorted ascending (so -omega, +omega).
Eigen::Vector2d block_phases(const Mat2 &u);

/// t / eps as an integer; DomainError unless it is one (within 1e-9).
long trotter_steps(double t, double eps);

/// ||block_step(p eps, m eps)^(t / eps) - exp(-i (p alpha_1 + m beta) t)||.
double continuum_error(double m, double p, double t, double eps);

struct DispersionRow {
  int k;
  double p;
  double mass_coupling;
  double omega;
};
std::vector<DispersionRow> dispersion_1d(int sites, double mass_coupling);
std::string dispersion_csv(const std::vector<DispersionRow> &rows);

struct ConvergenceRow {
  double epsilon;
  long steps;
  double error;
};
std::string convergence_csv(const std::string &header, const std::vector<ConvergenceRow> &rows);

/// Formats with "%.17g".
std::string format_double(double x);

}  // namespace fermiqca

#endif  // FERMIQCA_DIRAC1D_HPP
