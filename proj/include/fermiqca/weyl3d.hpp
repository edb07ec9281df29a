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


#ifndef FERMIQCA_WEYL3D_HPP
#define FERMIQCA_WEYL3D_HPP

#include <array>
#include <string>
#include <vector>

#include "fermiqca/decomposition.hpp"
#include "fermiqca/dirac1d.hpp"

namespace fermiqca {

/// Spin labels of the two Weyl components at each site (sigma_3 basis).
inline constexpr int kSpinUp = 0;
inline constexpr int kSpinDown = 1;

using Mat4 = Eigen::Matrix4cd;
using Vec3 = Eigen::Vector3d;

struct SpinorAlgebra {
  std::array<Mat2, 3> sigma;
  std::array<Mat4, 3> alpha;  // diag(sigma_i, -sigma_i)
  Mat4 beta;                  // offdiag(I, I)

  static const SpinorAlgebra &get();
};

/// exp(-i theta s) for a Hermitian involution s.
Mat2 involution_exp(const Mat2 &s, double theta);
Mat4 involution_exp(const Mat4 &s, double theta);

/// exp(-i p3 sigma3) exp(-i p2 sigma2) exp(-i p1 sigma1): T1 acts first.
Mat2 weyl_block_step(const Vec3 &p);
/// ||weyl_block_step(eps p)^(t / eps) - exp(-i p.sigma t)||.
double weyl_continuum_error(const Vec3 &p, double t, double eps);

/// exp(-i M beta) exp(-i p3 alpha3) exp(-i p2 alpha2) exp(-i p1 alpha1).
Mat4 dirac3d_block_step(const Vec3 &p, double mass_coupling);
/// ||dirac3d_block_step(eps p, m eps)^(t / eps) - exp(-i (p.alpha + m beta) t)||.
double dirac3d_continuum_error(double m, const Vec3 &p, double t, double eps);

/// Columns are the up/down eigenvectors of sigma_axis in the sigma_3 basis
/// (axis in 1..3): psi_(up x) = (psi_up + psi_down)/sqrt 2 and
/// psi_(up y) = (psi_up - i psi_down)/sqrt 2 on annihilators.
Mat2 basis_change(int axis);

/// Lattice of the given extents with two spin modes per site; axes of
/// extent at least 2 are periodic.
Lattice weyl_lattice(const std::vector<int> &extents);

/// T_axis = exp(-i sum_p p_axis psi_p^dagger sigma_axis psi_p): up_axis
/// components move by +e_axis, down_axis components by -e_axis. Built from
/// the single-particle shift (a signed mode permutation for axis 3).
MatrixOperator build_Ti(int axis, const Lattice &lat, const Ordering &ord);

/// Swaps psi_(n, down) <-> psi_(n - e, up) (layer 0) then psi_(n, up) <->
/// psi_(n, down) (layer 1), with up/down taken along the given axis. For
/// axes 1 and 2 the swapped modes are the rotated combinations, so every
/// factor is the axis-3 swap conjugated by the on-site basis change.
std::vector<LocalUnitaryFactor> swap_decompose_Ti(int axis, const Lattice &lat, const Ordering &ord);

struct Dispersion3dRow {
  int k1, k2, k3;
  double omega_plus, omega_minus;
};
std::vector<Dispersion3dRow> dispersion_3d(int sites_per_axis);
std::string dispersion3d_csv(const std::vector<Dispersion3dRow> &rows);

}  // namespace fermiqca

#endif  // FERMIQCA_WEYL3D_HPP
