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


#include "fermiqca/weyl3d.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fermiqca/linalg.hpp"

namespace fermiqca {

const SpinorAlgebra &SpinorAlgebra::get() {
  static const SpinorAlgebra alg = [] {
    SpinorAlgebra a;
    a.sigma[0] << 0, 1, 1, 0;
    a.sigma[1] << 0, cplx(0, -1), cplx(0, 1), 0;
    a.sigma[2] << 1, 0, 0, -1;
    for (int i = 0; i < 3; ++i) {
      a.alpha[i] = Mat4::Zero();
      a.alpha[i].topLeftCorner<2, 2>() = a.sigma[i];
      a.alpha[i].bottomRightCorner<2, 2>() = -a.sigma[i];
    }
    a.beta = Mat4::Zero();
    a.beta.topRightCorner<2, 2>() = Mat2::Identity();
    a.beta.bottomLeftCorner<2, 2>() = Mat2::Identity();
    return a;
  }();
  return alg;
}

Mat2 involution_exp(const Mat2 &s, double theta) {
  return std::cos(theta) * Mat2::Identity() + cplx(0.0, -std::sin(theta)) * s;
}

Mat4 involution_exp(const Mat4 &s, double theta) {
  return std::cos(theta) * Mat4::Identity() + cplx(0.0, -std::sin(theta)) * s;
}

Mat2 weyl_block_step(const Vec3 &p) {
  const auto &a = SpinorAlgebra::get();
  return involution_exp(a.sigma[2], p(2)) * involution_exp(a.sigma[1], p(1)) * involution_exp(a.sigma[0], p(0));
}

double weyl_continuum_error(const Vec3 &p, double t, double eps) {
  const long steps = trotter_steps(t, eps);
  const auto &a = SpinorAlgebra::get();
  const Mat2 step = weyl_block_step(eps * p);
  Mat2 u = Mat2::Identity();
  for (long k = 0; k < steps; ++k) u = step * u;
  const double e = p.norm();
  Mat2 target = std::cos(e * t) * Mat2::Identity();
  if (e > 0.0) {
    const Mat2 h = p(0) * a.sigma[0] + p(1) * a.sigma[1] + p(2) * a.sigma[2];
    target += cplx(0.0, -std::sin(e * t) / e) * h;
  }
  return Eigen::JacobiSVD<Mat2>(u - target).singularValues()(0);
}

Mat4 dirac3d_block_step(const Vec3 &p, double mass_coupling) {
  const auto &a = SpinorAlgebra::get();
  return involution_exp(a.beta, mass_coupling) * involution_exp(a.alpha[2], p(2)) *
         involution_exp(a.alpha[1], p(1)) * involution_exp(a.alpha[0], p(0));
}

double dirac3d_continuum_error(double m, const Vec3 &p, double t, double eps) {
  const long steps = trotter_steps(t, eps);
  const auto &a = SpinorAlgebra::get();
  const Mat4 step = dirac3d_block_step(eps * p, m * eps);
  Mat4 u = Mat4::Identity();
  for (long k = 0; k < steps; ++k) u = step * u;
  const Mat4 h = p(0) * a.alpha[0] + p(1) * a.alpha[1] + p(2) * a.alpha[2] + m * a.beta;
  const double e = std::sqrt(p.squaredNorm() + m * m);
  Mat4 target = std::cos(e * t) * Mat4::Identity();
  if (e > 0.0) target += cplx(0.0, -std::sin(e * t) / e) * h;
  return Eigen::JacobiSVD<Mat4>(u - target).singularValues()(0);
}

Mat2 basis_change(int axis) {
  const double r = 1.0 / std::sqrt(2.0);
  Mat2 v;
  switch (axis) {
    case 1: v << r, r, r, -r; break;
    case 2: v << r, r, cplx(0, r), cplx(0, -r); break;
    case 3: v = Mat2::Identity(); break;
    default: throw DomainError("axis must be 1, 2 or 3");
  }
  return v;
}

Lattice weyl_lattice(const std::vector<int> &extents) {
  if (extents.size() != 3) throw DomainError("Weyl lattice needs three extents");
  std::vector<bool> periodic;
  for (int e : extents) periodic.push_back(e >= 2);
  Lattice lat(extents, periodic);
  for (const auto &s : lat.sites()) {
    lat.add_mode(Mode{s, kSpinUp});
    lat.add_mode(Mode{s, kSpinDown});
  }
  return lat;
}

namespace {

Site shifted(const Site &s, int axis, int delta, const Lattice &lat) {
  const int ax = axis - 1;
  const int e = lat.extents().at(ax);
  Site out = s;
  out[ax] = ((s[ax] + delta) % e + e) % e;
  return out;
}

void check_axis(int axis, const Lattice &lat) {
  if (axis < 1 || axis > 3) throw DomainError("axis must be 1, 2 or 3");
  if (lat.dims() != 3) throw DomainError("Weyl shifts need a three-dimensional lattice");
  if (lat.extents()[axis - 1] < 2 || !lat.periodic()[axis - 1])
    throw DomainError("shift axis must be periodic with extent >= 2");
}

// Annihilator of the spin state given by column `col` of basis_change(axis).
SymbolicOperator rotated_annihilator(const Site &s, int col, int axis) {
  const Mat2 v = basis_change(axis);
  SymbolicOperator out;
  for (int sp : {kSpinUp, kSpinDown})
    if (v(sp, col) != cplx(0.0)) out += std::conj(v(sp, col)) * SymbolicOperator::annihilate(Mode{s, sp});
  return out;
}

}  // namespace

MatrixOperator build_Ti(int axis, const Lattice &lat, const Ordering &ord) {
  check_axis(axis, lat);
  if (axis == 3) {
    std::map<Mode, Mode> perm;
    for (const auto &s : lat.sites()) {
      perm[Mode{s, kSpinUp}] = Mode{shifted(s, 3, 1, lat), kSpinUp};
      perm[Mode{s, kSpinDown}] = Mode{shifted(s, 3, -1, lat), kSpinDown};
    }
    return mode_permutation_unitary(perm, ord);
  }
  const auto &modes = ord.modes();
  const Eigen::Index d = static_cast<Eigen::Index>(modes.size());
  const Mat2 v = basis_change(axis);
  Matrix u = Matrix::Zero(d, d);
  for (const auto &s : lat.sites())
    for (int col : {0, 1}) {
      const Site to = shifted(s, axis, col == 0 ? 1 : -1, lat);
      Vector from_vec = Vector::Zero(d), to_vec = Vector::Zero(d);
      for (int sp : {kSpinUp, kSpinDown}) {
        from_vec(ord.pi(Mode{s, sp})) = v(sp, col);
        to_vec(ord.pi(Mode{to, sp})) = v(sp, col);
      }
      u += to_vec * from_vec.adjoint();
    }
  return lift_single_particle(u, modes, ord);
}

std::vector<LocalUnitaryFactor> swap_decompose_Ti(int axis, const Lattice &lat, const Ordering &ord) {
  check_axis(axis, lat);
  std::vector<LocalUnitaryFactor> out;
  auto add = [&](const Site &sa, int ca, const Site &sb, int cb, int layer) {
    const SymbolicOperator a = rotated_annihilator(sa, ca, axis);
    const SymbolicOperator b = rotated_annihilator(sb, cb, axis);
    const SymbolicOperator diff = b - a;
    const SymbolicOperator gen = diff.adjoint() * diff;
    LocalUnitaryFactor f;
    f.tag = FactorTag::swap;
    f.layer = layer;
    for (int sp : {kSpinUp, kSpinDown}) f.modes.push_back(Mode{sa, sp});
    if (sb != sa)
      for (int sp : {kSpinUp, kSpinDown}) f.modes.push_back(Mode{sb, sp});
    f.support_region.sites = {sa, sb};
    f.generator = (-std::numbers::pi / 2) * gen;
    if (ord.size() <= max_modes()) {
      f.matrix = identity_operator(ord) - lower(gen, ord);
      f.matrix.prune(1e-15, 1.0);
    }
    out.push_back(std::move(f));
  };
  for (const auto &s : lat.sites()) add(s, 1, shifted(s, axis, -1, lat), 0, 0);
  for (const auto &s : lat.sites()) add(s, 0, s, 1, 1);
  return out;
}

std::vector<Dispersion3dRow> dispersion_3d(int sites_per_axis) {
  const auto ks = momentum_indices(sites_per_axis);
  std::vector<Dispersion3dRow> rows;
  const double unit = 2.0 * std::numbers::pi / sites_per_axis;
  for (int k1 : ks)
    for (int k2 : ks)
      for (int k3 : ks) {
        const Vec3 p(unit * k1, unit * k2, unit * k3);
        const Eigen::Vector2d ph = block_phases(weyl_block_step(p));
        rows.push_back(Dispersion3dRow{k1, k2, k3, ph(1), ph(0)});
      }
  return rows;
}

std::string dispersion3d_csv(const std::vector<Dispersion3dRow> &rows) {
  std::ostringstream os;
  os << "k1,k2,k3,omega_plus,omega_minus\n";
  for (const auto &r : rows)
    os << r.k1 << ',' << r.k2 << ',' << r.k3 << ',' << format_double(r.omega_plus) << ','
       << format_double(r.omega_minus) << '\n';
  return os.str();
}

}  // namespace fermiqca
