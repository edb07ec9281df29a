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


#include "fermiqca/dirac1d.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "fermiqca/linalg.hpp"

namespace fermiqca {

DiracParams DiracParams::lattice_units(int sites, double mass_coupling, int steps) {
  DiracParams p;
  p.sites = sites;
  p.ring_length = sites;
  p.spacing = 1.0;
  p.mass = mass_coupling;
  p.mass_coupling = mass_coupling;
  p.steps = steps;
  p.time = steps;
  p.validate();
  return p;
}

DiracParams DiracParams::physical(int sites, double ring_length, double mass, int steps) {
  DiracParams p;
  p.sites = sites;
  p.ring_length = ring_length;
  p.spacing = ring_length / sites;
  p.mass = mass;
  p.mass_coupling = mass * p.spacing;
  p.steps = steps;
  p.time = steps * p.spacing;
  p.validate();
  return p;
}

void DiracParams::validate() const {
  if (sites < 3 || sites % 2 == 0) throw DomainError("Dirac ring needs an odd number of sites >= 3");
  if (!(spacing > 0.0)) throw DomainError("lattice spacing must be positive");
  if (steps < 0) throw DomainError("step count must be non-negative");
  if (std::abs(mass_coupling - mass * spacing) > 1e-15 * std::max(1.0, std::abs(mass_coupling)))
    throw DomainError("mass coupling must equal mass times spacing");
}

Lattice dirac_lattice(int sites) {
  if (sites < 3 || sites % 2 == 0) throw DomainError("Dirac ring needs an odd number of sites >= 3");
  return Lattice::line(sites, true, 2);
}

Ordering dirac_ordering(const Lattice &lat) { return Ordering::row_major(lat); }

std::vector<int> momentum_indices(int sites) {
  if (sites < 1 || sites % 2 == 0) throw DomainError("momentum grid needs an odd site count");
  std::vector<int> ks;
  for (int k = -(sites - 1) / 2; k <= (sites - 1) / 2; ++k) ks.push_back(k);
  return ks;
}

namespace {

Mode psi(int n, int label, int sites) { return Mode{{((n % sites) + sites) % sites}, label}; }

}  // namespace

MatrixOperator build_T(const DiracParams &p, const Ordering &ord) {
  p.validate();
  std::map<Mode, Mode> perm;
  for (int n = 0; n < p.sites; ++n) {
    perm[psi(n, kRight, p.sites)] = psi(n + 1, kRight, p.sites);
    perm[psi(n, kLeft, p.sites)] = psi(n - 1, kLeft, p.sites);
  }
  return mode_permutation_unitary(perm, ord);
}

MatrixOperator build_T_momentum(const DiracParams &p, const Ordering &ord) {
  p.validate();
  check_dense_cap(ord);
  const auto &modes = ord.modes();
  const Eigen::Index d = static_cast<Eigen::Index>(modes.size());
  Matrix h = Matrix::Zero(d, d);
  for (int k : momentum_indices(p.sites)) {
    const double mom = 2.0 * std::numbers::pi * k / p.sites;
    for (int label : {kRight, kLeft}) {
      Vector v = Vector::Zero(d);
      for (int n = 0; n < p.sites; ++n)
        v(ord.pi(psi(n, label, p.sites))) = std::polar(1.0 / std::sqrt(double(p.sites)), mom * n);
      h += (label == kRight ? mom : -mom) * (v * v.adjoint());
    }
  }
  const Matrix gen = to_dense(lower(quadratic_form(h, modes), ord));
  return to_sparse(expm_hermitian(0.5 * (gen + gen.adjoint())), 1e-15);
}

MatrixOperator onsite_hop_unitary(const Mode &a, const Mode &b, double angle, const Ordering &ord) {
  using S = SymbolicOperator;
  const S na = S::create(a) * S::annihilate(a);
  const S nb = S::create(b) * S::annihilate(b);
  const MatrixOperator h = lower(S::create(a) * S::annihilate(b) + S::create(b) * S::annihilate(a), ord);
  const MatrixOperator q = lower(na + nb - 2.0 * (na * nb), ord);
  MatrixOperator u = identity_operator(ord) + (std::cos(angle) - 1.0) * q + cplx(0.0, -std::sin(angle)) * h;
  u.prune(cplx(0.0));
  return u;
}

MatrixOperator build_W(const DiracParams &p, const Ordering &ord) {
  p.validate();
  MatrixOperator w = identity_operator(ord);
  for (int n = 0; n < p.sites; ++n)
    w = MatrixOperator(onsite_hop_unitary(psi(n, kRight, p.sites), psi(n, kLeft, p.sites), p.mass_coupling, ord) * w);
  return w;
}

MatrixOperator build_W_dense(const DiracParams &p, const Ordering &ord) {
  p.validate();
  check_dense_cap(ord);
  using S = SymbolicOperator;
  S gen;
  for (int n = 0; n < p.sites; ++n) {
    const Mode r = psi(n, kRight, p.sites), l = psi(n, kLeft, p.sites);
    gen += S::create(r) * S::annihilate(l) + S::create(l) * S::annihilate(r);
  }
  const Matrix h = to_dense(lower(gen, ord));
  return to_sparse(expm_hermitian(h, p.mass_coupling), 1e-15);
}

namespace {

LocalUnitaryFactor swap_factor(const Mode &a, const Mode &b, int layer, const Ordering &ord) {
  LocalUnitaryFactor f;
  f.tag = FactorTag::swap;
  f.layer = layer;
  f.modes = {a, b};
  f.support_region.sites = {a.site, b.site};
  f.generator = (-std::numbers::pi / 2) * swap_generator(a, b);
  if (ord.size() <= max_modes()) f.matrix = fermionic_swap(a, b, ord);
  return f;
}

}  // namespace

std::vector<LocalUnitaryFactor> swap_decompose_T(const DiracParams &p, const Ordering &ord) {
  p.validate();
  std::vector<LocalUnitaryFactor> out;
  for (int n = 0; n < p.sites; ++n)
    out.push_back(swap_factor(psi(n, kLeft, p.sites), psi(n - 1, kRight, p.sites), 0, ord));
  for (int n = 0; n < p.sites; ++n)
    out.push_back(swap_factor(psi(n, kRight, p.sites), psi(n, kLeft, p.sites), 1, ord));
  return out;
}

std::vector<LocalUnitaryFactor> mass_factors(const DiracParams &p, const Ordering &ord) {
  p.validate();
  std::vector<LocalUnitaryFactor> out;
  if (p.mass_coupling == 0.0) return out;
  using S = SymbolicOperator;
  for (int n = 0; n < p.sites; ++n) {
    const Mode r = psi(n, kRight, p.sites), l = psi(n, kLeft, p.sites);
    LocalUnitaryFactor f;
    f.tag = FactorTag::onsite;
    f.layer = 2;
    f.modes = {r, l};
    f.support_region.sites = {r.site};
    f.generator = p.mass_coupling * (S::create(r) * S::annihilate(l) + S::create(l) * S::annihilate(r));
    if (ord.size() <= max_modes()) f.matrix = onsite_hop_unitary(r, l, p.mass_coupling, ord);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<LocalUnitaryFactor> step_factors(const DiracParams &p, const Ordering &ord) {
  auto out = swap_decompose_T(p, ord);
  auto w = mass_factors(p, ord);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

SingleParticleBlock block_step(double momentum, double mass_coupling) {
  const cplx c = std::cos(mass_coupling), s(0.0, -std::sin(mass_coupling));
  Mat2 mass;
  mass << c, s, s, c;
  Mat2 shift = Mat2::Zero();
  shift(0, 0) = std::polar(1.0, -momentum);
  shift(1, 1) = std::polar(1.0, momentum);
  return SingleParticleBlock{momentum, mass * shift};
}

Eigen::Vector2d block_phases(const Mat2 &u) {
  Eigen::ComplexEigenSolver<Mat2> es(u);
  Eigen::Vector2d ph(std::arg(es.eigenvalues()(0)), std::arg(es.eigenvalues()(1)));
  if (ph(0) > ph(1)) std::swap(ph(0), ph(1));
  return ph;
}

long trotter_steps(double t, double eps) {
  if (!(eps > 0.0)) throw DomainError("epsilon must be positive");
  const double ratio = t / eps;
  const long steps = std::lround(ratio);
  if (std::abs(ratio - double(steps)) > 1e-9 * std::max(1.0, std::abs(ratio)) || steps < 0)
    throw DomainError("t / epsilon must be a non-negative integer");
  return steps;
}

double continuum_error(double m, double p, double t, double eps) {
  const long steps = trotter_steps(t, eps);
  if (std::abs(p * eps) >= std::numbers::pi) throw DomainError("continuum_error: |p epsilon| must be below pi");
  const Mat2 step = block_step(p * eps, m * eps).matrix;
  Mat2 u = Mat2::Identity();
  for (long k = 0; k < steps; ++k) u = step * u;
  Mat2 h;
  h << p, m, m, -p;
  const double e = std::hypot(p, m);
  Mat2 target = std::cos(e * t) * Mat2::Identity();
  if (e > 0.0) target += cplx(0.0, -std::sin(e * t) / e) * h;
  return Eigen::JacobiSVD<Mat2>(u - target).singularValues()(0);
}

std::vector<DispersionRow> dispersion_1d(int sites, double mass_coupling) {
  std::vector<DispersionRow> rows;
  for (int k : momentum_indices(sites)) {
    const double mom = 2.0 * std::numbers::pi * k / sites;
    rows.push_back(DispersionRow{k, mom, mass_coupling, block_phases(block_step(mom, mass_coupling).matrix)(1)});
  }
  return rows;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dispersion_csv(const std::vector<DispersionRow> &rows) {
  std::ostringstream os;
  os << "k,p,M,omega\n";
  for (const auto &r : rows)
    os << r.k << ',' << format_double(r.p) << ',' << format_double(r.mass_coupling) << ',' << format_double(r.omega)
       << '\n';
  return os.str();
}

std::string convergence_csv(const std::string &header, const std::vector<ConvergenceRow> &rows) {
  std::ostringstream os;
  os << "# " << header << "\nepsilon,steps,error\n";
  for (const auto &r : rows) os << format_double(r.epsilon) << ',' << r.steps << ',' << format_double(r.error) << '\n';
  return os.str();
}

}  // namespace fermiqca
