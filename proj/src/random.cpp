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

#include "fermiqca/random.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "fermiqca/linalg.hpp"

namespace fermiqca {

namespace {

inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

uint64_t Rng::next_u64() {
  ++counter_;
  return mix64(seed_ + counter_ * 0x9E3779B97F4A7C15ULL);
}

double Rng::uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

uint64_t Rng::below(uint64_t n) {
  if (n == 0) throw DomainError("Rng::below(0)");
  // Rejection sampling keeps the draw unbiased.
  const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
  uint64_t v;
  do v = next_u64();
  while (v >= limit);
  return v % n;
}

Rng Rng::fork(uint64_t tag) const { return Rng(mix64(seed_ ^ mix64(tag + 0x632BE59BD9B4E019ULL))); }

SymbolicOperator random_even_generator(Rng &rng, const std::vector<Mode> &modes, double scale) {
  using S = SymbolicOperator;
  S h;
  for (size_t i = 0; i < modes.size(); ++i)
    h += scale * rng.normal() * (S::create(modes[i]) * S::annihilate(modes[i]));
  for (size_t i = 0; i < modes.size(); ++i)
    for (size_t j = i + 1; j < modes.size(); ++j) {
      const cplx t = scale * rng.complex_normal() * 0.5;
      const cplx d = scale * rng.complex_normal() * 0.5;
      const double u = scale * rng.normal() * 0.5;
      S hop = t * (S::create(modes[i]) * S::annihilate(modes[j]));
      S pair = d * (S::create(modes[i]) * S::create(modes[j]));
      h += hop + hop.adjoint() + pair + pair.adjoint();
      h += u * (S::create(modes[i]) * S::annihilate(modes[i]) * S::create(modes[j]) * S::annihilate(modes[j]));
    }
  return h;
}

namespace {

Matrix gate_on(Rng &rng, const std::vector<Mode> &modes, const Ordering &ord) {
  Matrix h(lower(random_even_generator(rng, modes), ord));
  return expm_hermitian(h);
}

}  // namespace

MatrixOperator random_causal_brickwork(Rng &rng, const Lattice &lat, const Ordering &ord) {
  check_dense_cap(ord);
  if (lat.dims() != 1) throw DomainError("random_causal_brickwork expects a line");
  const int n = lat.extents()[0];
  std::map<int, std::vector<Mode>> by_site;
  for (const auto &m : ord.modes()) by_site[m.site[0]].push_back(m);
  for (auto &[s, ms] : by_site)
    std::sort(ms.begin(), ms.end(), [](const Mode &a, const Mode &b) { return a.label < b.label; });
  size_t per_site = by_site.empty() ? 0 : by_site.begin()->second.size();
  for (const auto &[s, ms] : by_site)
    if (ms.size() != per_site) throw DomainError("random_causal_brickwork expects equal modes per site");
  const Eigen::Index dim = static_cast<Eigen::Index>(ord.dim());
  Matrix u = Matrix::Identity(dim, dim);
  auto apply = [&](const Matrix &g) { u = g * u; };
  auto onsite_layer = [&]() {
    for (int x = 0; x < n; ++x) apply(gate_on(rng, by_site[x], ord));
  };
  onsite_layer();
  if (per_site >= 2) {
    const int first_bond = lat.periodic()[0] ? 0 : 1;
    for (int x = first_bond; x < n; ++x) {
      const int left = (x - 1 + n) % n;
      apply(gate_on(rng, {by_site[left].back(), by_site[x].front()}, ord));
    }
  } else {
    const int offset = static_cast<int>(rng.below(2));
    for (int x = offset; x + 1 < n; x += 2) {
      std::vector<Mode> ms = by_site[x];
      ms.insert(ms.end(), by_site[x + 1].begin(), by_site[x + 1].end());
      apply(gate_on(rng, ms, ord));
    }
  }
  onsite_layer();
  return to_sparse(u);
}

StateVector random_state(Rng &rng, const Ordering &ord, uint64_t allowed_mask) {
  check_dense_cap(ord);
  StateVector v = StateVector::Zero(static_cast<Eigen::Index>(ord.dim()));
  for (uint64_t i = 0; i < ord.dim(); ++i)
    if ((i & ~allowed_mask) == 0) v(static_cast<Eigen::Index>(i)) = rng.complex_normal();
  v.normalize();
  return v;
}

Monomial random_monomial(Rng &rng, const Ordering &ord, int degree) {
  Monomial m{rng.complex_normal(), {}};
  for (int k = 0; k < degree; ++k) {
    const Mode &mode = ord.mode(static_cast<int>(rng.below(static_cast<uint64_t>(ord.size()))));
    m.factors.push_back(Factor{rng.below(2) ? FactorKind::create : FactorKind::annihilate, mode});
  }
  return m;
}

}  // namespace fermiqca
