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

#include "fermiqca/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <set>
#include <vector>

#include "fermiqca/jwmap.hpp"
#include "fermiqca/kernels.hpp"
#include "fermiqca/kron.hpp"
#include "fermiqca/linalg.hpp"

namespace fermiqca {

const char *tag_name(FactorTag t) {
  switch (t) {
    case FactorTag::swap: return "swap";
    case FactorTag::conjugated_swap: return "conjugated_swap";
    case FactorTag::onsite: return "onsite";
    case FactorTag::generic: return "generic";
  }
  return "?";
}

MatrixOperator factor_matrix(const LocalUnitaryFactor &f, const Ordering &ord) {
  if (!f.generator) {
    if (f.matrix.rows() != static_cast<Eigen::Index>(ord.dim()))
      throw DomainError("factor_matrix: stored matrix does not match the ordering");
    return f.matrix;
  }
  const PauliSum ps = jw(*f.generator, ord).canonical();
  std::set<int> sup = support(ps);
  if (sup.size() > 8) {
    const Matrix h = to_dense(lower(*f.generator, ord));
    return to_sparse(expm_hermitian(0.5 * (h + h.adjoint())), 1e-15);
  }
  if (sup.empty()) sup.insert(0);
  const std::vector<int> qs(sup.begin(), sup.end());
  const Matrix h = pauli_matrix_on(ps, qs);
  const Matrix u = expm_hermitian(0.5 * (h + h.adjoint()));
  // Embed: local index of basis state x from the bits at qs.
  const Eigen::Index dim = static_cast<Eigen::Index>(ord.dim()), k = u.rows();
  uint64_t mask = 0;
  for (int q : qs) mask |= uint64_t{1} << q;
  auto scatter = [&](Eigen::Index local) {
    uint64_t bits = 0;
    for (size_t i = 0; i < qs.size(); ++i)
      if (local >> i & 1) bits |= uint64_t{1} << qs[i];
    return bits;
  };
  std::vector<uint64_t> spread(k);
  for (Eigen::Index l = 0; l < k; ++l) spread[l] = scatter(l);
  std::vector<Eigen::Triplet<cplx>> trips;
  trips.reserve(static_cast<size_t>(dim * k));
  for (Eigen::Index x = 0; x < dim; ++x) {
    const uint64_t rest = static_cast<uint64_t>(x) & ~mask;
    Eigen::Index c = 0;
    for (size_t i = 0; i < qs.size(); ++i)
      if (x >> qs[i] & 1) c |= Eigen::Index{1} << i;
    for (Eigen::Index r = 0; r < k; ++r)
      if (std::abs(u(r, c)) > 1e-15) trips.emplace_back(static_cast<Eigen::Index>(rest | spread[r]), x, u(r, c));
  }
  MatrixOperator out(dim, dim);
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

// ---------------------------------------------------------------- doubled system

Mode DoubledSystem::copy_of(const Mode &m) { return Mode{m.site, m.label, ModeKind::copy}; }

DoubledSystem DoubledSystem::make(const Lattice &base, const Ordering &base_order) {
  for (const auto &m : base_order.modes()) {
    if (m.kind != ModeKind::physical) throw DomainError("doubled system: base modes must be physical");
    if (!base.contains(m)) throw DomainError("doubled system: ordering mode missing from lattice: " + m.str());
  }
  if (static_cast<size_t>(base_order.size()) != base.modes().size())
    throw DomainError("doubled system: ordering must cover every lattice mode");
  Lattice lat(base.extents(), base.periodic());
  std::vector<Mode> ms;
  for (const auto &m : base_order.modes()) {
    lat.add_mode(m);
    lat.add_mode(copy_of(m));
    ms.push_back(m);
    ms.push_back(copy_of(m));
  }
  return DoubledSystem{base, base_order, std::move(lat), Ordering(std::move(ms))};
}

Ordering DoubledSystem::blocked_order() const {
  std::vector<Mode> ms;
  for (const auto &m : base_order.modes()) ms.push_back(copy_of(m));
  for (const auto &m : base_order.modes()) ms.push_back(m);
  return Ordering(std::move(ms));
}

uint64_t DoubledSystem::copy_mask(const Ordering &ord) const {
  uint64_t mask = 0;
  for (int k = 0; k < ord.size(); ++k)
    if (ord.mode(k).kind == ModeKind::copy) mask |= uint64_t{1} << k;
  return mask;
}

// ---------------------------------------------------------------- swaps

SymbolicOperator swap_generator(const Mode &m1, const Mode &m2) {
  using S = SymbolicOperator;
  S d = S::create(m2) - S::create(m1);
  S a = S::annihilate(m2) - S::annihilate(m1);
  return d * a;
}

MatrixOperator fermionic_swap(const Mode &m1, const Mode &m2, const Ordering &ord) {
  if (m1 == m2) throw DomainError("fermionic_swap: modes must differ");
  ord.pi(m1);
  ord.pi(m2);
  // (b^dag - a^dag)(b - a) / 2 is a number operator, so the exponential
  // collapses to I - (b^dag - a^dag)(b - a).
  return lower(SymbolicOperator::identity() - swap_generator(m1, m2), ord);
}

MatrixOperator mode_permutation_unitary(const std::map<Mode, Mode> &perm, const Ordering &ord) {
  check_dense_cap(ord);
  std::vector<int> map(ord.size());
  std::vector<bool> hit(ord.size(), false);
  for (int k = 0; k < ord.size(); ++k) {
    auto it = perm.find(ord.mode(k));
    map[k] = it == perm.end() ? k : ord.pi(it->second);
    if (hit[map[k]]) throw DomainError("mode_permutation_unitary: map is not a bijection");
    hit[map[k]] = true;
  }
  return reordering_from_map(map).matrix();
}

// ---------------------------------------------------------------- embeddings

namespace {

SparseMatrix sparse_identity(Eigen::Index d) {
  SparseMatrix i(d, d);
  i.setIdentity();
  return i;
}

MatrixOperator from_blocked(const KronSum &k, const DoubledSystem &ds, const Ordering &ord) {
  return make_reordering(ds.blocked_order(), ord).apply(k.to_sparse());
}

}  // namespace

MatrixOperator embed_physical(const MatrixOperator &op, const DoubledSystem &ds, const Ordering &ord) {
  check_dense_cap(ord);
  const Eigen::Index d = static_cast<Eigen::Index>(ds.base_order.dim());
  if (op.rows() != d || op.cols() != d) throw DomainError("embed_physical: operator size does not match base");
  ParitySplit ps = parity_split(op);
  KronSum k(d, d);
  k.add(ps.even, Matrix::Identity(d, d));
  k.add(ps.odd, Matrix(parity_operator(ds.base_order)));
  return from_blocked(k, ds, ord);
}

MatrixOperator embed_physical(const MatrixOperator &op, const DoubledSystem &ds) {
  return embed_physical(op, ds, ds.order);
}

MatrixOperator global_swap(const DoubledSystem &ds, const Ordering &ord) {
  MatrixOperator s = identity_operator(ord);
  for (const auto &m : ds.base_order.modes()) s = fermionic_swap(m, DoubledSystem::copy_of(m), ord) * s;
  return s;
}

MatrixOperator build_UB(const MatrixOperator &u_a, const DoubledSystem &ds, const Ordering &ord) {
  check_dense_cap(ord);
  const Eigen::Index d = static_cast<Eigen::Index>(ds.base_order.dim());
  if (u_a.rows() != d || u_a.cols() != d) throw DomainError("build_UB: operator size does not match base");
  // With copy modes on the low bits, the b operators carry no string from
  // the physical block, so any polynomial in them is I (x) (same matrix).
  KronSum k(d, d);
  k.add(sparse_identity(d), Matrix(u_a));
  return from_blocked(k, ds, ord);
}

MatrixOperator build_UB(const MatrixOperator &u_a, const DoubledSystem &ds) { return build_UB(u_a, ds, ds.order); }

// ---------------------------------------------------------------- two-layer factorization

bool Theorem1Result::pass(const Theorem1Options &o) const {
  if (!certified) return false;
  if (product_residual > o.tol || max_conjugated_commutator > o.commute_tol || max_swap_commutator > o.commute_tol)
    return false;
  return std::all_of(localization.begin(), localization.end(), [&](double r) { return r <= o.tol; });
}

namespace {

double kron_commutator_norm(const KronSum &a, const KronSum &b, double tol) {
  KronSum c = a * b - b * a;
  const double f = c.frobenius();
  if (f <= tol) return f;
  return spectral_norm(c.to_sparse());
}

}  // namespace

Theorem1Result theorem1_factorize(const MatrixOperator &u_a, const DoubledSystem &ds, const Ordering &ord,
                                  const Theorem1Options &options) {
  check_dense_cap(ord);
  if (options.certify && ds.base_order.size() > 6)
    throw ResourceError("theorem1 product certificate is limited to 6 physical modes");
  for (const auto &r : causality_report(u_a, ds.base, ds.base_order, options.tol))
    if (!r.pass)
      throw ContractError("theorem1_factorize: U_A is not causal at mode " + r.mode.str() +
                          " (residual " + std::to_string(r.residual) + ")");
  const Ordering &base = ds.base_order;
  const Eigen::Index d = static_cast<Eigen::Index>(base.dim());
  const Matrix u = to_dense(u_a);
  const Matrix ud = u.adjoint();
  const Matrix par = Matrix(parity_operator(base));
  const Matrix id = Matrix::Identity(d, d);
  const SparseMatrix sid = sparse_identity(d);

  std::vector<Mode> phys = base.modes();
  std::sort(phys.begin(), phys.end(), [&](const Mode &x, const Mode &y) { return ord.pi(x) < ord.pi(y); });

  // Blocked frame: copy modes on the low bits, physical modes on the high
  // bits. There a_y = alpha (x) P and b_y = I (x) beta, so
  //   S_y = I - n (x) I - I (x) nu + alpha (x) beta^dag P + alpha^dag (x) P beta
  // and conjugation by U_B = I (x) U only touches the low factors.
  std::vector<KronSum> conj, plain;
  for (const auto &y : phys) {
    const SparseMatrix alpha = annihilation_matrix(y, base);
    const SparseMatrix alphad = alpha.adjoint();
    const SparseMatrix num = alphad * alpha;
    const Matrix beta = Matrix(alpha);
    const Matrix nu = beta.adjoint() * beta;
    const Matrix bdp = beta.adjoint() * par;
    const Matrix pb = par * beta;
    KronSum s(d, d), f(d, d);
    s.add(sid, id - nu);
    s.add(num, -id);
    s.add(alpha, bdp);
    s.add(alphad, pb);
    f.add(sid, id - u * nu * ud);
    f.add(num, -id);
    f.add(alpha, u * bdp * ud);
    f.add(alphad, u * pb * ud);
    conj.push_back(std::move(f));
    plain.push_back(std::move(s));
  }

  Theorem1Result res;
  const Reordering to_user = make_reordering(ds.blocked_order(), ord);
  for (size_t i = 0; i < phys.size(); ++i) {
    LocalUnitaryFactor lf;
    lf.matrix = to_user.apply(conj[i].to_sparse());
    lf.support_region.sites = ds.lattice.neighborhood(phys[i].site);
    lf.tag = FactorTag::conjugated_swap;
    lf.layer = 0;
    lf.modes = {phys[i], DoubledSystem::copy_of(phys[i])};
    res.factors.push_back(std::move(lf));
  }
  for (size_t i = 0; i < phys.size(); ++i) {
    LocalUnitaryFactor lf;
    lf.matrix = to_user.apply(plain[i].to_sparse());
    lf.support_region.sites = {phys[i].site};
    lf.tag = FactorTag::swap;
    lf.layer = 1;
    lf.modes = {phys[i], DoubledSystem::copy_of(phys[i])};
    lf.generator = (-std::numbers::pi / 2) * swap_generator(phys[i], DoubledSystem::copy_of(phys[i]));
    res.factors.push_back(std::move(lf));
  }
  if (!options.certify) return res;

  for (size_t i = 0; i < phys.size(); ++i)
    res.localization.push_back(
        localization_residual(res.factors[i].matrix, res.factors[i].support_region, ord, options.tol));

  res.max_conjugated_commutator = 0.0;
  res.max_swap_commutator = 0.0;
  for (size_t i = 0; i < phys.size(); ++i)
    for (size_t j = i + 1; j < phys.size(); ++j) {
      res.max_conjugated_commutator =
          std::max(res.max_conjugated_commutator, kron_commutator_norm(conj[i], conj[j], options.commute_tol));
      res.max_swap_commutator =
          std::max(res.max_swap_commutator, kron_commutator_norm(plain[i], plain[j], options.commute_tol));
    }

  // Ordered product of all factors, evaluated in the blocked frame; the
  // signed reordering to the caller's frame preserves every norm.
  const Eigen::Index full = d * d;
  Matrix prod = Matrix::Zero(full, full);
  {
    // Split the factors into two halves and form every product of a
    // second-half low factor with a first-half low factor in one GEMM.
    const size_t half = phys.size() / 2;
    KronSum first(d, d), second(d, d);
    first.add(sid, id);
    second.add(sid, id);
    for (size_t k = 0; k < half; ++k) first = conj[k] * first;
    for (size_t k = half; k < phys.size(); ++k) second = conj[k] * second;
    const auto &ft = first.terms();
    const auto &st = second.terms();
    Matrix left(d * static_cast<Eigen::Index>(st.size()), d);
    Matrix right(d, d * static_cast<Eigen::Index>(ft.size()));
    for (size_t i = 0; i < st.size(); ++i) left.middleRows(d * i, d) = st[i].lo;
    for (size_t j = 0; j < ft.size(); ++j) right.middleCols(d * j, d) = ft[j].lo;
    Matrix all = Matrix::Zero(left.rows(), right.cols());
    kernels::cgemm_acc(left.rows(), right.cols(), d, left.data(), left.rows(), right.data(), right.rows(), all.data(),
                       all.rows());
    for (size_t i = 0; i < st.size(); ++i)
      for (size_t j = 0; j < ft.size(); ++j) {
        SparseMatrix h = st[i].hi * ft[j].hi;
        h.prune(cplx(0.0));
        if (h.nonZeros() == 0) continue;
        const auto lo = all.block(d * i, d * j, d, d);
        for (int c = 0; c < h.outerSize(); ++c)
          for (SparseMatrix::InnerIterator it(h, c); it; ++it)
            prod.block(d * it.row(), d * c, d, d).noalias() += it.value() * lo;
      }
  }
  {
    // The plain swaps are signed permutations; compose them and permute rows.
    const Ordering blocked = ds.blocked_order();
    std::vector<Eigen::Index> to(full);
    std::vector<double> sign(full, 1.0);
    for (Eigen::Index i = 0; i < full; ++i) to[i] = i;
    for (const auto &y : phys) {
      const MatrixOperator s = fermionic_swap(y, DoubledSystem::copy_of(y), blocked);
      std::vector<Eigen::Index> img(full);
      std::vector<double> sg(full);
      for (int c = 0; c < s.outerSize(); ++c) {
        SparseMatrix::InnerIterator it(s, c);
        img[c] = it.row();
        sg[c] = it.value().real();
      }
      for (Eigen::Index i = 0; i < full; ++i) {
        sign[i] *= sg[to[i]];
        to[i] = img[to[i]];
      }
    }
    Matrix moved(full, full);
    for (Eigen::Index c = 0; c < full; ++c)
      for (Eigen::Index r = 0; r < full; ++r) moved(to[r], c) = sign[r] * prod(r, c);
    prod.swap(moved);
  }
  {
    // U_A U_B^dag = (U_even (x) I + U_odd (x) P)(I (x) U^dag).
    ParitySplit ps = parity_split(u_a);
    KronSum target(d, d);
    target.add(ps.even, ud);
    target.add(ps.odd, par * ud);
    Matrix neg = Matrix::Zero(full, full);
    target.accumulate_dense(neg);
    prod -= neg;
  }
  const double fro = prod.norm();
  res.product_residual = fro <= options.tol ? fro : spectral_norm(prod);
  res.certified = true;
  return res;
}

Theorem1Result theorem1_factorize(const MatrixOperator &u_a, const DoubledSystem &ds, const Theorem1Options &options) {
  return theorem1_factorize(u_a, ds, ds.order, options);
}

double measurement_equivalence_check(const MatrixOperator &u_a, const DoubledSystem &ds, const MatrixOperator &m_a,
                                     const StateVector &psi) {
  const Ordering &ord = ds.order;
  if (psi.size() != static_cast<Eigen::Index>(ord.dim())) throw DomainError("state size does not match doubled system");
  const uint64_t mask = ds.copy_mask(ord);
  for (uint64_t i = 0; i < ord.dim(); ++i)
    if ((i & mask) && std::abs(psi(static_cast<Eigen::Index>(i))) > 1e-14)
      throw ContractError("measurement_equivalence_check: copy modes must be unoccupied");
  const MatrixOperator ua = embed_physical(u_a, ds);
  const MatrixOperator ma = embed_physical(m_a, ds);
  const MatrixOperator ub = build_UB(u_a, ds);
  const StateVector lhs_state = ua * (MatrixOperator(ub.adjoint()) * psi);
  const StateVector rhs_state = ua * psi;
  const cplx lhs = lhs_state.dot(ma * lhs_state);
  const cplx rhs = rhs_state.dot(ma * rhs_state);
  return std::abs(lhs - rhs);
}

// ---------------------------------------------------------------- shift search

ShiftSearchResult search_shift_factorization(int ring_sites, int max_depth) {
  if (ring_sites < 3) throw DomainError("shift search needs at least 3 sites");
  const Lattice lat = Lattice::line(ring_sites, true);
  const Ordering ord = Ordering::row_major(lat);
  std::map<Mode, Mode> shift;
  for (int x = 0; x < ring_sites; ++x) shift[Mode{{x}, 0}] = Mode{{(x + 1) % ring_sites}, 0};
  const Matrix target = Matrix(mode_permutation_unitary(shift, ord));
  const double dim = double(ord.dim());

  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < ring_sites; ++x) {
    std::pair<int, int> e{std::min(x, (x + 1) % ring_sites), std::max(x, (x + 1) % ring_sites)};
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  // Every layer is a matching of the ring (the empty matching included).
  std::vector<std::vector<std::pair<int, int>>> layers;
  for (uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    std::vector<std::pair<int, int>> l;
    uint64_t used = 0;
    bool ok = true;
    for (size_t e = 0; e < edges.size() && ok; ++e) {
      if (!((mask >> e) & 1)) continue;
      const uint64_t m = (uint64_t{1} << edges[e].first) | (uint64_t{1} << edges[e].second);
      ok = (used & m) == 0;
      used |= m;
      l.push_back(edges[e]);
    }
    if (ok) layers.push_back(std::move(l));
  }
  std::vector<Matrix> layer_mats;
  for (const auto &l : layers) {
    MatrixOperator u = identity_operator(ord);
    for (const auto &[x, y] : l) u = fermionic_swap(Mode{{x}, 0}, Mode{{y}, 0}, ord) * u;
    layer_mats.push_back(Matrix(u));
  }
  ShiftSearchResult res;
  std::vector<size_t> pick;
  std::function<void(const Matrix &)> rec = [&](const Matrix &acc) {
    ++res.candidates;
    const double overlap = std::abs((target.adjoint() * acc).trace()) / dim;
    if (std::abs(overlap - 1.0) <= 1e-12 && !res.found) {
      res.found = true;
      for (size_t i : pick) res.witness.push_back(layers[i]);
    }
    if (static_cast<int>(pick.size()) == max_depth) return;
    for (size_t i = 0; i < layers.size(); ++i) {
      pick.push_back(i);
      rec(layer_mats[i] * acc);
      pick.pop_back();
    }
  };
  rec(Matrix::Identity(target.rows(), target.cols()));
  return res;
}

// ---------------------------------------------------------------- JSON

nlohmann::json to_json(const LocalUnitaryFactor &f, const Ordering &ord, bool include_matrix) {
  nlohmann::json region = nlohmann::json::array();
  for (const auto &s : f.support_region.sites) region.push_back(site_json(s));
  nlohmann::json modes = nlohmann::json::array();
  for (const auto &m : f.modes)
    modes.push_back({{"site", site_json(m.site)}, {"label", m.label}, {"kind", kind_name(m.kind)}, {"pi", ord.pi(m)}});
  nlohmann::json j{{"tag", tag_name(f.tag)}, {"layer", f.layer}, {"modes", modes}, {"support_region", region}};
  if (include_matrix && f.matrix.size() > 0) {
    const Matrix m(f.matrix);
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      nlohmann::json rr = nlohmann::json::array(), ii = nlohmann::json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        rr.push_back(m(r, c).real());
        ii.push_back(m(r, c).imag());
      }
      re.push_back(std::move(rr));
      im.push_back(std::move(ii));
    }
    j["matrix"] = {{"rows", m.rows()}, {"re", re}, {"im", im}};
  }
  return j;
}

nlohmann::json to_json(const Theorem1Result &r, const Ordering &ord, bool include_matrices) {
  nlohmann::json fs = nlohmann::json::array();
  for (const auto &f : r.factors) fs.push_back(to_json(f, ord, include_matrices));
  return nlohmann::json{{"factors", fs},
                        {"product_residual", r.product_residual},
                        {"max_conjugated_commutator", r.max_conjugated_commutator},
                        {"max_swap_commutator", r.max_swap_commutator},
                        {"localization_residuals", r.localization},
                        {"certified", r.certified}};
}

}  // namespace fermiqca
