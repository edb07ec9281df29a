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


#include "fermiqca/majorana.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "fermiqca/causality.hpp"
#include "fermiqca/jwmap.hpp"
#include "fermiqca/linalg.hpp"

namespace fermiqca {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::string site_str(const Site &s) {
  std::string out = "(";
  for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

void require_ancilla(const Mode &m) {
  if (m.kind != ModeKind::ancilla) throw DomainError("expected an ancilla mode, got " + m.str());
}

}  // namespace

AncillaPair make_ancilla_pair(int id, const Site &x, const Site &y) {
  if (x == y) throw DomainError("ancilla pair needs two distinct sites");
  if (id < 0) throw DomainError("ancilla pair id must be non-negative");
  return AncillaPair{Mode{x, id, ModeKind::ancilla}, Mode{y, id, ModeKind::ancilla}};
}

const AncillaPair *AncillaRegistry::find(const Site &a, const Site &b) const {
  for (const auto &p : pairs_)
    if ((p.x() == a && p.y() == b) || (p.x() == b && p.y() == a)) return &p;
  return nullptr;
}

const AncillaPair &AncillaRegistry::add(const Site &x, const Site &y) {
  pairs_.push_back(make_ancilla_pair(next_id_++, x, y));
  return pairs_.back();
}

void AncillaRegistry::insert(const AncillaPair &p) {
  require_ancilla(p.c_at_x);
  require_ancilla(p.c_at_y);
  for (const auto &q : pairs_)
    if (q.id() == p.id()) throw DomainError("ancilla pair id already registered: " + std::to_string(p.id()));
  pairs_.push_back(p);
  next_id_ = std::max(next_id_, p.id() + 1);
}

nlohmann::json AncillaRegistry::to_json(const Ordering &ord) const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto &p : pairs_) {
    nlohmann::json pis = nlohmann::json::array();
    pis.push_back(ord.contains(p.c_at_x) ? nlohmann::json(ord.pi(p.c_at_x)) : nlohmann::json());
    pis.push_back(ord.contains(p.c_at_y) ? nlohmann::json(ord.pi(p.c_at_y)) : nlohmann::json());
    out.push_back({{"pair_id", p.id()}, {"site_x", site_json(p.x())}, {"site_y", site_json(p.y())}, {"pi_positions", pis}});
  }
  return out;
}

MatrixOperator majorana_op(const Mode &anc, const Ordering &ord) {
  require_ancilla(anc);
  return lower(SymbolicOperator::majorana(anc), ord);
}

SymbolicOperator m_symbol(const AncillaPair &p) {
  return kI * (SymbolicOperator::majorana(p.c_at_x) * SymbolicOperator::majorana(p.c_at_y));
}

MatrixOperator m_operator(const AncillaPair &p, const Ordering &ord) {
  require_ancilla(p.c_at_x);
  require_ancilla(p.c_at_y);
  return lower(m_symbol(p), ord);
}

MatrixOperator plus_projector(const std::vector<AncillaPair> &pairs, const Ordering &ord) {
  MatrixOperator proj = identity_operator(ord);
  const MatrixOperator id = identity_operator(ord);
  for (const auto &p : pairs) {
    MatrixOperator half = 0.5 * (id + m_operator(p, ord));
    proj = MatrixOperator(half * proj);
  }
  return proj;
}

SymbolicOperator b_symbol(const AncillaPair &p) {
  using S = SymbolicOperator;
  S ddag = kInvSqrt2 * (S::create(p.c_at_x) - kI * S::create(p.c_at_y));
  return ddag + ddag.adjoint();
}

MatrixOperator b_unitary(const AncillaPair &p, const Ordering &ord, double theta) {
  return std::cos(theta) * identity_operator(ord) + cplx(0.0, std::sin(theta)) * lower(b_symbol(p), ord);
}

Ordering with_ancillas(const Ordering &ord, const std::vector<AncillaPair> &pairs) {
  if (!ord.same_site_consecutive()) throw DomainError("with_ancillas: modes of a site must be consecutive");
  std::map<Site, std::vector<Mode>> extra;
  for (const auto &p : pairs)
    for (const Mode &c : {p.c_at_x, p.c_at_y}) {
      require_ancilla(c);
      if (!ord.contains(c)) extra[c.site].push_back(c);
    }
  for (auto &[site, ms] : extra) {
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  }
  std::vector<Mode> out;
  size_t placed = 0;
  const auto &ms = ord.modes();
  for (size_t k = 0; k < ms.size(); ++k) {
    out.push_back(ms[k]);
    if (k + 1 == ms.size() || ms[k + 1].site != ms[k].site) {
      auto it = extra.find(ms[k].site);
      if (it != extra.end()) {
        out.insert(out.end(), it->second.begin(), it->second.end());
        ++placed;
      }
    }
  }
  if (placed != extra.size()) throw DomainError("with_ancillas: ancilla host site has no modes in the ordering");
  return Ordering(std::move(out));
}

Lattice with_ancillas(const Lattice &lat, const std::vector<AncillaPair> &pairs) {
  Lattice out = lat;
  for (const auto &p : pairs)
    for (const Mode &c : {p.c_at_x, p.c_at_y})
      if (!out.contains(c)) out.add_mode(c);
  return out;
}

std::map<Site, int> ancillas_per_site(const std::vector<AncillaPair> &pairs) {
  std::map<Site, int> out;
  for (const auto &p : pairs) {
    ++out[p.x()];
    ++out[p.y()];
  }
  return out;
}

namespace {

bool monomial_is_local(const Monomial &m, const SubstituteContext &ctx) {
  return jw_locality_report(SymbolicOperator({m}), *ctx.ordering, *ctx.lattice).at(0).local;
}

void insert_m(const AncillaPair &p, std::vector<Factor> &out) {
  out.push_back(Factor{FactorKind::majorana, p.c_at_x});
  out.push_back(Factor{FactorKind::majorana, p.c_at_y});
}

const AncillaPair &pair_for(const AncillaRegistry &reg, const Site &a, const Site &b) {
  const AncillaPair *p = reg.find(a, b);
  if (!p) throw DomainError("no ancilla pair joins sites " + site_str(a) + " and " + site_str(b));
  return *p;
}

}  // namespace

SymbolicOperator substitute(const SymbolicOperator &op, const AncillaRegistry &reg, const SubstituteContext &ctx,
                            std::vector<std::string> *warnings) {
  const bool check = ctx.ordering && ctx.lattice;
  std::vector<Monomial> out;
  for (size_t t = 0; t < op.terms().size(); ++t) {
    const Monomial &m = op.terms()[t];
    for (const auto &f : m.factors)
      if (f.kind == FactorKind::majorana) throw DomainError("substitute: monomial already contains Majorana factors");
    const size_t deg = m.factors.size();
    if (deg == 0) {
      out.push_back(m);
      continue;
    }
    if (deg != 2 && deg != 4)
      throw DomainError("substitute: only quadratic and quartic monomials are supported, got degree " +
                        std::to_string(deg));
    if (check && monomial_is_local(m, ctx)) {
      if (warnings) warnings->push_back("term " + std::to_string(t) + " is already qubit-local; left unchanged");
      out.push_back(m);
      continue;
    }
    Monomial r{m.coeff, {}};
    for (size_t g = 0; g < deg; g += 2) {
      const Factor &a = m.factors[g];
      const Factor &b = m.factors[g + 1];
      r.factors.push_back(a);
      if (a.mode.site != b.mode.site) {
        insert_m(pair_for(reg, a.mode.site, b.mode.site), r.factors);
        r.coeff *= kI;
      }
      r.factors.push_back(b);
    }
    out.push_back(std::move(r));
  }
  return SymbolicOperator(std::move(out));
}

SymbolicOperator substitute(const SymbolicOperator &op, const AncillaPair &pair, const SubstituteContext &ctx,
                            std::vector<std::string> *warnings) {
  AncillaRegistry reg;
  reg.insert(pair);
  return substitute(op, reg, ctx, warnings);
}

StateVector prepare_plus_state(const std::vector<AncillaPair> &pairs, const Ordering &ord) {
  std::set<Mode> used;
  for (const auto &p : pairs)
    for (const Mode &c : {p.c_at_x, p.c_at_y}) {
      require_ancilla(c);
      if (!used.insert(c).second) throw DomainError("prepare_plus_state: pairs overlap at " + c.str());
    }
  StateVector psi = vacuum(ord);
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    const MatrixOperator op =
        kInvSqrt2 * (creation_matrix(it->c_at_x, ord) - kI * creation_matrix(it->c_at_y, ord));
    psi = op * psi;
  }
  return psi;
}

// ---------------------------------------------------------------- generators

namespace {

// Expands a region block (region modes on the low bits, in `modes` order)
// into monomials. Choice per mode: 0 identity, 1 number, 2 create, 3 annihilate.
SymbolicOperator expand_block(const Matrix &h, const std::vector<Mode> &modes, double drop) {
  const int r = static_cast<int>(modes.size());
  const Ordering local(modes);
  std::map<std::vector<uint8_t>, cplx> acc;
  for (Eigen::Index col = 0; col < h.cols(); ++col)
    for (Eigen::Index row = 0; row < h.rows(); ++row) {
      const cplx v = h(row, col);
      if (std::abs(v) <= 1e-15) continue;
      std::vector<Factor> fs;
      std::vector<uint8_t> base(r);
      std::vector<int> free;
      for (int j = 0; j < r; ++j) {
        const bool rb = (row >> j) & 1, cb = (col >> j) & 1;
        if (rb && cb) {
          fs.push_back(Factor{FactorKind::create, modes[j]});
          fs.push_back(Factor{FactorKind::annihilate, modes[j]});
          base[j] = 1;
        } else if (rb) {
          fs.push_back(Factor{FactorKind::create, modes[j]});
          base[j] = 2;
        } else if (cb) {
          fs.push_back(Factor{FactorKind::annihilate, modes[j]});
          base[j] = 3;
        } else {
          free.push_back(j);
        }
      }
      const BasisImage img = apply_monomial(fs, local, static_cast<uint64_t>(col));
      if (img.sign == 0 || img.index != static_cast<uint64_t>(row))
        throw ContractError("expand_block: inconsistent matrix-unit image");
      // Each unoccupied-to-unoccupied mode contributes (1 - n).
      for (uint64_t sub = 0; sub < (uint64_t{1} << free.size()); ++sub) {
        std::vector<uint8_t> key = base;
        for (size_t q = 0; q < free.size(); ++q)
          if ((sub >> q) & 1) key[free[q]] = 1;
        acc[key] += (popcount(sub) & 1 ? -1.0 : 1.0) * double(img.sign) * v;
      }
    }
  std::vector<Monomial> terms;
  for (const auto &[key, c] : acc) {
    if (std::abs(c) <= drop) continue;
    Monomial m{c, {}};
    for (int j = 0; j < r; ++j) {
      switch (key[j]) {
        case 1:
          m.factors.push_back(Factor{FactorKind::create, modes[j]});
          m.factors.push_back(Factor{FactorKind::annihilate, modes[j]});
          break;
        case 2: m.factors.push_back(Factor{FactorKind::create, modes[j]}); break;
        case 3: m.factors.push_back(Factor{FactorKind::annihilate, modes[j]}); break;
        default: break;
      }
    }
    terms.push_back(std::move(m));
  }
  return SymbolicOperator(std::move(terms));
}

}  // namespace

SymbolicOperator extract_generator(const LocalUnitaryFactor &f, const Ordering &ord, double tol) {
  if (f.generator) return *f.generator;
  if (f.matrix.rows() != static_cast<Eigen::Index>(ord.dim()) || f.matrix.cols() != f.matrix.rows())
    throw ContractError("extract_generator: factor has neither a generator nor a matrix for this ordering");
  const Matrix u = to_dense(f.matrix);
  if (unitarity_defect(u) > 1e-8) throw ContractError("extract_generator: factor is not unitary");
  const Matrix h = -logm_unitary(u);
  const ParitySplit ps = parity_split(to_sparse(h));
  if (spectral_norm(Matrix(ps.odd)) > tol) throw ContractError("extract_generator: generator is not even");
  Region region = f.support_region;
  if (region.sites.empty())
    for (const auto &m : ord.modes()) region.sites.insert(m.site);
  const RegionBlock rb = region_block(ps.even, region, ord, tol);
  if (rb.residual > tol) throw ContractError("extract_generator: generator is not localized on the factor region");
  SymbolicOperator gen = expand_block(rb.block, rb.modes, 1e-12);
  const double check = spectral_norm(to_dense(lower(gen, ord)) - Matrix(ps.even));
  if (check > 1e-8) throw ContractError("extract_generator: monomial expansion does not reproduce the generator");
  return gen;
}

LocalizeResult localize(const LocalUnitaryFactor &factor, const Ordering &ord, const Lattice &lat,
                        AncillaRegistry &reg, bool reuse) {
  const SymbolicOperator h = extract_generator(factor, ord);
  const auto report = jw_locality_report(h, ord, lat);
  LocalizeResult res{factor, {}, ord, lat, {}};
  if (std::all_of(report.begin(), report.end(), [](const LocalityEntry &e) { return e.local; })) return res;

  AncillaRegistry use;
  auto need = [&](const Site &a, const Site &b) {
    if (a == b || use.find(a, b)) return;
    const AncillaPair *p = reuse ? reg.find(a, b) : nullptr;
    if (!p) {
      p = &reg.add(a, b);
      res.new_pairs.push_back(*p);
    }
    use.insert(*p);
  };
  std::vector<Monomial> flagged, kept;
  for (const auto &e : report) {
    const Monomial &m = h.terms()[e.term];
    if (e.local) {
      kept.push_back(m);
      continue;
    }
    if (m.factors.size() != 2 && m.factors.size() != 4)
      throw ContractError("localize: non-local monomial of degree " + std::to_string(m.factors.size()) +
                          " cannot be repaired");
    for (size_t g = 0; g < m.factors.size(); g += 2) need(m.factors[g].mode.site, m.factors[g + 1].mode.site);
    flagged.push_back(m);
  }
  res.ordering = with_ancillas(ord, reg.pairs());
  res.lattice = with_ancillas(lat, reg.pairs());
  SymbolicOperator repaired = substitute(SymbolicOperator(flagged), use);
  repaired += SymbolicOperator(kept);
  for (const auto &e : jw_locality_report(repaired, res.ordering, res.lattice))
    if (!e.local)
      throw ContractError("localize: substitution left term " + std::to_string(e.term) + " non-local");
  res.factor.generator = repaired;
  res.factor.matrix = MatrixOperator();
  for (const auto &p : res.new_pairs) {
    res.factor.modes.push_back(p.c_at_x);
    res.factor.modes.push_back(p.c_at_y);
  }
  return res;
}

}  // namespace fermiqca
