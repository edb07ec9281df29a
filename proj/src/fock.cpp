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

#include "fermiqca/fock.hpp"
#include "fermiqca/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace fermiqca {

int max_modes() {
  static const int cap = [] {
    const char *env = std::getenv("FERMIQCA_MAX_MODES");
    if (env == nullptr || *env == '\0') return 16;
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || v <= 0 || v > 30) return 16;
    return static_cast<int>(v);
  }();
  return cap;
}

const char *kind_name(ModeKind k) {
  switch (k) {
    case ModeKind::physical: return "physical";
    case ModeKind::copy: return "copy";
    case ModeKind::ancilla: return "ancilla";
  }
  return "?";
}

std::string Mode::str() const {
  std::ostringstream os;
  os << (kind == ModeKind::physical ? "a" : kind == ModeKind::copy ? "b" : "c") << "(";
  for (size_t i = 0; i < site.size(); ++i) os << (i ? "," : "") << site[i];
  os << ";" << label << ")";
  return os.str();
}

// ---------------------------------------------------------------- Lattice

Lattice::Lattice(std::vector<int> extents, std::vector<bool> periodic, std::vector<Mode> modes)
    : extents_(std::move(extents)), periodic_(std::move(periodic)) {
  if (extents_.empty()) throw DomainError("lattice needs at least one dimension");
  if (periodic_.size() != extents_.size()) throw DomainError("periodic flags must match extents");
  for (size_t d = 0; d < extents_.size(); ++d) {
    if (extents_[d] < 1) throw DomainError("lattice extent must be positive");
    if (extents_[d] == 1 && periodic_[d]) throw DomainError("periodic axis of extent 1 is degenerate");
  }
  for (const auto &m : modes) add_mode(m);
}

Lattice Lattice::line(int n, bool periodic, int labels) {
  Lattice lat({n}, {periodic});
  for (int x = 0; x < n; ++x)
    for (int l = 0; l < labels; ++l) lat.add_mode(Mode{{x}, l, ModeKind::physical});
  return lat;
}

bool Lattice::contains_site(const Site &s) const {
  if (s.size() != extents_.size()) return false;
  for (size_t d = 0; d < s.size(); ++d)
    if (s[d] < 0 || s[d] >= extents_[d]) return false;
  return true;
}

void Lattice::add_mode(const Mode &m) {
  if (!contains_site(m.site)) throw DomainError("mode site outside lattice: " + m.str());
  if (!index_.insert(m).second) throw DomainError("duplicate mode: " + m.str());
  modes_.push_back(m);
}

bool Lattice::contains(const Mode &m) const { return index_.count(m) != 0; }

std::vector<Site> Lattice::sites() const {
  std::vector<Site> out;
  Site s(extents_.size(), 0);
  while (true) {
    out.push_back(s);
    int d = static_cast<int>(extents_.size()) - 1;
    while (d >= 0 && ++s[d] == extents_[d]) s[d--] = 0;
    if (d < 0) break;
  }
  return out;
}

std::set<Site> Lattice::neighborhood(const Site &s) const {
  if (!contains_site(s)) throw DomainError("site outside lattice");
  std::set<Site> out;
  const size_t dims = extents_.size();
  std::vector<int> off(dims, -1);
  while (true) {
    Site t(dims);
    bool ok = true;
    for (size_t d = 0; d < dims; ++d) {
      int v = s[d] + off[d];
      if (periodic_[d]) {
        v = ((v % extents_[d]) + extents_[d]) % extents_[d];
      } else if (v < 0 || v >= extents_[d]) {
        ok = false;
      }
      t[d] = v;
    }
    if (ok) out.insert(t);
    size_t d = 0;
    while (d < dims && ++off[d] == 2) off[d++] = -1;
    if (d == dims) break;
  }
  return out;
}

std::vector<Mode> Lattice::modes_at(const std::set<Site> &sites) const {
  std::vector<Mode> out;
  for (const auto &m : modes_)
    if (sites.count(m.site)) out.push_back(m);
  return out;
}

// ---------------------------------------------------------------- Ordering

Ordering::Ordering(std::vector<Mode> modes_by_pi) : modes_(std::move(modes_by_pi)) {
  for (size_t k = 0; k < modes_.size(); ++k)
    if (!pi_.emplace(modes_[k], static_cast<int>(k)).second)
      throw DomainError("ordering is not a bijection: duplicate " + modes_[k].str());
  if (modes_.size() > 62) throw ResourceError("ordering too large for 64-bit basis indices");
}

Ordering Ordering::row_major(const Lattice &lat) {
  std::vector<Mode> ms = lat.modes();
  std::stable_sort(ms.begin(), ms.end(), [](const Mode &a, const Mode &b) {
    if (a.site != b.site) return a.site < b.site;
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.label < b.label;
  });
  return Ordering(std::move(ms));
}

int Ordering::pi(const Mode &m) const {
  auto it = pi_.find(m);
  if (it == pi_.end()) throw DomainError("mode not in ordering: " + m.str());
  return it->second;
}

bool Ordering::same_site_consecutive() const {
  std::set<Site> closed;
  for (size_t k = 0; k < modes_.size(); ++k) {
    if (k > 0 && modes_[k].site != modes_[k - 1].site) {
      if (closed.count(modes_[k].site)) return false;
      closed.insert(modes_[k - 1].site);
    }
  }
  return true;
}

void check_dense_cap(const Ordering &ord) {
  if (ord.size() > max_modes())
    throw ResourceError("dense representation limited to " + std::to_string(max_modes()) + " modes, got " +
                        std::to_string(ord.size()));
}

// ---------------------------------------------------------------- SymbolicOperator

SymbolicOperator SymbolicOperator::identity(cplx c) { return SymbolicOperator({Monomial{c, {}}}); }

SymbolicOperator SymbolicOperator::create(const Mode &m) {
  return SymbolicOperator({Monomial{1.0, {Factor{FactorKind::create, m}}}});
}

SymbolicOperator SymbolicOperator::annihilate(const Mode &m) {
  return SymbolicOperator({Monomial{1.0, {Factor{FactorKind::annihilate, m}}}});
}

SymbolicOperator SymbolicOperator::majorana(const Mode &m) {
  return SymbolicOperator({Monomial{1.0, {Factor{FactorKind::majorana, m}}}});
}

SymbolicOperator SymbolicOperator::adjoint() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto &t : terms_) {
    Monomial m{std::conj(t.coeff), {}};
    for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) {
      Factor f = *it;
      if (f.kind == FactorKind::create) f.kind = FactorKind::annihilate;
      else if (f.kind == FactorKind::annihilate) f.kind = FactorKind::create;
      m.factors.push_back(f);
    }
    out.push_back(std::move(m));
  }
  return SymbolicOperator(std::move(out));
}

SymbolicOperator SymbolicOperator::pruned(double tol) const {
  std::vector<Monomial> out;
  for (const auto &t : terms_)
    if (std::abs(t.coeff) > tol) out.push_back(t);
  return SymbolicOperator(std::move(out));
}

std::set<Mode> SymbolicOperator::modes() const {
  std::set<Mode> out;
  for (const auto &t : terms_)
    for (const auto &f : t.factors) out.insert(f.mode);
  return out;
}

std::string SymbolicOperator::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << "(" << terms_[i].coeff.real() << (terms_[i].coeff.imag() < 0 ? "" : "+") << terms_[i].coeff.imag()
       << "i)";
    for (const auto &f : terms_[i].factors) {
      os << " " << (f.kind == FactorKind::majorana ? "m" : "a") << (f.kind == FactorKind::create ? "+" : "")
         << f.mode.str();
    }
  }
  return os.str();
}

SymbolicOperator &SymbolicOperator::operator+=(const SymbolicOperator &o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

SymbolicOperator &SymbolicOperator::operator*=(cplx c) {
  for (auto &t : terms_) t.coeff *= c;
  return *this;
}

SymbolicOperator operator*(const SymbolicOperator &a, const SymbolicOperator &b) {
  std::vector<Monomial> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const auto &x : a.terms())
    for (const auto &y : b.terms()) {
      Monomial m{x.coeff * y.coeff, x.factors};
      m.factors.insert(m.factors.end(), y.factors.begin(), y.factors.end());
      out.push_back(std::move(m));
    }
  return SymbolicOperator(std::move(out));
}

// ---------------------------------------------------------------- matrices

BasisImage apply_monomial(const std::vector<Factor> &factors, const Ordering &ord, uint64_t col) {
  uint64_t idx = col;
  int sign = 1;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    const int k = ord.pi(it->mode);
    const uint64_t bit = uint64_t{1} << k;
    if (it->kind == FactorKind::majorana) throw DomainError("apply_monomial: expand Majorana factors first");
    const bool occupied = (idx & bit) != 0;
    if ((it->kind == FactorKind::create) == occupied) return {0, 0};
    if (popcount(idx & (bit - 1)) & 1) sign = -sign;
    idx ^= bit;
  }
  return {idx, sign};
}

namespace {

// Replaces each Majorana factor by the sum of its creation and annihilation parts.
void expand_majoranas(const Monomial &m, std::vector<Monomial> &out) {
  size_t pos = m.factors.size();
  for (size_t i = 0; i < m.factors.size(); ++i)
    if (m.factors[i].kind == FactorKind::majorana) {
      pos = i;
      break;
    }
  if (pos == m.factors.size()) {
    out.push_back(m);
    return;
  }
  for (FactorKind k : {FactorKind::annihilate, FactorKind::create}) {
    Monomial t = m;
    t.factors[pos].kind = k;
    expand_majoranas(t, out);
  }
}

}  // namespace

MatrixOperator lower(const SymbolicOperator &op, const Ordering &ord) {
  check_dense_cap(ord);
  const uint64_t dim = ord.dim();
  std::vector<Monomial> terms;
  for (const auto &t : op.terms()) {
    for (const auto &f : t.factors) ord.pi(f.mode);
    expand_majoranas(t, terms);
  }
  std::vector<Triplet> trip;
  trip.reserve(terms.size() * 4);
  for (const auto &t : terms) {
    if (t.coeff == cplx(0.0)) continue;
    for (uint64_t c = 0; c < dim; ++c) {
      BasisImage im = apply_monomial(t.factors, ord, c);
      if (im.sign != 0) trip.emplace_back(static_cast<int>(im.index), static_cast<int>(c), t.coeff * double(im.sign));
    }
  }
  MatrixOperator out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  out.setFromTriplets(trip.begin(), trip.end());
  out.prune(cplx(0.0));
  return out;
}

MatrixOperator creation_matrix(const Mode &mode, const Ordering &ord) {
  return lower(SymbolicOperator::create(mode), ord);
}

MatrixOperator annihilation_matrix(const Mode &mode, const Ordering &ord) {
  return lower(SymbolicOperator::annihilate(mode), ord);
}

StateVector vacuum(const Ordering &ord) {
  check_dense_cap(ord);
  StateVector v = StateVector::Zero(static_cast<Eigen::Index>(ord.dim()));
  v(0) = 1.0;
  return v;
}

MatrixOperator parity_operator(const Ordering &ord) {
  check_dense_cap(ord);
  const uint64_t dim = ord.dim();
  std::vector<Triplet> trip;
  trip.reserve(dim);
  for (uint64_t i = 0; i < dim; ++i)
    trip.emplace_back(static_cast<int>(i), static_cast<int>(i), (popcount(i) & 1) ? -1.0 : 1.0);
  MatrixOperator out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

MatrixOperator identity_operator(const Ordering &ord) {
  check_dense_cap(ord);
  MatrixOperator out(static_cast<Eigen::Index>(ord.dim()), static_cast<Eigen::Index>(ord.dim()));
  out.setIdentity();
  return out;
}

MatrixOperator number_operator(const Ordering &ord) {
  check_dense_cap(ord);
  const uint64_t dim = ord.dim();
  std::vector<Triplet> trip;
  for (uint64_t i = 1; i < dim; ++i)
    trip.emplace_back(static_cast<int>(i), static_cast<int>(i), double(popcount(i)));
  MatrixOperator out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

// ---------------------------------------------------------------- reordering

Reordering reordering_from_map(const std::vector<int> &map) {
  const int n = static_cast<int>(map.size());
  const uint64_t dim = uint64_t{1} << n;
  Reordering r;
  r.target.resize(dim);
  r.sign.resize(dim);
  for (uint64_t i = 0; i < dim; ++i) {
    uint64_t j = 0;
    int inversions = 0;
    // Creation operators appear in ascending source order; count pairs that
    // are out of order at the destination.
    for (int k = 0; k < n; ++k) {
      if (!((i >> k) & 1)) continue;
      inversions += popcount(j >> (map[k] + 1));
      j |= uint64_t{1} << map[k];
    }
    r.target[i] = j;
    r.sign[i] = (inversions & 1) ? -1 : 1;
  }
  return r;
}

Reordering make_reordering(const Ordering &from, const Ordering &to) {
  if (from.size() != to.size()) throw DomainError("reordering between orderings of different size");
  std::vector<int> map(from.size());
  for (int k = 0; k < from.size(); ++k) map[k] = to.pi(from.mode(k));
  return reordering_from_map(map);
}

MatrixOperator Reordering::apply(const MatrixOperator &op) const {
  std::vector<Triplet> trip;
  trip.reserve(static_cast<size_t>(op.nonZeros()));
  for (int c = 0; c < op.outerSize(); ++c)
    for (MatrixOperator::InnerIterator it(op, c); it; ++it)
      trip.emplace_back(static_cast<int>(target[it.row()]), static_cast<int>(target[c]),
                        it.value() * double(sign[it.row()] * sign[c]));
  MatrixOperator out(op.rows(), op.cols());
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

StateVector Reordering::apply(const StateVector &v) const {
  StateVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(target[i])) = v(i) * double(sign[i]);
  return out;
}

MatrixOperator Reordering::matrix() const {
  std::vector<Triplet> trip;
  trip.reserve(target.size());
  for (size_t i = 0; i < target.size(); ++i)
    trip.emplace_back(static_cast<int>(target[i]), static_cast<int>(i), double(sign[i]));
  MatrixOperator out(static_cast<Eigen::Index>(target.size()), static_cast<Eigen::Index>(target.size()));
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

Matrix to_dense(const MatrixOperator &op) { return Matrix(op); }

MatrixOperator to_sparse(const Matrix &m, double drop) {
  std::vector<Triplet> trip;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (std::abs(m(r, c)) > drop) trip.emplace_back(static_cast<int>(r), static_cast<int>(c), m(r, c));
  MatrixOperator out(m.rows(), m.cols());
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

SymbolicOperator quadratic_form(const Matrix &h, const std::vector<Mode> &modes) {
  if (h.rows() != static_cast<Eigen::Index>(modes.size()) || h.cols() != h.rows())
    throw DomainError("quadratic_form: matrix size does not match the mode list");
  std::vector<Monomial> terms;
  for (Eigen::Index j = 0; j < h.cols(); ++j)
    for (Eigen::Index i = 0; i < h.rows(); ++i)
      if (h(i, j) != cplx(0.0))
        terms.push_back(Monomial{h(i, j), {Factor{FactorKind::create, modes[i]}, Factor{FactorKind::annihilate, modes[j]}}});
  return SymbolicOperator(std::move(terms));
}

MatrixOperator lift_single_particle(const Matrix &u, const std::vector<Mode> &modes, const Ordering &ord) {
  check_dense_cap(ord);
  if (unitarity_defect(u) > 1e-10) throw DomainError("lift_single_particle: matrix is not unitary");
  // u = exp(-i h) with h = -K for the principal logarithm u = exp(iK).
  const Matrix h = -logm_unitary(u);
  const Matrix gen = to_dense(lower(quadratic_form(h, modes), ord));
  return to_sparse(expm_hermitian(0.5 * (gen + gen.adjoint())), 1e-15);
}

}  // namespace fermiqca
