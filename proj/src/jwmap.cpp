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

#include "fermiqca/jwmap.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace fermiqca {

char letter_char(Letter l) {
  switch (l) {
    case Letter::X: return 'X';
    case Letter::Y: return 'Y';
    case Letter::Z: return 'Z';
    case Letter::Plus: return '+';
    case Letter::Minus: return '-';
  }
  return '?';
}

namespace {

using M2 = std::array<cplx, 4>;  // row-major 2x2

constexpr M2 kId2{1.0, 0.0, 0.0, 1.0};

M2 letter_m2(Letter l) {
  switch (l) {
    case Letter::X: return {0.0, 1.0, 1.0, 0.0};
    case Letter::Y: return {0.0, -kI, kI, 0.0};
    case Letter::Z: return {1.0, 0.0, 0.0, -1.0};
    case Letter::Plus: return {0.0, 0.0, 1.0, 0.0};
    case Letter::Minus: return {0.0, 1.0, 0.0, 0.0};
  }
  return kId2;
}

M2 mul(const M2 &a, const M2 &b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

// Applies one letter to basis bit b; returns new bit and amplitude factor.
inline bool letter_act(Letter l, int b, int &nb, cplx &amp) {
  switch (l) {
    case Letter::X: nb = b ^ 1; return true;
    case Letter::Y: nb = b ^ 1; amp *= (b == 0 ? kI : -kI); return true;
    case Letter::Z: nb = b; if (b) amp = -amp; return true;
    case Letter::Plus: if (b) return false; nb = 1; return true;
    case Letter::Minus: if (!b) return false; nb = 0; return true;
  }
  return false;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

PauliSum &PauliSum::operator+=(const PauliSum &o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

PauliSum PauliSum::canonical(double tol) const {
  std::map<std::map<int, Letter>, cplx> acc;
  std::vector<std::map<int, Letter>> order;
  for (const auto &t : terms_) {
    auto [it, fresh] = acc.emplace(t.letters, 0.0);
    it->second += t.coeff;
    if (fresh) order.push_back(t.letters);
  }
  std::vector<PauliTerm> out;
  for (const auto &key : order) {
    const cplx c = acc[key];
    if (std::abs(c) > tol) out.push_back(PauliTerm{c, key});
  }
  return PauliSum(std::move(out));
}

PauliSum PauliSum::expanded_xy() const {
  std::vector<PauliTerm> cur;
  for (const auto &t : terms_) {
    std::vector<PauliTerm> parts{PauliTerm{t.coeff, {}}};
    for (const auto &[q, l] : t.letters) {
      std::vector<PauliTerm> next;
      for (auto &p : parts) {
        if (l == Letter::Plus || l == Letter::Minus) {
          PauliTerm a = p, b = p;
          a.coeff *= 0.5;
          a.letters[q] = Letter::X;
          b.coeff *= (l == Letter::Plus ? -0.5 * kI : 0.5 * kI);
          b.letters[q] = Letter::Y;
          next.push_back(a);
          next.push_back(b);
        } else {
          p.letters[q] = l;
          next.push_back(p);
        }
      }
      parts.swap(next);
    }
    cur.insert(cur.end(), parts.begin(), parts.end());
  }
  return PauliSum(std::move(cur)).canonical();
}

PauliSum PauliSum::adjoint() const {
  std::vector<PauliTerm> out;
  for (auto t : terms_) {
    t.coeff = std::conj(t.coeff);
    for (auto &[q, l] : t.letters) {
      if (l == Letter::Plus) l = Letter::Minus;
      else if (l == Letter::Minus) l = Letter::Plus;
    }
    out.push_back(std::move(t));
  }
  return PauliSum(std::move(out));
}

std::string PauliSum::to_text() const {
  std::ostringstream os;
  for (const auto &t : terms_) {
    os << format_double(t.coeff.real()) << (std::signbit(t.coeff.imag()) ? "-" : "+")
       << format_double(std::abs(t.coeff.imag())) << "i * [";
    bool first = true;
    for (auto it = t.letters.rbegin(); it != t.letters.rend(); ++it) {
      os << (first ? "" : " ") << letter_char(it->second) << it->first;
      first = false;
    }
    os << "]\n";
  }
  return os.str();
}

PauliSum PauliSum::from_text(const std::string &text) {
  std::vector<PauliTerm> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto star = line.find(" * [");
    const auto close = line.rfind(']');
    if (star == std::string::npos || close == std::string::npos || close < star)
      throw DomainError("malformed Pauli line: " + line);
    std::string coeff = line.substr(0, star);
    if (coeff.empty() || coeff.back() != 'i') throw DomainError("malformed coefficient: " + coeff);
    const char *s = coeff.c_str();
    char *end = nullptr;
    const double re = std::strtod(s, &end);
    if (end == s) throw DomainError("malformed coefficient: " + coeff);
    const char *im_begin = end;
    const double im = std::strtod(im_begin, &end);
    if (end == im_begin || *end != 'i') throw DomainError("malformed coefficient: " + coeff);
    PauliTerm t{cplx(re, im), {}};
    std::istringstream ls(line.substr(star + 4, close - star - 4));
    std::string tok;
    while (ls >> tok) {
      if (tok.size() < 2) throw DomainError("malformed letter: " + tok);
      Letter l;
      switch (tok[0]) {
        case 'X': l = Letter::X; break;
        case 'Y': l = Letter::Y; break;
        case 'Z': l = Letter::Z; break;
        case '+': l = Letter::Plus; break;
        case '-': l = Letter::Minus; break;
        default: throw DomainError("unknown letter: " + tok);
      }
      const int q = std::stoi(tok.substr(1));
      if (!t.letters.emplace(q, l).second) throw DomainError("repeated qubit in term: " + tok);
    }
    out.push_back(std::move(t));
  }
  return PauliSum(std::move(out));
}

PauliSum jw(const SymbolicOperator &op, const Ordering &ord) {
  std::vector<PauliTerm> out;
  for (const auto &mono : op.terms()) {
    std::map<int, M2> per_qubit;
    for (const auto &f : mono.factors) {
      const int k = ord.pi(f.mode);
      // Z string on lower qubits, then the factor's letter on k.
      for (int q = 0; q < k; ++q) {
        auto it = per_qubit.try_emplace(q, kId2).first;
        it->second = mul(it->second, letter_m2(Letter::Z));
      }
      const Letter l = f.kind == FactorKind::create ? Letter::Plus
                       : f.kind == FactorKind::annihilate ? Letter::Minus
                                                           : Letter::X;
      auto it = per_qubit.try_emplace(k, kId2).first;
      it->second = mul(it->second, letter_m2(l));
    }
    std::vector<PauliTerm> parts{PauliTerm{mono.coeff, {}}};
    for (const auto &[q, m] : per_qubit) {
      // Decompose in {I, Z, Plus, Minus}.
      const std::array<std::pair<cplx, int>, 4> comps{{{0.5 * (m[0] + m[3]), -1},
                                                       {0.5 * (m[0] - m[3]), int(Letter::Z)},
                                                       {m[2], int(Letter::Plus)},
                                                       {m[1], int(Letter::Minus)}}};
      std::vector<PauliTerm> next;
      for (const auto &p : parts)
        for (const auto &[c, l] : comps) {
          if (c == cplx(0.0)) continue;
          PauliTerm t = p;
          t.coeff *= c;
          if (l >= 0) t.letters[q] = static_cast<Letter>(l);
          next.push_back(std::move(t));
        }
      parts.swap(next);
    }
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return PauliSum(std::move(out)).canonical();
}

MatrixOperator pauli_matrix(const PauliSum &p, int num_qubits) {
  if (num_qubits > max_modes()) throw ResourceError("pauli_matrix: too many qubits for dense form");
  const uint64_t dim = uint64_t{1} << num_qubits;
  std::vector<Triplet> trip;
  for (const auto &t : p.terms()) {
    for (const auto &[q, l] : t.letters)
      if (q < 0 || q >= num_qubits) throw DomainError("pauli_matrix: qubit index out of range");
    for (uint64_t c = 0; c < dim; ++c) {
      uint64_t r = c;
      cplx amp = t.coeff;
      bool alive = true;
      for (const auto &[q, l] : t.letters) {
        int nb;
        if (!letter_act(l, int((c >> q) & 1), nb, amp)) {
          alive = false;
          break;
        }
        r = (r & ~(uint64_t{1} << q)) | (uint64_t(nb) << q);
      }
      if (alive && amp != cplx(0.0)) trip.emplace_back(static_cast<int>(r), static_cast<int>(c), amp);
    }
  }
  MatrixOperator out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  out.setFromTriplets(trip.begin(), trip.end());
  out.prune(cplx(0.0));
  return out;
}

Matrix pauli_matrix_on(const PauliSum &p, const std::vector<int> &qubits) {
  std::map<int, int> local;
  for (size_t i = 0; i < qubits.size(); ++i) local[qubits[i]] = static_cast<int>(i);
  std::vector<PauliTerm> remapped;
  for (const auto &t : p.terms()) {
    PauliTerm u{t.coeff, {}};
    for (const auto &[q, l] : t.letters) {
      auto it = local.find(q);
      if (it == local.end()) throw DomainError("pauli_matrix_on: term acts outside the given qubits");
      u.letters[it->second] = l;
    }
    remapped.push_back(std::move(u));
  }
  return Matrix(pauli_matrix(PauliSum(std::move(remapped)), static_cast<int>(qubits.size())));
}

std::set<int> support(const PauliSum &p) {
  std::set<int> out;
  for (const auto &t : p.terms())
    for (const auto &[q, l] : t.letters) out.insert(q);
  return out;
}

std::set<int> qubits_of_sites(const std::set<Site> &sites, const Ordering &ord) {
  std::set<int> out;
  for (int k = 0; k < ord.size(); ++k)
    if (sites.count(ord.mode(k).site)) out.insert(k);
  return out;
}

std::set<Site> neighborhood_of(const std::set<Site> &sites, const Lattice &lat) {
  std::set<Site> out;
  for (const auto &s : sites) {
    auto n = lat.neighborhood(s);
    out.insert(n.begin(), n.end());
  }
  return out;
}

std::vector<LocalityEntry> jw_locality_report(const SymbolicOperator &op, const Ordering &ord, const Lattice &lat) {
  std::vector<LocalityEntry> out;
  for (size_t i = 0; i < op.terms().size(); ++i) {
    const Monomial &m = op.terms()[i];
    LocalityEntry e;
    e.term = i;
    for (const auto &f : m.factors) e.fermionic_sites.insert(f.mode.site);
    e.qubit_support = support(jw(SymbolicOperator({m}), ord));
    e.allowed = qubits_of_sites(neighborhood_of(e.fermionic_sites, lat), ord);
    e.local = std::includes(e.allowed.begin(), e.allowed.end(), e.qubit_support.begin(), e.qubit_support.end());
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace fermiqca
