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


#include "fermiqca/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "fermiqca/jwmap.hpp"
#include "fermiqca/kernels.hpp"
#include "fermiqca/linalg.hpp"
#include "fermiqca/random.hpp"

namespace fermiqca {

void Gate::validate(double tol) const {
  const int k = static_cast<int>(qubits.size());
  if (k < 1 || k > kMaxGateQubits)
    throw DomainError("gate must act on 1.." + std::to_string(kMaxGateQubits) + " qubits, got " + std::to_string(k));
  std::set<int> seen(qubits.begin(), qubits.end());
  if (static_cast<int>(seen.size()) != k) throw DomainError("gate qubits must be distinct");
  const Eigen::Index d = Eigen::Index{1} << k;
  if (matrix.rows() != d || matrix.cols() != d) throw DomainError("gate matrix size does not match its qubits");
  if (unitarity_defect(matrix) > tol) throw DomainError("gate matrix is not unitary");
}

size_t Circuit::gate_count() const {
  size_t n = 0;
  for (const auto &l : layers) n += l.size();
  return n;
}

void Circuit::validate(double tol) const {
  if (num_qubits < 0) throw DomainError("negative qubit count");
  for (size_t li = 0; li < layers.size(); ++li) {
    std::set<int> used;
    for (const auto &g : layers[li]) {
      g.validate(tol);
      for (int q : g.qubits) {
        if (q < 0 || q >= num_qubits) throw DomainError("gate qubit outside the circuit");
        if (!used.insert(q).second)
          throw DomainError("layer " + std::to_string(li) + " has overlapping gates on qubit " + std::to_string(q));
      }
    }
  }
}

void Circuit::append(const Circuit &other) {
  if (other.num_qubits > num_qubits) num_qubits = other.num_qubits;
  layers.insert(layers.end(), other.layers.begin(), other.layers.end());
}

nlohmann::json Circuit::to_json() const {
  nlohmann::json ls = nlohmann::json::array();
  for (const auto &layer : layers) {
    nlohmann::json gs = nlohmann::json::array();
    for (const auto &g : layer) {
      nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
      for (Eigen::Index r = 0; r < g.matrix.rows(); ++r) {
        nlohmann::json rr = nlohmann::json::array(), ii = nlohmann::json::array();
        for (Eigen::Index c = 0; c < g.matrix.cols(); ++c) {
          rr.push_back(g.matrix(r, c).real());
          ii.push_back(g.matrix(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ii));
      }
      gs.push_back({{"qubits", g.qubits}, {"re", re}, {"im", im}});
    }
    ls.push_back(std::move(gs));
  }
  return {{"num_qubits", num_qubits}, {"layers", ls}};
}

Circuit Circuit::from_json(const nlohmann::json &j) {
  try {
    Circuit c;
    c.num_qubits = j.at("num_qubits").get<int>();
    for (const auto &lj : j.at("layers")) {
      std::vector<Gate> layer;
      for (const auto &gj : lj) {
        Gate g;
        g.qubits = gj.at("qubits").get<std::vector<int>>();
        const auto &re = gj.at("re");
        const auto &im = gj.at("im");
        const Eigen::Index d = static_cast<Eigen::Index>(re.size());
        if (static_cast<Eigen::Index>(im.size()) != d) throw DomainError("gate re/im row counts differ");
        g.matrix.resize(d, d);
        for (Eigen::Index r = 0; r < d; ++r) {
          if (static_cast<Eigen::Index>(re[r].size()) != d || static_cast<Eigen::Index>(im[r].size()) != d)
            throw DomainError("gate matrix is not square");
          for (Eigen::Index col = 0; col < d; ++col) g.matrix(r, col) = cplx(re[r][col].get<double>(), im[r][col].get<double>());
        }
        layer.push_back(std::move(g));
      }
      c.layers.push_back(std::move(layer));
    }
    c.validate();
    return c;
  } catch (const nlohmann::json::exception &e) {
    throw DomainError(std::string("malformed circuit JSON: ") + e.what());
  }
}

StateVector simulate(const Circuit &c, const StateVector &state) {
  if (state.size() != (Eigen::Index{1} << c.num_qubits))
    throw DomainError("simulate: state length does not match 2^num_qubits");
  StateVector psi = state;
  for (const auto &layer : c.layers)
    for (const auto &g : layer)
      kernels::apply_gate(psi.data(), c.num_qubits, g.qubits.data(), static_cast<int>(g.qubits.size()),
                          g.matrix.data());
  return psi;
}

Matrix circuit_matrix(const Circuit &c) {
  const Eigen::Index d = Eigen::Index{1} << c.num_qubits;
  Matrix out(d, d);
  for (Eigen::Index j = 0; j < d; ++j) out.col(j) = simulate(c, StateVector::Unit(d, j));
  return out;
}

std::vector<int> greedy_schedule(const std::vector<std::set<int>> &supports) {
  std::vector<std::set<int>> used;
  std::vector<int> out;
  for (const auto &s : supports) {
    size_t l = 0;
    for (; l < used.size(); ++l) {
      const bool meets = std::any_of(s.begin(), s.end(), [&](int q) { return used[l].count(q) != 0; });
      if (!meets) break;
    }
    if (l == used.size()) used.emplace_back();
    used[l].insert(s.begin(), s.end());
    out.push_back(static_cast<int>(l));
  }
  return out;
}

namespace {

std::string describe(size_t index, const LocalUnitaryFactor &f) {
  std::string s = "factor " + std::to_string(index) + " (" + tag_name(f.tag);
  for (const auto &m : f.modes) s += " " + m.str();
  return s + ")";
}

// Restriction of a qubit operator to `qubits` (ascending); residual of op
// against G (x) I on the rest.
Matrix qubit_restriction(const MatrixOperator &op, const std::vector<int> &qubits, int n, double tol,
                         double &residual) {
  const int k = static_cast<int>(qubits.size());
  uint64_t qmask = 0;
  for (int q : qubits) qmask |= uint64_t{1} << q;
  auto local = [&](uint64_t i) {
    uint64_t l = 0;
    for (int j = 0; j < k; ++j) l |= ((i >> qubits[j]) & 1) << j;
    return static_cast<Eigen::Index>(l);
  };
  const Eigen::Index dk = Eigen::Index{1} << k;
  Matrix g = Matrix::Zero(dk, dk);
  for (int c = 0; c < op.outerSize(); ++c)
    for (MatrixOperator::InnerIterator it(op, c); it; ++it)
      if ((static_cast<uint64_t>(it.row()) & ~qmask) == (static_cast<uint64_t>(c) & ~qmask))
        g(local(it.row()), local(c)) += it.value();
  g /= std::ldexp(1.0, n - k);
  std::vector<uint64_t> offs(dk);
  kernels::detail::gate_offsets(qubits.data(), k, offs.data());
  std::vector<Triplet> trip;
  for (int c = 0; c < op.outerSize(); ++c)
    for (MatrixOperator::InnerIterator it(op, c); it; ++it) trip.emplace_back(static_cast<int>(it.row()), c, it.value());
  const uint64_t rest = uint64_t{1} << (n - k);
  for (uint64_t t = 0; t < rest; ++t) {
    const uint64_t base = kernels::detail::spread_bits(t, qubits.data(), k);
    for (Eigen::Index cc = 0; cc < dk; ++cc)
      for (Eigen::Index rr = 0; rr < dk; ++rr)
        if (g(rr, cc) != cplx(0.0))
          trip.emplace_back(static_cast<int>(base | offs[rr]), static_cast<int>(base | offs[cc]), -g(rr, cc));
  }
  MatrixOperator diff(op.rows(), op.cols());
  diff.setFromTriplets(trip.begin(), trip.end());
  residual = certified_norm(diff, tol);
  return g;
}

bool near_identity(const Matrix &g, double tol) {
  return (g - Matrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

Circuit compile(const std::vector<LocalUnitaryFactor> &factors, const Ordering &ord, const Lattice &lat,
                const CompileOptions &opts) {
  Circuit circ;
  circ.num_qubits = ord.size();
  std::vector<Gate> group;
  int group_layer = 0;
  auto flush = [&]() {
    if (group.empty()) return;
    std::vector<std::set<int>> supports;
    for (const auto &g : group) supports.emplace_back(g.qubits.begin(), g.qubits.end());
    const auto slot = greedy_schedule(supports);
    const int count = *std::max_element(slot.begin(), slot.end()) + 1;
    std::vector<std::vector<Gate>> sub(count);
    for (size_t i = 0; i < group.size(); ++i) sub[slot[i]].push_back(std::move(group[i]));
    for (auto &l : sub) circ.layers.push_back(std::move(l));
    group.clear();
  };
  for (size_t i = 0; i < factors.size(); ++i) {
    const LocalUnitaryFactor &f = factors[i];
    if (i == 0 || f.layer != group_layer) {
      flush();
      group_layer = f.layer;
    }
    Gate g;
    if (f.generator) {
      for (const auto &e : jw_locality_report(*f.generator, ord, lat))
        if (!e.local) throw ContractError("compile: " + describe(i, f) + " is not qubit-local");
      const PauliSum ps = jw(*f.generator, ord).canonical(1e-14);
      const std::set<int> sup = support(ps);
      if (sup.empty()) continue;  // a global phase
      g.qubits.assign(sup.begin(), sup.end());
      if (static_cast<int>(g.qubits.size()) > kMaxGateQubits)
        throw ResourceError("compile: " + describe(i, f) + " needs " + std::to_string(g.qubits.size()) + " qubits");
      const Matrix h = pauli_matrix_on(ps, g.qubits);
      g.matrix = expm_hermitian(0.5 * (h + h.adjoint()));
    } else {
      if (f.matrix.rows() != static_cast<Eigen::Index>(ord.dim()))
        throw DomainError("compile: " + describe(i, f) + " matrix does not match the ordering");
      std::set<int> region = qubits_of_sites(f.support_region.sites, ord);
      if (f.support_region.sites.empty())
        for (int q = 0; q < ord.size(); ++q) region.insert(q);
      g.qubits.assign(region.begin(), region.end());
      if (static_cast<int>(g.qubits.size()) > kMaxGateQubits)
        throw ResourceError("compile: " + describe(i, f) + " needs " + std::to_string(g.qubits.size()) + " qubits");
      double residual = 0.0;
      g.matrix = qubit_restriction(f.matrix, g.qubits, ord.size(), opts.tol, residual);
      if (residual > opts.tol)
        throw ContractError("compile: " + describe(i, f) + " is not qubit-local (residual " +
                            std::to_string(residual) + ")");
    }
    if (near_identity(g.matrix, opts.identity_tol)) continue;
    group.push_back(std::move(g));
  }
  flush();
  circ.validate(1e-10);
  return circ;
}

namespace {

Matrix cnot_matrix() {
  // Local bit 0 is the control (target qubit of the ladder), bit 1 the flag.
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(2, 2) = 1.0;
  m(3, 1) = m(1, 3) = 1.0;
  return m;
}

Mat2 pauli(char c) {
  Mat2 m;
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m = Mat2::Identity();
  }
  return m;
}

// Tensor product with ops[0] on local bit 0.
Matrix local_product(const std::vector<Mat2> &ops) {
  Matrix out = Matrix::Identity(1, 1);
  for (const auto &o : ops) out = kron(Matrix(o), out);
  return out;
}

}  // namespace

Circuit parity_ladder(const std::vector<int> &targets, int flag, int num_qubits) {
  if (flag < 0 || flag >= num_qubits) throw DomainError("parity_ladder: flag outside the circuit");
  std::set<int> seen;
  for (int t : targets) {
    if (t == flag) throw DomainError("parity_ladder: flag qubit is also a target");
    if (t < 0 || t >= num_qubits) throw DomainError("parity_ladder: target outside the circuit");
    if (!seen.insert(t).second) throw DomainError("parity_ladder: repeated target");
  }
  std::vector<int> order(seen.begin(), seen.end());
  Circuit c;
  c.num_qubits = num_qubits;
  for (int t : order) c.layers.push_back({Gate{{t, flag}, cnot_matrix()}});
  return c;
}

Circuit prepare_majorana_circuit(const std::vector<AncillaPair> &pairs, const Ordering &ord) {
  std::set<Mode> used;
  bool needs_flag = false;
  for (const auto &p : pairs)
    for (const Mode &m : {p.c_at_x, p.c_at_y}) {
      if (m.kind != ModeKind::ancilla) throw DomainError("prepare_majorana_circuit: expected ancilla modes");
      if (!used.insert(m).second) throw DomainError("prepare_majorana_circuit: pairs overlap at " + m.str());
    }
  for (const auto &p : pairs) needs_flag |= std::abs(ord.pi(p.c_at_x) - ord.pi(p.c_at_y)) > 1;
  Circuit c;
  c.num_qubits = ord.size() + (needs_flag ? 1 : 0);
  const int flag = ord.size();
  const double r = 1.0 / std::sqrt(2.0);
  // The state is prod_k d_k^dagger |vacuum>, so the last pair acts first.
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    const int qx = ord.pi(it->c_at_x), qy = ord.pi(it->c_at_y);
    const int lo = std::min(qx, qy), hi = std::max(qx, qy);
    std::vector<int> between;
    for (int q = lo + 1; q < hi; ++q) between.push_back(q);
    const bool ladder = !between.empty();
    if (ladder) c.append(parity_ladder(between, flag, c.num_qubits));
    // i B restricted to {qx, qy, flag}; B = (X_qx Z_<qx - Y_qy Z_<qy) / sqrt 2
    // with the common Z string below lo split off and the string between
    // read from the flag.
    const Mat2 I = Mat2::Identity(), X = pauli('X'), Y = pauli('Y'), Z = pauli('Z');
    const Mat2 zf = ladder ? Z : I;
    Matrix b;
    if (qx < qy)
      b = local_product({X, I, I}) - local_product({Z, Y, zf});
    else
      b = local_product({X, Z, zf}) - local_product({I, Y, I});
    b *= r;
    Gate g;
    g.qubits = {qx, qy};
    if (ladder) {
      g.qubits.push_back(flag);
    } else {
      b = b.topLeftCorner(4, 4).eval();
    }
    g.matrix = kI * b;
    c.layers.push_back({g});
    if (ladder) {
      Circuit undo = parity_ladder(between, flag, c.num_qubits);
      std::reverse(undo.layers.begin(), undo.layers.end());
      c.append(undo);
    }
    std::vector<Gate> zs;
    for (int q = 0; q < lo; ++q) zs.push_back(Gate{{q}, Matrix(Z)});
    if (!zs.empty()) c.layers.push_back(std::move(zs));
  }
  c.validate(1e-12);
  return c;
}

DiracCompiled compile_dirac1d_step(const DiracParams &p) {
  p.validate();
  DiracCompiled out{p, dirac_lattice(p.sites), Ordering(), AncillaRegistry(), {}, Circuit()};
  out.ordering = dirac_ordering(out.lattice);
  std::vector<LocalUnitaryFactor> raw = step_factors(p, out.ordering);
  for (auto &f : raw) {
    f.matrix = MatrixOperator();
    LocalizeResult r = localize(f, out.ordering, out.lattice, out.registry);
    out.ordering = r.ordering;
    out.lattice = r.lattice;
    out.factors.push_back(std::move(r.factor));
  }
  out.circuit = compile(out.factors, out.ordering, out.lattice);
  return out;
}

double dirac_step_fidelity(const DiracCompiled &c, int steps, uint64_t seed) {
  if (steps < 0) throw DomainError("dirac_step_fidelity: negative step count");
  const Ordering &ord = c.ordering;
  check_dense_cap(ord);
  const Ordering phys = dirac_ordering(dirac_lattice(c.params.sites));
  const MatrixOperator u_phys = build_W(c.params, phys) * build_T(c.params, phys);
  // Physical modes first, ancillas after; an even U is U (x) I there.
  std::vector<Mode> last = phys.modes();
  for (const Mode &m : ord.modes())
    if (!phys.contains(m)) last.push_back(m);
  const Eigen::Index dp = u_phys.rows();
  const Eigen::Index copies = static_cast<Eigen::Index>(ord.dim()) / dp;
  std::vector<Triplet> trip;
  for (Eigen::Index a = 0; a < copies; ++a)
    for (int col = 0; col < u_phys.outerSize(); ++col)
      for (MatrixOperator::InnerIterator it(u_phys, col); it; ++it)
        trip.emplace_back(static_cast<int>(it.row() + a * dp), static_cast<int>(col + a * dp), it.value());
  MatrixOperator u_last(ord.dim(), ord.dim());
  u_last.setFromTriplets(trip.begin(), trip.end());
  const MatrixOperator u = make_reordering(Ordering(last), ord).apply(u_last);

  Rng rng(seed);
  StateVector psi = plus_projector(c.registry.pairs(), ord) * random_state(rng, ord, ord.dim() - 1);
  psi.normalize();
  StateVector ref = psi, got = psi;
  for (int s = 0; s < steps; ++s) {
    ref = u * ref;
    got = simulate(c.circuit, got);
  }
  return std::norm(ref.dot(got));
}

}  // namespace fermiqca
