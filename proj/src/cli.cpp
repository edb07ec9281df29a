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


#include "fermiqca/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "fermiqca/causality.hpp"
#include "fermiqca/circuit.hpp"
#include "fermiqca/decomposition.hpp"
#include "fermiqca/dirac1d.hpp"
#include "fermiqca/jwmap.hpp"
#include "fermiqca/linalg.hpp"
#include "fermiqca/majorana.hpp"
#include "fermiqca/noncausal.hpp"
#include "fermiqca/random.hpp"
#include "fermiqca/weyl3d.hpp"

namespace fermiqca {

std::vector<std::string> parallel_map(size_t n, const std::function<std::string(size_t)> &f) {
  std::vector<std::string> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i = next++; i < n; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const size_t workers = std::min<size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto &t : pool) t.join();
  for (auto &e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

const std::vector<std::string> &verify_suites() {
  static const std::vector<std::string> names{"car",     "jw",      "causality", "theorem1", "lemma1",
                                              "lemma2",  "majorana", "circuit",  "endtoend"};
  return names;
}

namespace {

class Report {
 public:
  void check(const std::string &name, double value, double tol) { add(name, value, tol, value <= tol); }
  void add(const std::string &name, double value, double tol, bool pass) {
    checks_.push_back({{"name", name}, {"value", value}, {"tol", tol}, {"pass", pass}});
    pass_ = pass_ && pass;
  }
  nlohmann::json finish(const VerifyConfig &cfg) const {
    return {{"suite", cfg.suite}, {"seed", cfg.seed}, {"checks", checks_}, {"pass", pass_}};
  }

 private:
  nlohmann::json checks_ = nlohmann::json::array();
  bool pass_ = true;
};

double max_abs(const MatrixOperator &m) {
  double r = 0.0;
  for (int c = 0; c < m.outerSize(); ++c)
    for (MatrixOperator::InnerIterator it(m, c); it; ++it) r = std::max(r, std::abs(it.value()));
  return r;
}

// n sites with two modes each for even n >= 4, otherwise n sites with one.
std::pair<Lattice, Ordering> line_system(int modes) {
  if (modes < 1) throw DomainError("--modes must be positive");
  const bool paired = modes >= 4 && modes % 2 == 0;
  Lattice lat = Lattice::line(paired ? modes / 2 : modes, false, paired ? 2 : 1);
  Ordering ord = Ordering::row_major(lat);
  return {lat, ord};
}

void suite_car(const VerifyConfig &cfg, Report &r) {
  auto [lat, ord] = line_system(cfg.modes);
  if (ord.size() > 8) throw DomainError("car suite supports at most 8 modes");
  std::vector<MatrixOperator> a, ad;
  for (const Mode &m : ord.modes()) {
    a.push_back(annihilation_matrix(m, ord));
    ad.push_back(creation_matrix(m, ord));
  }
  const MatrixOperator id = identity_operator(ord);
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) {
      worst = std::max(worst, max_abs(a[i] * a[j] + a[j] * a[i]));
      MatrixOperator mixed = a[i] * ad[j] + ad[j] * a[i];
      if (i == j) mixed -= id;
      worst = std::max(worst, max_abs(mixed));
    }
  r.check("car_max_residual", worst, 0.0);
}

void suite_jw(const VerifyConfig &cfg, Report &r) {
  auto [lat, ord] = line_system(cfg.modes);
  if (ord.size() > 8) throw DomainError("jw suite supports at most 8 modes");
  Rng rng(cfg.seed);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const int degree = 1 + static_cast<int>(rng.below(4));
    const SymbolicOperator op(std::vector<Monomial>{random_monomial(rng, ord, degree)});
    MatrixOperator diff = pauli_matrix(jw(op, ord), ord.size()) - lower(op, ord);
    worst = std::max(worst, max_abs(diff));
  }
  r.check("jw_max_residual", worst, 1e-13);
}

MatrixOperator seeded_unitary(const VerifyConfig &cfg, const Lattice &lat, const Ordering &ord) {
  Rng rng(cfg.seed);
  return random_causal_brickwork(rng, lat, ord);
}

double worst_residual(const std::vector<ModeResidual> &rs) {
  double w = 0.0;
  for (const auto &m : rs) w = std::max(w, m.residual);
  return w;
}

void suite_causality(const VerifyConfig &cfg, Report &r) {
  auto [lat, ord] = line_system(cfg.modes);
  const MatrixOperator u = seeded_unitary(cfg, lat, ord);
  r.check("unitarity", unitarity_defect(u), cfg.tol);
  r.check("causality_max_residual", worst_residual(causality_report(u, lat, ord, cfg.tol)), cfg.tol);
}

void suite_lemma1(const VerifyConfig &cfg, Report &r) {
  auto [lat, ord] = line_system(cfg.modes);
  const Lemma1Report rep = check_lemma1(seeded_unitary(cfg, lat, ord), lat, ord, cfg.tol);
  r.check("inverse_causality_max_residual", worst_residual(rep.inverse_residuals), cfg.tol);
}

void suite_lemma2(const VerifyConfig &cfg, Report &r) {
  auto [lat, ord] = line_system(cfg.modes);
  const MatrixOperator u = seeded_unitary(cfg, lat, ord);
  const MatrixOperator ud = u.adjoint();
  double worst = 0.0;
  for (const Mode &m : ord.modes()) {
    const MatrixOperator img = ud * annihilation_matrix(m, ord) * u;
    worst = std::max(worst, frobenius_norm(parity_split(img).even));
  }
  r.check("heisenberg_even_part", worst, 1e-12);
}

void suite_theorem1(const VerifyConfig &cfg, Report &r) {
  auto [lat, ord] = line_system(cfg.modes);
  const MatrixOperator u = seeded_unitary(cfg, lat, ord);
  const DoubledSystem ds = DoubledSystem::make(lat, ord);
  Theorem1Options opt;
  opt.tol = cfg.tol;
  const Theorem1Result res = theorem1_factorize(u, ds, opt);
  r.check("product_residual", res.product_residual, cfg.tol);
  double loc = 0.0;
  for (double x : res.localization) loc = std::max(loc, x);
  r.check("conjugated_swap_localization", loc, cfg.tol);
  r.check("conjugated_swap_commutators", res.max_conjugated_commutator, opt.commute_tol);
  r.check("plain_swap_commutators", res.max_swap_commutator, opt.commute_tol);
}

// Three sites in a line with the outer pair joined by one ancilla pair.
struct MajoranaFixture {
  Lattice lat = Lattice::line(3, false, 1);
  AncillaPair pair = make_ancilla_pair(0, {0}, {2});
  Ordering ord;
  Mode a0{{0}, 0}, a1{{1}, 0}, a2{{2}, 0};
  MajoranaFixture() { ord = with_ancillas(Ordering::row_major(lat), {pair}); }
};

void suite_majorana(const VerifyConfig &cfg, Report &r) {
  MajoranaFixture fx;
  Rng rng(cfg.seed);
  const cplx t = rng.complex_normal();
  const cplx w = rng.complex_normal();
  SymbolicOperator hop = t * SymbolicOperator::create(fx.a0) * SymbolicOperator::annihilate(fx.a2);
  hop += hop.adjoint();
  SymbolicOperator quart = w * SymbolicOperator::create(fx.a0) * SymbolicOperator::annihilate(fx.a2) *
                           SymbolicOperator::create(fx.a1) * SymbolicOperator::annihilate(fx.a1);
  quart += quart.adjoint();
  const MatrixOperator proj = plus_projector({fx.pair}, fx.ord);
  double agree = 0.0;
  for (const auto *op : {&hop, &quart}) {
    const MatrixOperator diff = (lower(substitute(*op, fx.pair), fx.ord) - lower(*op, fx.ord)) * proj;
    agree = std::max(agree, spectral_norm(diff));
  }
  r.check("substitution_agreement", agree, cfg.tol);

  const StateVector plus = prepare_plus_state({fx.pair}, fx.ord);
  r.check("plus_state_eigen", (m_operator(fx.pair, fx.ord) * plus - plus).norm(), 1e-12);

  const Matrix u1 = expm_hermitian(to_dense(lower(substitute(hop, fx.pair), fx.ord)));
  const Matrix u2 = expm_hermitian(to_dense(lower(substitute(quart, fx.pair), fx.ord)));
  const Matrix v1 = expm_hermitian(to_dense(lower(hop, fx.ord)));
  const Matrix v2 = expm_hermitian(to_dense(lower(quart, fx.ord)));
  const Matrix p = to_dense(proj);
  const double order = std::max(spectral_norm(Matrix((u1 * u2 - v1 * v2) * p)),
                                spectral_norm(Matrix((u2 * u1 - v2 * v1) * p)));
  r.check("repaired_product_order", order, cfg.tol);
}

void suite_circuit(const VerifyConfig &cfg, Report &r) {
  const Circuit ladder = parity_ladder({0, 1, 2, 3}, 4, 5);
  const Matrix l = circuit_matrix(ladder);
  Matrix zf = Matrix::Zero(32, 32), zall = Matrix::Zero(32, 32);
  for (int i = 0; i < 32; ++i) {
    zf(i, i) = (i >> 4) & 1 ? -1.0 : 1.0;
    zall(i, i) = popcount(static_cast<uint64_t>(i)) % 2 ? -1.0 : 1.0;
  }
  r.check("ladder_identity", (zf * l - l * zall).cwiseAbs().maxCoeff(), 1e-13);
  r.add("ladder_gate_count", static_cast<double>(ladder.gate_count()), 4.0, ladder.gate_count() == 4);

  MajoranaFixture fx;
  const Circuit prep = prepare_majorana_circuit({fx.pair}, fx.ord);
  StateVector zero = StateVector::Zero(Eigen::Index{1} << prep.num_qubits);
  zero(0) = 1.0;
  const StateVector got = simulate(prep, zero);
  const StateVector want = prepare_plus_state({fx.pair}, fx.ord);
  const double overlap = std::abs(want.dot(got.head(want.size())));
  r.check("majorana_prep_infidelity", 1.0 - overlap * overlap, 1e-12);

  Rng rng(cfg.seed);
  auto [lat, ord] = line_system(3);
  const DoubledSystem ds = DoubledSystem::make(lat, ord);
  const Theorem1Result res = theorem1_factorize(random_causal_brickwork(rng, lat, ord), ds);
  const Circuit c = compile(res.factors, ds.order, ds.lattice);
  const nlohmann::json j = c.to_json();
  const bool same = Circuit::from_json(nlohmann::json::parse(j.dump())).to_json() == j;
  r.add("json_round_trip", same ? 0.0 : 1.0, 0.0, same);
}

void suite_endtoend(const VerifyConfig &cfg, Report &r) {
  Rng rng(cfg.seed);
  auto [lat, ord] = line_system(3);
  const MatrixOperator u = random_causal_brickwork(rng, lat, ord);
  const DoubledSystem ds = DoubledSystem::make(lat, ord);
  const Theorem1Result res = theorem1_factorize(u, ds);
  r.check("theorem1_product_residual", res.product_residual, cfg.tol);
  const Circuit c = compile(res.factors, ds.order, ds.lattice);
  const MatrixOperator target = embed_physical(u, ds) * MatrixOperator(build_UB(u, ds).adjoint());
  const StateVector psi = random_state(rng, ds.order, ds.order.dim() - 1);
  const double f = std::norm((target * psi).dot(simulate(c, psi)));
  r.check("theorem1_circuit_infidelity", 1.0 - f, 1e-9);
  r.add("theorem1_circuit_gates", static_cast<double>(c.gate_count()), 0.0, true);

  DiracParams p = DiracParams::lattice_units(3, 0.5);
  const DiracCompiled d3 = compile_dirac1d_step(p);
  r.check("dirac_n3_5step_infidelity", 1.0 - dirac_step_fidelity(d3, 5, rng.next_u64()), 1e-9);
  const DiracCompiled d9 = compile_dirac1d_step(DiracParams::lattice_units(9, 0.5));
  const DiracCompiled d15 = compile_dirac1d_step(DiracParams::lattice_units(15, 0.5));
  const double dl = std::abs(static_cast<double>(d9.circuit.depth()) - static_cast<double>(d15.circuit.depth()));
  r.check("dirac_layer_count_difference", dl, 0.0);
  const bool ratio = d15.circuit.gate_count() * 9 == d9.circuit.gate_count() * 15;
  r.add("dirac_gate_count_ratio", static_cast<double>(d15.circuit.gate_count()) / d9.circuit.gate_count(),
        15.0 / 9.0, ratio);
}

}  // namespace

nlohmann::json run_verify(const VerifyConfig &cfg) {
  Report r;
  if (cfg.suite == "car") suite_car(cfg, r);
  else if (cfg.suite == "jw") suite_jw(cfg, r);
  else if (cfg.suite == "causality") suite_causality(cfg, r);
  else if (cfg.suite == "theorem1") suite_theorem1(cfg, r);
  else if (cfg.suite == "lemma1") suite_lemma1(cfg, r);
  else if (cfg.suite == "lemma2") suite_lemma2(cfg, r);
  else if (cfg.suite == "majorana") suite_majorana(cfg, r);
  else if (cfg.suite == "circuit") suite_circuit(cfg, r);
  else if (cfg.suite == "endtoend") suite_endtoend(cfg, r);
  else throw DomainError("unknown suite: " + cfg.suite);
  return r.finish(cfg);
}

namespace {

struct Options {
  VerifyConfig verify;
  std::string out_path;
  std::string dirac_variant;
  int sites = 0;
  double mass = 0.0;
  double mass_coupling = 0.0;
  double time = 1.0;
  double m = 1.0;
  std::vector<double> p;
  std::vector<double> eps{0.1, 0.05, 0.025, 0.0125};
  int steps = 1;
  double hopping = 1.0;
  std::vector<double> times{1e-4, 1e-3, 1e-2};
  std::vector<int> distances{1, 2, 3, 4};
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Options &o, const std::string &text, std::ostream &out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + o.out_path);
  f << text;
}

void check_eps(const std::vector<double> &eps) {
  if (eps.empty()) throw UsageError("--eps needs at least one value");
  for (double e : eps)
    if (!(e > 0.0)) throw UsageError("--eps values must be positive");
}

Vec3 vec3(const std::vector<double> &p, const Vec3 &fallback) {
  if (p.empty()) return fallback;
  if (p.size() != 3) throw UsageError("--p needs three components");
  return Vec3(p[0], p[1], p[2]);
}

std::string sweep(const std::string &header, const std::vector<double> &eps, double t,
                  const std::function<double(double)> &error) {
  const auto cells = parallel_map(eps.size(), [&](size_t i) { return format_double(error(eps[i])); });
  std::vector<ConvergenceRow> rows;
  for (size_t i = 0; i < eps.size(); ++i) rows.push_back({eps[i], trotter_steps(t, eps[i]), std::stod(cells[i])});
  return convergence_csv(header, rows);
}

int cmd_dirac(const Options &o, std::ostream &out) {
  const std::string &v = o.dirac_variant;
  std::ostringstream hdr;
  if (v == "dispersion1d") {
    const int n = o.sites == 0 ? 63 : o.sites;
    if (n < 1 || n % 2 == 0) throw UsageError("--sites must be odd and positive");
    emit(o, dispersion_csv(dispersion_1d(n, o.mass_coupling)), out);
  } else if (v == "dispersion3d") {
    const int n = o.sites == 0 ? 7 : o.sites;
    if (n < 1 || n % 2 == 0) throw UsageError("--sites must be odd and positive");
    emit(o, dispersion3d_csv(dispersion_3d(n)), out);
  } else if (v == "converge1d") {
    check_eps(o.eps);
    if (o.p.size() > 1) throw UsageError("--p takes one value for converge1d");
    const double p = o.p.empty() ? 1.0 : o.p[0];
    hdr << "m=" << format_double(o.m) << ",p=" << format_double(p) << ",t=" << format_double(o.time);
    for (double e : o.eps) trotter_steps(o.time, e);
    emit(o, sweep(hdr.str(), o.eps, o.time, [&](double e) { return continuum_error(o.m, p, o.time, e); }), out);
  } else if (v == "converge3d-weyl") {
    check_eps(o.eps);
    const Vec3 p = vec3(o.p, Vec3(1, 1, 1));
    hdr << "p=" << format_double(p[0]) << ";" << format_double(p[1]) << ";" << format_double(p[2])
        << ",t=" << format_double(o.time);
    for (double e : o.eps) trotter_steps(o.time, e);
    emit(o, sweep(hdr.str(), o.eps, o.time, [&](double e) { return weyl_continuum_error(p, o.time, e); }), out);
  } else if (v == "converge3d-dirac") {
    check_eps(o.eps);
    const Vec3 p = vec3(o.p, Vec3(1, 0.5, 0.25));
    hdr << "m=" << format_double(o.m) << ",p=" << format_double(p[0]) << ";" << format_double(p[1]) << ";"
        << format_double(p[2]) << ",t=" << format_double(o.time);
    for (double e : o.eps) trotter_steps(o.time, e);
    emit(o, sweep(hdr.str(), o.eps, o.time,
                  [&](double e) { return dirac3d_continuum_error(o.m, p, o.time, e); }),
         out);
  } else {
    throw UsageError("unknown dirac variant: " + v);
  }
  return kExitPass;
}

int cmd_compile(const Options &o, std::ostream &out, std::ostream &err) {
  const int n = o.sites == 0 ? 3 : o.sites;
  if (n < 3 || n % 2 == 0) throw UsageError("--sites must be odd and at least 3");
  if (o.steps < 0) throw UsageError("--steps must be non-negative");
  DiracParams p = DiracParams::lattice_units(n, o.mass_coupling, std::max(o.steps, 1));
  const DiracCompiled dc = compile_dirac1d_step(p);
  Circuit total;
  total.num_qubits = dc.circuit.num_qubits;
  for (int s = 0; s < o.steps; ++s) total.append(dc.circuit);
  nlohmann::json j{{"model", "dirac1d"},
                   {"sites", n},
                   {"mass_coupling", o.mass_coupling},
                   {"steps", o.steps},
                   {"gate_count", total.gate_count()},
                   {"layer_count", total.depth()},
                   {"step_gate_count", dc.circuit.gate_count()},
                   {"step_layer_count", dc.circuit.depth()},
                   {"ancillas", dc.registry.to_json(dc.ordering)}};
  int code = kExitPass;
  if (dc.ordering.size() > max_modes()) {
    err << "warning: " << dc.ordering.size() << " modes exceed the dense cap of " << max_modes()
        << "; verification skipped\n";
    j["verified"] = false;
  } else {
    const double f = dirac_step_fidelity(dc, std::max(o.steps, 1), o.verify.seed);
    j["verified"] = true;
    j["fidelity"] = f;
    if (1.0 - f > o.verify.tol) code = kExitFail;
  }
  j["circuit"] = total.to_json();
  emit(o, j.dump(2) + "\n", out);
  return code;
}

int cmd_demo_noncausal(const Options &o, std::ostream &out) {
  HoppingChain chain;
  if (o.sites != 0) chain.sites = o.sites;
  chain.hopping = o.hopping;
  try {
    chain.validate();
  } catch (const DomainError &e) {
    throw UsageError(e.what());
  }
  for (int d : o.distances)
    if (d < 0 || d >= chain.sites) throw UsageError("--distance values must lie on the chain");
  for (double t : o.times)
    if (t < 0.0) throw UsageError("--times values must be non-negative");
  emit(o, leakage_csv(leakage_table(chain, o.times, o.distances)), out);
  return kExitPass;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Causal fermions on discrete spacetime lattices"};
  app.require_subcommand(1);
  Options o;

  auto *verify = app.add_subcommand("verify", "Run an invariant suite and print a JSON report");
  verify->add_option("--suite", o.verify.suite, "Suite name")->required();
  verify->add_option("--seed", o.verify.seed, "Random seed");
  verify->add_option("--modes", o.verify.modes, "Number of physical modes");
  verify->add_option("--tol", o.verify.tol, "Residual tolerance");
  verify->add_option("--out", o.out_path, "Write the report here");

  auto *dirac = app.add_subcommand("dirac", "Dispersion and continuum-limit sweeps as CSV");
  dirac->add_option("variant", o.dirac_variant, "dispersion1d, converge1d, converge3d-weyl, converge3d-dirac, dispersion3d")
      ->required();
  dirac->add_option("--sites", o.sites, "Ring sites (odd)");
  dirac->add_option("--mass-coupling", o.mass_coupling, "Dimensionless mass M");
  dirac->add_option("--mass,--m", o.m, "Continuum mass m");
  dirac->add_option("--time,--t", o.time, "Evolution time");
  dirac->add_option("--p", o.p, "Momentum (one or three components)")->delimiter(',');
  dirac->add_option("--eps", o.eps, "Lattice spacings")->delimiter(',');
  dirac->add_option("--out", o.out_path, "Write the CSV here");

  auto *comp = app.add_subcommand("compile", "Compile one Dirac step to a qubit circuit");
  std::string model;
  comp->add_option("model", model, "Model (dirac1d)")->required();
  comp->add_option("--sites", o.sites, "Ring sites (odd)");
  comp->add_option("--mass-coupling", o.mass_coupling, "Dimensionless mass M");
  comp->add_option("--steps", o.steps, "Number of steps");
  comp->add_option("--seed", o.verify.seed, "Seed of the verification state");
  comp->add_option("--tol", o.verify.tol, "Infidelity tolerance");
  comp->add_option("--out", o.out_path, "Write the JSON here");

  auto *demo = app.add_subcommand("demo-noncausal", "Leakage of a hopping chain as CSV");
  demo->add_option("--sites", o.sites, "Chain sites");
  demo->add_option("--hopping", o.hopping, "Hopping alpha");
  demo->add_option("--times", o.times, "Times")->delimiter(',');
  demo->add_option("--distance", o.distances, "Sites to report")->delimiter(',');
  demo->add_option("--out", o.out_path, "Write the CSV here");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::Success &) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*verify) {
      const auto &names = verify_suites();
      if (std::find(names.begin(), names.end(), o.verify.suite) == names.end())
        throw UsageError("unknown suite: " + o.verify.suite);
      const nlohmann::json rep = run_verify(o.verify);
      emit(o, rep.dump(2) + "\n", out);
      return rep["pass"].get<bool>() ? kExitPass : kExitFail;
    }
    if (*dirac) return cmd_dirac(o, out);
    if (*comp) {
      if (model != "dirac1d") throw UsageError("unknown model: " + model);
      return cmd_compile(o, out, err);
    }
    if (*demo) return cmd_demo_noncausal(o, out);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace fermiqca
