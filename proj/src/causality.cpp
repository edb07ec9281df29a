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

#include "fermiqca/causality.hpp"

#include <algorithm>

#include "fermiqca/linalg.hpp"

namespace fermiqca {

namespace {

struct RegionFrame {
  int region_modes = 0;
  bool everything = false;
  Reordering reorder;
};

// Region modes first (keeping their relative order), then the rest.
RegionFrame region_frame(const Region &region, const Ordering &ord) {
  std::vector<Mode> inside, outside;
  for (const auto &m : ord.modes()) (region.sites.count(m.site) ? inside : outside).push_back(m);
  RegionFrame f;
  f.region_modes = static_cast<int>(inside.size());
  f.everything = outside.empty();
  if (f.everything) return f;
  if (f.region_modes > kMaxRegionModes)
    throw ResourceError("region has " + std::to_string(f.region_modes) + " modes; the monomial span is limited to " +
                        std::to_string(kMaxRegionModes));
  std::vector<Mode> ms = inside;
  ms.insert(ms.end(), outside.begin(), outside.end());
  f.reorder = make_reordering(ord, Ordering(ms));
  return f;
}

// Returns op' - (I (x) X) in the region-first frame, with X the partial trace.
MatrixOperator residual_in_frame(const MatrixOperator &opf, int r, Matrix &x_out) {
  const Eigen::Index dr = Eigen::Index{1} << r;
  const Eigen::Index mask = dr - 1;
  const Eigen::Index copies = opf.rows() / dr;
  Matrix x = Matrix::Zero(dr, dr);
  for (int c = 0; c < opf.outerSize(); ++c)
    for (MatrixOperator::InnerIterator it(opf, c); it; ++it)
      if ((it.row() >> r) == (c >> r)) x(it.row() & mask, c & mask) += it.value();
  x /= double(copies);
  std::vector<Triplet> trip;
  trip.reserve(static_cast<size_t>(opf.nonZeros()));
  for (int c = 0; c < opf.outerSize(); ++c)
    for (MatrixOperator::InnerIterator it(opf, c); it; ++it)
      trip.emplace_back(static_cast<int>(it.row()), c, it.value());
  for (Eigen::Index j = 0; j < dr; ++j)
    for (Eigen::Index i = 0; i < dr; ++i) {
      if (x(i, j) == cplx(0.0)) continue;
      for (Eigen::Index b = 0; b < copies; ++b)
        trip.emplace_back(static_cast<int>(i + (b << r)), static_cast<int>(j + (b << r)), -x(i, j));
    }
  MatrixOperator res(opf.rows(), opf.cols());
  res.setFromTriplets(trip.begin(), trip.end());
  x_out = std::move(x);
  return res;
}

}  // namespace

double localization_residual(const MatrixOperator &op, const Region &region, const Ordering &ord, double tol) {
  if (op.rows() != static_cast<Eigen::Index>(ord.dim()) || op.cols() != op.rows())
    throw DomainError("operator dimension does not match the ordering");
  RegionFrame f = region_frame(region, ord);
  if (f.everything) return 0.0;
  Matrix x;
  MatrixOperator res = residual_in_frame(f.reorder.apply(op), f.region_modes, x);
  return certified_norm(res, tol);
}

bool is_localized(const MatrixOperator &op, const Region &region, const Ordering &ord, double tol) {
  return localization_residual(op, region, ord, tol) <= tol;
}

MatrixOperator localize_projection(const MatrixOperator &op, const Region &region, const Ordering &ord) {
  RegionFrame f = region_frame(region, ord);
  if (f.everything) return op;
  Matrix x;
  MatrixOperator opf = f.reorder.apply(op);
  MatrixOperator res = residual_in_frame(opf, f.region_modes, x);
  MatrixOperator proj_f = opf - res;
  // Back to the caller's frame: Q^dagger P Q.
  Reordering inv;
  inv.target.resize(f.reorder.target.size());
  inv.sign.resize(f.reorder.sign.size());
  for (size_t i = 0; i < f.reorder.target.size(); ++i) {
    inv.target[f.reorder.target[i]] = i;
    inv.sign[f.reorder.target[i]] = f.reorder.sign[i];
  }
  return inv.apply(proj_f);
}

RegionBlock region_block(const MatrixOperator &op, const Region &region, const Ordering &ord, double tol) {
  if (op.rows() != static_cast<Eigen::Index>(ord.dim()) || op.cols() != op.rows())
    throw DomainError("operator dimension does not match the ordering");
  RegionBlock out;
  for (const auto &m : ord.modes())
    if (region.sites.count(m.site)) out.modes.push_back(m);
  RegionFrame f = region_frame(region, ord);
  if (f.everything) {
    out.block = to_dense(op);
    return out;
  }
  MatrixOperator res = residual_in_frame(f.reorder.apply(op), f.region_modes, out.block);
  out.residual = certified_norm(res, tol);
  return out;
}

std::vector<ModeResidual> causality_report(const MatrixOperator &u, const Lattice &lat, const Ordering &ord,
                                           double tol) {
  if (unitarity_defect(u) > tol) throw ContractError("is_causal: operator is not unitary within tolerance");
  const MatrixOperator ud = u.adjoint();
  std::vector<ModeResidual> out;
  for (const auto &m : ord.modes()) {
    MatrixOperator img = ud * annihilation_matrix(m, ord) * u;
    ModeResidual r;
    r.mode = m;
    r.region.sites = lat.neighborhood(m.site);
    r.residual = localization_residual(img, r.region, ord, tol);
    r.pass = r.residual <= tol;
    out.push_back(std::move(r));
  }
  return out;
}

bool is_causal(const MatrixOperator &u, const Lattice &lat, const Ordering &ord, double tol) {
  auto rep = causality_report(u, lat, ord, tol);
  return std::all_of(rep.begin(), rep.end(), [](const ModeResidual &r) { return r.pass; });
}

ParitySplit parity_split(const MatrixOperator &op) {
  std::vector<Triplet> odd, even;
  for (int c = 0; c < op.outerSize(); ++c)
    for (MatrixOperator::InnerIterator it(op, c); it; ++it)
      ((popcount(uint64_t(it.row()) ^ uint64_t(c)) & 1) ? odd : even)
          .emplace_back(static_cast<int>(it.row()), c, it.value());
  ParitySplit s{MatrixOperator(op.rows(), op.cols()), MatrixOperator(op.rows(), op.cols())};
  s.odd.setFromTriplets(odd.begin(), odd.end());
  s.even.setFromTriplets(even.begin(), even.end());
  return s;
}

Lemma1Report check_lemma1(const MatrixOperator &u, const Lattice &lat, const Ordering &ord, double tol) {
  Lemma1Report rep;
  rep.forward_causal = is_causal(u, lat, ord, tol);
  if (!rep.forward_causal) throw ContractError("check_lemma1: input unitary is not causal");
  rep.inverse_residuals = causality_report(MatrixOperator(u.adjoint()), lat, ord, tol);
  rep.inverse_causal = std::all_of(rep.inverse_residuals.begin(), rep.inverse_residuals.end(),
                                   [](const ModeResidual &r) { return r.pass; });
  return rep;
}

double outside_anticommutator_norm(const MatrixOperator &op, const Region &region, const Ordering &ord) {
  double worst = 0.0;
  for (const auto &m : ord.modes()) {
    if (region.sites.count(m.site)) continue;
    MatrixOperator a = annihilation_matrix(m, ord);
    MatrixOperator ad = a.adjoint();
    MatrixOperator c1 = op * a + a * op;
    MatrixOperator c2 = op * ad + ad * op;
    worst = std::max({worst, spectral_norm(c1), spectral_norm(c2)});
  }
  return worst;
}

nlohmann::json site_json(const Site &s) { return nlohmann::json(s); }

nlohmann::json to_json(const ModeResidual &r) {
  nlohmann::json region = nlohmann::json::array();
  for (const auto &s : r.region.sites) region.push_back(site_json(s));
  return nlohmann::json{{"mode", {{"site", site_json(r.mode.site)}, {"label", r.mode.label}, {"kind", kind_name(r.mode.kind)}}},
                        {"region", region},
                        {"residual_norm", r.residual},
                        {"pass", r.pass}};
}

nlohmann::json to_json(const std::vector<ModeResidual> &rs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto &r : rs) a.push_back(to_json(r));
  return a;
}

}  // namespace fermiqca
