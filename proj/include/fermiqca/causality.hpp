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

#ifndef FERMIQCA_CAUSALITY_HPP
#define FERMIQCA_CAUSALITY_HPP

#include <set>
#include <utility>
#include <vector>

#include "fermiqca/fock.hpp"
#include "json.hpp"

namespace fermiqca {

struct Region {
  std::set<Site> sites;
};

inline constexpr double kDefaultTol = 1e-10;
/// Largest region (in modes) for which the monomial span is built.
inline constexpr int kMaxRegionModes = 10;

/// Norm of op minus its Hilbert-Schmidt projection onto the span of
/// monomials over the modes of `region`. The value is the Frobenius norm
/// when that is already at most `tol`, and the spectral norm otherwise, so
/// a value <= tol certifies localization in operator norm.
double localization_residual(const MatrixOperator &op, const Region &region, const Ordering &ord,
                             double tol = kDefaultTol);

bool is_localized(const MatrixOperator &op, const Region &region, const Ordering &ord, double tol = kDefaultTol);

/// Projection of op onto the monomial span of the region.
MatrixOperator localize_projection(const MatrixOperator &op, const Region &region, const Ordering &ord);

/// Restriction of op to a region: op = block (x) I in the frame where the
/// region modes (kept in `ord` order) come first. `residual` measures how
/// far op is from that form.
struct RegionBlock {
  std::vector<Mode> modes;
  Matrix block;
  double residual = 0.0;
};

RegionBlock region_block(const MatrixOperator &op, const Region &region, const Ordering &ord,
                         double tol = kDefaultTol);

struct ModeResidual {
  Mode mode;
  Region region;
  double residual = 0.0;
  bool pass = false;
};

/// Localization of U^dagger a_m U on neighborhood(m) for every mode.
std::vector<ModeResidual> causality_report(const MatrixOperator &u, const Lattice &lat, const Ordering &ord,
                                           double tol = kDefaultTol);

/// Throws ContractError when U is not unitary within tol.
bool is_causal(const MatrixOperator &u, const Lattice &lat, const Ordering &ord, double tol = kDefaultTol);

struct ParitySplit {
  MatrixOperator odd;
  MatrixOperator even;
};

ParitySplit parity_split(const MatrixOperator &op);

struct Lemma1Report {
  bool forward_causal = false;
  bool inverse_causal = false;
  std::vector<ModeResidual> inverse_residuals;
};

/// Requires U causal (ContractError otherwise); reports causality of U^dagger.
Lemma1Report check_lemma1(const MatrixOperator &u, const Lattice &lat, const Ordering &ord, double tol = kDefaultTol);

/// Largest norm of {O, a_y} and {O, a_y^dagger} over modes y outside the region.
double outside_anticommutator_norm(const MatrixOperator &op, const Region &region, const Ordering &ord);

nlohmann::json to_json(const ModeResidual &r);
nlohmann::json to_json(const std::vector<ModeResidual> &rs);
nlohmann::json site_json(const Site &s);

}  // namespace fermiqca

#endif  // FERMIQCA_CAUSALITY_HPP
