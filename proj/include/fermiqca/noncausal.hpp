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


#ifndef FERMIQCA_NONCAUSAL_HPP
#define FERMIQCA_NONCAUSAL_HPP

#include <string>
#include <vector>

#include "fermiqca/common.hpp"

namespace fermiqca {

/// Open chain of N sites with nearest-neighbour hopping alpha. The on-site
/// interaction U acts only on doubly occupied sites and so drops out of the
/// single-particle sector used here.
struct HoppingChain {
  int sites = 9;
  double hopping = 1.0;
  double onsite_U = 0.0;

  void validate() const;
  /// N x N single-particle Hamiltonian -alpha sum (|n><n+1| + h.c.).
  Matrix hamiltonian() const;
};

/// |<n| exp(-i H t) |0>| in the single-particle sector.
double leakage_amplitude(const HoppingChain &chain, int site, double t);

/// Least-squares slope of log amplitude against log t.
double leakage_slope(const HoppingChain &chain, int site, const std::vector<double> &times);

struct LeakageRow {
  double t;
  int site;
  double amplitude;
};
std::vector<LeakageRow> leakage_table(const HoppingChain &chain, const std::vector<double> &times,
                                      const std::vector<int> &sites);
std::string leakage_csv(const std::vector<LeakageRow> &rows);

}  // namespace fermiqca

#endif  // FERMIQCA_NONCAUSAL_HPP
