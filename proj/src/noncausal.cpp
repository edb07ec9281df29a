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


#include "fermiqca/noncausal.hpp"

#include <cmath>
#include <sstream>

#include "fermiqca/dirac1d.hpp"
#include "fermiqca/linalg.hpp"

namespace fermiqca {

void HoppingChain::validate() const {
  if (sites < 3) throw DomainError("hopping chain needs at least 3 sites");
  if (!(hopping > 0.0)) throw DomainError("hopping strength must be positive");
}

Matrix HoppingChain::hamiltonian() const {
  validate();
  Matrix h = Matrix::Zero(sites, sites);
  for (int n = 0; n + 1 < sites; ++n) h(n, n + 1) = h(n + 1, n) = -hopping;
  return h;
}

double leakage_amplitude(const HoppingChain &chain, int site, double t) {
  if (site < 0 || site >= chain.sites) throw DomainError("leakage_amplitude: site outside the chain");
  const Matrix u = expm_taylor(cplx(0.0, -t) * chain.hamiltonian());
  return std::abs(u(site, 0));
}

double leakage_slope(const HoppingChain &chain, int site, const std::vector<double> &times) {
  if (times.size() < 2) throw DomainError("leakage_slope: need at least two times");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double t : times) {
    const double x = std::log(t), y = std::log(leakage_amplitude(chain, site, t));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = double(times.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<LeakageRow> leakage_table(const HoppingChain &chain, const std::vector<double> &times,
                                      const std::vector<int> &sites) {
  std::vector<LeakageRow> rows;
  for (double t : times)
    for (int n : sites) rows.push_back(LeakageRow{t, n, leakage_amplitude(chain, n, t)});
  return rows;
}

std::string leakage_csv(const std::vector<LeakageRow> &rows) {
  std::ostringstream os;
  os << "t,site,amplitude\n";
  for (const auto &r : rows) os << format_double(r.t) << ',' << r.site << ',' << format_double(r.amplitude) << '\n';
  return os.str();
}

}  // namespace fermiqca
