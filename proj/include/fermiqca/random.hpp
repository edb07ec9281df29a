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

#ifndef FERMIQCA_RANDOM_HPP
#define FERMIQCA_RANDOM_HPP

#include <cstdint>
#include <vector>

#include "fermiqca/fock.hpp"

namespace fermiqca {

/// Counter-based SplitMix64: output k is mix(seed + (k+1) * 0x9E3779B97F4A7C15)
/// with the Stafford variant-13 finalizer. Distributions are implemented
/// here rather than taken from <random> so streams match across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed) {}

  uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal by Box-Muller (one draw per call, second discarded).
  double normal();
  /// Uniform integer in [0, n).
  uint64_t below(uint64_t n);
  cplx complex_normal() { return {normal(), normal()}; }

  /// Independent stream derived from this seed and a tag.
  Rng fork(uint64_t tag) const;

 private:
  uint64_t seed_;
  uint64_t counter_ = 0;
};

/// Random Hermitian even generator on the given modes: number, hopping and
/// pairing terms with normal coefficients.
SymbolicOperator random_even_generator(Rng &rng, const std::vector<Mode> &modes, double scale = 1.0);

/// Random product of exp(-iH) gates with even H arranged so the result is
/// causal with radius one on a line. With two or more modes per site it uses
/// on-site gates, bond gates on the pair {(n-1, last), (n, first)}, then
/// on-site gates again; with one mode per site it uses phases around one
/// layer of disjoint two-site gates.
MatrixOperator random_causal_brickwork(Rng &rng, const Lattice &lat, const Ordering &ord);

/// Normalized random state on the modes of `ord`, zero outside `allowed_mask`
/// (bits that may be occupied).
StateVector random_state(Rng &rng, const Ordering &ord, uint64_t allowed_mask);

/// Random monomial of the given degree over modes drawn from the ordering.
Monomial random_monomial(Rng &rng, const Ordering &ord, int degree);

}  // namespace fermiqca

#endif  // FERMIQCA_RANDOM_HPP
