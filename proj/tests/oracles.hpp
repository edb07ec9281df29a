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


// Independent reference constructions for the tests. Nothing here calls
// into the library's operator code.

#ifndef FERMIQCA_TESTS_ORACLES_HPP
#define FERMIQCA_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

using cplx = std::complex<double>;
using Dense = Eigen::MatrixXcd;

inline Dense kron(const Dense &a, const Dense &b) {
  Dense out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Dense pauli(char c) {
  Dense m = Dense::Zero(2, 2);
  switch (c) {
    case 'X': m(0, 1) = m(1, 0) = 1.0; break;
    case 'Y': m(0, 1) = cplx(0, -1); m(1, 0) = cplx(0, 1); break;
    case 'Z': m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    case '+': m(1, 0) = 1.0; break;  // |1><0|
    case '-': m(0, 1) = 1.0; break;
    default: m = Dense::Identity(2, 2);
  }
  return m;
}

/// Product over qubits with letters[k] on bit k ('I' for identity).
inline Dense pauli_string(const std::vector<char> &letters) {
  Dense out = Dense::Identity(1, 1);
  for (char c : letters) out = kron(pauli(c), out);
  return out;
}

/// a^dagger_k on n modes: Z on every lower bit, |1><0| on bit k.
inline Dense creation(int k, int n) {
  std::vector<char> l(n, 'I');
  for (int j = 0; j < k; ++j) l[j] = 'Z';
  l[k] = '+';
  return pauli_string(l);
}

inline Dense annihilation(int k, int n) { return creation(k, n).adjoint(); }

/// exp(-i h) by Pade scaling and squaring.
inline Dense expm_minus_i(const Dense &h) { return Dense(cplx(0, -1) * h).exp(); }

/// Fock unitary with V a^dagger_k V^dagger = a^dagger_{perm[k]} and V|0> = |0>.
inline Dense mode_permutation(const std::vector<int> &perm) {
  const int n = static_cast<int>(perm.size());
  const Eigen::Index d = Eigen::Index{1} << n;
  Dense v = Dense::Zero(d, d);
  for (Eigen::Index s = 0; s < d; ++s) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Unit(d, 0);
    // |s> = a^dag_{k1} ... a^dag_{km} |0>, k1 < ... < km.
    for (int k = n - 1; k >= 0; --k)
      if ((s >> k) & 1) psi = creation(perm[k], n) * psi;
    v.col(s) = psi;
  }
  return v;
}

/// Frequency of the Dirac walk: cos w = cos M cos p.
inline double dispersion(double mass_coupling, double p) { return std::acos(std::cos(mass_coupling) * std::cos(p)); }

/// exp(-i M sigma_x) exp(-i p sigma_z) in the (r, l) basis.
inline Dense dirac_block(double p, double mass_coupling) {
  return expm_minus_i(mass_coupling * pauli('X')) * expm_minus_i(p * pauli('Z'));
}

/// Leading Taylor term of |<n| exp(-iHt) |0>| on an open chain: (alpha t)^n / n!.
inline double leading_leakage(int n, double t, double alpha) { return std::pow(alpha * t, n) / std::tgamma(n + 1.0); }

// Frozen values. Errors from scipy.linalg.expm and numpy 2-norms; leakage
// from mpmath at 50 digits on the 9-site chain with alpha = 1.
inline constexpr double kEps[4] = {0.1, 0.05, 0.025, 0.0125};
inline constexpr double kDirac1dError[4] = {0.06995092211316908, 0.03493596342757967, 0.0174630453456945,
                                            0.008730905653632128};
inline constexpr double kWeylError[4] = {0.11466302319175167, 0.056030892352844384, 0.027694984629551746,
                                         0.013768060086577017};
inline constexpr double kDirac3dError[4] = {0.0980558680839628, 0.048930810916158245, 0.02445307669103337,
                                            0.012224991261080289};
inline constexpr double kLeakTimes[3] = {1e-4, 1e-3, 1e-2};
inline constexpr double kLeakSite4[3] = {4.1666666597222222e-18, 4.1666659722222718e-14, 4.1665972227182519e-10};
inline constexpr double kLeakSite1[3] = {9.9999999666666667e-5, 0.00099999966666670833, 0.0099996666708333056};

}  // namespace oracle

#endif  // FERMIQCA_TESTS_ORACLES_HPP
