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

#include "fermiqca/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace fermiqca {

Matrix expm_hermitian(const Matrix &h, double t) {
  Matrix herm = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
  Vector phases(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) phases(i) = std::exp(-kI * t * es.eigenvalues()(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

double wrap_phase(double a) {
  // Map to (-pi, pi]; arg already returns [-pi, pi].
  if (a <= -std::numbers::pi) a += 2 * std::numbers::pi;
  return a;
}

}  // namespace

Matrix logm_unitary(const Matrix &u) {
  // A unitary is normal, so its Schur form is diagonal up to rounding.
  Eigen::ComplexSchur<Matrix> schur(u);
  const Matrix &q = schur.matrixU();
  const Matrix &t = schur.matrixT();
  Eigen::VectorXd ph(t.rows());
  for (Eigen::Index i = 0; i < t.rows(); ++i) ph(i) = wrap_phase(std::arg(t(i, i)));
  Matrix k = q * ph.cast<cplx>().asDiagonal() * q.adjoint();
  return 0.5 * (k + k.adjoint());
}

Eigen::VectorXd eigenphases(const Matrix &u) {
  Eigen::ComplexEigenSolver<Matrix> es(u, false);
  Eigen::VectorXd ph(u.rows());
  for (Eigen::Index i = 0; i < u.rows(); ++i) ph(i) = wrap_phase(std::arg(es.eigenvalues()(i)));
  std::sort(ph.data(), ph.data() + ph.size());
  return ph;
}

namespace {

template <typename M>
double power_iteration(const M &m) {
  // Deterministic start vector; iterate on m^dagger m.
  Vector v(m.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cplx(1.0 + 0.37 * std::sin(1.0 + i), 0.21 * std::cos(0.5 * i));
  v.normalize();
  double est = 0.0;
  for (int it = 0; it < 500; ++it) {
    Vector w = m.adjoint() * (m * v);
    double nw = w.norm();
    if (nw == 0.0) return 0.0;
    double next = std::sqrt(nw);
    v = w / nw;
    if (it > 20 && std::abs(next - est) <= 1e-13 * std::max(1e-300, next)) return next;
    est = next;
  }
  return est;
}

}  // namespace

double spectral_norm(const Matrix &m, Eigen::Index exact_limit) {
  if (m.size() == 0) return 0.0;
  if (std::max(m.rows(), m.cols()) <= exact_limit) {
    Eigen::BDCSVD<Matrix> svd(m);
    return svd.singularValues()(0);
  }
  return power_iteration(m);
}

double spectral_norm(const SparseMatrix &m, Eigen::Index exact_limit) {
  if (m.nonZeros() == 0) return 0.0;
  if (std::max(m.rows(), m.cols()) <= exact_limit) return spectral_norm(Matrix(m), exact_limit);
  return power_iteration(m);
}

double frobenius_norm(const SparseMatrix &m) {
  double s = 0.0;
  for (int c = 0; c < m.outerSize(); ++c)
    for (SparseMatrix::InnerIterator it(m, c); it; ++it) s += std::norm(it.value());
  return std::sqrt(s);
}

double certified_norm(const SparseMatrix &m, double tol) {
  double f = frobenius_norm(m);
  if (f <= tol) return f;
  return spectral_norm(m);
}

double unitarity_defect(const Matrix &u) {
  Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return spectral_norm(d);
}

double unitarity_defect(const SparseMatrix &u) {
  SparseMatrix id(u.rows(), u.cols());
  id.setIdentity();
  SparseMatrix d = SparseMatrix(u.adjoint()) * u - id;
  return certified_norm(d, 1e-12);
}

Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix expm_taylor(const Matrix &a) {
  if (a.rows() != a.cols()) throw DomainError("expm_taylor: matrix must be square");
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  while (norm1 / std::ldexp(1.0, squarings) > 0.5) ++squarings;
  const Matrix scaled = a / std::ldexp(1.0, squarings);
  Matrix sum = Matrix::Identity(a.rows(), a.cols());
  Matrix term = sum;
  const int degree = static_cast<int>(a.rows()) + 30;
  for (int l = 1; l <= degree; ++l) {
    term = (scaled * term) / double(l);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

}  // namespace fermiqca
