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

#include "fermiqca/kron.hpp"

#include <cmath>

namespace fermiqca {

void KronSum::add(SparseMatrix hi, Matrix lo) {
  if (hi.rows() != dim_hi_ || hi.cols() != dim_hi_ || lo.rows() != dim_lo_ || lo.cols() != dim_lo_)
    throw DomainError("KronSum::add: factor dimensions do not match");
  hi.prune(cplx(0.0));
  if (hi.nonZeros() == 0) return;
  terms_.push_back(Term{std::move(hi), std::move(lo)});
}

KronSum KronSum::operator*(const KronSum &other) const {
  if (dim_hi_ != other.dim_hi_ || dim_lo_ != other.dim_lo_) throw DomainError("KronSum: dimension mismatch");
  KronSum out(dim_hi_, dim_lo_);
  out.terms_.reserve(terms_.size() * other.terms_.size());
  for (const auto &a : terms_)
    for (const auto &b : other.terms_) {
      SparseMatrix h = a.hi * b.hi;
      h.prune(cplx(0.0));
      if (h.nonZeros() == 0) continue;
      out.terms_.push_back(Term{std::move(h), a.lo * b.lo});
    }
  return out;
}

KronSum KronSum::operator-(const KronSum &other) const {
  KronSum out = *this;
  for (const auto &t : other.terms_) out.terms_.push_back(Term{t.hi, -t.lo});
  return out;
}

std::map<std::pair<Eigen::Index, Eigen::Index>, Matrix> KronSum::blocks() const {
  std::map<std::pair<Eigen::Index, Eigen::Index>, Matrix> out;
  for (const auto &t : terms_)
    for (int c = 0; c < t.hi.outerSize(); ++c)
      for (SparseMatrix::InnerIterator it(t.hi, c); it; ++it) {
        auto [pos, fresh] = out.try_emplace({it.row(), c});
        if (fresh) pos->second = Matrix::Zero(dim_lo_, dim_lo_);
        pos->second.noalias() += it.value() * t.lo;
      }
  return out;
}

double KronSum::frobenius() const {
  double s = 0.0;
  for (const auto &[rc, b] : blocks()) s += b.squaredNorm();
  return std::sqrt(s);
}

SparseMatrix KronSum::to_sparse() const {
  std::vector<Triplet> trip;
  for (const auto &[rc, b] : blocks())
    for (Eigen::Index j = 0; j < dim_lo_; ++j)
      for (Eigen::Index i = 0; i < dim_lo_; ++i)
        if (b(i, j) != cplx(0.0))
          trip.emplace_back(static_cast<int>(i + dim_lo_ * rc.first), static_cast<int>(j + dim_lo_ * rc.second),
                            b(i, j));
  SparseMatrix out(dim(), dim());
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

void KronSum::accumulate_dense(Matrix &out) const {
  if (out.rows() != dim() || out.cols() != dim()) throw DomainError("KronSum::accumulate_dense: size mismatch");
  for (const auto &t : terms_)
    for (int c = 0; c < t.hi.outerSize(); ++c)
      for (SparseMatrix::InnerIterator it(t.hi, c); it; ++it)
        out.block(dim_lo_ * it.row(), dim_lo_ * c, dim_lo_, dim_lo_).noalias() += it.value() * t.lo;
}

}  // namespace fermiqca
