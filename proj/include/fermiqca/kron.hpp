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

#ifndef FERMIQCA_KRON_HPP
#define FERMIQCA_KRON_HPP

#include <map>
#include <utility>
#include <vector>

#include "fermiqca/common.hpp"

namespace fermiqca {

/// Operator on a bipartite index i = lo + dim_lo * hi written as
/// sum_t hi_t (x) lo_t, with sparse high factors and dense low factors.
class KronSum {
 public:
  struct Term {
    SparseMatrix hi;
    Matrix lo;
  };

  KronSum(Eigen::Index dim_hi, Eigen::Index dim_lo) : dim_hi_(dim_hi), dim_lo_(dim_lo) {}

  Eigen::Index dim_hi() const { return dim_hi_; }
  Eigen::Index dim_lo() const { return dim_lo_; }
  Eigen::Index dim() const { return dim_hi_ * dim_lo_; }
  const std::vector<Term> &terms() const { return terms_; }

  void add(SparseMatrix hi, Matrix lo);

  /// this * other, term by term; terms with a vanishing high factor drop out.
  KronSum operator*(const KronSum &other) const;
  KronSum operator-(const KronSum &other) const;

  /// Accumulates the dense low blocks per nonzero high entry (r, c).
  std::map<std::pair<Eigen::Index, Eigen::Index>, Matrix> blocks() const;

  /// Frobenius norm from the accumulated blocks.
  double frobenius() const;

  SparseMatrix to_sparse() const;
  /// Adds this operator into a dense matrix of size dim() x dim().
  void accumulate_dense(Matrix &out) const;

 private:
  Eigen::Index dim_hi_, dim_lo_;
  std::vector<Term> terms_;
};

}  // namespace fermiqca

#endif  // FERMIQCA_KRON_HPP
