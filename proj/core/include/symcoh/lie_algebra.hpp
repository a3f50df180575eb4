// Copyright 2026 The symcoh Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMCOH_LIE_ALGEBRA_HPP
#define SYMCOH_LIE_ALGEBRA_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symcoh/errors.hpp"
#include "symcoh/linalg.hpp"

namespace symcoh {

using linalg::DenseVector;
using linalg::Index;
using linalg::Matrix;
using linalg::SparseVector;

class JacobiViolation : public ValidationError {
 public:
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k, SparseVector residual);
  std::size_t i, j, k;
  SparseVector residual;
};

class BracketViolation : public ValidationError {
 public:
  /// `inclusion` is one of "[k,k]<=k", "[p,p]<=k", "[k,p]<=p"; the witness
  /// indexes into the respective basis lists.
  BracketViolation(std::string inclusion, std::size_t first, std::size_t second);
  std::string inclusion;
  std::size_t first, second;
};

class NotComplementary : public ValidationError {
 public:
  explicit NotComplementary(const std::string& why) : ValidationError("NotComplementary", why) {}
};

class NotSemisimple : public ValidationError {
 public:
  explicit NotSemisimple(const std::string& what)
      : ValidationError("NotSemisimple", what + " requires a semisimple Lie algebra") {}
};

/// Structure constant c_{ij}^k with i < j.
struct StructureConstant {
  Index i;
  Index j;
  Index k;
  Rational value;
};

/// Finite-dimensional real Lie algebra given by rational structure constants
/// [x_i, x_j] = sum_k c_{ij}^k x_k. Instances are validated on construction
/// (antisymmetry and the Jacobi identity on every basis triple) and immutable.
class LieAlgebra {
 public:
  struct BracketSpec {
    Index i;
    Index j;
    SparseVector result;
  };

  LieAlgebra() = default;

  /// Builds and validates. Entries with i > j are accepted only if the
  /// mirrored entry is absent or its exact negative; i == j must be zero.
  /// Throws JacobiViolation, ValidationError.
  static LieAlgebra create(std::size_t dim, std::vector<std::string> labels, std::vector<BracketSpec> brackets);
  /// Abelian algebra R^dim.
  static LieAlgebra abelian(std::size_t dim);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// [x_i, x_j] in basis coordinates.
  [[nodiscard]] const SparseVector& bracket_basis(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }
  /// Bilinear extension. Throws DimensionMismatch.
  [[nodiscard]] SparseVector bracket(const SparseVector& x, const SparseVector& y) const;
  [[nodiscard]] DenseVector bracket(std::span<const Rational> x, std::span<const Rational> y) const;

  /// All nonzero c_{ij}^k with i < j, grouped by the result index k.
  [[nodiscard]] const std::vector<StructureConstant>& constants_with_result(std::size_t k) const {
    return by_result_[k];
  }
  [[nodiscard]] std::vector<BracketSpec> bracket_specs() const;
  [[nodiscard]] bool is_abelian() const noexcept;

  /// ad(x_i) as a dim x dim matrix: column j holds [x_i, x_j].
  [[nodiscard]] Matrix ad(std::size_t i) const;
  /// B(x_i, x_j) = trace(ad x_i ad x_j).
  [[nodiscard]] Matrix killing_form() const;
  [[nodiscard]] bool is_semisimple() const;

  /// Structure constants expressed in a new basis (columns of `basis`,
  /// which must be invertible). Labels are supplied by the caller.
  [[nodiscard]] LieAlgebra change_basis(const Matrix& basis, std::vector<std::string> labels) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  void index_constants();

  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;  // dim*dim, antisymmetric
  std::vector<std::vector<StructureConstant>> by_result_;
};

/// Finite-dimensional g-module a = Q^m given by action matrices rho(x_i).
class CoefficientModule {
 public:
  CoefficientModule() = default;
  static CoefficientModule trivial(const LieAlgebra& g, std::size_t dim = 1);
  /// Validates rho([x_i,x_j]) = [rho(x_i), rho(x_j)]. Throws ValidationError.
  static CoefficientModule create(const LieAlgebra& g, std::vector<Matrix> action);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] bool is_trivial() const noexcept { return trivial_; }
  [[nodiscard]] const Matrix& action(std::size_t i) const { return action_.at(i); }
  [[nodiscard]] const std::vector<Matrix>& actions() const noexcept { return action_; }
  /// The same module viewed through a change of basis of g.
  [[nodiscard]] CoefficientModule change_basis(const Matrix& basis) const;

 private:
  std::size_t dim_ = 1;
  bool trivial_ = true;
  std::vector<Matrix> action_;
};

/// Validated split g = k + p with [k,k] <= k, [k,p] <= p, [p,p] <= k.
///
/// The adapted basis lists k_basis then p_basis; `adapted()` is the parent
/// algebra written in that basis, so k occupies the first k_dim coordinates.
class CartanDecomposition {
 public:
  [[nodiscard]] const LieAlgebra& parent() const noexcept { return parent_; }
  [[nodiscard]] const LieAlgebra& adapted() const noexcept { return adapted_; }
  [[nodiscard]] const std::vector<DenseVector>& k_basis() const noexcept { return k_basis_; }
  [[nodiscard]] const std::vector<DenseVector>& p_basis() const noexcept { return p_basis_; }
  [[nodiscard]] std::size_t k_dim() const noexcept { return k_basis_.size(); }
  [[nodiscard]] std::size_t p_dim() const noexcept { return p_basis_.size(); }

  /// Columns are the adapted basis in parent coordinates.
  [[nodiscard]] const Matrix& change() const noexcept { return change_; }
  [[nodiscard]] const Matrix& change_inverse() const noexcept { return change_inverse_; }
  /// Projections in parent coordinates.
  [[nodiscard]] const Matrix& pi_k() const noexcept { return pi_k_; }
  [[nodiscard]] const Matrix& pi_p() const noexcept { return pi_p_; }
  /// True when the adapted basis is the parent's own standard basis.
  [[nodiscard]] bool adapted_is_identity() const noexcept { return identity_; }
  [[nodiscard]] bool parent_semisimple() const noexcept { return semisimple_; }

  /// k as a Lie algebra on k_basis.
  [[nodiscard]] LieAlgebra k_algebra() const;
  /// Coordinates of x (parent coordinates) in the adapted basis.
  [[nodiscard]] SparseVector to_adapted(const SparseVector& x) const { return change_inverse_.apply(x); }

  friend CartanDecomposition validate_decomposition(const LieAlgebra& g, std::vector<DenseVector> k_basis,
                                                    std::vector<DenseVector> p_basis);

 private:
  LieAlgebra parent_;
  LieAlgebra adapted_;
  std::vector<DenseVector> k_basis_;
  std::vector<DenseVector> p_basis_;
  Matrix change_;
  Matrix change_inverse_;
  Matrix pi_k_;
  Matrix pi_p_;
  bool identity_ = false;
  bool semisimple_ = false;
};

/// Throws NotComplementary or BracketViolation.
CartanDecomposition validate_decomposition(const LieAlgebra& g, std::vector<DenseVector> k_basis,
                                           std::vector<DenseVector> p_basis);

/// Convenience: split along coordinate indices.
CartanDecomposition decomposition_from_indices(const LieAlgebra& g, std::span<const std::size_t> k_indices,
                                               std::span<const std::size_t> p_indices);

/// g_u on the adapted basis: the [p,p] bracket changes sign. Throws NotSemisimple.
LieAlgebra compact_dual(const CartanDecomposition& dec);

/// Inverse of a square matrix; throws ValidationError if singular.
Matrix invert(const Matrix& m);

DenseVector unit_vector(std::size_t dim, std::size_t i);

}  // namespace symcoh

#endif  // SYMCOH_LIE_ALGEBRA_HPP
