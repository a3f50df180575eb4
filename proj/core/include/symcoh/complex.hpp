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

#ifndef SYMCOH_COMPLEX_HPP
#define SYMCOH_COMPLEX_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "symcoh/cochain.hpp"

namespace symcoh {

class NotASubalgebra : public ValidationError {
 public:
  NotASubalgebra(std::size_t i, std::size_t j)
      : ValidationError("NotASubalgebra", "bracket of subalgebra basis vectors " + std::to_string(i) + " and " +
                                              std::to_string(j) + " leaves the span") {}
};

class NotHorizontal : public ValidationError {
 public:
  NotHorizontal() : ValidationError("NotHorizontal", "cochain does not vanish on the subalgebra") {}
};

struct ComputeOptions {
  /// Upper bound on the dimension of any single cochain space.
  std::size_t max_exterior_dim = std::size_t{1} << 22;
  /// Worker threads for independent per-degree work; 0 or 1 runs inline.
  unsigned threads = 1;
  linalg::Options linalg{};
};

/// Basis of a subspace of Q^length whose coordinates can be read off at one
/// index per vector (the other vectors vanish there).
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  static SubspaceBasis identity(std::size_t length);
  /// Vectors as produced by linalg::kernel_basis (last index is private to each vector).
  static SubspaceBasis from_kernel(std::size_t length, std::vector<SparseVector> vectors);

  [[nodiscard]] std::size_t length() const noexcept { return length_; }
  [[nodiscard]] std::size_t size() const noexcept { return identity_ ? length_ : vectors_.size(); }
  [[nodiscard]] bool is_identity() const noexcept { return identity_; }
  [[nodiscard]] SparseVector vector(std::size_t i) const;
  /// sum_i coords[i] * vector(i).
  [[nodiscard]] SparseVector expand(const SparseVector& coords) const;
  /// Exact coordinates of w, or nullopt if w is outside the span.
  [[nodiscard]] std::optional<SparseVector> coordinates(const SparseVector& w) const;

 private:
  std::size_t length_ = 0;
  bool identity_ = true;
  std::vector<SparseVector> vectors_;
  std::vector<Index> readoff_;
};

/// The Chevalley-Eilenberg complex of g, or its relative subcomplex for a
/// subalgebra h: cochains that vanish on h and are h-invariant.
///
/// Internally g is rewritten in an adapted basis (h first, then standard
/// complement vectors), so horizontal cochains are exactly the wedges of
/// complement 1-forms. Complex coordinates are coordinates in a basis of the
/// invariant horizontal cochains of each degree.
class CochainComplex {
 public:
  [[nodiscard]] const LieAlgebra& algebra() const { return data_->algebra; }
  [[nodiscard]] const CoefficientModule& module() const { return data_->module; }
  [[nodiscard]] bool is_relative() const { return data_->h_dim > 0; }
  [[nodiscard]] std::size_t h_dim() const { return data_->h_dim; }
  /// Number of complement directions (dim g for the full complex).
  [[nodiscard]] std::size_t horizontal_dim() const { return data_->adapted.dim() - data_->h_dim; }
  /// Differentials d_0, ..., d_top are available.
  [[nodiscard]] std::size_t top_degree() const { return data_->differentials.size() - 1; }
  [[nodiscard]] std::size_t dim(std::size_t n) const;
  [[nodiscard]] const Matrix& differential(std::size_t n) const { return data_->differentials.at(n); }
  [[nodiscard]] const SubspaceBasis& basis(std::size_t n) const { return data_->bases.at(n); }
  /// Columns are the adapted basis vectors in the coordinates of algebra().
  [[nodiscard]] const Matrix& adapted_basis() const { return data_->change; }
  [[nodiscard]] const LieAlgebra& adapted_algebra() const { return data_->adapted; }

  /// The cochain on algebra() represented by complex coordinates.
  [[nodiscard]] Cochain to_ambient(std::size_t n, const SparseVector& coords) const;
  /// Complex coordinates of an ambient cochain; nullopt if it is not
  /// horizontal or not invariant.
  [[nodiscard]] std::optional<SparseVector> from_ambient(const Cochain& omega) const;
  /// The horizontal cochain as a form on the complement directions.
  [[nodiscard]] Cochain to_horizontal(std::size_t n, const SparseVector& coords) const;
  [[nodiscard]] std::optional<SparseVector> from_horizontal(const Cochain& omega) const;

  struct Data {
    LieAlgebra algebra;
    CoefficientModule module;
    LieAlgebra adapted;
    CoefficientModule adapted_module;
    Matrix change;
    Matrix change_inverse;
    bool identity_change = true;
    std::size_t h_dim = 0;
    std::vector<SubspaceBasis> bases;    // degrees 0..top+1
    std::vector<Matrix> differentials;   // degrees 0..top
  };
  explicit CochainComplex(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

 private:
  std::shared_ptr<const Data> data_;
};

/// Throws SizeLimit.
CochainComplex full_complex(const LieAlgebra& g, const CoefficientModule& module, std::size_t max_degree,
                            const ComputeOptions& options = {});
/// h_basis vectors in g coordinates. Throws NotASubalgebra, SizeLimit, ValidationError.
CochainComplex relative_complex(const LieAlgebra& g, std::span<const DenseVector> h_basis,
                                const CoefficientModule& module, std::size_t max_degree,
                                const ComputeOptions& options = {});

enum class PivotOrder { kLexicographic, kReverse };

struct CohomologyOptions {
  bool representatives = true;
  PivotOrder order = PivotOrder::kLexicographic;
  ComputeOptions compute{};
};

class CohomologyResult {
 public:
  struct Degree {
    std::size_t dim = 0;
    std::size_t rank_d = 0;  // rank of d_n
    std::size_t betti = 0;
    bool has_representatives = false;
    std::vector<SparseVector> representatives;  // complex coordinates
    std::shared_ptr<const linalg::Echelon> boundaries;
    std::shared_ptr<const linalg::Echelon> classes;  // tracked, over reduced representatives
  };

  CohomologyResult(CochainComplex complex, std::vector<Degree> degrees)
      : complex_(std::move(complex)), degrees_(std::move(degrees)) {}

  [[nodiscard]] const CochainComplex& complex() const noexcept { return complex_; }
  [[nodiscard]] std::size_t max_degree() const noexcept { return degrees_.size() - 1; }
  [[nodiscard]] std::size_t betti(std::size_t n) const { return n < degrees_.size() ? degrees_[n].betti : 0; }
  [[nodiscard]] std::vector<std::size_t> betti_numbers() const;
  [[nodiscard]] std::size_t differential_rank(std::size_t n) const { return degrees_.at(n).rank_d; }
  [[nodiscard]] bool has_representatives(std::size_t n) const {
    return n < degrees_.size() && degrees_[n].has_representatives;
  }
  [[nodiscard]] const std::vector<SparseVector>& representatives(std::size_t n) const;
  [[nodiscard]] Cochain representative(std::size_t n, std::size_t i) const;

  /// Class of a cocycle (complex coordinates) in the representative basis;
  /// nullopt if it is not a cocycle.
  [[nodiscard]] std::optional<DenseVector> class_coordinates(std::size_t n, const SparseVector& coords) const;
  /// Same for an ambient cochain; nullopt if it is not in the complex or not closed.
  [[nodiscard]] std::optional<DenseVector> class_of(const Cochain& omega) const;

 private:
  CochainComplex complex_;
  std::vector<Degree> degrees_;
};

CohomologyResult cohomology(const CochainComplex& complex, std::size_t max_degree,
                            const CohomologyOptions& options = {});

struct KappaResult {
  Matrix matrix;  // full betti x relative betti
  std::size_t rank = 0;
  bool injective = false;
};

/// The map induced by including relative cocycles into the full complex.
KappaResult kappa(const CohomologyResult& pair_result, const CohomologyResult& full_result, std::size_t n);

/// Rank of the span of relative classes inside H^n(g) computed without full
/// representatives: rank(im d_{n-1} + relative reps) - rank(im d_{n-1}).
std::size_t kappa_rank(const CohomologyResult& pair_result, const CochainComplex& full, std::size_t n,
                       const linalg::Options& options = {});

/// The same alternating map read over the compact dual. Throws NotHorizontal,
/// NonTrivialCoefficients.
Cochain mu_transport(const CartanDecomposition& dec, const Cochain& omega);

bool odd_generation_check(const CohomologyResult& result, std::size_t top_degree);

struct NczDegree {
  std::size_t degree = 0;
  std::size_t relative_betti = 0;
  std::size_t kappa_rank = 0;
  bool injective = true;
};

struct NczResult {
  std::vector<NczDegree> degrees;
  bool kappa_verdict = true;
  std::optional<std::size_t> first_failure;
  std::optional<bool> odd_generation_verdict;
  bool paths_agree = true;
  std::vector<std::size_t> relative_betti;
};

NczResult is_ncz(const LieAlgebra& g, std::span<const DenseVector> k_basis, const CoefficientModule& module,
                 std::size_t max_degree, const ComputeOptions& options = {});

}  // namespace symcoh

#endif  // SYMCOH_COMPLEX_HPP
