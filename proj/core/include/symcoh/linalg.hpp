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

// Exact sparse linear algebra over Q.

#ifndef SYMCOH_LINALG_HPP
#define SYMCOH_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "symcoh/rational.hpp"

namespace symcoh::linalg {

using Index = std::uint32_t;

struct Entry {
  Index index;
  Rational value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse vector: entries sorted by index, no stored zeros.
using SparseVector = std::vector<Entry>;
using DenseVector = std::vector<Rational>;

SparseVector to_sparse(std::span<const Rational> dense);
DenseVector to_dense(const SparseVector& v, std::size_t length);
/// Builds a sparse vector from unsorted (index, value) pairs, summing duplicates.
SparseVector accumulate(std::vector<Entry> entries);
/// a + factor * b.
SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b);
SparseVector scale(const SparseVector& v, const Rational& factor);
Rational dot(const SparseVector& a, const SparseVector& b);
Rational value_at(const SparseVector& v, Index index);
/// Rescales to integer entries with content 1 and a positive first entry.
SparseVector primitive(const SparseVector& v);

/// Sparse matrix with column-major storage. Immutable once built.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of sorted, zero-free columns; validates indices.
  Matrix(std::size_t rows, std::vector<SparseVector> columns);

  static Matrix identity(std::size_t n);
  static Matrix from_dense(const std::vector<std::vector<Rational>>& rows);
  /// Stacks `blocks` vertically; all blocks must have the same column count.
  static Matrix vstack(std::span<const Matrix> blocks);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return columns_.size(); }
  [[nodiscard]] const SparseVector& column(std::size_t c) const { return columns_.at(c); }
  [[nodiscard]] const std::vector<SparseVector>& columns() const noexcept { return columns_; }
  [[nodiscard]] Rational at(std::size_t r, std::size_t c) const;
  [[nodiscard]] std::size_t nonzeros() const noexcept;
  [[nodiscard]] double density() const noexcept;
  [[nodiscard]] bool is_zero() const noexcept { return nonzeros() == 0; }

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] SparseVector apply(const SparseVector& x) const;
  [[nodiscard]] std::vector<std::vector<Rational>> to_dense() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

/// Incremental row-echelon basis of a subspace of Q^length.
///
/// Each stored row is normalised so that its smallest index carries the
/// value 1; that index is the row's pivot and no other stored row has a
/// nonzero entry left of its own pivot at that position. Reduction sweeps
/// left to right, so the remainder of a vector is a fixed linear projection
/// whose kernel is exactly the span of the inserted vectors.
///
/// With tracking enabled every stored row also remembers its expression in
/// the originally inserted generators, which makes `express` available.
/// Not thread-safe (owns a scratch accumulator); copy per thread.
class Echelon {
 public:
  explicit Echelon(std::size_t length, bool track = false);

  /// Reduces `v` and stores it if independent. Returns true iff stored.
  /// With tracking, the generator index of this call is `inserted()` before it.
  bool insert(const SparseVector& v);
  /// Like insert, but when `v` is dependent returns the combination
  /// `e_self - sum c_g e_g` (over generators) that vanishes. Requires tracking.
  std::optional<SparseVector> insert_or_relation(const SparseVector& v);

  [[nodiscard]] SparseVector reduce(const SparseVector& v) const;
  [[nodiscard]] bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  /// Coefficients over inserted generators reproducing `v`, or nullopt.
  [[nodiscard]] std::optional<SparseVector> express(const SparseVector& v) const;

  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t length() const noexcept { return length_; }
  [[nodiscard]] std::size_t inserted() const noexcept { return inserted_; }
  [[nodiscard]] const std::vector<Index>& pivots() const noexcept { return pivot_order_; }

 private:
  struct Row {
    SparseVector values;
    SparseVector combo;
  };
  // Reduces into scratch; returns remainder and, optionally, the multipliers used.
  SparseVector reduce_impl(const SparseVector& v, SparseVector* multipliers) const;

  std::size_t length_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
  std::vector<std::int32_t> pivot_row_;  // index -> row or -1
  std::vector<Index> pivot_order_;
  mutable std::vector<Rational> acc_;
  mutable std::vector<char> touched_;
};

struct Options {
  /// Matrices at or above this density use dense elimination.
  double dense_threshold = 0.2;
};

/// Rank over Q.
std::size_t rank(const Matrix& m, const Options& options = {});
/// Rank of a list of vectors (each of the given length).
std::size_t rank(std::span<const SparseVector> vectors, std::size_t length, const Options& options = {});

/// Rank of `extra` modulo span(base): rank(base + extra) - rank(base).
std::size_t extension_rank(std::span<const SparseVector> base, std::span<const SparseVector> extra,
                           std::size_t length);

/// Basis of the null space {x : m x = 0}, one vector per dependent column
/// in increasing column order, each integral with content 1.
std::vector<SparseVector> kernel_basis(const Matrix& m);

enum class SolveStatus { kSolved, kNotInSpan };

struct SolveResult {
  SolveStatus status = SolveStatus::kNotInSpan;
  SparseVector coefficients;
  [[nodiscard]] bool solved() const noexcept { return status == SolveStatus::kSolved; }
};

/// Exact coefficients c with sum c_i g_i = target, or kNotInSpan.
/// Throws DimensionMismatch if a generator length disagrees with `length`.
SolveResult solve_in_span(const SparseVector& target, std::span<const SparseVector> generators,
                          std::size_t length);

/// Dense Gaussian elimination rank; exposed for cross-checks.
std::size_t dense_rank(std::vector<std::vector<Rational>> rows);

/// True iff the symmetric matrix is negative definite (all pivots of
/// unpivoted elimination negative).
bool is_negative_definite(const Matrix& symmetric);

}  // namespace symcoh::linalg

#endif  // SYMCOH_LINALG_HPP
