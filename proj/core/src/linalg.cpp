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

#include "symcoh/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "symcoh/errors.hpp"

namespace symcoh::linalg {

SparseVector to_sparse(std::span<const Rational> dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!dense[i].is_zero()) out.push_back({static_cast<Index>(i), dense[i]});
  }
  return out;
}

DenseVector to_dense(const SparseVector& v, std::size_t length) {
  DenseVector out(length);
  for (const auto& e : v) {
    if (e.index >= length) throw DimensionMismatch(length, e.index + 1);
    out[e.index] = e.value;
  }
  return out;
}

SparseVector accumulate(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVector out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.empty() && out.back().index == e.index) {
      out.back().value += e.value;
    } else {
      if (!out.empty() && out.back().value.is_zero()) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && out.back().value.is_zero()) out.pop_back();
  return out;
}

SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b) {
  if (factor.is_zero()) return a;
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      out.push_back({b[j].index, factor * b[j].value});
      ++j;
    } else {
      Rational v = a[i].value + factor * b[j].value;
      if (!v.is_zero()) out.push_back({a[i].index, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector scale(const SparseVector& v, const Rational& factor) {
  if (factor.is_zero()) return {};
  SparseVector out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back({e.index, e.value * factor});
  return out;
}

Rational dot(const SparseVector& a, const SparseVector& b) {
  Rational sum;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].index < b[j].index) {
      ++i;
    } else if (b[j].index < a[i].index) {
      ++j;
    } else {
      sum += a[i++].value * b[j++].value;
    }
  }
  return sum;
}

Rational value_at(const SparseVector& v, Index index) {
  auto it = std::lower_bound(v.begin(), v.end(), index, [](const Entry& e, Index i) { return e.index < i; });
  if (it != v.end() && it->index == index) return it->value;
  return {};
}

SparseVector primitive(const SparseVector& v) {
  if (v.empty()) return {};
  mpz_class lcm = 1;
  for (const auto& e : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.value.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class content = 0;
  for (const auto& e : v) {
    mpz_class n = e.value.numerator() * (lcm / e.value.denominator());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    ints.push_back(std::move(n));
  }
  if (sgn(ints.front()) < 0) content = -content;
  SparseVector out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back({v[i].index, Rational(mpq_class(ints[i] / content))});
  }
  return out;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

Matrix::Matrix(std::size_t rows, std::vector<SparseVector> columns) : rows_(rows), columns_(std::move(columns)) {
  for (const auto& col : columns_) {
    for (std::size_t k = 0; k < col.size(); ++k) {
      if (col[k].index >= rows_) throw DimensionMismatch(rows_, col[k].index + 1);
      if (col[k].value.is_zero()) throw InternalError("stored zero in sparse matrix column");
      if (k > 0 && col[k - 1].index >= col[k].index) throw InternalError("unsorted sparse matrix column");
    }
  }
}

Matrix Matrix::identity(std::size_t n) {
  std::vector<SparseVector> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i].push_back({static_cast<Index>(i), Rational(1)});
  return Matrix(n, std::move(cols));
}

Matrix Matrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<SparseVector> cols(c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionMismatch(c, rows[i].size());
    for (std::size_t j = 0; j < c; ++j) {
      if (!rows[i][j].is_zero()) cols[j].push_back({static_cast<Index>(i), rows[i][j]});
    }
  }
  return Matrix(r, std::move(cols));
}

Matrix Matrix::vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t c = blocks.front().cols();
  std::vector<SparseVector> cols(c);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    if (b.cols() != c) throw DimensionMismatch(c, b.cols());
    for (std::size_t j = 0; j < c; ++j) {
      for (const auto& e : b.column(j)) cols[j].push_back({static_cast<Index>(e.index + offset), e.value});
    }
    offset += b.rows();
  }
  return Matrix(offset, std::move(cols));
}

Rational Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_) throw DimensionMismatch(rows_, r + 1);
  return value_at(columns_.at(c), static_cast<Index>(r));
}

std::size_t Matrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

double Matrix::density() const noexcept {
  const double cells = static_cast<double>(rows_) * static_cast<double>(cols());
  return cells == 0 ? 0.0 : static_cast<double>(nonzeros()) / cells;
}

Matrix Matrix::transpose() const {
  std::vector<SparseVector> out(rows_);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& e : columns_[j]) out[e.index].push_back({static_cast<Index>(j), e.value});
  }
  return Matrix(cols(), std::move(out));
}

SparseVector Matrix::apply(const SparseVector& x) const {
  std::vector<Entry> parts;
  for (const auto& e : x) {
    if (e.index >= cols()) throw DimensionMismatch(cols(), e.index + 1);
    for (const auto& a : columns_[e.index]) parts.push_back({a.index, a.value * e.value});
  }
  return accumulate(std::move(parts));
}

std::vector<std::vector<Rational>> Matrix::to_dense() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols()));
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& e : columns_[j]) out[e.index][j] = e.value;
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch(a.cols(), b.rows());
  std::vector<SparseVector> cols;
  cols.reserve(b.cols());
  for (const auto& col : b.columns()) cols.push_back(a.apply(col));
  return Matrix(a.rows(), std::move(cols));
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch(a.rows(), b.rows());
  if (a.cols() != b.cols()) throw DimensionMismatch(a.cols(), b.cols());
  std::vector<SparseVector> cols;
  cols.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(axpy(a.column(j), Rational(1), b.column(j)));
  return Matrix(a.rows(), std::move(cols));
}

// ---------------------------------------------------------------- Echelon

Echelon::Echelon(std::size_t length, bool track)
    : length_(length), track_(track), pivot_row_(length, -1), acc_(length), touched_(length, 0) {}

SparseVector Echelon::reduce_impl(const SparseVector& v, SparseVector* multipliers) const {
  std::priority_queue<Index, std::vector<Index>, std::greater<>> heap;
  std::vector<Index> touched;
  touched.reserve(v.size() * 2);
  for (const auto& e : v) {
    if (e.index >= length_) throw DimensionMismatch(length_, e.index + 1);
    acc_[e.index] = e.value;
    touched_[e.index] = 1;
    touched.push_back(e.index);
    heap.push(e.index);
  }
  SparseVector out;
  while (!heap.empty()) {
    const Index i = heap.top();
    heap.pop();
    Rational& a = acc_[i];
    if (a.is_zero()) continue;
    const std::int32_t r = pivot_row_[i];
    if (r < 0) {
      out.push_back({i, a});
      continue;
    }
    const Rational c = a;
    const auto& row = rows_[static_cast<std::size_t>(r)].values;
    for (std::size_t k = 1; k < row.size(); ++k) {
      const Index idx = row[k].index;
      if (!touched_[idx]) {
        touched_[idx] = 1;
        touched.push_back(idx);
        heap.push(idx);
      }
      acc_[idx] -= c * row[k].value;
    }
    a = Rational();
    if (multipliers != nullptr) multipliers->push_back({static_cast<Index>(r), c});
  }
  for (Index idx : touched) {
    acc_[idx] = Rational();
    touched_[idx] = 0;
  }
  return out;
}

SparseVector Echelon::reduce(const SparseVector& v) const { return reduce_impl(v, nullptr); }

namespace {

// Sum of c_r * combo_r over the multipliers produced by a reduction.
template <typename Rows>
SparseVector combine(const Rows& rows, const SparseVector& multipliers) {
  std::vector<Entry> parts;
  for (const auto& m : multipliers) {
    for (const auto& e : rows[m.index].combo) parts.push_back({e.index, e.value * m.value});
  }
  return accumulate(std::move(parts));
}

}  // namespace

bool Echelon::insert(const SparseVector& v) {
  if (!track_) {
    SparseVector rem = reduce_impl(v, nullptr);
    ++inserted_;
    if (rem.empty()) return false;
    const Rational lead = rem.front().value.inverse();
    for (auto& e : rem) e.value *= lead;
    const Index p = rem.front().index;
    pivot_row_[p] = static_cast<std::int32_t>(rows_.size());
    pivot_order_.push_back(p);
    rows_.push_back({std::move(rem), {}});
    return true;
  }
  return !insert_or_relation(v).has_value();
}

std::optional<SparseVector> Echelon::insert_or_relation(const SparseVector& v) {
  if (!track_) throw InternalError("Echelon::insert_or_relation requires tracking");
  SparseVector mult;
  SparseVector rem = reduce_impl(v, &mult);
  const Index self = static_cast<Index>(inserted_++);
  // v - sum c_r row_r = rem, with row_r = sum combo_r[g] gen_g.
  SparseVector combo = scale(combine(rows_, mult), Rational(-1));
  combo.push_back({self, Rational(1)});
  if (rem.empty()) return combo;
  const Rational lead = rem.front().value.inverse();
  for (auto& e : rem) e.value *= lead;
  for (auto& e : combo) e.value *= lead;
  const Index p = rem.front().index;
  pivot_row_[p] = static_cast<std::int32_t>(rows_.size());
  pivot_order_.push_back(p);
  rows_.push_back({std::move(rem), std::move(combo)});
  return std::nullopt;
}

std::optional<SparseVector> Echelon::express(const SparseVector& v) const {
  if (!track_) throw InternalError("Echelon::express requires tracking");
  SparseVector mult;
  SparseVector rem = reduce_impl(v, &mult);
  if (!rem.empty()) return std::nullopt;
  return combine(rows_, mult);
}

// ---------------------------------------------------------------- rank etc.

std::size_t dense_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t best = rows.size();
    std::size_t best_height = 0;
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const std::size_t h = rows[r][c].height();
      if (best == rows.size() || h < best_height) {
        best = r;
        best_height = h;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[rank], rows[best]);
    const Rational inv = rows[rank][c].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c] * inv;
      for (std::size_t k = c; k < ncols; ++k) {
        if (!rows[rank][k].is_zero()) rows[r][k] -= f * rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

// Inserts `base` and then `extra` into one echelon; returns (rank of base,
// rank increase from extra).
std::pair<std::size_t, std::size_t> sparse_rank_pair(std::span<const SparseVector> base,
                                                     std::span<const SparseVector> extra, std::size_t length) {
  // Relabel coordinates so that the least populated come first; they make
  // the cheapest pivots. Insert short vectors first for the same reason.
  std::vector<std::size_t> count(length, 0);
  for (auto group : {base, extra}) {
    for (const auto& v : group) {
      for (const auto& e : v) {
        if (e.index >= length) throw DimensionMismatch(length, e.index + 1);
        ++count[e.index];
      }
    }
  }
  std::vector<Index> order(length);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return count[a] < count[b]; });
  std::vector<Index> relabel(length);
  for (std::size_t k = 0; k < length; ++k) relabel[order[k]] = static_cast<Index>(k);

  Echelon ech(length);
  auto insert_mapped = [&](const SparseVector& v) {
    std::vector<Entry> mapped;
    mapped.reserve(v.size());
    for (const auto& e : v) mapped.push_back({relabel[e.index], e.value});
    std::sort(mapped.begin(), mapped.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
    return ech.insert(mapped);
  };

  std::vector<std::size_t> by_size(base.size());
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](std::size_t a, std::size_t b) { return base[a].size() < base[b].size(); });
  for (std::size_t k : by_size) {
    if (ech.rank() == length) break;
    if (!base[k].empty()) insert_mapped(base[k]);
  }
  const std::size_t base_rank = ech.rank();
  for (const auto& v : extra) {
    if (ech.rank() == length) break;
    if (!v.empty()) insert_mapped(v);
  }
  return {base_rank, ech.rank() - base_rank};
}

std::size_t sparse_rank(std::span<const SparseVector> vectors, std::size_t length) {
  return sparse_rank_pair(vectors, {}, length).first;
}

}  // namespace

std::size_t extension_rank(std::span<const SparseVector> base, std::span<const SparseVector> extra,
                           std::size_t length) {
  return sparse_rank_pair(base, extra, length).second;
}

std::size_t rank(std::span<const SparseVector> vectors, std::size_t length, const Options& options) {
  std::size_t nnz = 0;
  for (const auto& v : vectors) nnz += v.size();
  const double cells = static_cast<double>(vectors.size()) * static_cast<double>(length);
  if (cells > 0 && static_cast<double>(nnz) / cells >= options.dense_threshold) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) rows.push_back(to_dense(v, length));
    return dense_rank(std::move(rows));
  }
  return sparse_rank(vectors, length);
}

std::size_t rank(const Matrix& m, const Options& options) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.rows() < m.cols()) {
    const Matrix t = m.transpose();
    return rank(std::span<const SparseVector>(t.columns()), t.rows(), options);
  }
  return rank(std::span<const SparseVector>(m.columns()), m.rows(), options);
}

std::vector<SparseVector> kernel_basis(const Matrix& m) {
  std::vector<SparseVector> out;
  Echelon ech(m.rows(), /*track=*/true);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (auto relation = ech.insert_or_relation(m.column(j))) out.push_back(primitive(*relation));
  }
  return out;
}

SolveResult solve_in_span(const SparseVector& target, std::span<const SparseVector> generators,
                          std::size_t length) {
  Echelon ech(length, /*track=*/true);
  for (const auto& g : generators) {
    if (!g.empty() && g.back().index >= length) throw DimensionMismatch(length, g.back().index + 1);
    ech.insert(g);
  }
  if (!target.empty() && target.back().index >= length) throw DimensionMismatch(length, target.back().index + 1);
  SolveResult result;
  auto coeffs = ech.express(target);
  if (!coeffs) return result;
  // Re-substitute; the echelon bookkeeping must reproduce the target exactly.
  std::vector<Entry> parts;
  for (const auto& c : *coeffs) {
    for (const auto& e : generators[c.index]) parts.push_back({e.index, e.value * c.value});
  }
  if (accumulate(std::move(parts)) != target) throw InternalError("solve_in_span re-substitution failed");
  result.status = SolveStatus::kSolved;
  result.coefficients = std::move(*coeffs);
  return result;
}

bool is_negative_definite(const Matrix& symmetric) {
  if (symmetric.rows() != symmetric.cols()) throw DimensionMismatch(symmetric.rows(), symmetric.cols());
  auto a = symmetric.to_dense();
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].sign() >= 0) return false;
    const Rational inv = a[k][k].inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const Rational f = a[i][k] * inv;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

}  // namespace symcoh::linalg
