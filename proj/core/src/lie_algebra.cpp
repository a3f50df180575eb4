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

#include "symcoh/lie_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace symcoh {

namespace {

std::string render(const SparseVector& v) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& e : v) {
    os << (first ? "" : ", ") << e.index << ": " << e.value;
    first = false;
  }
  os << "}";
  return os.str();
}

void check_length(const SparseVector& v, std::size_t dim) {
  if (!v.empty() && v.back().index >= dim) throw DimensionMismatch(dim, v.back().index + 1);
}

bool is_unit(const DenseVector& v, std::size_t* which) {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!v[i].is_one()) return false;
    *which = i;
    ++hits;
  }
  return hits == 1;
}

Matrix columns_matrix(std::size_t rows, const std::vector<DenseVector>& cols) {
  std::vector<SparseVector> out;
  out.reserve(cols.size());
  for (const auto& c : cols) {
    if (c.size() != rows) throw DimensionMismatch(rows, c.size());
    out.push_back(linalg::to_sparse(c));
  }
  return Matrix(rows, std::move(out));
}

}  // namespace

JacobiViolation::JacobiViolation(std::size_t i_, std::size_t j_, std::size_t k_, SparseVector residual_)
    : ValidationError("JacobiViolation", "Jacobi identity fails on basis triple (" + std::to_string(i_) + ", " +
                                             std::to_string(j_) + ", " + std::to_string(k_) +
                                             "), residual " + render(residual_)),
      i(i_),
      j(j_),
      k(k_),
      residual(std::move(residual_)) {}

BracketViolation::BracketViolation(std::string inclusion_, std::size_t first_, std::size_t second_)
    : ValidationError("BracketViolation", "bracket condition " + inclusion_ + " fails on witness pair (" +
                                              std::to_string(first_) + ", " + std::to_string(second_) + ")"),
      inclusion(std::move(inclusion_)),
      first(first_),
      second(second_) {}

LieAlgebra LieAlgebra::create(std::size_t dim, std::vector<std::string> labels, std::vector<BracketSpec> brackets) {
  LieAlgebra g;
  g.dim_ = dim;
  if (labels.empty()) {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("x" + std::to_string(i));
  }
  if (labels.size() != dim) throw DimensionMismatch(dim, labels.size());
  g.labels_ = std::move(labels);
  g.table_.assign(dim * dim, {});
  std::vector<char> seen(dim * dim, 0);
  for (auto& b : brackets) {
    if (b.i >= dim || b.j >= dim) throw DimensionMismatch(dim, std::max(b.i, b.j) + 1);
    check_length(b.result, dim);
    SparseVector r = linalg::accumulate(std::move(b.result));
    if (b.i == b.j) {
      if (!r.empty()) {
        throw ValidationError("AntisymmetryViolation",
                              "bracket [x" + std::to_string(b.i) + ", x" + std::to_string(b.i) + "] must vanish");
      }
      continue;
    }
    const std::size_t fwd = b.i * dim + b.j;
    const std::size_t rev = b.j * dim + b.i;
    SparseVector neg = linalg::scale(r, Rational(-1));
    if (seen[fwd] && g.table_[fwd] != r) {
      throw ValidationError("DuplicateBracket", "conflicting entries for bracket (" + std::to_string(b.i) + ", " +
                                                    std::to_string(b.j) + ")");
    }
    if (seen[rev] && g.table_[rev] != neg) {
      throw ValidationError("AntisymmetryViolation", "bracket (" + std::to_string(b.i) + ", " +
                                                         std::to_string(b.j) + ") is not antisymmetric");
    }
    g.table_[fwd] = std::move(r);
    g.table_[rev] = std::move(neg);
    seen[fwd] = seen[rev] = 1;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      for (std::size_t k = j + 1; k < dim; ++k) {
        SparseVector acc = g.bracket(g.table_[j * dim + k], linalg::SparseVector{{static_cast<Index>(i), 1}});
        acc = linalg::axpy(acc, Rational(1),
                           g.bracket(g.table_[k * dim + i], linalg::SparseVector{{static_cast<Index>(j), 1}}));
        acc = linalg::axpy(acc, Rational(1),
                           g.bracket(g.table_[i * dim + j], linalg::SparseVector{{static_cast<Index>(k), 1}}));
        if (!acc.empty()) throw JacobiViolation(i, j, k, std::move(acc));
      }
    }
  }
  g.index_constants();
  return g;
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return create(dim, {}, {}); }

void LieAlgebra::index_constants() {
  by_result_.assign(dim_, {});
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      for (const auto& e : table_[i * dim_ + j]) {
        by_result_[e.index].push_back({static_cast<Index>(i), static_cast<Index>(j), e.index, e.value});
      }
    }
  }
}

SparseVector LieAlgebra::bracket(const SparseVector& x, const SparseVector& y) const {
  check_length(x, dim_);
  check_length(y, dim_);
  std::vector<linalg::Entry> out;
  for (const auto& a : x) {
    for (const auto& b : y) {
      if (a.index == b.index) continue;
      const Rational f = a.value * b.value;
      for (const auto& c : table_[a.index * dim_ + b.index]) out.push_back({c.index, f * c.value});
    }
  }
  return linalg::accumulate(std::move(out));
}

DenseVector LieAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != dim_) throw DimensionMismatch(dim_, x.size());
  if (y.size() != dim_) throw DimensionMismatch(dim_, y.size());
  return linalg::to_dense(bracket(linalg::to_sparse(x), linalg::to_sparse(y)), dim_);
}

std::vector<LieAlgebra::BracketSpec> LieAlgebra::bracket_specs() const {
  std::vector<BracketSpec> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (!table_[i * dim_ + j].empty()) {
        out.push_back({static_cast<Index>(i), static_cast<Index>(j), table_[i * dim_ + j]});
      }
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const noexcept {
  return std::all_of(table_.begin(), table_.end(), [](const SparseVector& v) { return v.empty(); });
}

Matrix LieAlgebra::ad(std::size_t i) const {
  std::vector<SparseVector> cols(dim_);
  for (std::size_t j = 0; j < dim_; ++j) cols[j] = table_[i * dim_ + j];
  return Matrix(dim_, std::move(cols));
}

Matrix LieAlgebra::killing_form() const {
  std::vector<std::vector<Rational>> out(dim_, std::vector<Rational>(dim_));
  // B(x_i, x_j) = sum_{a,b} c_{ib}^a c_{ja}^b
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      Rational s;
      for (std::size_t b = 0; b < dim_; ++b) {
        for (const auto& e : table_[i * dim_ + b]) {
          const Rational v = linalg::value_at(table_[j * dim_ + e.index], static_cast<Index>(b));
          if (!v.is_zero()) s += e.value * v;
        }
      }
      out[i][j] = s;
      out[j][i] = s;
    }
  }
  return Matrix::from_dense(out);
}

bool LieAlgebra::is_semisimple() const {
  if (dim_ == 0) return true;
  return linalg::dense_rank(killing_form().to_dense()) == dim_;
}

LieAlgebra LieAlgebra::change_basis(const Matrix& basis, std::vector<std::string> labels) const {
  if (basis.rows() != dim_ || basis.cols() != dim_) throw DimensionMismatch(dim_, basis.cols());
  const Matrix inv = invert(basis);
  std::vector<BracketSpec> specs;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      SparseVector r = inv.apply(bracket(basis.column(i), basis.column(j)));
      if (!r.empty()) specs.push_back({static_cast<Index>(i), static_cast<Index>(j), std::move(r)});
    }
  }
  return create(dim_, std::move(labels), std::move(specs));
}

CoefficientModule CoefficientModule::trivial(const LieAlgebra& g, std::size_t dim) {
  CoefficientModule m;
  m.dim_ = dim;
  m.trivial_ = true;
  m.action_.assign(g.dim(), Matrix(dim, dim));
  return m;
}

CoefficientModule CoefficientModule::create(const LieAlgebra& g, std::vector<Matrix> action) {
  if (action.size() != g.dim()) throw DimensionMismatch(g.dim(), action.size());
  CoefficientModule m;
  m.dim_ = action.empty() ? 1 : action.front().rows();
  for (const auto& a : action) {
    if (a.rows() != m.dim_ || a.cols() != m.dim_) throw DimensionMismatch(m.dim_, a.cols());
  }
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Matrix lhs(m.dim_, m.dim_);
      for (const auto& e : g.bracket_basis(i, j)) {
        std::vector<SparseVector> cols(m.dim_);
        for (std::size_t c = 0; c < m.dim_; ++c) cols[c] = linalg::scale(action[e.index].column(c), e.value);
        lhs = lhs + Matrix(m.dim_, std::move(cols));
      }
      Matrix ab = action[i] * action[j];
      Matrix ba = action[j] * action[i];
      std::vector<SparseVector> cols(m.dim_);
      for (std::size_t c = 0; c < m.dim_; ++c) {
        cols[c] = linalg::axpy(ab.column(c), Rational(-1), ba.column(c));
      }
      if (!(lhs == Matrix(m.dim_, std::move(cols)))) {
        throw ValidationError("NotAModule", "action does not respect the bracket of basis elements " +
                                                std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
  m.trivial_ = std::all_of(action.begin(), action.end(), [](const Matrix& a) { return a.is_zero(); });
  m.action_ = std::move(action);
  return m;
}

CoefficientModule CoefficientModule::change_basis(const Matrix& basis) const {
  CoefficientModule m;
  m.dim_ = dim_;
  m.trivial_ = trivial_;
  m.action_.assign(basis.cols(), Matrix(dim_, dim_));
  if (trivial_) return m;
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    for (const auto& e : basis.column(j)) {
      std::vector<SparseVector> cols(dim_);
      for (std::size_t c = 0; c < dim_; ++c) cols[c] = linalg::scale(action_[e.index].column(c), e.value);
      m.action_[j] = m.action_[j] + Matrix(dim_, std::move(cols));
    }
  }
  return m;
}

Matrix invert(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionMismatch(n, m.cols());
  auto a = m.to_dense();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw ValidationError("Singular", "matrix is not invertible");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Rational f = a[c][c].inverse();
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] *= f;
      inv[c][k] *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Rational g = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        if (!a[c][k].is_zero()) a[r][k] -= g * a[c][k];
        if (!inv[c][k].is_zero()) inv[r][k] -= g * inv[c][k];
      }
    }
  }
  return Matrix::from_dense(inv);
}

DenseVector unit_vector(std::size_t dim, std::size_t i) {
  DenseVector v(dim);
  v.at(i) = Rational(1);
  return v;
}

CartanDecomposition validate_decomposition(const LieAlgebra& g, std::vector<DenseVector> k_basis,
                                           std::vector<DenseVector> p_basis) {
  const std::size_t n = g.dim();
  if (k_basis.size() + p_basis.size() != n) {
    throw NotComplementary("k and p have dimensions " + std::to_string(k_basis.size()) + " and " +
                           std::to_string(p_basis.size()) + " but g has dimension " + std::to_string(n));
  }
  std::vector<DenseVector> all = k_basis;
  all.insert(all.end(), p_basis.begin(), p_basis.end());
  const Matrix change = columns_matrix(n, all);
  if (linalg::rank(change) != n) throw NotComplementary("k and p do not span g");

  CartanDecomposition d;
  std::vector<std::string> labels;
  bool identity = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t which = 0;
    if (is_unit(all[i], &which)) {
      labels.push_back(g.labels()[which]);
      identity = identity && which == i;
    } else {
      labels.push_back((i < k_basis.size() ? "k" + std::to_string(i) : "p" + std::to_string(i - k_basis.size())));
      identity = false;
    }
  }
  d.adapted_ = g.change_basis(change, labels);
  const std::size_t dk = k_basis.size();
  auto in_k = [&](const SparseVector& v) { return v.empty() || v.back().index < dk; };
  auto in_p = [&](const SparseVector& v) { return v.empty() || v.front().index >= dk; };
  for (std::size_t i = 0; i < dk; ++i) {
    for (std::size_t j = i + 1; j < dk; ++j) {
      if (!in_k(d.adapted_.bracket_basis(i, j))) throw BracketViolation("[k,k]<=k", i, j);
    }
  }
  for (std::size_t i = dk; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!in_k(d.adapted_.bracket_basis(i, j))) throw BracketViolation("[p,p]<=k", i - dk, j - dk);
    }
  }
  for (std::size_t i = 0; i < dk; ++i) {
    for (std::size_t j = dk; j < n; ++j) {
      if (!in_p(d.adapted_.bracket_basis(i, j))) throw BracketViolation("[k,p]<=p", i, j - dk);
    }
  }
  d.parent_ = g;
  d.k_basis_ = std::move(k_basis);
  d.p_basis_ = std::move(p_basis);
  d.change_ = change;
  d.change_inverse_ = invert(change);
  std::vector<SparseVector> kcols(n), pcols(n);
  for (std::size_t i = 0; i < n; ++i) (i < dk ? kcols : pcols)[i] = SparseVector{{static_cast<Index>(i), 1}};
  d.pi_k_ = change * Matrix(n, std::move(kcols)) * d.change_inverse_;
  d.pi_p_ = change * Matrix(n, std::move(pcols)) * d.change_inverse_;
  d.identity_ = identity;
  d.semisimple_ = g.is_semisimple();
  return d;
}

CartanDecomposition decomposition_from_indices(const LieAlgebra& g, std::span<const std::size_t> k_indices,
                                               std::span<const std::size_t> p_indices) {
  std::vector<DenseVector> k, p;
  for (auto i : k_indices) k.push_back(unit_vector(g.dim(), i));
  for (auto i : p_indices) p.push_back(unit_vector(g.dim(), i));
  return validate_decomposition(g, std::move(k), std::move(p));
}

LieAlgebra CartanDecomposition::k_algebra() const {
  const std::size_t dk = k_dim();
  std::vector<LieAlgebra::BracketSpec> specs;
  for (std::size_t i = 0; i < dk; ++i) {
    for (std::size_t j = i + 1; j < dk; ++j) {
      const auto& r = adapted_.bracket_basis(i, j);
      if (!r.empty()) specs.push_back({static_cast<Index>(i), static_cast<Index>(j), r});
    }
  }
  std::vector<std::string> labels(adapted_.labels().begin(), adapted_.labels().begin() + static_cast<long>(dk));
  return LieAlgebra::create(dk, std::move(labels), std::move(specs));
}

LieAlgebra compact_dual(const CartanDecomposition& dec) {
  if (!dec.parent_semisimple()) throw NotSemisimple("compact dual");
  const LieAlgebra& a = dec.adapted();
  const std::size_t dk = dec.k_dim();
  auto specs = a.bracket_specs();
  for (auto& s : specs) {
    if (s.i >= dk && s.j >= dk) s.result = linalg::scale(s.result, Rational(-1));
  }
  return LieAlgebra::create(a.dim(), a.labels(), std::move(specs));
}

}  // namespace symcoh
