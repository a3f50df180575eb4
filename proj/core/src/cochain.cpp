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

#include "symcoh/cochain.hpp"

#include <functional>
#include <utility>

namespace symcoh {

using linalg::Entry;

namespace {

void check_compatible(const Cochain& a, const Cochain& b) {
  if (a.algebra_dim != b.algebra_dim) throw DimensionMismatch(a.algebra_dim, b.algebra_dim);
  if (a.degree != b.degree) throw DimensionMismatch(a.degree, b.degree);
  if (a.module_dim != b.module_dim) throw DimensionMismatch(a.module_dim, b.module_dim);
}

Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const Rational inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const Rational f = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) {
        if (!a[c][k].is_zero()) a[r][k] -= f * a[c][k];
      }
    }
  }
  return det;
}

Cochain apply_matrix(const Matrix& m, const Cochain& omega, std::size_t degree) {
  Cochain out;
  out.algebra_dim = omega.algebra_dim;
  out.degree = degree;
  out.module_dim = omega.module_dim;
  out.coords = m.apply(omega.coords);
  return out;
}

Matrix combine(std::span<const Rational> y, std::size_t rows, std::size_t cols,
               const std::function<Matrix(std::size_t)>& basis_matrix) {
  Matrix acc(rows, cols);
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y[j].is_zero()) continue;
    const Matrix mj = basis_matrix(j);
    std::vector<linalg::SparseVector> scaled;
    scaled.reserve(mj.cols());
    for (const auto& c : mj.columns()) scaled.push_back(linalg::scale(c, y[j]));
    acc = acc + Matrix(rows, std::move(scaled));
  }
  return acc;
}

}  // namespace

Cochain Cochain::zero(std::size_t algebra_dim, std::size_t degree, std::size_t module_dim) {
  Cochain c;
  c.algebra_dim = algebra_dim;
  c.degree = degree;
  c.module_dim = module_dim;
  return c;
}

Cochain Cochain::constant(std::size_t algebra_dim, const Rational& value) {
  Cochain c = zero(algebra_dim, 0);
  if (!value.is_zero()) c.coords.push_back({0, value});
  return c;
}

Cochain Cochain::basis_form(std::size_t algebra_dim, Mask subset, const Rational& value) {
  const std::size_t n = static_cast<std::size_t>(std::popcount(subset));
  Cochain c = zero(algebra_dim, n);
  if (!value.is_zero()) {
    c.coords.push_back({static_cast<linalg::Index>(exterior_index(algebra_dim, n).rank(subset)), value});
  }
  return c;
}

Cochain Cochain::linear(std::span<const Rational> coefficients) {
  Cochain c = zero(coefficients.size(), 1);
  c.coords = linalg::to_sparse(coefficients);
  return c;
}

std::size_t Cochain::length() const { return binomial(algebra_dim, degree) * module_dim; }

Rational Cochain::value(Mask subset, std::size_t component) const {
  if (static_cast<std::size_t>(std::popcount(subset)) != degree) return Rational(0);
  const std::size_t r = exterior_index(algebra_dim, degree).rank(subset);
  return linalg::value_at(coords, static_cast<linalg::Index>(r * module_dim + component));
}

Cochain& Cochain::operator+=(const Cochain& rhs) {
  check_compatible(*this, rhs);
  coords = linalg::axpy(coords, Rational(1), rhs.coords);
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& rhs) {
  check_compatible(*this, rhs);
  coords = linalg::axpy(coords, Rational(-1), rhs.coords);
  return *this;
}

Cochain operator*(const Rational& s, const Cochain& c) {
  Cochain out = c;
  out.coords = linalg::scale(c.coords, s);
  return out;
}

Rational evaluate(const Cochain& omega, std::span<const DenseVector> args, std::size_t component) {
  if (args.size() != omega.degree) throw DimensionMismatch(omega.degree, args.size());
  for (const auto& v : args) {
    if (v.size() != omega.algebra_dim) throw DimensionMismatch(omega.algebra_dim, v.size());
  }
  const auto& index = exterior_index(omega.algebra_dim, omega.degree);
  Rational total;
  for (const auto& e : omega.coords) {
    if (e.index % omega.module_dim != component) continue;
    const auto elems = elements(index.subset(e.index / omega.module_dim));
    std::vector<std::vector<Rational>> m(args.size(), std::vector<Rational>(args.size()));
    for (std::size_t r = 0; r < args.size(); ++r) {
      for (std::size_t s = 0; s < elems.size(); ++s) m[r][s] = args[r][elems[s]];
    }
    total += e.value * determinant(std::move(m));
  }
  return total;
}

namespace detail {

Matrix differential_matrix(const LieAlgebra& g, const CoefficientModule& module, std::size_t n,
                           std::size_t offset) {
  const std::size_t m = g.dim() - offset;
  const std::size_t ma = module.dim();
  const auto& src = exterior_index(m, n);
  const std::size_t rows = binomial(m, n + 1) * ma;
  std::vector<linalg::SparseVector> cols(src.size() * ma);
  if (n + 1 > m) return Matrix(rows, std::move(cols));
  const auto& dst = exterior_index(m, n + 1);
  std::vector<Entry> scratch;
  std::vector<std::pair<std::size_t, Rational>> base;  // (target subset rank, coefficient)
  for (std::size_t r = 0; r < src.size(); ++r) {
    const Mask subset = src.subset(r);
    base.clear();
    for (Mask rest_bits = subset; rest_bits != 0; rest_bits &= rest_bits - 1) {
      const unsigned k = static_cast<unsigned>(std::countr_zero(rest_bits));
      const int pk = position(subset, k);
      const Mask rest = subset & ~(Mask{1} << k);
      for (const auto& c : g.constants_with_result(k + offset)) {
        if (c.i < offset || c.j < offset) continue;
        const unsigned a = c.i - static_cast<unsigned>(offset);
        const unsigned b = c.j - static_cast<unsigned>(offset);
        const Mask ab = (Mask{1} << a) | (Mask{1} << b);
        if (rest & ab) continue;
        const Mask target = rest | ab;
        const int s = parity_sign(position(target, a) + position(target, b) + pk);
        base.emplace_back(dst.rank(target), s > 0 ? c.value : -c.value);
      }
    }
    for (std::size_t beta = 0; beta < ma; ++beta) {
      scratch.clear();
      for (const auto& [row, v] : base) scratch.push_back({static_cast<linalg::Index>(row * ma + beta), v});
      if (!module.is_trivial()) {
        for (unsigned j = 0; j < m; ++j) {
          if (subset & (Mask{1} << j)) continue;
          const Mask target = subset | (Mask{1} << j);
          const int s = parity_sign(position(target, j));
          const std::size_t row = dst.rank(target);
          for (const auto& e : module.action(j + offset).column(beta)) {
            scratch.push_back({static_cast<linalg::Index>(row * ma + e.index), s > 0 ? e.value : -e.value});
          }
        }
      }
      cols[r * ma + beta] = linalg::accumulate(scratch);
    }
  }
  return Matrix(rows, std::move(cols));
}

Matrix lie_derivative_matrix(const LieAlgebra& g, const CoefficientModule& module, std::size_t j,
                             std::size_t n, std::size_t offset) {
  const std::size_t m = g.dim() - offset;
  const std::size_t ma = module.dim();
  const auto& idx = exterior_index(m, n);
  // into[t] lists (k, c) with [x_k, x_j] having coefficient c on x_t (local indices).
  std::vector<std::vector<std::pair<unsigned, Rational>>> into(m);
  for (unsigned k = 0; k < m; ++k) {
    for (const auto& e : g.bracket_basis(k + offset, j)) {
      if (e.index < offset) continue;
      into[e.index - offset].emplace_back(k, e.value);
    }
  }
  std::vector<linalg::SparseVector> cols(idx.size() * ma);
  std::vector<Entry> scratch;
  std::vector<std::pair<std::size_t, Rational>> base;
  for (std::size_t r = 0; r < idx.size(); ++r) {
    const Mask subset = idx.subset(r);
    base.clear();
    for (Mask bits = subset; bits != 0; bits &= bits - 1) {
      const unsigned t = static_cast<unsigned>(std::countr_zero(bits));
      const int q = position(subset, t);
      const Mask rest = subset & ~(Mask{1} << t);
      for (const auto& [k, c] : into[t]) {
        if (rest & (Mask{1} << k)) continue;
        const Mask target = rest | (Mask{1} << k);
        const int s = parity_sign(position(target, k) - q);
        base.emplace_back(idx.rank(target), s > 0 ? c : -c);
      }
    }
    for (std::size_t beta = 0; beta < ma; ++beta) {
      scratch.clear();
      for (const auto& [row, v] : base) scratch.push_back({static_cast<linalg::Index>(row * ma + beta), v});
      if (!module.is_trivial()) {
        for (const auto& e : module.action(j).column(beta)) {
          scratch.push_back({static_cast<linalg::Index>(r * ma + e.index), e.value});
        }
      }
      cols[r * ma + beta] = linalg::accumulate(scratch);
    }
  }
  return Matrix(idx.size() * ma, std::move(cols));
}

Matrix insertion_matrix(std::size_t dim, std::size_t module_dim, std::size_t j, std::size_t n) {
  if (n == 0) throw DegreeZero();
  const auto& src = exterior_index(dim, n);
  const auto& dst = exterior_index(dim, n - 1);
  std::vector<linalg::SparseVector> cols(src.size() * module_dim);
  for (std::size_t r = 0; r < src.size(); ++r) {
    const Mask subset = src.subset(r);
    if (!(subset & (Mask{1} << j))) continue;
    const Mask target = subset & ~(Mask{1} << j);
    const Rational s(parity_sign(position(subset, static_cast<unsigned>(j))));
    const std::size_t row = dst.rank(target);
    for (std::size_t beta = 0; beta < module_dim; ++beta) {
      cols[r * module_dim + beta] = {{static_cast<linalg::Index>(row * module_dim + beta), s}};
    }
  }
  return Matrix(dst.size() * module_dim, std::move(cols));
}

}  // namespace detail

Matrix ce_differential(const LieAlgebra& g, const CoefficientModule& module, std::size_t n) {
  return detail::differential_matrix(g, module, n, 0);
}

Cochain apply_differential(const LieAlgebra& g, const CoefficientModule& module, const Cochain& omega) {
  if (omega.algebra_dim != g.dim()) throw DimensionMismatch(g.dim(), omega.algebra_dim);
  if (omega.module_dim != module.dim()) throw DimensionMismatch(module.dim(), omega.module_dim);
  return apply_matrix(ce_differential(g, module, omega.degree), omega, omega.degree + 1);
}

Cochain insertion(std::span<const Rational> y, const Cochain& omega) {
  if (omega.degree == 0) throw DegreeZero();
  if (y.size() != omega.algebra_dim) throw DimensionMismatch(omega.algebra_dim, y.size());
  const std::size_t rows = binomial(omega.algebra_dim, omega.degree - 1) * omega.module_dim;
  const Matrix m = combine(y, rows, omega.length(), [&](std::size_t j) {
    return detail::insertion_matrix(omega.algebra_dim, omega.module_dim, j, omega.degree);
  });
  return apply_matrix(m, omega, omega.degree - 1);
}

Cochain lie_derivative(const LieAlgebra& g, const CoefficientModule& module, std::span<const Rational> y,
                       const Cochain& omega) {
  if (y.size() != g.dim()) throw DimensionMismatch(g.dim(), y.size());
  if (omega.algebra_dim != g.dim()) throw DimensionMismatch(g.dim(), omega.algebra_dim);
  if (omega.module_dim != module.dim()) throw DimensionMismatch(module.dim(), omega.module_dim);
  const Matrix m = combine(y, omega.length(), omega.length(), [&](std::size_t j) {
    return detail::lie_derivative_matrix(g, module, j, omega.degree, 0);
  });
  return apply_matrix(m, omega, omega.degree);
}

Cochain cup_product(const Cochain& a, const Cochain& b) {
  if (a.module_dim != 1 || b.module_dim != 1) throw NonTrivialCoefficients("cup product");
  if (a.algebra_dim != b.algebra_dim) throw DimensionMismatch(a.algebra_dim, b.algebra_dim);
  const std::size_t dim = a.algebra_dim;
  Cochain out = Cochain::zero(dim, a.degree + b.degree);
  if (out.degree > dim || a.is_zero() || b.is_zero()) return out;
  const auto& ia = exterior_index(dim, a.degree);
  const auto& ib = exterior_index(dim, b.degree);
  const auto& io = exterior_index(dim, out.degree);
  std::vector<Entry> acc;
  for (const auto& ea : a.coords) {
    const Mask ma = ia.subset(ea.index);
    for (const auto& eb : b.coords) {
      const Mask mb = ib.subset(eb.index);
      if (ma & mb) continue;
      const Rational v = ea.value * eb.value;
      acc.push_back({static_cast<linalg::Index>(io.rank(ma | mb)), shuffle_sign(ma, mb) > 0 ? v : -v});
    }
  }
  out.coords = linalg::accumulate(std::move(acc));
  return out;
}

Cochain pullback(const Cochain& omega, const Matrix& basis) {
  if (basis.rows() != omega.algebra_dim) throw DimensionMismatch(omega.algebra_dim, basis.rows());
  const std::size_t new_dim = basis.cols();
  const Matrix rows = basis.transpose();  // column i = the 1-form e^i composed with basis
  std::vector<Cochain> one_forms;
  one_forms.reserve(omega.algebra_dim);
  for (std::size_t i = 0; i < omega.algebra_dim; ++i) {
    Cochain f = Cochain::zero(new_dim, 1);
    f.coords = rows.column(i);
    one_forms.push_back(std::move(f));
  }
  const auto& index = exterior_index(omega.algebra_dim, omega.degree);
  const std::size_t ma = omega.module_dim;
  std::vector<Entry> acc;
  for (const auto& e : omega.coords) {
    const std::size_t component = e.index % ma;
    Cochain product = Cochain::constant(new_dim, e.value);
    for (unsigned i : elements(index.subset(e.index / ma))) {
      product = cup_product(product, one_forms[i]);
      if (product.is_zero()) break;
    }
    for (const auto& p : product.coords) {
      acc.push_back({static_cast<linalg::Index>(p.index * ma + component), p.value});
    }
  }
  Cochain out = Cochain::zero(new_dim, omega.degree, ma);
  out.coords = linalg::accumulate(std::move(acc));
  return out;
}

}  // namespace symcoh
