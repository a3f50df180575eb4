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

#include "symcoh/complex.hpp"

#include <algorithm>

#include "parallel.hpp"

namespace symcoh {

using linalg::Entry;

SubspaceBasis SubspaceBasis::identity(std::size_t length) {
  SubspaceBasis b;
  b.length_ = length;
  b.identity_ = true;
  return b;
}

SubspaceBasis SubspaceBasis::from_kernel(std::size_t length, std::vector<SparseVector> vectors) {
  SubspaceBasis b;
  b.length_ = length;
  b.identity_ = false;
  for (const auto& v : vectors) {
    if (v.empty()) throw InternalError("zero vector in subspace basis");
    b.readoff_.push_back(v.back().index);
  }
  b.vectors_ = std::move(vectors);
  return b;
}

SparseVector SubspaceBasis::vector(std::size_t i) const {
  if (identity_) return {{static_cast<Index>(i), Rational(1)}};
  return vectors_.at(i);
}

SparseVector SubspaceBasis::expand(const SparseVector& coords) const {
  if (identity_) return coords;
  std::vector<Entry> parts;
  for (const auto& c : coords) {
    for (const auto& e : vectors_.at(c.index)) parts.push_back({e.index, e.value * c.value});
  }
  return linalg::accumulate(std::move(parts));
}

std::optional<SparseVector> SubspaceBasis::coordinates(const SparseVector& w) const {
  if (!w.empty() && w.back().index >= length_) throw DimensionMismatch(length_, w.back().index + 1);
  if (identity_) return w;
  SparseVector coords;
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    const Rational x = linalg::value_at(w, readoff_[i]);
    if (x.is_zero()) continue;
    coords.push_back({static_cast<Index>(i), x / linalg::value_at(vectors_[i], readoff_[i])});
  }
  if (expand(coords) != w) return std::nullopt;
  return coords;
}

std::size_t CochainComplex::dim(std::size_t n) const {
  if (n >= data_->bases.size()) return 0;
  return data_->bases[n].size();
}

Cochain CochainComplex::to_horizontal(std::size_t n, const SparseVector& coords) const {
  Cochain c = Cochain::zero(horizontal_dim(), n, module().dim());
  if (n < data_->bases.size()) c.coords = data_->bases[n].expand(coords);
  return c;
}

std::optional<SparseVector> CochainComplex::from_horizontal(const Cochain& omega) const {
  if (omega.algebra_dim != horizontal_dim()) throw DimensionMismatch(horizontal_dim(), omega.algebra_dim);
  if (omega.degree >= data_->bases.size()) {
    if (omega.is_zero()) return SparseVector{};
    return std::nullopt;
  }
  return data_->bases[omega.degree].coordinates(omega.coords);
}

Cochain CochainComplex::to_ambient(std::size_t n, const SparseVector& coords) const {
  const Cochain h = to_horizontal(n, coords);
  const std::size_t dim = data_->adapted.dim();
  const std::size_t ma = module().dim();
  if (data_->h_dim == 0 && data_->identity_change) {
    Cochain c = h;
    return c;
  }
  const auto& local = exterior_index(horizontal_dim(), n);
  const auto& full = exterior_index(dim, n);
  std::vector<Entry> parts;
  parts.reserve(h.coords.size());
  for (const auto& e : h.coords) {
    const Mask m = local.subset(e.index / ma) << data_->h_dim;
    parts.push_back({static_cast<Index>(full.rank(m) * ma + e.index % ma), e.value});
  }
  Cochain adapted = Cochain::zero(dim, n, ma);
  adapted.coords = linalg::accumulate(std::move(parts));
  if (data_->identity_change) return adapted;
  return pullback(adapted, data_->change_inverse);
}

std::optional<SparseVector> CochainComplex::from_ambient(const Cochain& omega) const {
  const std::size_t dim = data_->adapted.dim();
  if (omega.algebra_dim != dim) throw DimensionMismatch(dim, omega.algebra_dim);
  if (omega.module_dim != module().dim()) throw DimensionMismatch(module().dim(), omega.module_dim);
  const Cochain adapted = data_->identity_change ? omega : pullback(omega, data_->change);
  const std::size_t n = omega.degree;
  const std::size_t ma = module().dim();
  const Mask h_mask = data_->h_dim == 0 ? 0 : ((Mask{1} << data_->h_dim) - 1);
  const auto& full = exterior_index(dim, n);
  Cochain h = Cochain::zero(horizontal_dim(), n, ma);
  if (n <= horizontal_dim()) {
    const auto& local = exterior_index(horizontal_dim(), n);
    std::vector<Entry> parts;
    for (const auto& e : adapted.coords) {
      const Mask m = full.subset(e.index / ma);
      if (m & h_mask) return std::nullopt;
      parts.push_back({static_cast<Index>(local.rank(m >> data_->h_dim) * ma + e.index % ma), e.value});
    }
    h.coords = linalg::accumulate(std::move(parts));
  } else if (!adapted.is_zero()) {
    return std::nullopt;
  }
  return from_horizontal(h);
}

namespace {

CochainComplex build(const LieAlgebra& g, std::span<const DenseVector> h_basis, const CoefficientModule& module,
                     std::size_t max_degree, const ComputeOptions& options) {
  const std::size_t dim = g.dim();
  if (dim > kMaxAlgebraDim) throw SizeLimit(dim, kMaxAlgebraDim);
  if (module.actions().size() != dim) throw DimensionMismatch(dim, module.actions().size());
  auto data = std::make_shared<CochainComplex::Data>();
  data->algebra = g;
  data->module = module;
  data->h_dim = h_basis.size();

  linalg::Echelon span(dim);
  std::vector<DenseVector> adapted_basis;
  std::vector<std::string> labels;
  bool identity = true;
  for (std::size_t i = 0; i < h_basis.size(); ++i) {
    const auto& v = h_basis[i];
    if (v.size() != dim) throw DimensionMismatch(dim, v.size());
    if (!span.insert(linalg::to_sparse(v))) {
      throw ValidationError("DependentBasis", "subalgebra basis vectors are linearly dependent");
    }
    identity = identity && v == unit_vector(dim, i);
    adapted_basis.push_back(v);
    labels.push_back(identity ? g.labels()[i] : "h" + std::to_string(i));
  }
  for (std::size_t i = 0; i < dim && adapted_basis.size() < dim; ++i) {
    if (span.insert(SparseVector{{static_cast<Index>(i), Rational(1)}})) {
      identity = identity && i == adapted_basis.size();
      adapted_basis.push_back(unit_vector(dim, i));
      labels.push_back(g.labels()[i]);
    }
  }
  data->identity_change = identity;
  if (identity) {
    data->adapted = g;
    data->adapted_module = module;
    data->change = Matrix::identity(dim);
    data->change_inverse = Matrix::identity(dim);
  } else {
    std::vector<SparseVector> cols;
    for (const auto& v : adapted_basis) cols.push_back(linalg::to_sparse(v));
    data->change = Matrix(dim, std::move(cols));
    data->change_inverse = invert(data->change);
    data->adapted = g.change_basis(data->change, labels);
    data->adapted_module = module.change_basis(data->change);
  }
  const std::size_t dh = data->h_dim;
  for (std::size_t i = 0; i < dh; ++i) {
    for (std::size_t j = i + 1; j < dh; ++j) {
      const auto& r = data->adapted.bracket_basis(i, j);
      if (!r.empty() && r.back().index >= dh) throw NotASubalgebra(i, j);
    }
  }

  const std::size_t m = dim - dh;
  const std::size_t ma = module.dim();
  const std::size_t top = std::min(max_degree, m);
  for (std::size_t n = 0; n <= top + 1 && n <= m; ++n) {
    const std::size_t size = binomial(m, n) * ma;
    if (size > options.max_exterior_dim) throw SizeLimit(size, options.max_exterior_dim);
  }

  data->bases.resize(top + 2);
  detail::parallel_for(top + 2, options.threads, [&](std::size_t n) {
    const std::size_t length = binomial(m, n) * ma;
    if (dh == 0 || length == 0) {
      data->bases[n] = SubspaceBasis::identity(length);
      return;
    }
    std::vector<Matrix> blocks;
    for (std::size_t j = 0; j < dh; ++j) {
      blocks.push_back(detail::lie_derivative_matrix(data->adapted, data->adapted_module, j, n, dh));
    }
    const Matrix stacked = Matrix::vstack(blocks);
    data->bases[n] = SubspaceBasis::from_kernel(length, linalg::kernel_basis(stacked));
  });

  data->differentials.resize(top + 1);
  detail::parallel_for(top + 1, options.threads, [&](std::size_t n) {
    const Matrix raw = detail::differential_matrix(data->adapted, data->adapted_module, n, dh);
    const auto& src = data->bases[n];
    const auto& dst = data->bases[n + 1];
    if (src.is_identity() && dst.is_identity()) {
      data->differentials[n] = raw;
      return;
    }
    std::vector<SparseVector> cols(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      auto coords = dst.coordinates(raw.apply(src.vector(i)));
      if (!coords) throw InternalError("relative complex is not closed under the differential");
      cols[i] = std::move(*coords);
    }
    data->differentials[n] = Matrix(dst.size(), std::move(cols));
  });
  return CochainComplex(std::move(data));
}

}  // namespace

CochainComplex full_complex(const LieAlgebra& g, const CoefficientModule& module, std::size_t max_degree,
                            const ComputeOptions& options) {
  return build(g, {}, module, max_degree, options);
}

CochainComplex relative_complex(const LieAlgebra& g, std::span<const DenseVector> h_basis,
                                const CoefficientModule& module, std::size_t max_degree,
                                const ComputeOptions& options) {
  return build(g, h_basis, module, max_degree, options);
}

}  // namespace symcoh
