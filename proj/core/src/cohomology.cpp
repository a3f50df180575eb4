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

#include <algorithm>
#include <functional>

#include "parallel.hpp"
#include "symcoh/complex.hpp"

namespace symcoh {

using linalg::Entry;

namespace {

Matrix reverse_columns(const Matrix& m) {
  std::vector<SparseVector> cols(m.columns().rbegin(), m.columns().rend());
  return Matrix(m.rows(), std::move(cols));
}

SparseVector reverse_indices(const SparseVector& v, std::size_t length) {
  SparseVector out;
  out.reserve(v.size());
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    out.push_back({static_cast<Index>(length - 1 - it->index), it->value});
  }
  return out;
}

}  // namespace

std::vector<std::size_t> CohomologyResult::betti_numbers() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees_) out.push_back(d.betti);
  return out;
}

const std::vector<SparseVector>& CohomologyResult::representatives(std::size_t n) const {
  if (!has_representatives(n)) throw InternalError("representatives not computed in degree " + std::to_string(n));
  return degrees_[n].representatives;
}

Cochain CohomologyResult::representative(std::size_t n, std::size_t i) const {
  return complex_.to_ambient(n, representatives(n).at(i));
}

std::optional<DenseVector> CohomologyResult::class_coordinates(std::size_t n, const SparseVector& coords) const {
  if (!has_representatives(n)) throw InternalError("representatives not computed in degree " + std::to_string(n));
  const auto& deg = degrees_[n];
  if (n <= complex_.top_degree() && !complex_.differential(n).apply(coords).empty()) return std::nullopt;
  DenseVector out(deg.betti);
  const SparseVector rem = deg.boundaries->reduce(coords);
  if (rem.empty()) return out;
  auto expr = deg.classes->express(rem);
  if (!expr) throw InternalError("cocycle outside the span of representatives in degree " + std::to_string(n));
  for (const auto& e : *expr) out[e.index] = e.value;
  return out;
}

std::optional<DenseVector> CohomologyResult::class_of(const Cochain& omega) const {
  auto coords = complex_.from_ambient(omega);
  if (!coords) return std::nullopt;
  return class_coordinates(omega.degree, *coords);
}

CohomologyResult cohomology(const CochainComplex& complex, std::size_t max_degree,
                            const CohomologyOptions& options) {
  const std::size_t top = complex.top_degree();
  if (max_degree > top && top < complex.horizontal_dim()) {
    throw ValidationError("DegreeOutOfRange", "complex was built only through degree " + std::to_string(top));
  }
  const std::size_t last = std::min(max_degree, top);
  std::vector<CohomologyResult::Degree> degrees(max_degree + 1);
  std::vector<std::vector<SparseVector>> kernels(last + 1);

  detail::parallel_for(last + 1, options.compute.threads, [&](std::size_t n) {
    auto& deg = degrees[n];
    deg.dim = complex.dim(n);
    const Matrix& d = complex.differential(n);
    if (!options.representatives) {
      deg.rank_d = linalg::rank(d, options.compute.linalg);
      return;
    }
    if (options.order == PivotOrder::kLexicographic) {
      kernels[n] = linalg::kernel_basis(d);
    } else {
      auto rev = linalg::kernel_basis(reverse_columns(d));
      for (auto& v : rev) kernels[n].push_back(reverse_indices(v, d.cols()));
    }
    deg.rank_d = deg.dim - kernels[n].size();
  });

  for (std::size_t n = 0; n <= last; ++n) {
    auto& deg = degrees[n];
    const std::size_t prev_rank = n == 0 ? 0 : degrees[n - 1].rank_d;
    const std::size_t expected = deg.dim - deg.rank_d - prev_rank;
    if (!options.representatives) {
      deg.betti = expected;
      continue;
    }
    auto boundaries = std::make_shared<linalg::Echelon>(deg.dim);
    if (n > 0) {
      for (const auto& c : complex.differential(n - 1).columns()) boundaries->insert(c);
    }
    linalg::Echelon span = *boundaries;
    auto classes = std::make_shared<linalg::Echelon>(deg.dim, /*track=*/true);
    for (auto& z : kernels[n]) {
      if (span.insert(z)) {
        classes->insert(boundaries->reduce(z));
        deg.representatives.push_back(std::move(z));
      }
    }
    deg.betti = deg.representatives.size();
    if (deg.betti != expected || boundaries->rank() != prev_rank) {
      throw InternalError("inconsistent cohomology in degree " + std::to_string(n) + ": d o d is not zero");
    }
    deg.boundaries = std::move(boundaries);
    deg.classes = std::move(classes);
    deg.has_representatives = true;
  }
  // Degrees above the top of the complex carry no cochains.
  for (std::size_t n = last + 1; n <= max_degree; ++n) {
    degrees[n].has_representatives = options.representatives;
    degrees[n].boundaries = std::make_shared<linalg::Echelon>(0);
    degrees[n].classes = std::make_shared<linalg::Echelon>(0, true);
  }
  return CohomologyResult(complex, std::move(degrees));
}

KappaResult kappa(const CohomologyResult& pair_result, const CohomologyResult& full_result, std::size_t n) {
  const auto& reps = pair_result.representatives(n);
  std::vector<SparseVector> cols;
  const std::size_t rows = full_result.betti(n);
  for (const auto& r : reps) {
    auto c = full_result.class_of(pair_result.complex().to_ambient(n, r));
    if (!c) throw InternalError("relative cocycle is not a cocycle of the full complex");
    cols.push_back(linalg::to_sparse(*c));
  }
  KappaResult out;
  out.matrix = Matrix(rows, std::move(cols));
  out.rank = linalg::rank(out.matrix);
  out.injective = out.rank == reps.size();
  return out;
}

std::size_t kappa_rank(const CohomologyResult& pair_result, const CochainComplex& full, std::size_t n,
                       const linalg::Options& options) {
  (void)options;
  const auto& reps = pair_result.representatives(n);
  if (reps.empty()) return 0;
  std::vector<SparseVector> embedded;
  for (const auto& r : reps) {
    auto c = full.from_ambient(pair_result.complex().to_ambient(n, r));
    if (!c) throw InternalError("relative cocycle does not embed in the full complex");
    embedded.push_back(std::move(*c));
  }
  if (n == 0) return linalg::rank(std::span<const SparseVector>(embedded), full.dim(0));
  if (n - 1 > full.top_degree()) throw InternalError("full complex too short for kappa in degree " + std::to_string(n));
  const auto& d = full.differential(n - 1);
  return linalg::extension_rank(d.columns(), embedded, full.dim(n));
}

Cochain mu_transport(const CartanDecomposition& dec, const Cochain& omega) {
  if (omega.module_dim != 1) throw NonTrivialCoefficients("mu_transport");
  if (omega.algebra_dim != dec.parent().dim()) throw DimensionMismatch(dec.parent().dim(), omega.algebra_dim);
  Cochain adapted = dec.adapted_is_identity() ? omega : pullback(omega, dec.change());
  const Mask k_mask = dec.k_dim() == 0 ? 0 : ((Mask{1} << dec.k_dim()) - 1);
  const auto& index = exterior_index(adapted.algebra_dim, adapted.degree);
  for (const auto& e : adapted.coords) {
    if (index.subset(e.index) & k_mask) throw NotHorizontal();
  }
  return adapted;
}

bool odd_generation_check(const CohomologyResult& result, std::size_t top_degree) {
  const auto& complex = result.complex();
  if (complex.module().dim() != 1 || !complex.module().is_trivial()) {
    throw NonTrivialCoefficients("odd generation check");
  }
  const std::size_t last = std::min(top_degree, result.max_degree());
  struct Odd {
    std::size_t degree;
    Cochain form;
  };
  std::vector<Odd> odd;
  for (std::size_t n = 1; n <= last; n += 2) {
    for (const auto& r : result.representatives(n)) odd.push_back({n, complex.to_horizontal(n, r)});
  }
  for (std::size_t n = 1; n <= last; ++n) {
    const std::size_t target = result.betti(n);
    if (target == 0) continue;
    std::vector<SparseVector> classes;
    // Products of distinct odd representatives (repeated odd factors vanish).
    std::function<void(std::size_t, std::size_t, const Cochain&)> extend = [&](std::size_t start, std::size_t deg,
                                                                                 const Cochain& acc) {
      if (deg == n) {
        auto coords = complex.from_horizontal(acc);
        if (!coords) throw InternalError("product of relative classes left the relative complex");
        auto c = result.class_coordinates(n, *coords);
        if (!c) throw InternalError("product of cocycles is not closed");
        classes.push_back(linalg::to_sparse(*c));
        return;
      }
      for (std::size_t i = start; i < odd.size(); ++i) {
        if (deg + odd[i].degree > n) continue;
        extend(i + 1, deg + odd[i].degree, cup_product(acc, odd[i].form));
      }
    };
    extend(0, 0, Cochain::constant(complex.horizontal_dim(), Rational(1)));
    if (linalg::rank(std::span<const SparseVector>(classes), target) != target) return false;
  }
  return true;
}

NczResult is_ncz(const LieAlgebra& g, std::span<const DenseVector> k_basis, const CoefficientModule& module,
                 std::size_t max_degree, const ComputeOptions& options) {
  CohomologyOptions copts;
  copts.compute = options;
  const CochainComplex rel = relative_complex(g, k_basis, module, max_degree, options);
  const CohomologyResult rel_result = cohomology(rel, max_degree, copts);
  const std::size_t reach = std::min(max_degree, rel.horizontal_dim());
  const CochainComplex full = full_complex(g, module, reach == 0 ? 0 : reach - 1, options);

  NczResult out;
  out.relative_betti = rel_result.betti_numbers();
  out.degrees.resize(max_degree + 1);
  detail::parallel_for(max_degree + 1, options.threads, [&](std::size_t n) {
    NczDegree& d = out.degrees[n];
    d.degree = n;
    d.relative_betti = rel_result.betti(n);
    d.kappa_rank = n <= reach ? kappa_rank(rel_result, full, n, options.linalg) : 0;
    d.injective = d.kappa_rank == d.relative_betti;
  });
  for (const auto& d : out.degrees) {
    if (!d.injective) {
      out.kappa_verdict = false;
      out.first_failure = d.degree;
      break;
    }
  }
  if (module.is_trivial() && module.dim() == 1) {
    out.odd_generation_verdict = odd_generation_check(rel_result, max_degree);
    out.paths_agree = *out.odd_generation_verdict == out.kappa_verdict;
  }
  return out;
}

}  // namespace symcoh
