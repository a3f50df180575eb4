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


#include "symcoh/matrix_models.hpp"

namespace symcoh {

namespace mat {

ComplexMatrix zero(std::size_t n) { return ComplexMatrix(n, std::vector<GaussianRational>(n)); }

ComplexMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
  ComplexMatrix m = zero(n);
  m[i][j] = GaussianRational(1);
  return m;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out[i][j] += b[i][j];
  }
  return out;
}

ComplexMatrix scale(const GaussianRational& s, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& row : out) {
    for (auto& x : row) x *= s;
  }
  return out;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.size();
  ComplexMatrix out = zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
      }
    }
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return add(multiply(a, b), scale(GaussianRational(-1), multiply(b, a)));
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& row : out) {
    for (auto& x : row) x = x.conj();
  }
  return out;
}

GaussianRational trace(const ComplexMatrix& a) {
  GaussianRational t;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

ComplexMatrix blocks(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                     const ComplexMatrix& d) {
  const std::size_t n = a.size();
  ComplexMatrix out = zero(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[i][j] = a[i][j];
      out[i][j + n] = b[i][j];
      out[i + n][j] = c[i][j];
      out[i + n][j + n] = d[i][j];
    }
  }
  return out;
}

SparseVector flatten(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  SparseVector out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!a[i][j].re.is_zero()) out.push_back({static_cast<Index>(i * n + j), a[i][j].re});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!a[i][j].im.is_zero()) out.push_back({static_cast<Index>(n * n + i * n + j), a[i][j].im});
    }
  }
  return out;
}

bool is_real(const ComplexMatrix& a) {
  for (const auto& row : a) {
    for (const auto& x : row) {
      if (!x.is_real()) return false;
    }
  }
  return true;
}

ComplexMatrix antisymmetric(std::size_t n, std::size_t i, std::size_t j) {
  ComplexMatrix m = zero(n);
  m[i][j] = GaussianRational(1);
  m[j][i] = GaussianRational(-1);
  return m;
}

ComplexMatrix symmetric(std::size_t n, std::size_t i, std::size_t j) {
  ComplexMatrix m = zero(n);
  m[i][j] = GaussianRational(1);
  m[j][i] = GaussianRational(1);
  return m;
}

ComplexMatrix diagonal_step(std::size_t n, std::size_t i) {
  ComplexMatrix m = zero(n);
  m[i][i] = GaussianRational(1);
  m[i + 1][i + 1] = GaussianRational(-1);
  return m;
}

}  // namespace mat

void MatrixBasis::append(const MatrixBasis& other) {
  matrices.insert(matrices.end(), other.matrices.begin(), other.matrices.end());
  labels.insert(labels.end(), other.labels.begin(), other.labels.end());
}

namespace {

std::size_t flat_length(const std::vector<ComplexMatrix>& ms) {
  return ms.empty() ? 0 : 2 * ms.front().size() * ms.front().size();
}

linalg::Echelon tracked_basis(const MatrixBasis& basis) {
  linalg::Echelon ech(flat_length(basis.matrices), true);
  for (std::size_t i = 0; i < basis.matrices.size(); ++i) {
    if (!ech.insert(mat::flatten(basis.matrices[i]))) {
      throw ValidationError("DependentBasis", "matrix basis element " + basis.labels[i] + " is dependent");
    }
  }
  return ech;
}

}  // namespace

LieAlgebra algebra_from_matrices(const MatrixBasis& basis) {
  const std::size_t dim = basis.matrices.size();
  if (dim == 0) return LieAlgebra::abelian(0);
  const linalg::Echelon ech = tracked_basis(basis);
  std::vector<LieAlgebra::BracketSpec> brackets;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      const auto c = mat::commutator(basis.matrices[i], basis.matrices[j]);
      auto coeffs = ech.express(mat::flatten(c));
      if (!coeffs) {
        throw ValidationError("NotClosed", "[" + basis.labels[i] + ", " + basis.labels[j] +
                                               "] leaves the span of the matrix basis");
      }
      if (!coeffs->empty()) brackets.push_back({static_cast<Index>(i), static_cast<Index>(j), std::move(*coeffs)});
    }
  }
  return LieAlgebra::create(dim, basis.labels, std::move(brackets));
}

Matrix coordinates_in(const MatrixBasis& basis, const std::vector<ComplexMatrix>& elements) {
  const linalg::Echelon ech = tracked_basis(basis);
  std::vector<SparseVector> cols;
  cols.reserve(elements.size());
  for (const auto& e : elements) {
    auto coeffs = ech.express(mat::flatten(e));
    if (!coeffs) throw ValidationError("NotInSpan", "matrix is not in the span of the basis");
    cols.push_back(std::move(*coeffs));
  }
  return Matrix(basis.matrices.size(), std::move(cols));
}

namespace models {

namespace {

std::string pair_label(const std::string& head, std::size_t i, std::size_t j) {
  return head + std::to_string(i + 1) + std::to_string(j + 1);
}

const GaussianRational kI = GaussianRational::i();

}  // namespace

MatrixBasis so(std::size_t n) {
  MatrixBasis b;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) b.add(mat::antisymmetric(n, i, j), pair_label("A", i, j));
  }
  return b;
}

namespace {

MatrixBasis unitary_offdiagonal(std::size_t n) {
  MatrixBasis b = so(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) b.add(mat::scale(kI, mat::symmetric(n, i, j)), pair_label("iS", i, j));
  }
  return b;
}

}  // namespace

MatrixBasis u(std::size_t n) {
  MatrixBasis b = unitary_offdiagonal(n);
  for (std::size_t i = 0; i < n; ++i) b.add(mat::scale(kI, mat::unit(n, i, i)), pair_label("iE", i, i));
  return b;
}

MatrixBasis su(std::size_t n) {
  MatrixBasis b = unitary_offdiagonal(n);
  for (std::size_t i = 0; i + 1 < n; ++i) b.add(mat::scale(kI, mat::diagonal_step(n, i)), "iH" + std::to_string(i + 1));
  return b;
}

MatrixBasis symmetric_traceless(std::size_t n) {
  MatrixBasis b;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) b.add(mat::symmetric(n, i, j), pair_label("S", i, j));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) b.add(mat::diagonal_step(n, i), "H" + std::to_string(i + 1));
  return b;
}

MatrixBasis sp_compact(std::size_t n) {
  MatrixBasis b;
  const MatrixBasis a = u(n);
  const ComplexMatrix z = mat::zero(n);
  for (std::size_t k = 0; k < a.matrices.size(); ++k) {
    const auto& m = a.matrices[k];
    b.add(mat::blocks(m, z, z, mat::conjugate(m)), a.labels[k]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const ComplexMatrix s = i == j ? mat::unit(n, i, i) : mat::symmetric(n, i, j);
      for (const bool imaginary : {false, true}) {
        const ComplexMatrix bm = imaginary ? mat::scale(kI, s) : s;
        const ComplexMatrix upper = mat::scale(GaussianRational(-1), mat::conjugate(bm));
        b.add(mat::blocks(z, upper, bm, z), pair_label(imaginary ? "iB" : "B", i, j));
      }
    }
  }
  return b;
}

}  // namespace models

}  // namespace symcoh
