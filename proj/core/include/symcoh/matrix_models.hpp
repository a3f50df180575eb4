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


// Real Lie algebras spanned by complex matrices, and the standard bases used
// to describe the classical algebras.

#ifndef SYMCOH_MATRIX_MODELS_HPP
#define SYMCOH_MATRIX_MODELS_HPP

#include <string>
#include <vector>

#include "symcoh/lie_algebra.hpp"

namespace symcoh {

using ComplexMatrix = std::vector<std::vector<GaussianRational>>;

namespace mat {

ComplexMatrix zero(std::size_t n);
/// E_ij (0-based).
ComplexMatrix unit(std::size_t n, std::size_t i, std::size_t j);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const GaussianRational& s, const ComplexMatrix& a);
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix conjugate(const ComplexMatrix& a);
GaussianRational trace(const ComplexMatrix& a);
/// [[a, b], [c, d]] from four n x n blocks.
ComplexMatrix blocks(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                     const ComplexMatrix& d);
/// Real coordinates: real parts then imaginary parts, row-major.
SparseVector flatten(const ComplexMatrix& a);
bool is_real(const ComplexMatrix& a);

/// E_ij - E_ji for i < j.
ComplexMatrix antisymmetric(std::size_t n, std::size_t i, std::size_t j);
/// E_ij + E_ji for i < j, E_ii for i == j.
ComplexMatrix symmetric(std::size_t n, std::size_t i, std::size_t j);
/// E_ii - E_{i+1,i+1}.
ComplexMatrix diagonal_step(std::size_t n, std::size_t i);

}  // namespace mat

/// A basis of complex matrices spanning a real Lie algebra.
struct MatrixBasis {
  std::vector<ComplexMatrix> matrices;
  std::vector<std::string> labels;

  void add(ComplexMatrix m, std::string label) {
    matrices.push_back(std::move(m));
    labels.push_back(std::move(label));
  }
  void append(const MatrixBasis& other);
};

/// Structure constants of the real span. Throws ValidationError if the
/// matrices are dependent or the span is not closed under commutators.
LieAlgebra algebra_from_matrices(const MatrixBasis& basis);

/// Real coordinates of each matrix of `elements` in `basis`, as the columns
/// of a basis.size() x elements.size() matrix. Throws ValidationError.
Matrix coordinates_in(const MatrixBasis& basis, const std::vector<ComplexMatrix>& elements);

namespace models {

MatrixBasis so(std::size_t n);
MatrixBasis u(std::size_t n);
MatrixBasis su(std::size_t n);
/// Real symmetric traceless n x n matrices: S_ij then diagonal steps.
MatrixBasis symmetric_traceless(std::size_t n);
/// Compact sp(n) inside u(2n): [[A, -conj(B)], [B, conj(A)]], A in u(n), B symmetric.
MatrixBasis sp_compact(std::size_t n);

}  // namespace models

}  // namespace symcoh

#endif  // SYMCOH_MATRIX_MODELS_HPP
