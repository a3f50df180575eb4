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

// Alternating cochains on a Lie algebra and the basic operators acting on
// them: the Chevalley-Eilenberg differential, insertion, Lie derivative,
// cup product and pullback along a change of basis.

#ifndef SYMCOH_COCHAIN_HPP
#define SYMCOH_COCHAIN_HPP

#include <cstddef>
#include <span>

#include "symcoh/exterior.hpp"
#include "symcoh/lie_algebra.hpp"

namespace symcoh {

class DegreeZero : public ValidationError {
 public:
  DegreeZero() : ValidationError("DegreeZero", "insertion into a cochain of degree 0") {}
};

class NonTrivialCoefficients : public ValidationError {
 public:
  explicit NonTrivialCoefficients(const std::string& what)
      : ValidationError("NonTrivialCoefficients", what + " requires trivial one-dimensional coefficients") {}
};

/// An n-cochain with values in Q^module_dim. Coordinate index is
/// rank(subset) * module_dim + component, subsets in lexicographic order.
struct Cochain {
  std::size_t algebra_dim = 0;
  std::size_t degree = 0;
  std::size_t module_dim = 1;
  SparseVector coords;

  static Cochain zero(std::size_t algebra_dim, std::size_t degree, std::size_t module_dim = 1);
  static Cochain constant(std::size_t algebra_dim, const Rational& value);
  /// value * e^{i_1} ^ ... ^ e^{i_n} for the elements of `subset`.
  static Cochain basis_form(std::size_t algebra_dim, Mask subset, const Rational& value = Rational(1));
  /// The 1-form x -> sum_i coefficients[i] x_i.
  static Cochain linear(std::span<const Rational> coefficients);

  [[nodiscard]] std::size_t length() const;
  [[nodiscard]] bool is_zero() const noexcept { return coords.empty(); }
  [[nodiscard]] Rational value(Mask subset, std::size_t component = 0) const;

  Cochain& operator+=(const Cochain& rhs);
  Cochain& operator-=(const Cochain& rhs);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Rational& s, const Cochain& c);
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// omega(v_1, ..., v_n) for vectors in algebra coordinates (component `component`).
Rational evaluate(const Cochain& omega, std::span<const DenseVector> args, std::size_t component = 0);

/// Matrix of d: C^n(g; a) -> C^{n+1}(g; a).
Matrix ce_differential(const LieAlgebra& g, const CoefficientModule& module, std::size_t n);
Cochain apply_differential(const LieAlgebra& g, const CoefficientModule& module, const Cochain& omega);

/// (i_y omega)(x_1, ...) = omega(y, x_1, ...). Throws DegreeZero.
Cochain insertion(std::span<const Rational> y, const Cochain& omega);
/// (theta_y omega)(x_1..x_n) = sum_i omega(.., [x_i, y], ..) + y.omega(x_1..x_n).
Cochain lie_derivative(const LieAlgebra& g, const CoefficientModule& module, std::span<const Rational> y,
                       const Cochain& omega);

/// Shuffle wedge product. Throws NonTrivialCoefficients unless both are scalar.
Cochain cup_product(const Cochain& a, const Cochain& b);

/// basis^* omega, where the columns of `basis` are new basis vectors written
/// in the coordinates omega is expressed in.
Cochain pullback(const Cochain& omega, const Matrix& basis);

namespace detail {

/// d on cochains built from the basis 1-forms with index >= offset, followed
/// by restriction to the same index range (local numbering from 0).
Matrix differential_matrix(const LieAlgebra& g, const CoefficientModule& module, std::size_t n,
                           std::size_t offset);
/// theta_{x_j} under the same restriction convention.
Matrix lie_derivative_matrix(const LieAlgebra& g, const CoefficientModule& module, std::size_t j,
                             std::size_t n, std::size_t offset);
/// i_{x_j} on the full complex.
Matrix insertion_matrix(std::size_t dim, std::size_t module_dim, std::size_t j, std::size_t n);

}  // namespace detail

}  // namespace symcoh

#endif  // SYMCOH_COCHAIN_HPP
