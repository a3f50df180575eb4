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


// Invariant symmetric multilinear forms on a compact algebra k, the classical
// generators (Chern, Pontryagin, Pfaffian) built from a matrix model of k,
// and the algebraic Chern-Weil map into relative cochains of (g, k).

#ifndef SYMCOH_CHERN_WEIL_HPP
#define SYMCOH_CHERN_WEIL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symcoh/cochain.hpp"
#include "symcoh/matrix_models.hpp"

namespace symcoh {

class AlgebraMismatch : public ValidationError {
 public:
  AlgebraMismatch() : ValidationError("AlgebraMismatch", "polynomials live on different algebras") {}
};

class NotAMorphism : public ValidationError {
 public:
  NotAMorphism(std::size_t i, std::size_t j)
      : ValidationError("NotAMorphism", "map does not preserve the bracket of basis elements " + std::to_string(i) +
                                            " and " + std::to_string(j)) {}
};

class UnknownAlgebra : public ValidationError {
 public:
  explicit UnknownAlgebra(const std::string& name)
      : ValidationError("UnknownAlgebra", "unknown classical algebra '" + name + "'") {}
};

/// Images of the basis of k under a matrix representation.
struct MatrixRep {
  std::size_t size = 0;
  std::vector<ComplexMatrix> images;
};

/// Throws NotAMorphism unless rep([x_i,x_j]) = [rep x_i, rep x_j] on basis pairs.
void verify_representation(const LieAlgebra& k, const MatrixRep& rep);

/// Multiset of basis indices, sorted ascending.
using Multiset = std::vector<std::uint8_t>;

/// A symmetric m-linear form on k stored by its values on basis multisets.
class InvariantPolynomial {
 public:
  InvariantPolynomial(std::shared_ptr<const LieAlgebra> algebra, std::size_t degree, std::string name = {});

  [[nodiscard]] const LieAlgebra& algebra() const noexcept { return *algebra_; }
  [[nodiscard]] const std::shared_ptr<const LieAlgebra>& algebra_handle() const noexcept { return algebra_; }
  [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  [[nodiscard]] const std::map<Multiset, Rational>& values() const noexcept { return values_; }
  [[nodiscard]] bool is_zero() const noexcept { return values_.empty(); }

  /// Value on a basis multiset (any order).
  [[nodiscard]] Rational value(Multiset indices) const;
  void set(Multiset indices, const Rational& value);
  /// P(v_1, ..., v_m) for vectors in k coordinates.
  [[nodiscard]] Rational evaluate(std::span<const SparseVector> args) const;

  InvariantPolynomial& operator+=(const InvariantPolynomial& rhs);
  friend InvariantPolynomial operator*(const Rational& s, const InvariantPolynomial& p);
  friend bool operator==(const InvariantPolynomial& a, const InvariantPolynomial& b) {
    return a.degree_ == b.degree_ && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const LieAlgebra> algebra_;
  std::size_t degree_;
  std::string name_;
  std::map<Multiset, Rational> values_;
};

/// All multisets of size m drawn from {0, ..., dim-1}, lexicographic.
std::vector<Multiset> multisets(std::size_t dim, std::size_t m);

struct InvarianceReport {
  bool invariant = true;
  std::optional<Multiset> witness_multiset;
  std::optional<std::size_t> witness_basis;
};

/// Checks sum_i P(x_1, ..., [x_i, y], ..., x_m) = 0 on all basis data.
InvarianceReport invariance_check(const InvariantPolynomial& p);

/// Symmetrized product; degree is additive. Throws AlgebraMismatch.
InvariantPolynomial poly_product(const InvariantPolynomial& p, const InvariantPolynomial& q);
/// The constant 1 as a degree-0 form.
InvariantPolynomial unit_polynomial(std::shared_ptr<const LieAlgebra> algebra);

/// Polarized power trace tr(Y^r) with Y = i*rep(X) (`multiply_by_i`) or Y = rep(X).
InvariantPolynomial power_trace_form(std::shared_ptr<const LieAlgebra> k, const MatrixRep& rep, std::size_t r,
                                     bool multiply_by_i);
/// Elementary symmetric forms e_1..e_max of the spectrum of Y via Newton's identities.
std::vector<InvariantPolynomial> elementary_forms(std::shared_ptr<const LieAlgebra> k, const MatrixRep& rep,
                                                  std::size_t max_m, bool multiply_by_i);
/// C_1..C_max for a unitary representation.
std::vector<InvariantPolynomial> chern_forms(std::shared_ptr<const LieAlgebra> k, const MatrixRep& rep,
                                             std::size_t max_m);
/// P_1..P_max for a real orthogonal representation (e_{2j} of the spectrum).
std::vector<InvariantPolynomial> pontryagin_forms(std::shared_ptr<const LieAlgebra> k, const MatrixRep& rep,
                                                  std::size_t max_j);
/// Polarized Pfaffian of an even-size real antisymmetric representation.
InvariantPolynomial pfaffian_form(std::shared_ptr<const LieAlgebra> k, const MatrixRep& rep);

/// Standard matrix model of a compact classical algebra: "u_n", "su_n",
/// "so_n", "sp_n" (compact symplectic, as quaternionic 2n x 2n matrices).
struct ClassicalModel {
  std::shared_ptr<const LieAlgebra> algebra;
  MatrixRep rep;
};
ClassicalModel classical_model(const std::string& k_name);

/// Generators for a family ("u", "su", "so", "sp") realized through a
/// representation of k of the family's defining size.
std::vector<InvariantPolynomial> generators_from_model(const std::string& family,
                                                       std::shared_ptr<const LieAlgebra> k, const MatrixRep& rep,
                                                       std::size_t max_degree);

/// Generators of the invariant ring with cohomological degree <= max_degree.
/// Throws UnknownAlgebra.
std::vector<InvariantPolynomial> invariant_generators(const std::string& k_name, std::size_t max_degree);

/// Pulls P back along an inclusion (columns are images of the small basis).
/// Throws NotAMorphism.
InvariantPolynomial restrict_polynomial(const InvariantPolynomial& p, const Matrix& inclusion,
                                        std::shared_ptr<const LieAlgebra> small);

/// Omega(x, y) = 1/2 of the k-coordinates of [pi_p x, pi_p y].
SparseVector curvature(const CartanDecomposition& dec, const SparseVector& x, const SparseVector& y);

struct CwOptions {
  /// Verify that the output is horizontal, k-invariant and closed.
  bool certify = true;
};

/// The Chern-Weil cochain of P (a form on k in the k_basis coordinates of
/// dec) as a 2m-cochain on the parent algebra:
///   CW(P)(x_1..x_2m) = m! * sum over perfect matchings M of sgn(M) P(Omega(M)).
/// Throws NotSemisimple, InternalError if certification fails.
Cochain cw(const InvariantPolynomial& p, const CartanDecomposition& dec, const CwOptions& options = {});

}  // namespace symcoh

#endif  // SYMCOH_CHERN_WEIL_HPP
