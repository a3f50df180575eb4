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


#include <gtest/gtest.h>

#include "algebras.hpp"
#include "symcoh/lie_algebra.hpp"

namespace symcoh {
namespace {

using testing::dv;
using testing::sl2;
using testing::su2;
using testing::sv;

TEST(LieAlgebra, AbelianIsValidAndNotSemisimple) {
  const auto g = LieAlgebra::abelian(3);
  EXPECT_TRUE(g.is_abelian());
  EXPECT_TRUE(g.killing_form().is_zero());
  EXPECT_FALSE(g.is_semisimple());
  EXPECT_TRUE(g.bracket(dv({1, 2, 3}), dv({0, 1, 5})) == DenseVector(3));
}

TEST(LieAlgebra, Sl2IsValidAndSemisimple) {
  const auto g = sl2();
  EXPECT_EQ(g.bracket(dv({0, 1, 0}), dv({0, 0, 1})), dv({1, 0, 0}));
  EXPECT_EQ(g.bracket(dv({3, 1, 2}), dv({3, 1, 2})), dv({0, 0, 0}));
  EXPECT_TRUE(g.is_semisimple());
  EXPECT_EQ(linalg::rank(g.killing_form()), 3u);
}

TEST(LieAlgebra, JacobiViolationReportsResidual) {
  try {
    LieAlgebra::create(3, {"h", "e", "f"}, {{0, 1, sv({{1, 2}})}, {0, 2, sv({{2, -2}})}, {1, 2, sv({{1, 1}})}});
    FAIL() << "expected JacobiViolation";
  } catch (const JacobiViolation& e) {
    EXPECT_FALSE(e.residual.empty());
    EXPECT_EQ(e.kind(), "JacobiViolation");
  }
}

TEST(LieAlgebra, AntisymmetryCompletionAndConflicts) {
  EXPECT_NO_THROW(LieAlgebra::create(2, {}, {{0, 1, sv({{1, 1}})}, {1, 0, sv({{1, -1}})}}));
  EXPECT_THROW(LieAlgebra::create(2, {}, {{0, 1, sv({{1, 1}})}, {1, 0, sv({{1, 1}})}}), ValidationError);
  EXPECT_THROW(LieAlgebra::create(2, {}, {{0, 0, sv({{1, 1}})}}), ValidationError);
  EXPECT_THROW((void)sl2().bracket(dv({1, 0}), dv({0, 1, 0})), DimensionMismatch);
}

TEST(LieAlgebra, Su2KillingNegativeDefinite) {
  EXPECT_TRUE(linalg::is_negative_definite(su2().killing_form()));
  EXPECT_FALSE(linalg::is_negative_definite(sl2().killing_form()));
}

CartanDecomposition sl2_split() {
  return validate_decomposition(sl2(), {dv({0, 1, -1})}, {dv({1, 0, 0}), dv({0, 1, 1})});
}

TEST(Decomposition, Sl2CompactSplitIsValid) {
  const auto dec = sl2_split();
  EXPECT_EQ(dec.k_dim(), 1u);
  EXPECT_EQ(dec.p_dim(), 2u);
  const Matrix& pk = dec.pi_k();
  const Matrix& pp = dec.pi_p();
  EXPECT_EQ(pk * pk, pk);
  EXPECT_EQ(pp * pp, pp);
  EXPECT_TRUE((pk * pp).is_zero());
  EXPECT_EQ(pk + pp, Matrix::identity(3));
}

TEST(Decomposition, BracketViolationWitness) {
  try {
    validate_decomposition(sl2(), {dv({0, 1, 0})}, {dv({1, 0, 0}), dv({0, 0, 1})});
    FAIL() << "expected BracketViolation";
  } catch (const BracketViolation& e) {
    EXPECT_EQ(e.inclusion, "[p,p]<=k");
    EXPECT_EQ(e.first, 0u);   // h
    EXPECT_EQ(e.second, 1u);  // f
  }
}

TEST(Decomposition, NotComplementary) {
  EXPECT_THROW(validate_decomposition(sl2(), {dv({0, 1, 0})}, {dv({0, 2, 0}), dv({0, 0, 1})}), NotComplementary);
  EXPECT_THROW(validate_decomposition(sl2(), {dv({0, 1, 0})}, {dv({0, 0, 1})}), NotComplementary);
}

TEST(Decomposition, AbelianAnySplit) {
  const auto g = LieAlgebra::abelian(3);
  EXPECT_NO_THROW(validate_decomposition(g, {dv({1, 1, 0})}, {dv({0, 1, 0}), dv({0, 1, 1})}));
}

TEST(CompactDual, Sl2DualIsCompact) {
  const auto dec = sl2_split();
  const auto gu = compact_dual(dec);
  EXPECT_TRUE(linalg::is_negative_definite(gu.killing_form()));
  // the k-part of the bracket is untouched
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(gu.bracket_basis(0, j), dec.adapted().bracket_basis(0, j));
}

TEST(CompactDual, IsAnInvolution) {
  const auto dec = sl2_split();
  const auto gu = compact_dual(dec);
  const auto dual_dec = decomposition_from_indices(gu, std::vector<std::size_t>{0}, std::vector<std::size_t>{1, 2});
  EXPECT_EQ(compact_dual(dual_dec), dec.adapted());
}

TEST(CompactDual, CompactPairFlipsSignOnP) {
  // su_2 + su_2 with the swap involution: k = diagonal, p = antidiagonal.
  std::vector<LieAlgebra::BracketSpec> specs;
  for (auto s : su2().bracket_specs()) {
    specs.push_back(s);
    SparseVector shifted;
    for (auto e : s.result) shifted.push_back({e.index + 3, e.value});
    specs.push_back({s.i + 3, s.j + 3, shifted});
  }
  const auto g = LieAlgebra::create(6, {}, specs);
  std::vector<DenseVector> k, p;
  for (std::size_t i = 0; i < 3; ++i) {
    DenseVector a(6), b(6);
    a[i] = a[i + 3] = Rational(1);
    b[i] = Rational(1);
    b[i + 3] = Rational(-1);
    k.push_back(a);
    p.push_back(b);
  }
  const auto dec = validate_decomposition(g, k, p);
  const auto dual = compact_dual(dec);
  // The flip reverses the sign of the Killing form on p, so a compact pair
  // with p != 0 dualises to the noncompact type (here sl_2(C)).
  const Matrix b = dual.killing_form();
  std::vector<std::vector<Rational>> on_k(3, std::vector<Rational>(3)), on_p(3, std::vector<Rational>(3));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      on_k[i][j] = b.at(i, j);
      on_p[i][j] = -b.at(i + 3, j + 3);
    }
  }
  EXPECT_TRUE(linalg::is_negative_definite(Matrix::from_dense(on_k)));
  EXPECT_TRUE(linalg::is_negative_definite(Matrix::from_dense(on_p)));
  // With p = 0 the dual is the algebra itself and stays compact.
  std::vector<DenseVector> all;
  for (std::size_t i = 0; i < 6; ++i) all.push_back(unit_vector(6, i));
  const auto trivial_split = validate_decomposition(g, all, {});
  EXPECT_TRUE(linalg::is_negative_definite(compact_dual(trivial_split).killing_form()));
}

TEST(CompactDual, RequiresSemisimple) {
  const auto g = LieAlgebra::abelian(2);
  const auto dec = decomposition_from_indices(g, std::vector<std::size_t>{0}, std::vector<std::size_t>{1});
  EXPECT_THROW(compact_dual(dec), NotSemisimple);
}

TEST(Module, ValidatesMorphism) {
  const auto g = sl2();
  std::vector<Matrix> std_rep{
      Matrix::from_dense({{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}}),
      Matrix::from_dense({{Rational(0), Rational(1)}, {Rational(0), Rational(0)}}),
      Matrix::from_dense({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}})};
  EXPECT_FALSE(CoefficientModule::create(g, std_rep).is_trivial());
  std_rep[2] = Matrix::from_dense({{Rational(0), Rational(0)}, {Rational(2), Rational(0)}});
  EXPECT_THROW(CoefficientModule::create(g, std_rep), ValidationError);
}

}  // namespace
}  // namespace symcoh
