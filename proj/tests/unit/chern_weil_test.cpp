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
#include "symcoh/chern_weil.hpp"
#include "symcoh/complex.hpp"

namespace symcoh {
namespace {

using testing::dv;
using testing::sl2;
using testing::sv;

std::vector<SparseVector> args(std::initializer_list<SparseVector> list) { return list; }

CartanDecomposition sl2_split() {
  return validate_decomposition(sl2(), {dv({0, 1, -1})}, {dv({1, 0, 0}), dv({0, 1, 1})});
}

TEST(InvariantPolynomial, So2PfaffianIsTheCoordinate) {
  const auto gens = invariant_generators("so_2", 2);
  ASSERT_EQ(gens.size(), 1u);
  EXPECT_EQ(gens[0].degree(), 1u);
  EXPECT_EQ(gens[0].value({0}), Rational(1));
}

TEST(InvariantPolynomial, So4PfaffianPolarization) {
  const auto model = classical_model("so_4");
  const auto pf = pfaffian_form(model.algebra, model.rep);
  // basis A12, A13, A14, A23, A24, A34
  EXPECT_EQ(pf.value({0, 5}), Rational(1, 2));
  EXPECT_EQ(pf.value({1, 4}), Rational(-1, 2));
  EXPECT_EQ(pf.value({2, 3}), Rational(1, 2));
  const SparseVector x = sv({{0, 1}, {5, 1}});
  EXPECT_EQ(pf.evaluate(args({x, x})), Rational(1));
  EXPECT_TRUE(invariance_check(pf).invariant);
}

TEST(InvariantPolynomial, PerturbedKillingFormIsNotInvariant) {
  const auto model = classical_model("so_4");
  InvariantPolynomial p(model.algebra, 2, "perturbed");
  const Matrix kf = model.algebra->killing_form();
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i; j < 6; ++j) {
      p.set({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)}, kf.at(i, j));
    }
  }
  EXPECT_TRUE(invariance_check(p).invariant);
  p.set({0, 0}, p.value({0, 0}) + Rational(1));
  const auto report = invariance_check(p);
  EXPECT_FALSE(report.invariant);
  ASSERT_TRUE(report.witness_multiset.has_value());
  ASSERT_TRUE(report.witness_basis.has_value());
}

TEST(InvariantPolynomial, AnyFormOnAbelianIsInvariant) {
  auto k = std::make_shared<const LieAlgebra>(LieAlgebra::abelian(3));
  InvariantPolynomial p(k, 2);
  p.set({0, 1}, Rational(5));
  p.set({2, 2}, Rational(-1, 3));
  EXPECT_TRUE(invariance_check(p).invariant);
}

TEST(InvariantPolynomial, ChernFormsOfDiagonalElement) {
  const auto model = classical_model("u_2");
  const auto chern = chern_forms(model.algebra, model.rep, 2);
  // basis A12, iS12, iE11, iE22; X = iE11 + 2 iE22 so iX = diag(-1, -2)
  const SparseVector x = sv({{2, 1}, {3, 2}});
  EXPECT_EQ(chern[0].evaluate(args({x})), Rational(-3));
  EXPECT_EQ(chern[1].evaluate(args({x, x})), Rational(2));
  for (const auto& c : chern) EXPECT_TRUE(invariance_check(c).invariant) << c.name();
}

TEST(InvariantPolynomial, GeneratorsAreInvariant) {
  for (const std::string name : {"u_2", "su_3", "so_3", "so_4", "so_5", "sp_2"}) {
    for (const auto& p : invariant_generators(name, 8)) {
      EXPECT_TRUE(invariance_check(p).invariant) << name << " " << p.name();
      EXPECT_FALSE(p.is_zero()) << name << " " << p.name();
    }
  }
}

TEST(InvariantPolynomial, GeneratorDegrees) {
  auto degrees = [](const std::string& name, std::size_t max) {
    std::vector<std::size_t> out;
    for (const auto& p : invariant_generators(name, max)) out.push_back(p.degree());
    return out;
  };
  EXPECT_EQ(degrees("u_3", 6), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(degrees("su_3", 6), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(degrees("so_5", 8), (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(degrees("so_4", 8), (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(degrees("sp_2", 8), (std::vector<std::size_t>{2, 4}));
  EXPECT_THROW(invariant_generators("g_2", 4), UnknownAlgebra);
  EXPECT_THROW(invariant_generators("so_x", 4), UnknownAlgebra);
}

TEST(PolyProduct, ZeroAndSquares) {
  const auto model = classical_model("u_1");
  const auto c1 = chern_forms(model.algebra, model.rep, 1)[0];
  InvariantPolynomial zero(model.algebra, 3);
  EXPECT_TRUE(poly_product(c1, zero).is_zero());
  const auto sq = poly_product(c1, c1);
  const SparseVector x = sv({{0, 3}});
  const Rational v = c1.evaluate(args({x}));
  EXPECT_EQ(sq.evaluate(args({x, x})), v * v);

  const auto u2 = classical_model("u_2");
  const auto c = chern_forms(u2.algebra, u2.rep, 1)[0];
  const auto prod = poly_product(c, c);
  for (const auto& s : multisets(4, 2)) {
    EXPECT_EQ(prod.value(s), c.value({s[0]}) * c.value({s[1]}));
  }
  EXPECT_TRUE(invariance_check(prod).invariant);
  EXPECT_THROW(poly_product(c1, c), AlgebraMismatch);
}

TEST(Restriction, OddTracesVanishOnOrthogonal) {
  const auto su4 = classical_model("su_4");
  const auto so4 = classical_model("so_4");
  const Matrix inclusion = coordinates_in(models::su(4), models::so(4).matrices);
  const auto t3 = power_trace_form(su4.algebra, su4.rep, 3, true);
  const auto t2 = power_trace_form(su4.algebra, su4.rep, 2, true);
  EXPECT_FALSE(t3.is_zero());
  EXPECT_TRUE(restrict_polynomial(t3, inclusion, so4.algebra).is_zero());
  const auto r2 = restrict_polynomial(t2, inclusion, so4.algebra);
  EXPECT_FALSE(r2.is_zero());
  EXPECT_TRUE(invariance_check(r2).invariant);
  // proportional to the trace form of the defining representation
  EXPECT_EQ(r2, power_trace_form(so4.algebra, so4.rep, 2, true));
}

TEST(Restriction, IdentityAndNonMorphism) {
  const auto model = classical_model("su_2");
  const auto c2 = chern_forms(model.algebra, model.rep, 2)[1];
  EXPECT_EQ(restrict_polynomial(c2, Matrix::identity(3), model.algebra), c2);
  const Matrix doubled = Matrix::from_dense({{Rational(2), 0, 0}, {0, Rational(1), 0}, {0, 0, Rational(1)}});
  EXPECT_THROW(restrict_polynomial(c2, doubled, model.algebra), NotAMorphism);
}

TEST(Restriction, CommutesWithProduct) {
  const auto su4 = classical_model("su_4");
  const auto so4 = classical_model("so_4");
  const Matrix inclusion = coordinates_in(models::su(4), models::so(4).matrices);
  const auto t2 = power_trace_form(su4.algebra, su4.rep, 2, true);
  const auto r = restrict_polynomial(t2, inclusion, so4.algebra);
  EXPECT_EQ(restrict_polynomial(poly_product(t2, t2), inclusion, so4.algebra), poly_product(r, r));
}

TEST(Curvature, Sl2Split) {
  const auto dec = sl2_split();
  const SparseVector h = sv({{0, 1}});
  const SparseVector epf = sv({{1, 1}, {2, 1}});
  const SparseVector emf = sv({{1, 1}, {2, -1}});
  EXPECT_EQ(curvature(dec, h, epf), sv({{0, 1}}));
  EXPECT_EQ(curvature(dec, epf, h), sv({{0, -1}}));
  EXPECT_TRUE(curvature(dec, emf, h).empty());
}

TEST(ChernWeil, DegreeOneAnchor) {
  const auto dec = sl2_split();
  auto k = std::make_shared<const LieAlgebra>(dec.k_algebra());
  InvariantPolynomial lambda(k, 1, "lambda");
  lambda.set({0}, Rational(1));
  const Cochain form = cw(lambda, dec);
  EXPECT_EQ(evaluate(form, std::vector<DenseVector>{dv({1, 0, 0}), dv({0, 1, 1})}), Rational(1));

  const auto pair = cohomology(relative_complex(sl2(), dec.k_basis(), CoefficientModule::trivial(sl2()), 2), 2);
  const auto cls = pair.class_of(form);
  ASSERT_TRUE(cls.has_value());
  EXPECT_FALSE((*cls)[0].is_zero());

  EXPECT_TRUE(cw(InvariantPolynomial(k, 1), dec).is_zero());
}

TEST(ChernWeil, RejectsForeignAlgebra) {
  const auto dec = sl2_split();
  auto other = std::make_shared<const LieAlgebra>(LieAlgebra::abelian(2));
  InvariantPolynomial p(other, 1);
  EXPECT_THROW(cw(p, dec), AlgebraMismatch);
}

}  // namespace
}  // namespace symcoh
