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
#include "symcoh/complex.hpp"

namespace symcoh {
namespace {

using testing::dv;
using testing::sl2;
using testing::su2;

std::vector<DenseVector> so2_in_sl2() { return {dv({0, 1, -1})}; }

TEST(Cohomology, AbelianBettiAreBinomials) {
  const auto g = LieAlgebra::abelian(4);
  const auto res = cohomology(full_complex(g, CoefficientModule::trivial(g), 4), 4);
  EXPECT_EQ(res.betti_numbers(), (std::vector<std::size_t>{1, 4, 6, 4, 1}));
}

TEST(Cohomology, Su2) {
  const auto g = su2();
  const auto res = cohomology(full_complex(g, CoefficientModule::trivial(g), 3), 3);
  EXPECT_EQ(res.betti_numbers(), (std::vector<std::size_t>{1, 0, 0, 1}));
  // the degree-3 class is the volume form up to scale
  const Cochain rep = res.representative(3, 0);
  EXPECT_EQ(rep.coords.size(), 1u);
}

TEST(Cohomology, NontrivialModuleSl2) {
  const auto g = sl2();
  std::vector<Matrix> rep{Matrix::from_dense({{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}}),
                          Matrix::from_dense({{Rational(0), Rational(1)}, {Rational(0), Rational(0)}}),
                          Matrix::from_dense({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}})};
  const auto a = CoefficientModule::create(g, rep);
  const auto res = cohomology(full_complex(g, a, 3), 3);
  EXPECT_EQ(res.betti_numbers(), (std::vector<std::size_t>{0, 0, 0, 0}));
}

TEST(RelativeComplex, Sl2So2Dimensions) {
  const auto g = sl2();
  const auto c = relative_complex(g, so2_in_sl2(), CoefficientModule::trivial(g), 2);
  EXPECT_EQ(c.dim(0), 1u);
  EXPECT_EQ(c.dim(1), 0u);
  EXPECT_EQ(c.dim(2), 1u);
  EXPECT_EQ(cohomology(c, 2).betti_numbers(), (std::vector<std::size_t>{1, 0, 1}));
}

TEST(RelativeComplex, TrivialAndWholeSubalgebra) {
  const auto g = sl2();
  const auto a = CoefficientModule::trivial(g);
  const auto full = relative_complex(g, {}, a, 3);
  for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(full.dim(n), binomial(3, n));
  const std::vector<DenseVector> all{dv({1, 0, 0}), dv({0, 1, 0}), dv({0, 0, 1})};
  const auto whole = relative_complex(g, all, a, 3);
  EXPECT_EQ(whole.dim(0), 1u);
  EXPECT_EQ(cohomology(whole, 3).betti_numbers(), (std::vector<std::size_t>{1, 0, 0, 0}));
}

TEST(RelativeComplex, RejectsNonSubalgebra) {
  const auto g = sl2();
  EXPECT_THROW(relative_complex(g, std::vector<DenseVector>{dv({0, 1, 0}), dv({0, 0, 1})},
                                CoefficientModule::trivial(g), 2),
               NotASubalgebra);
}

TEST(RelativeComplex, SizeGuard) {
  const auto g = LieAlgebra::abelian(12);
  ComputeOptions opts;
  opts.max_exterior_dim = 100;
  EXPECT_THROW(full_complex(g, CoefficientModule::trivial(g), 6, opts), SizeLimit);
}

TEST(Kappa, Sl2So2) {
  const auto g = sl2();
  const auto a = CoefficientModule::trivial(g);
  const auto rel = cohomology(relative_complex(g, so2_in_sl2(), a, 2), 2);
  const auto full = cohomology(full_complex(g, a, 2), 2);
  const auto k0 = kappa(rel, full, 0);
  EXPECT_EQ(k0.matrix, Matrix::identity(1));
  EXPECT_TRUE(k0.injective);
  const auto k2 = kappa(rel, full, 2);
  EXPECT_EQ(k2.matrix.rows(), 0u);
  EXPECT_EQ(k2.matrix.cols(), 1u);
  EXPECT_FALSE(k2.injective);
  EXPECT_EQ(kappa_rank(rel, full_complex(g, a, 1), 2), 0u);
}

TEST(Ncz, Sl2So2FailsAtTwo) {
  const auto g = sl2();
  const auto r = is_ncz(g, so2_in_sl2(), CoefficientModule::trivial(g), 2);
  EXPECT_FALSE(r.kappa_verdict);
  ASSERT_TRUE(r.first_failure.has_value());
  EXPECT_EQ(*r.first_failure, 2u);
  ASSERT_TRUE(r.odd_generation_verdict.has_value());
  EXPECT_FALSE(*r.odd_generation_verdict);
  EXPECT_TRUE(r.paths_agree);
}

TEST(Ncz, CompactWithWholeSubalgebra) {
  const auto g = su2();
  const std::vector<DenseVector> all{dv({1, 0, 0}), dv({0, 1, 0}), dv({0, 0, 1})};
  const auto r = is_ncz(g, all, CoefficientModule::trivial(g), 3);
  EXPECT_TRUE(r.kappa_verdict);
  EXPECT_TRUE(r.paths_agree);
}

TEST(OddGeneration, AbelianPlane) {
  const auto g = LieAlgebra::abelian(2);
  const auto res = cohomology(full_complex(g, CoefficientModule::trivial(g), 2), 2);
  EXPECT_TRUE(odd_generation_check(res, 2));
}

TEST(Representatives, ReverseOrderGivesSameKappaRank) {
  const auto g = sl2();
  const auto a = CoefficientModule::trivial(g);
  const auto full_c = full_complex(g, a, 3);
  CohomologyOptions rev;
  rev.order = PivotOrder::kReverse;
  const auto f1 = cohomology(full_c, 3);
  const auto f2 = cohomology(full_c, 3, rev);
  EXPECT_EQ(f1.betti_numbers(), f2.betti_numbers());
  const auto rel = cohomology(relative_complex(g, so2_in_sl2(), a, 2), 2);
  for (std::size_t n = 0; n <= 2; ++n) {
    EXPECT_EQ(kappa(rel, f1, n).rank, kappa(rel, f2, n).rank);
  }
}

TEST(ClassCoordinates, CoboundariesAreZero) {
  const auto g = su2();
  const auto a = CoefficientModule::trivial(g);
  const auto res = cohomology(full_complex(g, a, 3), 3);
  const Cochain exact = apply_differential(g, a, Cochain::basis_form(3, 0b011));
  const auto c = res.class_of(exact);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, DenseVector(1));
  EXPECT_FALSE(res.class_of(Cochain::basis_form(3, 0b001)).has_value());
}

TEST(MuTransport, Sl2So2) {
  const auto g = sl2();
  const auto dec = validate_decomposition(g, so2_in_sl2(), {dv({1, 0, 0}), dv({0, 1, 1})});
  const auto gu = compact_dual(dec);
  EXPECT_TRUE(mu_transport(dec, Cochain::zero(3, 2)).is_zero());
  const auto rel = cohomology(relative_complex(g, so2_in_sl2(), CoefficientModule::trivial(g), 2), 2);
  const Cochain gen = rel.representative(2, 0);
  const Cochain moved = mu_transport(dec, gen);
  EXPECT_FALSE(moved.is_zero());
  const std::vector<DenseVector> k{dv({1, 0, 0})};
  const auto dual_rel = cohomology(relative_complex(gu, k, CoefficientModule::trivial(gu), 2), 2);
  const auto cls = dual_rel.class_of(moved);
  ASSERT_TRUE(cls.has_value());
  EXPECT_NE(*cls, DenseVector(1));
  EXPECT_EQ(dual_rel.betti_numbers(), rel.betti_numbers());
  EXPECT_THROW(mu_transport(dec, Cochain::basis_form(3, 0b011)), NotHorizontal);
}

}  // namespace
}  // namespace symcoh
