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

#include <random>

#include "algebras.hpp"
#include "symcoh/cochain.hpp"

namespace symcoh {
namespace {

using testing::dv;
using testing::sl2;

constexpr Mask H = 1, E = 2, F = 4;

Cochain random_cochain(std::mt19937& rng, std::size_t dim, std::size_t degree, std::size_t module_dim) {
  std::uniform_int_distribution<int> v(-3, 3);
  Cochain c = Cochain::zero(dim, degree, module_dim);
  for (std::size_t i = 0; i < c.length(); ++i) {
    const int x = v(rng);
    if (x != 0) c.coords.push_back({static_cast<Index>(i), Rational(x)});
  }
  return c;
}

TEST(Exterior, RankMatchesEnumeration) {
  for (std::size_t dim = 0; dim <= 9; ++dim) {
    for (std::size_t k = 0; k <= dim; ++k) {
      const auto& idx = exterior_index(dim, k);
      ASSERT_EQ(idx.size(), binomial(dim, k));
      for (std::size_t r = 0; r < idx.size(); ++r) ASSERT_EQ(idx.rank(idx.subset(r)), r);
    }
  }
}

TEST(Differential, AbelianIsZero) {
  const auto g = LieAlgebra::abelian(4);
  const auto a = CoefficientModule::trivial(g);
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_TRUE(ce_differential(g, a, n).is_zero());
}

TEST(Differential, Sl2DualOfH) {
  const auto g = sl2();
  const auto a = CoefficientModule::trivial(g);
  const Cochain d = apply_differential(g, a, Cochain::basis_form(3, H));
  EXPECT_EQ(evaluate(d, std::vector<DenseVector>{dv({0, 1, 0}), dv({0, 0, 1})}), Rational(-1));
  EXPECT_EQ(evaluate(d, std::vector<DenseVector>{dv({1, 0, 0}), dv({0, 1, 0})}), Rational(0));
}

TEST(Differential, SquaresToZeroOnRandomAlgebras) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 3 + static_cast<std::size_t>(trial % 4);
    const auto rc = testing::random_algebra(rng, dim);
    const auto trivial = CoefficientModule::trivial(rc.algebra);
    for (const auto* a : {&trivial, &rc.module}) {
      for (std::size_t n = 0; n + 2 <= dim + 1; ++n) {
        const Matrix dd = ce_differential(rc.algebra, *a, n + 1) * ce_differential(rc.algebra, *a, n);
        ASSERT_TRUE(dd.is_zero()) << "trial " << trial << " degree " << n;
      }
    }
  }
}

TEST(Insertion, Examples) {
  const Cochain he = Cochain::basis_form(3, H | E);
  EXPECT_EQ(insertion(dv({1, 0, 0}), he), Cochain::basis_form(3, E));
  EXPECT_EQ(insertion(dv({0, 1, 0}), he), Cochain::basis_form(3, H, Rational(-1)));
  std::mt19937 rng(3);
  const Cochain w = random_cochain(rng, 4, 3, 1);
  const DenseVector y = dv({1, -2, 0, 3});
  EXPECT_TRUE(insertion(y, insertion(y, w)).is_zero());
  EXPECT_THROW(insertion(y, Cochain::constant(4, Rational(1))), DegreeZero);
}

TEST(LieDerivative, Examples) {
  const auto g = sl2();
  const auto a = CoefficientModule::trivial(g);
  EXPECT_EQ(lie_derivative(g, a, dv({1, 0, 0}), Cochain::basis_form(3, E)), Cochain::basis_form(3, E, Rational(-2)));
  const auto ab = LieAlgebra::abelian(3);
  std::mt19937 rng(5);
  EXPECT_TRUE(lie_derivative(ab, CoefficientModule::trivial(ab), dv({1, 2, 3}), random_cochain(rng, 3, 2, 1))
                  .is_zero());
}

TEST(LieDerivative, CartanRuleOnRandomInputs) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 3 + static_cast<std::size_t>(trial % 4);
    const auto rc = testing::random_algebra(rng, dim);
    const auto a = CoefficientModule::trivial(rc.algebra);
    std::uniform_int_distribution<int> v(-2, 2);
    DenseVector y(dim);
    for (auto& x : y) x = Rational(v(rng));
    for (std::size_t n = 1; n <= dim; ++n) {
      const Cochain w = random_cochain(rng, dim, n, 1);
      const Cochain lhs = lie_derivative(rc.algebra, a, y, w);
      const Cochain rhs = insertion(y, apply_differential(rc.algebra, a, w)) +
                          apply_differential(rc.algebra, a, insertion(y, w));
      ASSERT_EQ(lhs, rhs) << "trial " << trial << " degree " << n;
    }
  }
}

TEST(CupProduct, Examples) {
  std::mt19937 rng(17);
  const Cochain w = random_cochain(rng, 3, 2, 1);
  EXPECT_EQ(cup_product(Cochain::constant(3, Rational(1)), w), w);
  const Cochain e = Cochain::basis_form(3, E), f = Cochain::basis_form(3, F), h = Cochain::basis_form(3, H);
  EXPECT_EQ(cup_product(e, f), Rational(-1) * cup_product(f, e));
  EXPECT_EQ(cup_product(cup_product(h, e), f), cup_product(h, cup_product(e, f)));
  EXPECT_THROW(cup_product(Cochain::zero(3, 1, 2), e), NonTrivialCoefficients);
}

TEST(CupProduct, AssociativeGradedCommutativeAndLeibniz) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t dim = 4 + static_cast<std::size_t>(trial % 3);
    const auto rc = testing::random_algebra(rng, dim);
    const auto a = CoefficientModule::trivial(rc.algebra);
    const std::size_t p = 1 + trial % 2, q = 1 + (trial / 2) % 2;
    const Cochain x = random_cochain(rng, dim, p, 1), y = random_cochain(rng, dim, q, 1),
                  z = random_cochain(rng, dim, 1, 1);
    EXPECT_EQ(cup_product(cup_product(x, y), z), cup_product(x, cup_product(y, z)));
    const Rational sign((p * q) % 2 ? -1 : 1);
    EXPECT_EQ(cup_product(x, y), sign * cup_product(y, x));
    const Rational s(p % 2 ? -1 : 1);
    EXPECT_EQ(apply_differential(rc.algebra, a, cup_product(x, y)),
              cup_product(apply_differential(rc.algebra, a, x), y) +
                  s * cup_product(x, apply_differential(rc.algebra, a, y)));
  }
}

TEST(Pullback, EvaluatesThroughBasis) {
  std::mt19937 rng(31);
  const Cochain w = random_cochain(rng, 4, 2, 1);
  const Matrix b = Matrix::from_dense({{Rational(1), Rational(2), Rational(0), Rational(0)},
                                       {Rational(0), Rational(1), Rational(0), Rational(3)},
                                       {Rational(0), Rational(0), Rational(1), Rational(0)},
                                       {Rational(1), Rational(0), Rational(0), Rational(1)}});
  const Cochain pw = pullback(w, b);
  for (Mask m : exterior_index(4, 2).subsets()) {
    std::vector<DenseVector> args;
    for (unsigned i : elements(m)) args.push_back(linalg::to_dense(b.column(i), 4));
    EXPECT_EQ(pw.value(m), evaluate(w, args));
  }
}

}  // namespace
}  // namespace symcoh
