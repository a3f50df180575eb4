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

#include "symcoh/catalog.hpp"
#include "symcoh/epsilon.hpp"

namespace symcoh {
namespace {

std::vector<std::string> displays(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.display);
  return out;
}

TEST(Catalog, Dimensions) {
  struct Case {
    const char* name;
    std::size_t dim, k, p;
  };
  for (const auto& c : {Case{"SL(2,R)", 3, 1, 2}, Case{"SL(3,R)", 8, 3, 5}, Case{"SU*(4)", 15, 10, 5},
                        Case{"Sp(2,R)", 10, 4, 6}, Case{"SL(2,C)", 6, 3, 3}, Case{"SU(3)", 8, 8, 0},
                        Case{"SO(4)", 6, 6, 0}, Case{"SL(3,C)", 16, 8, 8}}) {
    const auto spec = builtin_group(c.name);
    EXPECT_EQ(spec->g.dim(), c.dim) << c.name;
    EXPECT_EQ(spec->decomposition.k_dim(), c.k) << c.name;
    EXPECT_EQ(spec->decomposition.p_dim(), c.p) << c.name;
    EXPECT_EQ(spec->name, c.name);
  }
}

TEST(Catalog, NameGrammar) {
  EXPECT_EQ(builtin_group(" SL( 3 , R ) ")->name, "SL(3,R)");
  EXPECT_EQ(builtin_group("SL(3,R)").get(), builtin_group("SL(3,R)").get());
  for (const char* bad : {"SL(7,R)", "GL(2,R)", "SU*(6)", "SL(3)", "SU(2,R)", "sl(3,R)", "Sp(3,R)", "SO(2)"}) {
    EXPECT_THROW(builtin_group(bad), UnknownGroup) << bad;
  }
}

TEST(Catalog, Presentations) {
  EXPECT_EQ(builtin_group("SL(3,R)")->bk.name, "BSO_3");
  EXPECT_TRUE(builtin_group("SL(3,R)")->torsion_omitted);
  EXPECT_FALSE(builtin_group("SL(2,R)")->torsion_omitted);
  EXPECT_EQ(builtin_group("SL(2,C)")->bk.name, "BSU_2");
  EXPECT_TRUE(builtin_group("SL(2,C)")->index_discrepancy);
  EXPECT_EQ(builtin_group("Sp(2,R)")->bk.name, "BU_2");
  EXPECT_EQ(builtin_group("SU*(4)")->bk.name, "BSp_2");
  EXPECT_EQ(builtin_group("SU*(4)")->k_name, "sp_2");
}

TEST(MonomialBasis, Examples) {
  const auto& bu2 = builtin_group("Sp(2,R)")->bk;
  EXPECT_EQ(displays(monomial_basis(bu2, 0)), (std::vector<std::string>{"1"}));
  EXPECT_EQ(displays(monomial_basis(bu2, 4)), (std::vector<std::string>{"C_1^2", "C_2"}));
  EXPECT_TRUE(monomial_basis(bu2, 3).empty());
  const auto& bso4 = builtin_group("SL(4,R)")->bk;
  EXPECT_EQ(displays(monomial_basis(bso4, 8)), (std::vector<std::string>{"P_1^2", "P_1*E_2", "P_2"}));
  EXPECT_EQ(displays(monomial_basis(bso4, 4)), (std::vector<std::string>{"P_1", "E_2"}));
}

TEST(Catalog, PrimitiveDegreesAndExteriorBetti) {
  EXPECT_EQ(primitive_degrees(CompactFamily::kOrthogonal, 4), (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(primitive_degrees(CompactFamily::kOrthogonal, 6), (std::vector<std::size_t>{3, 5, 7}));
  EXPECT_EQ(primitive_degrees(CompactFamily::kSymplectic, 2), (std::vector<std::size_t>{3, 7}));
  EXPECT_EQ(exterior_betti({1, 3}), (std::vector<std::size_t>{1, 1, 0, 1, 1}));
}

TEST(Catalog, KCohomologyCrosscheck) {
  for (const char* name : {"SL(3,R)", "SL(4,R)", "Sp(2,R)", "SL(2,C)", "SU(3)", "SU*(4)", "SO(5)"}) {
    const auto result = k_cohomology_crosscheck(*builtin_group(name));
    EXPECT_TRUE(result.passed) << name;
  }
  EXPECT_EQ(k_cohomology_crosscheck(*builtin_group("Sp(2,R)")).computed,
            (std::vector<std::size_t>{1, 1, 0, 1, 1}));
}

TEST(Catalog, CompactDualForAllBuiltins) {
  for (const auto& name : builtin_group_names()) {
    EXPECT_TRUE(compact_dual_check(*builtin_group(name))) << name;
  }
}

TEST(Catalog, GeneratorFormsAreInvariant) {
  for (const char* name : {"SL(2,R)", "SL(4,R)", "Sp(2,R)", "SU*(4)", "SL(3,C)"}) {
    const auto spec = builtin_group(name);
    const auto forms = generator_forms(*spec, 8);
    for (const auto& f : forms) EXPECT_TRUE(invariance_check(f).invariant) << name << " " << f.name();
  }
}

TEST(Epsilon, Sl2) {
  const auto r = epsilon_rank(*builtin_group("SL(2,R)"), 2);
  EXPECT_EQ(r.rank, 1u);
  ASSERT_EQ(r.monomials.size(), 1u);
  EXPECT_EQ(r.monomials[0].monomial, "C_1");
  EXPECT_TRUE(r.monomials[0].nonzero);
  EXPECT_TRUE(epsilon_rank(*builtin_group("SL(2,R)"), 3).hopf_vanishing);
}

TEST(Epsilon, SymplecticKernel) {
  const auto r = epsilon_rank(*builtin_group("Sp(2,R)"), 4);
  EXPECT_EQ(r.relative_betti, 1u);
  EXPECT_EQ(r.rank, 1u);
  ASSERT_EQ(r.kernel.size(), 1u);
  EXPECT_EQ(r.kernel[0], "C_1^2 - 2*C_2");
}

TEST(Epsilon, Multiplicative) {
  const auto spec = builtin_group("Sp(2,R)");
  const auto rel = relative_cohomology(*spec, 4);
  const auto gens = generator_forms(*spec, 2);
  const Cochain c1 = cw(gens[0], spec->decomposition);
  const Cochain sq = cw(poly_product(gens[0], gens[0]), spec->decomposition);
  EXPECT_EQ(rel.class_of(sq), rel.class_of(cup_product(c1, c1)));
  EXPECT_EQ(sq, cup_product(c1, c1));
}

TEST(Epsilon, Sl3Vanishes) {
  const auto spec = builtin_group("SL(3,R)");
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(epsilon_rank(*spec, n).rank, n == 0 ? 1u : 0u) << n;
}

TEST(Kappa, CheapPathMatchesFullMatrix) {
  for (const char* name : {"SL(2,R)", "SL(3,R)", "Sp(2,R)", "SL(2,C)"}) {
    const auto spec = builtin_group(name);
    const auto& g = spec->g;
    const auto a = CoefficientModule::trivial(g);
    const auto rel = cohomology(relative_complex(g, spec->decomposition.k_basis(), a, 4), 4);
    const auto full_cx = full_complex(g, a, 4);
    const auto full = cohomology(full_cx, 4);
    for (std::size_t n = 0; n <= 4; ++n) {
      EXPECT_EQ(kappa_rank(rel, full_cx, n), kappa(rel, full, n).rank) << name << " " << n;
    }
  }
}

}  // namespace
}  // namespace symcoh
