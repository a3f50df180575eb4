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


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails or exceeds its time budget.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "symcoh/chern_weil.hpp"
#include "symcoh/epsilon.hpp"
#include "symcoh/matrix_models.hpp"
#include "symcoh/reports.hpp"
#include "unit/algebras.hpp"

namespace symcoh {
namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  void require(bool condition, const std::string& what) {
    if (!condition) {
      passed = false;
      detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
  }
};

Cochain random_cochain(std::mt19937& rng, std::size_t dim, std::size_t degree, std::size_t module_dim) {
  std::uniform_int_distribution<int> v(-3, 3);
  Cochain c = Cochain::zero(dim, degree, module_dim);
  std::vector<linalg::Entry> entries;
  for (std::size_t i = 0; i < c.length(); ++i) {
    const int x = v(rng);
    if (x != 0) entries.push_back({static_cast<Index>(i), Rational(x)});
  }
  c.coords = std::move(entries);
  return c;
}

void property_suite(Outcome& out) {
  std::mt19937 rng(20260101);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 3 + static_cast<std::size_t>(trial % 4);
    const auto rc = testing::random_algebra(rng, dim);
    const auto trivial = CoefficientModule::trivial(rc.algebra);
    for (const auto* a : {&trivial, &rc.module}) {
      for (std::size_t n = 0; n + 1 <= dim; ++n) {
        const Matrix dd = ce_differential(rc.algebra, *a, n + 1) * ce_differential(rc.algebra, *a, n);
        out.require(dd.is_zero(), "d^2 != 0 in trial " + std::to_string(trial) + " degree " + std::to_string(n));
      }
    }
    std::uniform_int_distribution<int> v(-2, 2);
    DenseVector y(dim);
    for (auto& x : y) x = Rational(v(rng));
    for (std::size_t n = 1; n <= dim; ++n) {
      const Cochain w = random_cochain(rng, dim, n, 1);
      const Cochain lhs = lie_derivative(rc.algebra, trivial, y, w);
      const Cochain rhs =
          insertion(y, apply_differential(rc.algebra, trivial, w)) + apply_differential(rc.algebra, trivial, insertion(y, w));
      out.require(lhs == rhs, "Cartan rule fails in trial " + std::to_string(trial) + " degree " + std::to_string(n));
    }
  }
}

void whitehead(Outcome& out) {
  for (const char* name : {"SL(2,R)", "SU(2)", "SL(3,R)", "SU(3)", "SO(4)", "Sp(2,R)"}) {
    const auto& g = builtin_group(name)->g;
    CohomologyOptions co;
    co.representatives = false;
    const auto r = cohomology(full_complex(g, CoefficientModule::trivial(g), 2), 2, co);
    out.require(r.betti(0) == 1 && r.betti(1) == 0 && r.betti(2) == 0, std::string(name) + " has H^1 or H^2");
  }
}

void complex_case(Outcome& out) {
  const auto spec = builtin_group("SL(2,C)");
  const auto nc = is_ncz(spec->g, spec->decomposition.k_basis(), CoefficientModule::trivial(spec->g), 3);
  const auto k = spec->decomposition.k_algebra();
  const auto kb = cohomology(full_complex(k, CoefficientModule::trivial(k), 3), 3).betti_numbers();
  out.require(nc.relative_betti == kb, "relative betti differs from betti of su_2");
  out.require(kb == std::vector<std::size_t>{1, 0, 0, 1}, "betti of su_2 is not 1 0 0 1");
  out.require(nc.degrees.size() > 3 && nc.degrees[3].injective && nc.degrees[3].kappa_rank == 1,
              "kappa^3 is not injective");
}

void ncz_verdicts(Outcome& out) {
  struct Case {
    const char* name;
    std::size_t max;
    bool expected;
    std::optional<std::size_t> failure;
  };
  for (const auto& c : {Case{"SL(3,R)", 5, true, std::nullopt}, Case{"SU*(4)", 5, true, std::nullopt},
                        Case{"SL(2,R)", 2, false, 2}}) {
    const auto spec = builtin_group(c.name);
    const auto r = is_ncz(spec->g, spec->decomposition.k_basis(), CoefficientModule::trivial(spec->g), c.max);
    out.require(r.kappa_verdict == c.expected, std::string(c.name) + " kappa verdict");
    out.require(r.first_failure == c.failure, std::string(c.name) + " first failure");
    out.require(r.odd_generation_verdict == std::optional<bool>(c.expected), std::string(c.name) + " odd generation");
    out.require(r.paths_agree, std::string(c.name) + " paths disagree");
  }
}

void relative_goldens(Outcome& out) {
  struct Case {
    const char* name;
    std::vector<std::size_t> betti;
  };
  for (const auto& c : {Case{"SL(3,R)", {1, 0, 0, 0, 0, 1}}, Case{"Sp(2,R)", {1, 0, 1, 0, 1, 0, 1}},
                        Case{"SL(2,R)", {1, 0, 1}}}) {
    const auto spec = builtin_group(c.name);
    const auto& dec = spec->decomposition;
    const std::size_t top = c.betti.size() - 1;
    const auto rel = relative_cohomology(*spec, top);
    out.require(rel.betti_numbers() == c.betti, std::string(c.name) + " relative betti");
    const LieAlgebra gu = compact_dual(dec);
    std::vector<DenseVector> k_basis;
    for (std::size_t i = 0; i < dec.k_dim(); ++i) k_basis.push_back(unit_vector(gu.dim(), i));
    const auto dual = cohomology(relative_complex(gu, k_basis, CoefficientModule::trivial(gu), top), top);
    out.require(dual.betti_numbers() == c.betti, std::string(c.name) + " compact dual betti");
    for (std::size_t n = 0; n <= top; ++n) {
      std::vector<SparseVector> images;
      for (std::size_t i = 0; i < rel.betti(n); ++i) {
        const auto cls = dual.class_of(mu_transport(dec, rel.representative(n, i)));
        if (!cls) {
          out.require(false, std::string(c.name) + " transported class is not a dual cocycle");
          continue;
        }
        images.push_back(linalg::to_sparse(*cls));
      }
      out.require(linalg::rank(images, dual.betti(n)) == rel.betti(n),
                  std::string(c.name) + " transport is not an isomorphism in degree " + std::to_string(n));
    }
  }
}

void euler_flatness(Outcome& out) {
  const auto spec = builtin_group("SL(4,R)");
  const auto rel = relative_cohomology(*spec, 4);
  bool found = false;
  for (const auto& p : generator_forms(*spec, 4)) {
    if (p.name() != "E_2") continue;
    found = true;
    const auto cls = rel.class_of(cw(p, spec->decomposition));
    out.require(cls && *cls != DenseVector(cls->size()), "class of cw(E_2) is zero");
  }
  out.require(found, "no Euler generator");
  const auto report = full_report(*spec, 4);
  out.require(render_text(report).find("epsilon^4(E_2) != 0") != std::string::npos, "report line missing");
  out.require(to_json(report)["epsilon"]["4"] == Json::parse(R"({"rank": 1, "nonzero_monomials": ["E_2"]})"),
              "JSON epsilon line");
}

void restriction_kernel(Outcome& out) {
  const auto su4 = classical_model("su_4");
  const auto so4 = classical_model("so_4");
  const Matrix inclusion = coordinates_in(models::su(4), models::so(4).matrices);
  const auto t3 = power_trace_form(su4.algebra, su4.rep, 3, true);
  const auto t2 = power_trace_form(su4.algebra, su4.rep, 2, true);
  out.require(!t3.is_zero(), "t_3 vanishes on su_4");
  out.require(restrict_polynomial(t3, inclusion, so4.algebra).is_zero(), "t_3 restricts to a nonzero form");
  out.require(!restrict_polynomial(t2, inclusion, so4.algebra).is_zero(), "t_2 restricts to zero");
}

void symplectic_kernel(Outcome& out) {
  const auto spec = builtin_group("Sp(2,R)");
  const auto& dec = spec->decomposition;
  const auto rel = relative_cohomology(*spec, 4);
  const auto gens = generator_forms(*spec, 4);
  const auto& c1 = gens.at(0);
  const auto& c2 = gens.at(1);
  auto combo = poly_product(c1, c1);
  combo += Rational(-2) * c2;
  const auto zero_cls = rel.class_of(cw(combo, dec));
  const auto c2_cls = rel.class_of(cw(c2, dec));
  out.require(zero_cls && *zero_cls == DenseVector(zero_cls->size()), "class of cw(C_1^2 - 2 C_2) is nonzero");
  out.require(c2_cls && *c2_cls != DenseVector(c2_cls->size()), "class of cw(C_2) is zero");
  out.require(epsilon_rank(*spec, 4, rel).rank == 1, "epsilon^4 rank is not 1");
}

void multiplicativity(Outcome& out) {
  const auto spec = builtin_group("Sp(2,R)");
  const auto rel = relative_cohomology(*spec, 4);
  const auto c1 = generator_forms(*spec, 2).at(0);
  const Cochain single = cw(c1, spec->decomposition);
  const auto lhs = rel.class_of(cw(poly_product(c1, c1), spec->decomposition));
  const auto rhs = rel.class_of(cup_product(single, single));
  out.require(lhs && rhs, "classes not defined");
  out.require(lhs == rhs, "cw(C_1 C_1) and cw(C_1) cup cw(C_1) differ");
  out.require(rhs && *rhs != DenseVector(rhs->size()), "cw(C_1)^2 is zero, the constant is not pinned");
}

void split_golden(Outcome& out) {
  const auto sl3 = assemble_split(*builtin_group("SL(3,R)"), 5);
  out.require(sl3.form == "split", "SL(3,R) not split");
  out.require(sl3.degrees.size() == 5 && sl3.degrees[4].description == "ℝ^1", "SL(3,R) H^5");
  out.require(sl3.degrees.size() == 5 && sl3.degrees[2].description == "ℤ^1", "SL(3,R) H^3");
  out.require(sl3.torsion_omitted, "torsion not flagged");
  const auto sl2c = full_report(*builtin_group("SL(2,C)"), 3);
  out.require(sl2c.form == "split", "SL(2,C) not split");
  out.require(sl2c.degrees.size() == 3 && sl2c.degrees[2].description == "ℝ^1 ⊕ ℤ^1", "SL(2,C) H^3");
  out.require(sl2c.index_discrepancy, "index discrepancy not flagged");
}

void les_ladder(Outcome& out) {
  const auto r = les_report(*builtin_group("SL(2,R)"), 2);
  out.require(r.form == "les", "not an LES report");
  out.require(r.degrees.size() == 2, "wrong number of degrees");
  if (r.degrees.size() != 2) return;
  out.require(r.degrees[0].description == "0", "H^1 is not 0");
  const auto& d = r.degrees[1];
  out.require(d.relative_betti == 1 && d.epsilon_rank == 1, "rank data is not (1,1)");
  out.require(d.coker_rank == 0 && d.ker_rank_next == 0, "cokernel or kernel rank");
  out.require(d.description == "0 → (ℝ/ℤ)^1 → H^n → 0 → 0", "H^2 description: " + d.description);
}

void catalog_crosschecks(Outcome& out) {
  for (const char* name : {"SL(3,R)", "SL(4,R)", "Sp(2,R)", "SL(2,C)", "SL(3,C)", "SU*(4)"}) {
    const auto r = k_cohomology_crosscheck(*builtin_group(name));
    out.require(r.passed, std::string("k cohomology of ") + builtin_group(name)->k_name);
  }
  for (const auto& name : builtin_group_names()) {
    out.require(compact_dual_check(*builtin_group(name)), "compact dual of " + name);
  }
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<void(Outcome&)> check;
};

}  // namespace
}  // namespace symcoh

int main() {
  using namespace symcoh;
  const std::vector<Criterion> criteria = {
      {"property suite (d^2 = 0, Cartan rule)", 30, property_suite},
      {"Whitehead vanishing", 60, whitehead},
      {"complex case matches compact factor", 600, complex_case},
      {"n.c.z. verdicts", 600, ncz_verdicts},
      {"relative betti goldens", 600, relative_goldens},
      {"Euler class flatness", 300, euler_flatness},
      {"restriction kernel", 600, restriction_kernel},
      {"symplectic kernel combination", 600, symplectic_kernel},
      {"multiplicativity anchor", 600, multiplicativity},
      {"split assembly golden", 600, split_golden},
      {"LES ladder golden", 600, les_ladder},
      {"catalog cross-checks", 120, catalog_crosschecks},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.check(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(seconds < c.budget_seconds, "over the time budget");
    if (!out.passed) ++failures;
    std::cout << (out.passed ? "PASS" : "FAIL") << "  [" << i + 1 << "] " << c.name << "  (" << seconds << " s)";
    if (!out.passed) std::cout << "  " << out.detail.str();
    std::cout << std::endl;
  }
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
