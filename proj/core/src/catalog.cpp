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


#include "symcoh/catalog.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <regex>

namespace symcoh {

std::vector<Monomial> monomial_basis(const GradedRingPresentation& presentation, std::size_t degree) {
  const auto& gens = presentation.generators;
  std::vector<Monomial> out;
  std::vector<unsigned> exps(gens.size(), 0);
  auto rec = [&](auto&& self, std::size_t idx, std::size_t remaining) -> void {
    if (idx == gens.size()) {
      if (remaining != 0) return;
      Monomial m;
      m.exponents = exps;
      m.degree = degree;
      std::vector<unsigned> shown = exps;
      std::vector<std::string> extra;
      for (const auto& rel : presentation.relations) {
        while (rel.exponent > 0 && shown[rel.generator] >= rel.exponent) {
          shown[rel.generator] -= rel.exponent;
          extra.push_back(rel.replacement);
        }
      }
      std::string text;
      auto append = [&](const std::string& factor) {
        if (!text.empty()) text += "*";
        text += factor;
      };
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (shown[g] == 0) continue;
        append(shown[g] == 1 ? gens[g].name : gens[g].name + "^" + std::to_string(shown[g]));
      }
      for (const auto& e : extra) append(e);
      m.display = text.empty() ? "1" : text;
      out.push_back(std::move(m));
      return;
    }
    const std::size_t d = gens[idx].degree;
    for (std::size_t e = remaining / d + 1; e-- > 0;) {
      exps[idx] = static_cast<unsigned>(e);
      self(self, idx + 1, remaining - e * d);
    }
    exps[idx] = 0;
  };
  for (const auto& g : gens) {
    if (g.degree == 0) throw ValidationError("BadPresentation", "generator " + g.name + " has degree 0");
  }
  rec(rec, 0, degree);
  return out;
}

std::vector<std::size_t> primitive_degrees(CompactFamily family, std::size_t rank) {
  std::vector<std::size_t> out;
  switch (family) {
    case CompactFamily::kUnitary:
      for (std::size_t i = 1; i <= rank; ++i) out.push_back(2 * i - 1);
      break;
    case CompactFamily::kSpecialUnitary:
      for (std::size_t i = 2; i <= rank; ++i) out.push_back(2 * i - 1);
      break;
    case CompactFamily::kSymplectic:
      for (std::size_t i = 1; i <= rank; ++i) out.push_back(4 * i - 1);
      break;
    case CompactFamily::kOrthogonal: {
      if (rank == 2) {
        out.push_back(1);
        break;
      }
      const std::size_t q = rank / 2;
      const std::size_t count = rank % 2 == 1 ? q : q - 1;
      for (std::size_t i = 1; i <= count; ++i) out.push_back(4 * i - 1);
      if (rank % 2 == 0) out.push_back(2 * q - 1);
      std::sort(out.begin(), out.end());
      break;
    }
    case CompactFamily::kCustom:
      break;
  }
  return out;
}

std::vector<std::size_t> exterior_betti(const std::vector<std::size_t>& degrees) {
  std::vector<std::size_t> poly{1};
  for (std::size_t d : degrees) {
    std::vector<std::size_t> next(poly.size() + d, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + d] += poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

namespace {

std::string family_prefix(CompactFamily f) {
  switch (f) {
    case CompactFamily::kUnitary:
      return "u";
    case CompactFamily::kSpecialUnitary:
      return "su";
    case CompactFamily::kOrthogonal:
      return "so";
    case CompactFamily::kSymplectic:
      return "sp";
    case CompactFamily::kCustom:
      break;
  }
  return "custom";
}

GradedRingPresentation classifying_ring(CompactFamily family, std::size_t n, bool& torsion) {
  GradedRingPresentation p;
  const std::string ns = std::to_string(n);
  torsion = false;
  auto gen = [&](const std::string& name, std::size_t degree) { p.generators.push_back({name, degree}); };
  switch (family) {
    case CompactFamily::kUnitary:
      p.name = "BU_" + ns;
      for (std::size_t i = 1; i <= n; ++i) gen("C_" + std::to_string(i), 2 * i);
      p.note = "free polynomial ring on Chern classes";
      break;
    case CompactFamily::kSpecialUnitary:
      p.name = "BSU_" + ns;
      for (std::size_t i = 2; i <= n; ++i) gen("C_" + std::to_string(i), 2 * i);
      p.note = "free polynomial ring on Chern classes";
      break;
    case CompactFamily::kSymplectic:
      p.name = "BSp_" + ns;
      for (std::size_t i = 1; i <= n; ++i) gen("Q_" + std::to_string(i), 4 * i);
      p.note = "free polynomial ring on symplectic Pontryagin classes";
      break;
    case CompactFamily::kOrthogonal: {
      p.name = "BSO_" + ns;
      if (n == 2) {
        gen("C_1", 2);
        p.note = "free polynomial ring on the Euler class";
        break;
      }
      torsion = true;
      const std::size_t q = n / 2;
      if (n % 2 == 1) {
        for (std::size_t i = 1; i <= q; ++i) gen("P_" + std::to_string(i), 4 * i);
        p.note = "free part: polynomial ring on Pontryagin classes; 2-torsion omitted";
      } else {
        for (std::size_t i = 1; i < q; ++i) gen("P_" + std::to_string(i), 4 * i);
        gen("E_" + std::to_string(q), 2 * q);
        p.relations.push_back({q - 1, 2, "P_" + std::to_string(q)});
        p.note = "free part: Pontryagin classes and the Euler class with E_" + std::to_string(q) +
                 "^2 = P_" + std::to_string(q) + "; 2-torsion omitted";
      }
      break;
    }
    case CompactFamily::kCustom:
      p.name = "none";
      p.note = "no classifying-space data for custom pairs";
      break;
  }
  return p;
}

struct ModelParts {
  MatrixBasis k;
  MatrixBasis p;
  MatrixRep k_rep;
};

ComplexMatrix realify_unitary(const ComplexMatrix& z) {
  const std::size_t n = z.size();
  ComplexMatrix re = mat::zero(n);
  ComplexMatrix im = mat::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      re[i][j] = GaussianRational(z[i][j].re);
      im[i][j] = GaussianRational(z[i][j].im);
    }
  }
  return mat::blocks(re, im, mat::scale(GaussianRational(-1), im), re);
}

MatrixRep rep_of_basis(const MatrixBasis& b) {
  MatrixRep rep;
  rep.size = b.matrices.empty() ? 0 : b.matrices.front().size();
  rep.images = b.matrices;
  return rep;
}

MatrixBasis hermitian_traceless(std::size_t n) {
  const GaussianRational i = GaussianRational::i();
  MatrixBasis b;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      b.add(mat::symmetric(n, r, c), "S" + std::to_string(r + 1) + std::to_string(c + 1));
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      b.add(mat::scale(i, mat::antisymmetric(n, r, c)), "iA" + std::to_string(r + 1) + std::to_string(c + 1));
    }
  }
  for (std::size_t r = 0; r + 1 < n; ++r) b.add(mat::diagonal_step(n, r), "H" + std::to_string(r + 1));
  return b;
}

ModelParts model_sl_real(std::size_t n) {
  ModelParts m{models::so(n), models::symmetric_traceless(n), {}};
  m.k_rep = rep_of_basis(m.k);
  return m;
}

ModelParts model_sl_complex(std::size_t n) {
  ModelParts m{models::su(n), hermitian_traceless(n), {}};
  m.k_rep = rep_of_basis(m.k);
  return m;
}

ModelParts model_sp_real(std::size_t n) {
  const MatrixBasis un = models::u(n);
  ModelParts m;
  for (std::size_t i = 0; i < un.matrices.size(); ++i) m.k.add(realify_unitary(un.matrices[i]), un.labels[i]);
  m.k_rep = rep_of_basis(un);
  const ComplexMatrix z = mat::zero(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      const ComplexMatrix s = r == c ? mat::unit(n, r, r) : mat::symmetric(n, r, c);
      m.p.add(mat::blocks(s, z, z, mat::scale(GaussianRational(-1), s)),
              "S" + std::to_string(r + 1) + std::to_string(c + 1));
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      const ComplexMatrix s = r == c ? mat::unit(n, r, r) : mat::symmetric(n, r, c);
      m.p.add(mat::blocks(z, s, s, z), "T" + std::to_string(r + 1) + std::to_string(c + 1));
    }
  }
  return m;
}

ModelParts model_su_star(std::size_t n) {
  ModelParts m;
  m.k = models::sp_compact(n);
  m.k_rep = rep_of_basis(m.k);
  const ComplexMatrix z = mat::zero(n);
  const MatrixBasis herm = hermitian_traceless(n);
  for (std::size_t i = 0; i < herm.matrices.size(); ++i) {
    m.p.add(mat::blocks(herm.matrices[i], z, z, mat::conjugate(herm.matrices[i])), herm.labels[i]);
  }
  const GaussianRational im = GaussianRational::i();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      for (const bool imaginary : {false, true}) {
        const ComplexMatrix a = mat::antisymmetric(n, r, c);
        const ComplexMatrix b = imaginary ? mat::scale(im, a) : a;
        m.p.add(mat::blocks(z, mat::scale(GaussianRational(-1), mat::conjugate(b)), b, z),
                std::string(imaginary ? "iB" : "B") + std::to_string(r + 1) + std::to_string(c + 1));
      }
    }
  }
  return m;
}

ModelParts model_compact(const MatrixBasis& k) {
  ModelParts m{k, {}, {}};
  m.k_rep = rep_of_basis(k);
  return m;
}

void finish(GroupSpec& spec, ModelParts parts) {
  MatrixBasis all = parts.k;
  all.append(parts.p);
  spec.g = algebra_from_matrices(all);
  std::vector<std::size_t> k_idx(parts.k.matrices.size());
  std::iota(k_idx.begin(), k_idx.end(), 0);
  std::vector<std::size_t> p_idx(parts.p.matrices.size());
  std::iota(p_idx.begin(), p_idx.end(), k_idx.size());
  spec.decomposition = decomposition_from_indices(spec.g, k_idx, p_idx);
  spec.k = std::make_shared<const LieAlgebra>(spec.decomposition.k_algebra());
  spec.k_rep = std::move(parts.k_rep);
  verify_representation(*spec.k, spec.k_rep);
  spec.bk = classifying_ring(spec.k_family, spec.k_rank, spec.torsion_omitted);
  spec.k_primitive_degrees = primitive_degrees(spec.k_family, spec.k_rank);
  spec.k_name = family_prefix(spec.k_family) + "_" + std::to_string(spec.k_rank);
  if (!compact_dual_check(spec)) throw InternalError("compact dual of " + spec.name + " is not compact");
}

std::shared_ptr<const GroupSpec> build(const std::string& family, std::size_t n, char field) {
  auto spec = std::make_shared<GroupSpec>();
  const std::string ns = std::to_string(n);
  if (family == "SL" && field == 'R' && n >= 2 && n <= 6) {
    spec->name = "SL(" + ns + ",R)";
    spec->g_name = "sl_" + ns + "(R)";
    spec->dual_name = "SU(" + ns + ")";
    spec->k_family = CompactFamily::kOrthogonal;
    spec->k_rank = n;
    finish(*spec, model_sl_real(n));
  } else if (family == "SL" && field == 'C' && n >= 2 && n <= 3) {
    spec->name = "SL(" + ns + ",C)";
    spec->g_name = "sl_" + ns + "(C)";
    spec->dual_name = "SU(" + ns + ") x SU(" + ns + ")";
    spec->k_family = CompactFamily::kSpecialUnitary;
    spec->k_rank = n;
    spec->index_discrepancy = true;
    finish(*spec, model_sl_complex(n));
  } else if (family == "Sp" && field == 'R' && n >= 1 && n <= 2) {
    spec->name = "Sp(" + ns + ",R)";
    spec->g_name = "sp_" + ns + "(R)";
    spec->dual_name = "Sp(" + ns + ")";
    spec->k_family = CompactFamily::kUnitary;
    spec->k_rank = n;
    finish(*spec, model_sp_real(n));
  } else if (family == "SU*" && field == 0 && n == 4) {
    spec->name = "SU*(" + ns + ")";
    spec->g_name = "su*_" + ns;
    spec->dual_name = "SU(" + ns + ")";
    spec->k_family = CompactFamily::kSymplectic;
    spec->k_rank = n / 2;
    finish(*spec, model_su_star(n / 2));
  } else if (family == "SU" && field == 0 && n >= 2 && n <= 4) {
    spec->name = "SU(" + ns + ")";
    spec->g_name = "su_" + ns;
    spec->dual_name = spec->name;
    spec->k_family = CompactFamily::kSpecialUnitary;
    spec->k_rank = n;
    finish(*spec, model_compact(models::su(n)));
  } else if (family == "SO" && field == 0 && n >= 3 && n <= 5) {
    spec->name = "SO(" + ns + ")";
    spec->g_name = "so_" + ns;
    spec->dual_name = spec->name;
    spec->k_family = CompactFamily::kOrthogonal;
    spec->k_rank = n;
    finish(*spec, model_compact(models::so(n)));
  } else {
    return nullptr;
  }
  return spec;
}

}  // namespace

std::shared_ptr<const GroupSpec> builtin_group(const std::string& name) {
  static const std::regex grammar(R"(^\s*(SL|SU\*|SU|SO|Sp)\s*\(\s*(\d{1,2})\s*(?:,\s*([RC])\s*)?\)\s*$)");
  std::smatch match;
  if (!std::regex_match(name, match, grammar)) throw UnknownGroup(name);
  const std::string family = match[1];
  const std::size_t n = std::stoul(match[2]);
  const char field = match[3].matched ? match[3].str()[0] : 0;
  const std::string key = family + "/" + std::to_string(n) + "/" + std::string(1, field ? field : '-');

  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const GroupSpec>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto spec = build(family, n, field);
  if (!spec) throw UnknownGroup(name);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(spec)).first->second;
}

std::vector<std::string> builtin_group_names() {
  return {"SL(2,R)", "SL(3,R)", "SL(4,R)", "SL(5,R)", "SL(6,R)", "SL(2,C)", "SL(3,C)", "SU*(4)", "Sp(1,R)",
          "Sp(2,R)", "SU(2)",   "SU(3)",   "SU(4)",   "SO(3)",   "SO(4)",   "SO(5)"};
}

std::shared_ptr<const GroupSpec> custom_group(const std::string& name, const LieAlgebra& g,
                                              const CartanDecomposition& dec) {
  auto spec = std::make_shared<GroupSpec>();
  spec->name = name;
  spec->g_name = name;
  spec->k_name = "custom";
  spec->dual_name = "compact dual of " + name;
  spec->g = g;
  spec->decomposition = dec;
  spec->k = std::make_shared<const LieAlgebra>(dec.k_algebra());
  spec->k_family = CompactFamily::kCustom;
  bool torsion = false;
  spec->bk = classifying_ring(CompactFamily::kCustom, 0, torsion);
  return spec;
}

std::vector<InvariantPolynomial> generator_forms(const GroupSpec& spec, std::size_t max_degree) {
  if (spec.k_family == CompactFamily::kCustom) return {};
  return generators_from_model(family_prefix(spec.k_family), spec.k, spec.k_rep, max_degree);
}

CrosscheckResult k_cohomology_crosscheck(const GroupSpec& spec, const ComputeOptions& options) {
  CrosscheckResult result;
  const LieAlgebra& k = *spec.k;
  const auto complex = full_complex(k, CoefficientModule::trivial(k), k.dim(), options);
  CohomologyOptions co;
  co.representatives = false;
  co.compute = options;
  result.computed = cohomology(complex, k.dim(), co).betti_numbers();
  result.expected = exterior_betti(spec.k_primitive_degrees);
  result.passed = spec.k_family != CompactFamily::kCustom && result.computed == result.expected;
  return result;
}

bool compact_dual_check(const GroupSpec& spec) {
  const LieAlgebra dual = compact_dual(spec.decomposition);
  if (!linalg::is_negative_definite(dual.killing_form())) return false;
  const std::size_t dk = spec.decomposition.k_dim();
  std::vector<std::size_t> k_idx(dk);
  std::iota(k_idx.begin(), k_idx.end(), 0);
  std::vector<std::size_t> p_idx(dual.dim() - dk);
  std::iota(p_idx.begin(), p_idx.end(), dk);
  const LieAlgebra twice = compact_dual(decomposition_from_indices(dual, k_idx, p_idx));
  return twice == spec.decomposition.adapted();
}

}  // namespace symcoh
