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


// Classical symmetric pairs (G, K) built from matrix models, with curated
// free-part presentations of H^*(BK; Z) and primitive degrees of H^*(K; R).

#ifndef SYMCOH_CATALOG_HPP
#define SYMCOH_CATALOG_HPP

#include <memory>
#include <string>
#include <vector>

#include "symcoh/chern_weil.hpp"
#include "symcoh/complex.hpp"

namespace symcoh {

class UnknownGroup : public ValidationError {
 public:
  explicit UnknownGroup(const std::string& name) : ValidationError("UnknownGroup", "unknown group '" + name + "'") {}
};

struct RingGenerator {
  std::string name;
  std::size_t degree = 0;  // cohomological
};

/// Display rewriting: generator^exponent is shown as `replacement`.
struct RingRelation {
  std::size_t generator = 0;
  unsigned exponent = 0;
  std::string replacement;
};

struct GradedRingPresentation {
  std::string name;
  std::vector<RingGenerator> generators;
  std::vector<RingRelation> relations;
  std::string note;
};

struct Monomial {
  std::vector<unsigned> exponents;  // one per generator
  std::size_t degree = 0;
  std::string display;
};

/// All monomials of the given cohomological degree, ordered by exponent
/// vectors (higher powers of earlier generators first).
std::vector<Monomial> monomial_basis(const GradedRingPresentation& presentation, std::size_t degree);

/// Family of the compact algebra k together with its rank parameter.
enum class CompactFamily { kUnitary, kSpecialUnitary, kOrthogonal, kSymplectic, kCustom };

struct GroupSpec {
  std::string name;
  std::string g_name;
  std::string k_name;
  std::string dual_name;
  LieAlgebra g;
  CartanDecomposition decomposition;
  std::shared_ptr<const LieAlgebra> k;
  CompactFamily k_family = CompactFamily::kCustom;
  std::size_t k_rank = 0;  // n in u_n, su_n, so_n, sp_n
  MatrixRep k_rep;
  GradedRingPresentation bk;
  std::vector<std::size_t> k_primitive_degrees;
  std::string coefficients = "Gamma = Z in a = R, A = U(1)";
  bool torsion_omitted = false;
  /// The split uses H^{n+1}(BK); classical displays for complex groups pair degree n.
  bool index_discrepancy = false;
};

/// Throws UnknownGroup.
std::shared_ptr<const GroupSpec> builtin_group(const std::string& name);
/// Names accepted by builtin_group, in canonical spelling.
std::vector<std::string> builtin_group_names();

/// A pair with no curated classifying-space data.
std::shared_ptr<const GroupSpec> custom_group(const std::string& name, const LieAlgebra& g,
                                              const CartanDecomposition& dec);

/// Forms realizing the generators of spec.bk (same order) on spec.k,
/// restricted to cohomological degree <= max_degree.
std::vector<InvariantPolynomial> generator_forms(const GroupSpec& spec, std::size_t max_degree);

/// Primitive degrees of H^*(K; R) for a compact family.
std::vector<std::size_t> primitive_degrees(CompactFamily family, std::size_t rank);
/// Betti numbers of the exterior algebra on generators of the given degrees.
std::vector<std::size_t> exterior_betti(const std::vector<std::size_t>& degrees);

struct CrosscheckResult {
  bool passed = false;
  std::vector<std::size_t> computed;
  std::vector<std::size_t> expected;
};

/// Compares H^*(k; R) from the engine with the primitive-degree table.
/// Throws SizeLimit.
CrosscheckResult k_cohomology_crosscheck(const GroupSpec& spec, const ComputeOptions& options = {});

/// Killing form of the compact dual is negative definite and dualizing twice
/// returns the original brackets.
bool compact_dual_check(const GroupSpec& spec);

}  // namespace symcoh

#endif  // SYMCOH_CATALOG_HPP
