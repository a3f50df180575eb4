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


#include "symcoh/epsilon.hpp"

#include "parallel.hpp"

namespace symcoh {

CohomologyResult relative_cohomology(const GroupSpec& spec, std::size_t max_degree, const ComputeOptions& options) {
  const auto complex = relative_complex(spec.g, spec.decomposition.k_basis(), CoefficientModule::trivial(spec.g),
                                        max_degree, options);
  CohomologyOptions co;
  co.compute = options;
  return cohomology(complex, max_degree, co);
}

InvariantPolynomial monomial_form(const GroupSpec& spec, const Monomial& monomial,
                                  const std::vector<InvariantPolynomial>& generators) {
  InvariantPolynomial form = unit_polynomial(spec.k);
  for (std::size_t g = 0; g < monomial.exponents.size(); ++g) {
    if (monomial.exponents[g] == 0) continue;
    if (g >= generators.size()) throw InternalError("missing generator form for " + spec.bk.generators[g].name);
    for (unsigned e = 0; e < monomial.exponents[g]; ++e) form = poly_product(form, generators[g]);
  }
  form.set_name(monomial.display);
  return form;
}

std::string format_combination(const std::vector<std::pair<Rational, std::string>>& terms) {
  std::string out;
  for (const auto& [c, name] : terms) {
    if (c.is_zero()) continue;
    const Rational a = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (a != Rational(1)) out += a.str() + "*";
    out += name;
  }
  return out.empty() ? "0" : out;
}

EpsilonResult epsilon_rank(const GroupSpec& spec, std::size_t n, const CohomologyResult& relative,
                           unsigned threads) {
  EpsilonResult result;
  result.degree = n;
  if (n % 2 == 1) {
    result.hopf_vanishing = true;
    result.relative_betti = relative.betti(n);
    return result;
  }
  if (relative.max_degree() < n && n <= spec.decomposition.p_dim()) {
    throw InternalError("relative cohomology not computed through degree " + std::to_string(n));
  }
  result.relative_betti = relative.betti(n);
  const auto monomials = monomial_basis(spec.bk, n);
  const auto generators = generator_forms(spec, n);
  const std::size_t betti = result.relative_betti;
  result.monomials.resize(monomials.size());
  detail::parallel_for(monomials.size(), threads, [&](std::size_t i) {
    auto& verdict = result.monomials[i];
    verdict.monomial = monomials[i].display;
    if (betti == 0) {
      verdict.class_coordinates.assign(0, Rational());
      return;
    }
    const Cochain form = cw(monomial_form(spec, monomials[i], generators), spec.decomposition);
    auto cls = relative.class_of(form);
    if (!cls) throw InternalError("Chern-Weil form of " + verdict.monomial + " is not a relative cocycle");
    verdict.class_coordinates = std::move(*cls);
    for (const auto& c : verdict.class_coordinates) verdict.nonzero = verdict.nonzero || !c.is_zero();
  });

  std::vector<SparseVector> columns;
  for (const auto& v : result.monomials) columns.push_back(linalg::to_sparse(v.class_coordinates));
  const Matrix images(betti, columns);
  result.rank = linalg::rank(images);
  for (const auto& relation : linalg::kernel_basis(images)) {
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& e : relation) terms.emplace_back(e.value, result.monomials[e.index].monomial);
    result.kernel.push_back(format_combination(terms));
  }
  return result;
}

EpsilonResult epsilon_rank(const GroupSpec& spec, std::size_t n, const ComputeOptions& options) {
  return epsilon_rank(spec, n, relative_cohomology(spec, n, options), options.threads);
}

}  // namespace symcoh
