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


// Characteristic morphisms: images of classifying-space monomials in the
// relative cohomology of a catalog pair.

#ifndef SYMCOH_EPSILON_HPP
#define SYMCOH_EPSILON_HPP

#include <string>
#include <vector>

#include "symcoh/catalog.hpp"

namespace symcoh {

struct MonomialVerdict {
  std::string monomial;
  bool nonzero = false;
  DenseVector class_coordinates;
};

struct EpsilonResult {
  std::size_t degree = 0;
  std::size_t rank = 0;
  /// Odd degree: the map vanishes since every generator has even degree.
  bool hopf_vanishing = false;
  std::size_t relative_betti = 0;
  std::vector<MonomialVerdict> monomials;
  /// Integral relations among the monomial classes, e.g. "C_1^2 - 2*C_2".
  std::vector<std::string> kernel;
};

/// Uses `relative`, the cohomology (with representatives) of the relative
/// complex of spec's pair computed through at least degree n.
EpsilonResult epsilon_rank(const GroupSpec& spec, std::size_t n, const CohomologyResult& relative,
                           unsigned threads = 1);
/// Computes the relative cohomology itself.
EpsilonResult epsilon_rank(const GroupSpec& spec, std::size_t n, const ComputeOptions& options = {});

/// Relative cohomology of spec's pair with representatives through max_degree.
CohomologyResult relative_cohomology(const GroupSpec& spec, std::size_t max_degree,
                                     const ComputeOptions& options = {});

/// The realized invariant form of a monomial.
InvariantPolynomial monomial_form(const GroupSpec& spec, const Monomial& monomial,
                                  const std::vector<InvariantPolynomial>& generators);

/// "a*X + b*Y" style rendering of an integral combination.
std::string format_combination(const std::vector<std::pair<Rational, std::string>>& terms);

}  // namespace symcoh

#endif  // SYMCOH_EPSILON_HPP
