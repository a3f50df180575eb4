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


// Descriptions of H^n(G; U(1)) for catalog pairs: the split form when the
// pair is non-cohomologous to zero, the long-exact-sequence form otherwise.

#ifndef SYMCOH_REPORTS_HPP
#define SYMCOH_REPORTS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symcoh/epsilon.hpp"

namespace symcoh {

class NczFailed : public ValidationError {
 public:
  explicit NczFailed(std::size_t degree)
      : ValidationError("NczFailed", "the pair is not non-cohomologous to zero (kappa fails at degree " +
                                         std::to_string(degree) + "); use the long exact sequence form"),
        degree_(degree) {}
  [[nodiscard]] std::size_t degree() const noexcept { return degree_; }

 private:
  std::size_t degree_;
};

struct ReportDegree {
  std::size_t degree = 0;
  bool ncz = true;
  std::size_t relative_betti = 0;
  std::size_t bk_free_rank_next = 0;
  std::size_t epsilon_rank = 0;
  std::size_t epsilon_rank_next = 0;
  std::size_t coker_rank = 0;
  std::size_t ker_rank_next = 0;
  bool hopf = false;
  std::string description;
  friend bool operator==(const ReportDegree&, const ReportDegree&) = default;
};

struct GroupCohomologyReport {
  std::string group;
  std::string g_name;
  std::string k_name;
  std::string dual_name;
  std::string coefficients;
  std::string bk_name;
  std::vector<RingGenerator> bk_generators;
  std::size_t max_degree = 0;
  std::string form;  // "split" or "les"
  bool torsion_omitted = false;
  bool index_discrepancy = false;
  std::vector<std::size_t> relative_betti;
  std::vector<std::size_t> absolute_betti;  // empty unless requested
  NczResult ncz;
  std::map<std::size_t, EpsilonResult> epsilon;  // degrees carrying monomials
  std::vector<ReportDegree> degrees;           // n = 1..max_degree
  std::vector<std::string> caveats;
};

bool operator==(const GroupCohomologyReport& a, const GroupCohomologyReport& b);

struct ReportOptions {
  ComputeOptions compute{};
  bool absolute_betti = false;
};

/// Split form. Throws NczFailed if kappa is not injective through max_degree + 1.
GroupCohomologyReport assemble_split(const GroupSpec& spec, std::size_t max_degree, const ReportOptions& options = {});
/// Long-exact-sequence form; always available.
GroupCohomologyReport les_report(const GroupSpec& spec, std::size_t max_degree, const ReportOptions& options = {});
/// Split form when available, otherwise the exact-sequence form; includes the
/// absolute Betti numbers of g.
GroupCohomologyReport full_report(const GroupSpec& spec, std::size_t max_degree, ReportOptions options = {});

/// "ℝ^a ⊕ ℤ^b", with zero summands dropped and "0" for the trivial group.
std::string split_description(std::size_t real_rank, std::size_t integral_rank);

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& value);
Rational rational_from_json(const Json& value);

Json to_json(const NczResult& ncz);
NczResult ncz_from_json(const Json& doc);
Json to_json(const EpsilonResult& eps);
EpsilonResult epsilon_from_json(const Json& doc);
Json to_json(const GroupCohomologyReport& report);
/// Throws ParseError.
GroupCohomologyReport report_from_json(const Json& doc);

std::string render_text(const GroupCohomologyReport& report);

}  // namespace symcoh

#endif  // SYMCOH_REPORTS_HPP
