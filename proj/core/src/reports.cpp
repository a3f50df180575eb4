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


#include "symcoh/reports.hpp"

#include <sstream>

namespace symcoh {

namespace {

std::string power(const std::string& base, std::size_t exponent) { return base + "^" + std::to_string(exponent); }

std::string les_description(std::size_t real_rank, std::size_t torus_rank, std::size_t ker_rank) {
  std::string left;
  if (real_rank > 0) left = power("ℝ", real_rank);
  if (torus_rank > 0) left += (left.empty() ? "" : " ⊕ ") + power("(ℝ/ℤ)", torus_rank);
  if (left.empty()) left = "0";
  const std::string right = ker_rank > 0 ? power("ℤ", ker_rank) : "0";
  if (left == "0" && right == "0") return "0";
  return "0 → " + left + " → H^n → " + right + " → 0";
}

enum class Mode { kSplit, kLes, kAuto };

GroupCohomologyReport build(const GroupSpec& spec, std::size_t max_degree, const ReportOptions& options, Mode mode) {
  const std::size_t top = max_degree + 1;
  GroupCohomologyReport report;
  report.group = spec.name;
  report.g_name = spec.g_name;
  report.k_name = spec.k_name;
  report.dual_name = spec.dual_name;
  report.coefficients = spec.coefficients;
  report.bk_name = spec.bk.name;
  report.bk_generators = spec.bk.generators;
  report.max_degree = max_degree;
  report.torsion_omitted = spec.torsion_omitted;
  report.index_discrepancy = spec.index_discrepancy;

  report.ncz = is_ncz(spec.g, spec.decomposition.k_basis(), CoefficientModule::trivial(spec.g), top, options.compute);
  if (mode == Mode::kSplit && !report.ncz.kappa_verdict) throw NczFailed(report.ncz.first_failure.value_or(0));
  const bool split = mode == Mode::kSplit || (mode == Mode::kAuto && report.ncz.kappa_verdict);
  report.form = split ? "split" : "les";

  const CohomologyResult rel = relative_cohomology(spec, top, options.compute);
  for (std::size_t n = 0; n <= max_degree; ++n) report.relative_betti.push_back(rel.betti(n));

  std::vector<std::size_t> eps_rank(top + 2, 0);
  std::vector<std::size_t> bk_rank(top + 2, 0);
  for (std::size_t n = 1; n <= top; ++n) {
    bk_rank[n] = monomial_basis(spec.bk, n).size();
    if (n % 2 == 1 || bk_rank[n] == 0) continue;
    EpsilonResult eps = epsilon_rank(spec, n, rel, options.compute.threads);
    eps_rank[n] = eps.rank;
    report.epsilon.emplace(n, std::move(eps));
  }

  bool eps_vanishes = true;
  for (std::size_t n = 1; n <= max_degree; ++n) {
    ReportDegree d;
    d.degree = n;
    d.ncz = n >= report.ncz.degrees.size() || report.ncz.degrees[n].injective;
    for (const auto& nd : report.ncz.degrees) {
      if (nd.degree == n) d.ncz = nd.injective;
    }
    d.relative_betti = rel.betti(n);
    d.bk_free_rank_next = bk_rank[n + 1];
    d.epsilon_rank = eps_rank[n];
    d.epsilon_rank_next = eps_rank[n + 1];
    d.coker_rank = d.relative_betti - d.epsilon_rank;
    d.ker_rank_next = d.bk_free_rank_next - d.epsilon_rank_next;
    d.hopf = n % 2 == 1;
    eps_vanishes = eps_vanishes && d.epsilon_rank == 0 && d.epsilon_rank_next == 0;
    if (split || (d.epsilon_rank == 0 && d.epsilon_rank_next == 0)) {
      d.description = split_description(d.relative_betti, d.bk_free_rank_next);
    } else {
      d.description = les_description(d.coker_rank, d.epsilon_rank, d.ker_rank_next);
    }
    report.degrees.push_back(std::move(d));
  }

  if (options.absolute_betti) {
    CohomologyOptions co;
    co.representatives = false;
    co.compute = options.compute;
    report.absolute_betti =
        cohomology(full_complex(spec.g, CoefficientModule::trivial(spec.g), max_degree, options.compute), max_degree,
                   co)
            .betti_numbers();
  }

  if (spec.k_family == CompactFamily::kCustom) {
    report.caveats.push_back("no classifying-space data for a custom pair; integral ranks and epsilon are not available");
  }
  if (spec.torsion_omitted) {
    report.caveats.push_back("torsion of H^*(" + spec.bk.name + "; Z) is omitted; only free ranks are reported");
  }
  report.caveats.push_back("epsilon ranks and kernel relations are computed over Q; the integral lattice is not checked");
  if (spec.index_discrepancy) {
    report.caveats.push_back(
        "the classifying-space summand is taken in degree n+1; displays pairing H^n(BK; Z) with degree n are off by one");
  }
  if (!split) report.caveats.push_back("H^n is determined only up to the displayed extension");
  if (split && !eps_vanishes) report.caveats.push_back("epsilon is nonzero although kappa is injective");
  return report;
}

}  // namespace

std::string split_description(std::size_t real_rank, std::size_t integral_rank) {
  std::string out;
  if (real_rank > 0) out = power("ℝ", real_rank);
  if (integral_rank > 0) out += (out.empty() ? "" : " ⊕ ") + power("ℤ", integral_rank);
  return out.empty() ? "0" : out;
}

GroupCohomologyReport assemble_split(const GroupSpec& spec, std::size_t max_degree, const ReportOptions& options) {
  return build(spec, max_degree, options, Mode::kSplit);
}

GroupCohomologyReport les_report(const GroupSpec& spec, std::size_t max_degree, const ReportOptions& options) {
  return build(spec, max_degree, options, Mode::kLes);
}

GroupCohomologyReport full_report(const GroupSpec& spec, std::size_t max_degree, ReportOptions options) {
  options.absolute_betti = true;
  return build(spec, max_degree, options, Mode::kAuto);
}

bool operator==(const GroupCohomologyReport& a, const GroupCohomologyReport& b) { return to_json(a) == to_json(b); }

// JSON

Json rational_json(const Rational& value) { return value.str(); }

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  throw ParseError("expected a rational as \"num/den\" string");
}

namespace {

template <typename T>
T field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

const Json& sub(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

}  // namespace

Json to_json(const NczResult& ncz) {
  Json doc;
  doc["verdict"] = ncz.kappa_verdict;
  doc["first_failure"] = ncz.first_failure ? Json(*ncz.first_failure) : Json(nullptr);
  doc["odd_generation"] = ncz.odd_generation_verdict ? Json(*ncz.odd_generation_verdict) : Json(nullptr);
  doc["paths_agree"] = ncz.paths_agree;
  doc["relative_betti"] = ncz.relative_betti;
  Json degrees = Json::array();
  for (const auto& d : ncz.degrees) {
    degrees.push_back(
        {{"degree", d.degree}, {"relative_betti", d.relative_betti}, {"kappa_rank", d.kappa_rank}, {"injective", d.injective}});
  }
  doc["degrees"] = std::move(degrees);
  return doc;
}

NczResult ncz_from_json(const Json& doc) {
  NczResult ncz;
  ncz.kappa_verdict = field<bool>(doc, "verdict");
  const Json& ff = sub(doc, "first_failure");
  if (!ff.is_null()) ncz.first_failure = ff.get<std::size_t>();
  const Json& og = sub(doc, "odd_generation");
  if (!og.is_null()) ncz.odd_generation_verdict = og.get<bool>();
  ncz.paths_agree = field<bool>(doc, "paths_agree");
  ncz.relative_betti = field<std::vector<std::size_t>>(doc, "relative_betti");
  for (const auto& d : sub(doc, "degrees")) {
    ncz.degrees.push_back({field<std::size_t>(d, "degree"), field<std::size_t>(d, "relative_betti"),
                           field<std::size_t>(d, "kappa_rank"), field<bool>(d, "injective")});
  }
  return ncz;
}

Json to_json(const EpsilonResult& eps) {
  Json doc;
  doc["degree"] = eps.degree;
  doc["rank"] = eps.rank;
  doc["hopf_vanishing"] = eps.hopf_vanishing;
  doc["relative_betti"] = eps.relative_betti;
  Json monomials = Json::array();
  for (const auto& m : eps.monomials) {
    Json coords = Json::array();
    for (const auto& c : m.class_coordinates) coords.push_back(rational_json(c));
    monomials.push_back({{"monomial", m.monomial}, {"nonzero", m.nonzero}, {"class", std::move(coords)}});
  }
  doc["monomials"] = std::move(monomials);
  doc["kernel"] = eps.kernel;
  return doc;
}

EpsilonResult epsilon_from_json(const Json& doc) {
  EpsilonResult eps;
  eps.degree = field<std::size_t>(doc, "degree");
  eps.rank = field<std::size_t>(doc, "rank");
  eps.hopf_vanishing = field<bool>(doc, "hopf_vanishing");
  eps.relative_betti = field<std::size_t>(doc, "relative_betti");
  for (const auto& m : sub(doc, "monomials")) {
    MonomialVerdict v;
    v.monomial = field<std::string>(m, "monomial");
    v.nonzero = field<bool>(m, "nonzero");
    for (const auto& c : sub(m, "class")) v.class_coordinates.push_back(rational_from_json(c));
    eps.monomials.push_back(std::move(v));
  }
  eps.kernel = field<std::vector<std::string>>(doc, "kernel");
  return eps;
}

Json to_json(const GroupCohomologyReport& report) {
  Json doc;
  doc["group"] = report.group;
  doc["g"] = report.g_name;
  doc["k"] = report.k_name;
  doc["dual"] = report.dual_name;
  doc["coefficients"] = report.coefficients;
  Json gens = Json::array();
  for (const auto& g : report.bk_generators) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  doc["classifying_space"] = {{"name", report.bk_name}, {"generators", std::move(gens)}};
  doc["max_degree"] = report.max_degree;
  doc["form"] = report.form;
  doc["torsion_omitted"] = report.torsion_omitted;
  doc["index_discrepancy"] = report.index_discrepancy;
  doc["relative_betti"] = report.relative_betti;
  doc["absolute_betti"] = report.absolute_betti;
  doc["ncz"] = to_json(report.ncz);
  Json summary = Json::object();
  Json details = Json::object();
  for (const auto& [n, eps] : report.epsilon) {
    Json nonzero = Json::array();
    for (const auto& m : eps.monomials) {
      if (m.nonzero) nonzero.push_back(m.monomial);
    }
    summary[std::to_string(n)] = {{"rank", eps.rank}, {"nonzero_monomials", std::move(nonzero)}};
    details[std::to_string(n)] = to_json(eps);
  }
  doc["epsilon"] = std::move(summary);
  doc["epsilon_details"] = std::move(details);
  Json degrees = Json::array();
  for (const auto& d : report.degrees) {
    degrees.push_back({{"degree", d.degree},
                       {"ncz", d.ncz},
                       {"relative_betti", d.relative_betti},
                       {"bk_free_rank_next", d.bk_free_rank_next},
                       {"epsilon_rank", d.epsilon_rank},
                       {"epsilon_rank_next", d.epsilon_rank_next},
                       {"coker_rank", d.coker_rank},
                       {"ker_rank_next", d.ker_rank_next},
                       {"hopf", d.hopf},
                       {"description", d.description}});
  }
  doc["cohomology"] = std::move(degrees);
  doc["caveats"] = report.caveats;
  return doc;
}

GroupCohomologyReport report_from_json(const Json& doc) {
  GroupCohomologyReport r;
  r.group = field<std::string>(doc, "group");
  r.g_name = field<std::string>(doc, "g");
  r.k_name = field<std::string>(doc, "k");
  r.dual_name = field<std::string>(doc, "dual");
  r.coefficients = field<std::string>(doc, "coefficients");
  const Json& bk = sub(doc, "classifying_space");
  r.bk_name = field<std::string>(bk, "name");
  for (const auto& g : sub(bk, "generators")) {
    r.bk_generators.push_back({field<std::string>(g, "name"), field<std::size_t>(g, "degree")});
  }
  r.max_degree = field<std::size_t>(doc, "max_degree");
  r.form = field<std::string>(doc, "form");
  if (r.form != "split" && r.form != "les") throw ParseError("unknown report form '" + r.form + "'");
  r.torsion_omitted = field<bool>(doc, "torsion_omitted");
  r.index_discrepancy = field<bool>(doc, "index_discrepancy");
  r.relative_betti = field<std::vector<std::size_t>>(doc, "relative_betti");
  r.absolute_betti = field<std::vector<std::size_t>>(doc, "absolute_betti");
  r.ncz = ncz_from_json(sub(doc, "ncz"));
  for (const auto& [key, value] : sub(doc, "epsilon_details").items()) {
    std::size_t n = 0;
    try {
      n = std::stoul(key);
    } catch (const std::exception&) {
      throw ParseError("bad epsilon degree '" + key + "'");
    }
    r.epsilon.emplace(n, epsilon_from_json(value));
  }
  for (const auto& d : sub(doc, "cohomology")) {
    ReportDegree e;
    e.degree = field<std::size_t>(d, "degree");
    e.ncz = field<bool>(d, "ncz");
    e.relative_betti = field<std::size_t>(d, "relative_betti");
    e.bk_free_rank_next = field<std::size_t>(d, "bk_free_rank_next");
    e.epsilon_rank = field<std::size_t>(d, "epsilon_rank");
    e.epsilon_rank_next = field<std::size_t>(d, "epsilon_rank_next");
    e.coker_rank = field<std::size_t>(d, "coker_rank");
    e.ker_rank_next = field<std::size_t>(d, "ker_rank_next");
    e.hopf = field<bool>(d, "hopf");
    e.description = field<std::string>(d, "description");
    r.degrees.push_back(std::move(e));
  }
  r.caveats = field<std::vector<std::string>>(doc, "caveats");
  return r;
}

std::string render_text(const GroupCohomologyReport& report) {
  std::ostringstream os;
  auto list = [&](const std::vector<std::size_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  };
  os << report.group << "  (g = " << report.g_name << ", k = " << report.k_name << ", dual " << report.dual_name
     << ")\n";
  os << "classifying space: " << report.bk_name;
  if (!report.bk_generators.empty()) {
    os << " on";
    for (const auto& g : report.bk_generators) os << " " << g.name << "(" << g.degree << ")";
  }
  os << "\nrelative betti:  ";
  list(report.relative_betti);
  os << "\n";
  if (!report.absolute_betti.empty()) {
    os << "absolute betti:  ";
    list(report.absolute_betti);
    os << "\n";
  }
  os << "n.c.z.: " << (report.ncz.kappa_verdict ? "true" : "false");
  if (report.ncz.first_failure) os << " (fails at degree " << *report.ncz.first_failure << ")";
  if (report.ncz.odd_generation_verdict) {
    os << "; odd generation: " << (*report.ncz.odd_generation_verdict ? "true" : "false");
    os << "; paths agree: " << (report.ncz.paths_agree ? "yes" : "NO");
  }
  os << "\n";
  for (const auto& [n, eps] : report.epsilon) {
    os << "epsilon^" << n << ": rank " << eps.rank << " of " << eps.monomials.size() << " monomial(s)\n";
    for (const auto& m : eps.monomials) {
      os << "  epsilon^" << n << "(" << m.monomial << ") " << (m.nonzero ? "!= 0" : "= 0") << "\n";
    }
    for (const auto& k : eps.kernel) os << "  kernel: " << k << "\n";
  }
  os << "H^n(" << report.group << "; U(1)), " << (report.form == "split" ? "split form" : "exact sequence form")
     << ":\n";
  for (const auto& d : report.degrees) {
    os << "  n=" << d.degree << ": " << d.description;
    if (report.form == "les") {
      os << "  [relative betti " << d.relative_betti << ", eps rank " << d.epsilon_rank << ", ker rank "
         << d.ker_rank_next << "]";
    }
    if (d.hopf) os << "  (odd degree: epsilon vanishes)";
    os << "\n";
  }
  if (report.torsion_omitted) os << "torsion omitted\n";
  if (report.index_discrepancy) os << "index discrepancy flagged\n";
  for (const auto& c : report.caveats) os << "note: " << c << "\n";
  return os.str();
}

}  // namespace symcoh
