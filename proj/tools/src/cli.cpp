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


#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "symcoh/json_io.hpp"
#include "symcoh/reports.hpp"

namespace symcoh::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string group;
  std::string algebra_file;
  std::string decomposition_file;
  std::string module_spec = "trivial";
  std::size_t max_degree = 4;
  std::string format = "text";
  std::optional<std::size_t> max_exterior_dim;
  unsigned threads = 1;
};

struct Inputs {
  LieAlgebra g;
  std::shared_ptr<const GroupSpec> pair;  // null when only an algebra was given
  CoefficientModule module;
  std::string name;
};

ComputeOptions compute_options(const Settings& s) {
  ComputeOptions o;
  o.threads = s.threads;
  if (s.max_exterior_dim) {
    o.max_exterior_dim = *s.max_exterior_dim;
  } else if (const char* env = std::getenv("SYMCOH_MAX_EXTERIOR_DIM")) {
    try {
      std::size_t pos = 0;
      o.max_exterior_dim = std::stoull(env, &pos);
      if (pos != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw UsageError("SYMCOH_MAX_EXTERIOR_DIM must be a non-negative integer");
    }
  }
  return o;
}

Inputs resolve(const Settings& s, bool need_pair) {
  const bool has_group = !s.group.empty();
  const bool has_files = !s.algebra_file.empty() || !s.decomposition_file.empty();
  if (has_group == has_files) throw UsageError("give exactly one input: --group NAME or --algebra FILE");
  Inputs in;
  if (has_group) {
    in.pair = builtin_group(s.group);
    in.g = in.pair->g;
    in.name = in.pair->name;
  } else {
    if (s.algebra_file.empty()) throw UsageError("--decomposition requires --algebra");
    in.g = algebra_from_json(load_json_file(s.algebra_file));
    in.name = std::filesystem::path(s.algebra_file).stem().string();
    if (!s.decomposition_file.empty()) {
      const auto dec = decomposition_from_json(in.g, load_json_file(s.decomposition_file));
      in.pair = custom_group(in.name, in.g, dec);
    }
  }
  if (need_pair && !in.pair) throw UsageError("this command needs a pair: --group NAME or --algebra with --decomposition");
  if (s.module_spec == "trivial") {
    in.module = CoefficientModule::trivial(in.g);
  } else {
    in.module = module_from_json(in.g, load_json_file(s.module_spec));
  }
  return in;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

Json header(const char* command, const Inputs& in) {
  Json doc;
  doc["command"] = command;
  doc["input"] = in.name;
  return doc;
}

void emit(const Settings& s, std::ostream& out, const Json& doc, const std::string& text) {
  if (s.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << text;
  }
}

void cmd_cohomology(const Settings& s, std::ostream& out) {
  const Inputs in = resolve(s, false);
  const ComputeOptions opts = compute_options(s);
  CohomologyOptions co;
  co.representatives = false;
  co.compute = opts;
  const auto betti = cohomology(full_complex(in.g, in.module, s.max_degree, opts), s.max_degree, co).betti_numbers();
  Json doc = header("cohomology", in);
  doc["dim"] = in.g.dim();
  doc["module_dim"] = in.module.dim();
  doc["betti"] = betti;
  emit(s, out, doc, "H^*(" + in.name + ") betti: " + join(betti) + "\n");
}

void cmd_relative(const Settings& s, std::ostream& out) {
  const Inputs in = resolve(s, true);
  const ComputeOptions opts = compute_options(s);
  CohomologyOptions co;
  co.representatives = false;
  co.compute = opts;
  const auto& dec = in.pair->decomposition;
  const auto betti =
      cohomology(relative_complex(in.g, dec.k_basis(), in.module, s.max_degree, opts), s.max_degree, co).betti_numbers();
  Json doc = header("relative", in);
  doc["k_dim"] = dec.k_dim();
  doc["p_dim"] = dec.p_dim();
  doc["relative_betti"] = betti;
  std::string text = "H^*((" + in.name + ", k)) relative betti: " + join(betti) + "\n";
  if (dec.parent_semisimple() && in.module.is_trivial() && in.module.dim() == 1) {
    const LieAlgebra dual = compact_dual(dec);
    std::vector<DenseVector> k_basis;
    for (std::size_t i = 0; i < dec.k_dim(); ++i) k_basis.push_back(unit_vector(dual.dim(), i));
    const auto dual_betti =
        cohomology(relative_complex(dual, k_basis, CoefficientModule::trivial(dual), s.max_degree, opts), s.max_degree,
                   co)
            .betti_numbers();
    doc["dual_relative_betti"] = dual_betti;
    text += "compact dual relative betti: " + join(dual_betti) + "\n";
  }
  emit(s, out, doc, text);
}

void cmd_ncz(const Settings& s, std::ostream& out) {
  const Inputs in = resolve(s, true);
  const auto result = is_ncz(in.g, in.pair->decomposition.k_basis(), in.module, s.max_degree, compute_options(s));
  Json doc = header("ncz", in);
  doc["max_degree"] = s.max_degree;
  doc["ncz"] = to_json(result);
  std::ostringstream text;
  text << "n.c.z. through degree " << s.max_degree << ": " << (result.kappa_verdict ? "true" : "false");
  if (result.first_failure) text << " (kappa fails at degree " << *result.first_failure << ")";
  text << "\n  kappa path: " << (result.kappa_verdict ? "true" : "false") << "\n";
  if (result.odd_generation_verdict) {
    text << "  odd generation path: " << (*result.odd_generation_verdict ? "true" : "false") << "\n";
    text << "  paths agree: " << (result.paths_agree ? "yes" : "NO") << "\n";
  } else {
    text << "  odd generation path: not applicable (nontrivial coefficients)\n";
  }
  for (const auto& d : result.degrees) {
    text << "  degree " << d.degree << ": relative betti " << d.relative_betti << ", kappa rank " << d.kappa_rank
         << (d.injective ? "" : "  <- not injective") << "\n";
  }
  emit(s, out, doc, text.str());
}

void cmd_chern_weil(const Settings& s, std::ostream& out) {
  const Inputs in = resolve(s, true);
  const GroupSpec& spec = *in.pair;
  const auto rel = relative_cohomology(spec, s.max_degree, compute_options(s));
  Json doc = header("chern-weil", in);
  Json forms = Json::array();
  std::ostringstream text;
  text << "Chern-Weil images of " << spec.bk.name << " generators in H^*((" << spec.g_name << ", " << spec.k_name
       << ")):\n";
  for (const auto& p : generator_forms(spec, s.max_degree)) {
    const bool invariant = invariance_check(p).invariant;
    const Cochain form = cw(p, spec.decomposition);
    const auto cls = rel.class_of(form);
    if (!cls) throw InternalError("Chern-Weil form of " + p.name() + " is not a relative cocycle");
    bool nonzero = false;
    Json coords = Json::array();
    for (const auto& c : *cls) {
      nonzero = nonzero || !c.is_zero();
      coords.push_back(rational_json(c));
    }
    forms.push_back({{"name", p.name()},
                     {"degree", 2 * p.degree()},
                     {"invariant", invariant},
                     {"nonzero", nonzero},
                     {"class", std::move(coords)},
                     {"cochain", to_json(form, spec.g.labels())}});
    text << "  cw(" << p.name() << ") in degree " << 2 * p.degree() << ": class " << (nonzero ? "nonzero" : "zero")
         << (invariant ? "" : " (form not invariant!)") << "\n";
  }
  doc["forms"] = std::move(forms);
  emit(s, out, doc, text.str());
}

void cmd_epsilon(const Settings& s, std::ostream& out) {
  const Inputs in = resolve(s, true);
  const GroupSpec& spec = *in.pair;
  const ComputeOptions opts = compute_options(s);
  const auto rel = relative_cohomology(spec, s.max_degree, opts);
  Json doc = header("epsilon", in);
  Json degrees = Json::object();
  std::ostringstream text;
  for (std::size_t n = 1; n <= s.max_degree; ++n) {
    const auto eps = epsilon_rank(spec, n, rel, opts.threads);
    degrees[std::to_string(n)] = to_json(eps);
    text << "epsilon^" << n << ": rank " << eps.rank;
    if (eps.hopf_vanishing) text << " (odd degree)";
    text << "\n";
    for (const auto& m : eps.monomials) {
      text << "  " << m.monomial << ": " << (m.nonzero ? "nonzero" : "zero") << "\n";
    }
    for (const auto& k : eps.kernel) text << "  kernel: " << k << "\n";
  }
  doc["epsilon"] = std::move(degrees);
  emit(s, out, doc, text.str());
}

void cmd_dual(const Settings& s, std::ostream& out) {
  const Inputs in = resolve(s, true);
  const auto& dec = in.pair->decomposition;
  const LieAlgebra dual = compact_dual(dec);
  const bool definite = linalg::is_negative_definite(dual.killing_form());
  const bool involution = compact_dual_check(*in.pair);
  Json doc = header("dual", in);
  doc["dual_name"] = in.pair->dual_name;
  doc["negative_definite"] = definite;
  doc["involution"] = involution && definite;
  doc["algebra"] = to_json(dual);
  std::ostringstream text;
  text << "compact dual of " << in.name << ": " << in.pair->dual_name << "\n"
       << "  Killing form negative definite: " << (definite ? "yes" : "no") << "\n"
       << "  dualizing twice restores the brackets: " << (involution ? "yes" : "no") << "\n";
  emit(s, out, doc, text.str());
}

void cmd_report(const Settings& s, std::ostream& out) {
  const Inputs in = resolve(s, true);
  ReportOptions ro;
  ro.compute = compute_options(s);
  const auto report = full_report(*in.pair, s.max_degree, ro);
  Json doc = to_json(report);
  emit(s, out, doc, render_text(report));
}

void cmd_crosscheck(const Settings& s, std::ostream& out) {
  const Inputs in = resolve(s, true);
  const GroupSpec& spec = *in.pair;
  Json doc = header("crosscheck", in);
  std::ostringstream text;
  bool ok = compact_dual_check(spec);
  doc["compact_dual"] = ok;
  text << "compact dual check: " << (ok ? "pass" : "FAIL") << "\n";
  if (spec.k_family != CompactFamily::kCustom) {
    const auto r = k_cohomology_crosscheck(spec, compute_options(s));
    doc["k_cohomology"] = {{"k", spec.k_name}, {"passed", r.passed}, {"computed", r.computed}, {"expected", r.expected}};
    text << "H^*(" << spec.k_name << ") computed " << join(r.computed) << ", expected " << join(r.expected) << ": "
         << (r.passed ? "pass" : "FAIL") << "\n";
    ok = ok && r.passed;
  }
  doc["passed"] = ok;
  emit(s, out, doc, text.str());
}

Json error_document(const Error& e) {
  Json err{{"kind", e.kind()}, {"message", e.what()}};
  if (const auto* j = dynamic_cast<const JacobiViolation*>(&e)) {
    err["witness"] = {j->i, j->j, j->k};
  } else if (const auto* b = dynamic_cast<const BracketViolation*>(&e)) {
    err["inclusion"] = b->inclusion;
    err["witness"] = {b->first, b->second};
  } else if (const auto* l = dynamic_cast<const SizeLimit*>(&e)) {
    err["requested"] = l->requested();
  } else if (const auto* n = dynamic_cast<const NczFailed*>(&e)) {
    err["degree"] = n->degree();
  }
  return Json{{"error", std::move(err)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative Lie algebra cohomology and characteristic classes of symmetric pairs", "symcoh"};
  app.require_subcommand(1);
  Settings s;
  std::string command;

  struct Command {
    const char* name;
    const char* help;
    void (*fn)(const Settings&, std::ostream&);
  };
  const std::vector<Command> commands = {
      {"cohomology", "Betti numbers of H^*(g; a)", cmd_cohomology},
      {"relative", "Betti numbers of the relative cohomology H^*((g, k); a)", cmd_relative},
      {"ncz", "Test whether k is non-cohomologous to zero in g", cmd_ncz},
      {"chern-weil", "Chern-Weil images of the classifying-space generators", cmd_chern_weil},
      {"epsilon", "Ranks of the characteristic morphisms", cmd_epsilon},
      {"dual", "Compact dual of the pair", cmd_dual},
      {"report", "Description of H^n(G; U(1))", cmd_report},
      {"crosscheck", "Catalog consistency checks", cmd_crosscheck},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--group", s.group, "Builtin group, e.g. SL(3,R), SU*(4), Sp(2,R), SL(2,C)");
    sub->add_option("--algebra", s.algebra_file, "Lie algebra JSON file");
    sub->add_option("--decomposition", s.decomposition_file, "Decomposition JSON file");
    sub->add_option("--module", s.module_spec, "trivial or a module JSON file")->capture_default_str();
    sub->add_option("--max-degree", s.max_degree, "Highest degree")->capture_default_str()->check(CLI::NonNegativeNumber);
    sub->add_option("--format", s.format, "Output format")->capture_default_str()->check(CLI::IsMember({"text", "json"}));
    sub->add_option_function<std::size_t>(
        "--max-exterior-dim", [&s](const std::size_t& v) { s.max_exterior_dim = v; },
        "Largest cochain space allowed (also SYMCOH_MAX_EXTERIOR_DIM)");
    sub->add_option("--threads", s.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    sub->callback([&command, name = c.name] { command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    for (const auto& c : commands) {
      if (command == c.name) c.fn(s, out);
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    if (s.format == "json") out << error_document(e).dump(2) << "\n";
    err << "error (" << e.kind() << "): " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    if (s.format == "json") out << error_document(e).dump(2) << "\n";
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace symcoh::cli
