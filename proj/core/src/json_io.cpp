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


#include "symcoh/json_io.hpp"

#include <fstream>
#include <sstream>

namespace symcoh {

namespace {

std::size_t index_field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const Json& v = doc.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

const Json& array_field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key) || !doc.at(key).is_array()) {
    throw ParseError(std::string("field '") + key + "' must be an array");
  }
  return doc.at(key);
}

DenseVector dense_vector(const Json& v, std::size_t dim) {
  if (!v.is_array() || v.size() != dim) throw ParseError("expected a vector of length " + std::to_string(dim));
  DenseVector out;
  for (const auto& x : v) out.push_back(rational_from_json(x));
  return out;
}

std::vector<std::size_t> index_list(const Json& v, std::size_t dim) {
  std::vector<std::size_t> out;
  for (const auto& x : v) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0 || x.get<std::size_t>() >= dim) {
      throw ParseError("basis index out of range");
    }
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
}

LieAlgebra algebra_from_json(const Json& doc) {
  const std::size_t dim = index_field(doc, "dim");
  if (dim > kMaxAlgebraDim) throw ParseError("algebra dimension exceeds " + std::to_string(kMaxAlgebraDim));
  std::vector<std::string> labels;
  if (doc.contains("basis")) {
    for (const auto& l : array_field(doc, "basis")) {
      if (!l.is_string()) throw ParseError("basis labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != dim) throw ParseError("basis has " + std::to_string(labels.size()) + " labels, dim is " +
                                               std::to_string(dim));
  }
  std::vector<LieAlgebra::BracketSpec> brackets;
  for (const auto& b : array_field(doc, "brackets")) {
    const std::size_t i = index_field(b, "i");
    const std::size_t j = index_field(b, "j");
    if (i >= j) throw ParseError("bracket entries must have i < j");
    if (j >= dim) throw ParseError("bracket index out of range");
    std::vector<linalg::Entry> entries;
    for (const auto& term : array_field(b, "result")) {
      if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer()) {
        throw ParseError("bracket result terms must be [index, scalar]");
      }
      const auto k = term[0].get<std::int64_t>();
      if (k < 0 || static_cast<std::size_t>(k) >= dim) throw ParseError("bracket result index out of range");
      entries.push_back({static_cast<Index>(k), rational_from_json(term[1])});
    }
    brackets.push_back({static_cast<Index>(i), static_cast<Index>(j), linalg::accumulate(std::move(entries))});
  }
  return LieAlgebra::create(dim, std::move(labels), std::move(brackets));
}

Json to_json(const LieAlgebra& g) {
  Json doc;
  doc["dim"] = g.dim();
  doc["basis"] = g.labels();
  Json brackets = Json::array();
  for (const auto& b : g.bracket_specs()) {
    Json result = Json::array();
    for (const auto& e : b.result) result.push_back(Json::array({e.index, rational_json(e.value)}));
    brackets.push_back({{"i", b.i}, {"j", b.j}, {"result", std::move(result)}});
  }
  doc["brackets"] = std::move(brackets);
  return doc;
}

CartanDecomposition decomposition_from_json(const LieAlgebra& g, const Json& doc) {
  if (!doc.is_object()) throw ParseError("decomposition must be an object");
  if (doc.contains("k_indices") || doc.contains("p_indices")) {
    const auto k = index_list(array_field(doc, "k_indices"), g.dim());
    const auto p = index_list(array_field(doc, "p_indices"), g.dim());
    return decomposition_from_indices(g, k, p);
  }
  std::vector<DenseVector> k;
  std::vector<DenseVector> p;
  for (const auto& v : array_field(doc, "k_basis")) k.push_back(dense_vector(v, g.dim()));
  for (const auto& v : array_field(doc, "p_basis")) p.push_back(dense_vector(v, g.dim()));
  return validate_decomposition(g, std::move(k), std::move(p));
}

CoefficientModule module_from_json(const LieAlgebra& g, const Json& doc) {
  const std::size_t m = index_field(doc, "dim");
  const Json& actions = array_field(doc, "actions");
  if (actions.size() != g.dim()) throw ParseError("module needs one action matrix per basis element");
  std::vector<Matrix> out;
  for (const auto& a : actions) {
    if (!a.is_array() || a.size() != m) throw ParseError("action matrices must be " + std::to_string(m) + " x " +
                                                         std::to_string(m));
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : a) rows.push_back(dense_vector(row, m));
    out.push_back(Matrix::from_dense(rows));
  }
  return CoefficientModule::create(g, std::move(out));
}

Json to_json(const Cochain& c, const std::vector<std::string>& labels) {
  Json doc;
  doc["degree"] = c.degree;
  doc["module_dim"] = c.module_dim;
  Json terms = Json::array();
  const ExteriorIndex& index = exterior_index(c.algebra_dim, c.degree);
  for (const auto& e : c.coords) {
    const Mask mask = index.subset(e.index / c.module_dim);
    Json args = Json::array();
    for (unsigned b : elements(mask)) args.push_back(b < labels.size() ? labels[b] : std::to_string(b));
    Json term{{"args", std::move(args)}, {"value", rational_json(e.value)}};
    if (c.module_dim > 1) term["component"] = e.index % c.module_dim;
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  return doc;
}

}  // namespace symcoh
