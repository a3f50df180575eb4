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


#include "symcoh/chern_weil.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>

namespace symcoh {

namespace {

Rational factorial(std::size_t n) {
  Rational r(1);
  for (std::size_t i = 2; i <= n; ++i) r *= Rational(static_cast<long>(i));
  return r;
}


ComplexMatrix rep_of(const MatrixRep& rep, const SparseVector& x) {
  ComplexMatrix out = mat::zero(rep.size);
  for (const auto& e : x) out = mat::add(out, mat::scale(GaussianRational(e.value), rep.images[e.index]));
  return out;
}

// Perfect matchings of {0, ..., 2q-1} as flat pair lists with their signs.
struct Matching {
  std::vector<std::uint8_t> pairs;
  int sign;
};

void matchings_rec(std::vector<std::uint8_t>& rest, std::vector<std::uint8_t>& current, int sign,
                   std::vector<Matching>& out) {
  if (rest.empty()) {
    out.push_back({current, sign});
    return;
  }
  const std::uint8_t first = rest.front();
  for (std::size_t j = 1; j < rest.size(); ++j) {
    const std::uint8_t partner = rest[j];
    std::vector<std::uint8_t> next;
    next.reserve(rest.size() - 2);
    for (std::size_t t = 1; t < rest.size(); ++t) {
      if (t != j) next.push_back(rest[t]);
    }
    current.push_back(first);
    current.push_back(partner);
    matchings_rec(next, current, (j % 2 == 1) ? sign : -sign, out);
    current.resize(current.size() - 2);
  }
}

const std::vector<Matching>& perfect_matchings(std::size_t points) {
  static std::vector<std::vector<Matching>> cache(17);
  static std::once_flag flags[17];
  if (points % 2 != 0 || points > 16) throw InternalError("unsupported matching size");
  std::call_once(flags[points], [&] {
    std::vector<std::uint8_t> rest(points);
    for (std::size_t i = 0; i < points; ++i) rest[i] = static_cast<std::uint8_t>(i);
    std::vector<std::uint8_t> current;
    matchings_rec(rest, current, 1, cache[points]);
  });
  return cache[points];
}

void multisets_rec(std::size_t dim, std::size_t m, std::size_t start, Multiset& cur, std::vector<Multiset>& out) {
  if (cur.size() == m) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < dim; ++i) {
    cur.push_back(static_cast<std::uint8_t>(i));
    multisets_rec(dim, m, i, cur, out);
    cur.pop_back();
  }
}

// Average of f over the distinct orderings of a sorted multiset; equals the
// average over all permutations.
template <typename T = Rational, typename F>
T symmetrized(Multiset s, F&& f) {
  T total;
  std::size_t count = 0;
  do {
    total += f(s);
    ++count;
  } while (std::next_permutation(s.begin(), s.end()));
  return total * T(Rational(1) / Rational(static_cast<long>(count)));
}

}  // namespace

void verify_representation(const LieAlgebra& k, const MatrixRep& rep) {
  if (rep.images.size() != k.dim()) throw DimensionMismatch(k.dim(), rep.images.size());
  for (std::size_t i = 0; i < k.dim(); ++i) {
    for (std::size_t j = i + 1; j < k.dim(); ++j) {
      const auto lhs = rep_of(rep, k.bracket_basis(i, j));
      const auto rhs = mat::commutator(rep.images[i], rep.images[j]);
      if (lhs != rhs) throw NotAMorphism(i, j);
    }
  }
}

InvariantPolynomial::InvariantPolynomial(std::shared_ptr<const LieAlgebra> algebra, std::size_t degree,
                                         std::string name)
    : algebra_(std::move(algebra)), degree_(degree), name_(std::move(name)) {
  if (!algebra_) throw InternalError("invariant polynomial without an algebra");
}

Rational InvariantPolynomial::value(Multiset indices) const {
  std::sort(indices.begin(), indices.end());
  const auto it = values_.find(indices);
  return it == values_.end() ? Rational() : it->second;
}

void InvariantPolynomial::set(Multiset indices, const Rational& value) {
  if (indices.size() != degree_) throw DimensionMismatch(degree_, indices.size());
  for (auto i : indices) {
    if (i >= algebra_->dim()) throw DimensionMismatch(algebra_->dim(), i);
  }
  std::sort(indices.begin(), indices.end());
  if (value.is_zero()) {
    values_.erase(indices);
  } else {
    values_[indices] = value;
  }
}

Rational InvariantPolynomial::evaluate(std::span<const SparseVector> args) const {
  if (args.size() != degree_) throw DimensionMismatch(degree_, args.size());
  Rational total;
  Multiset key(degree_);
  auto rec = [&](auto&& self, std::size_t pos, const Rational& coeff) -> void {
    if (pos == degree_) {
      Multiset sorted = key;
      std::sort(sorted.begin(), sorted.end());
      const auto it = values_.find(sorted);
      if (it != values_.end()) total += coeff * it->second;
      return;
    }
    for (const auto& e : args[pos]) {
      key[pos] = static_cast<std::uint8_t>(e.index);
      self(self, pos + 1, coeff * e.value);
    }
  };
  rec(rec, 0, Rational(1));
  return total;
}

InvariantPolynomial& InvariantPolynomial::operator+=(const InvariantPolynomial& rhs) {
  if (!(*algebra_ == rhs.algebra())) throw AlgebraMismatch();
  if (degree_ != rhs.degree_) throw DimensionMismatch(degree_, rhs.degree_);
  for (const auto& [key, v] : rhs.values_) {
    Rational sum = value(key) + v;
    set(key, sum);
  }
  return *this;
}

InvariantPolynomial operator*(const Rational& s, const InvariantPolynomial& p) {
  InvariantPolynomial out(p.algebra_, p.degree_, p.name_);
  if (s.is_zero()) return out;
  for (const auto& [key, v] : p.values_) out.values_[key] = s * v;
  return out;
}

std::vector<Multiset> multisets(std::size_t dim, std::size_t m) {
  std::vector<Multiset> out;
  Multiset cur;
  multisets_rec(dim, m, 0, cur, out);
  return out;
}

InvarianceReport invariance_check(const InvariantPolynomial& p) {
  const LieAlgebra& k = p.algebra();
  const std::size_t m = p.degree();
  InvarianceReport report;
  if (m == 0) return report;
  for (const auto& s : multisets(k.dim(), m)) {
    for (std::size_t y = 0; y < k.dim(); ++y) {
      Rational total;
      for (std::size_t pos = 0; pos < m; ++pos) {
        for (const auto& e : k.bracket_basis(s[pos], y)) {
          Multiset t = s;
          t[pos] = static_cast<std::uint8_t>(e.index);
          total += e.value * p.value(std::move(t));
        }
      }
      if (!total.is_zero()) {
        report.invariant = false;
        report.witness_multiset = s;
        report.witness_basis = y;
        return report;
      }
    }
  }
  return report;
}

InvariantPolynomial unit_polynomial(std::shared_ptr<const LieAlgebra> algebra) {
  InvariantPolynomial one(std::move(algebra), 0, "1");
  one.set({}, Rational(1));
  return one;
}

InvariantPolynomial poly_product(const InvariantPolynomial& p, const InvariantPolynomial& q) {
  if (!(p.algebra() == q.algebra())) throw AlgebraMismatch();
  const std::size_t a = p.degree();
  const std::size_t b = q.degree();
  const std::size_t m = a + b;
  std::string name;
  if (p.name().empty() || p.name() == "1") {
    name = q.name();
  } else if (q.name().empty() || q.name() == "1") {
    name = p.name();
  } else {
    name = p.name() + "*" + q.name();
  }
  InvariantPolynomial out(p.algebra_handle(), m, std::move(name));
  if (p.is_zero() || q.is_zero()) return out;
  std::vector<std::uint32_t> position_subsets;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) == a) position_subsets.push_back(mask);
  }
  const Rational norm = Rational(1) / Rational(static_cast<long>(position_subsets.size()));
  for (const auto& s : multisets(p.algebra().dim(), m)) {
    Rational total;
    Multiset left;
    Multiset right;
    for (std::uint32_t mask : position_subsets) {
      left.clear();
      right.clear();
      for (std::size_t pos = 0; pos < m; ++pos) ((mask >> pos) & 1u ? left : right).push_back(s[pos]);
      const Rational pv = p.value(left);
      if (pv.is_zero()) continue;
      const Rational qv = q.value(right);
      if (!qv.is_zero()) total += pv * qv;
    }
    if (!total.is_zero()) out.set(s, total * norm);
  }
  return out;
}

InvariantPolynomial power_trace_form(std::shared_ptr<const LieAlgebra> k, const MatrixRep& rep, std::size_t r,
                                     bool multiply_by_i) {
  if (rep.images.size() != k->dim()) throw DimensionMismatch(k->dim(), rep.images.size());
  InvariantPolynomial out(k, r, "t_" + std::to_string(r));
  std::vector<ComplexMatrix> ys;
  ys.reserve(rep.images.size());
  for (const auto& x : rep.images) ys.push_back(multiply_by_i ? mat::scale(GaussianRational::i(), x) : x);
  for (const auto& s : multisets(k->dim(), r)) {
    const GaussianRational v = symmetrized<GaussianRational>(s, [&](const Multiset& order) {
      ComplexMatrix prod = ys[order[0]];
      for (std::size_t t = 1; t < order.size(); ++t) prod = mat::multiply(prod, ys[order[t]]);
      return mat::trace(prod);
    });
    out.set(s, v.real_value());
  }
  return out;
}

std::vector<InvariantPolynomial> elementary_forms(std::shared_ptr<const LieAlgebra> k, const MatrixRep& rep,
                                                  std::size_t max_m, bool multiply_by_i) {
  std::vector<InvariantPolynomial> traces;
  std::vector<InvariantPolynomial> e;
  e.push_back(unit_polynomial(k));
  for (std::size_t m = 1; m <= max_m; ++m) {
    traces.push_back(power_trace_form(k, rep, m, multiply_by_i));
    InvariantPolynomial em(k, m, "e_" + std::to_string(m));
    for (std::size_t j = 1; j <= m; ++j) {
      const Rational sign = (j % 2 == 1) ? Rational(1) : Rational(-1);
      em += sign * poly_product(e[m - j], traces[j - 1]);
    }
    em = Rational(1) / Rational(static_cast<long>(m)) * em;
    em.set_name("e_" + std::to_string(m));
    e.push_back(std::move(em));
  }
  e.erase(e.begin());
  return e;
}

std::vector<InvariantPolynomial> chern_forms(std::shared_ptr<const LieAlgebra> k, const MatrixRep& rep,
                                             std::size_t max_m) {
  auto forms = elementary_forms(std::move(k), rep, max_m, true);
  for (std::size_t m = 0; m < forms.size(); ++m) forms[m].set_name("C_" + std::to_string(m + 1));
  return forms;
}

std::vector<InvariantPolynomial> pontryagin_forms(std::shared_ptr<const LieAlgebra> k, const MatrixRep& rep,
                                                  std::size_t max_j) {
  auto e = elementary_forms(std::move(k), rep, 2 * max_j, false);
  std::vector<InvariantPolynomial> out;
  for (std::size_t j = 1; j <= max_j; ++j) {
    out.push_back(e[2 * j - 1]);
    out.back().set_name("P_" + std::to_string(j));
  }
  return out;
}

InvariantPolynomial pfaffian_form(std::shared_ptr<const LieAlgebra> k, const MatrixRep& rep) {
  if (rep.size % 2 != 0 || rep.size == 0) throw ValidationError("OddRepresentation", "Pfaffian needs even size");
  for (const auto& x : rep.images) {
    if (!mat::is_real(x)) throw ValidationError("ComplexRepresentation", "Pfaffian needs a real representation");
  }
  const std::size_t q = rep.size / 2;
  const auto& ms = perfect_matchings(rep.size);
  InvariantPolynomial out(k, q, "E_" + std::to_string(q));
  for (const auto& s : multisets(k->dim(), q)) {
    const Rational v = symmetrized(s, [&](const Multiset& order) {
      Rational total;
      for (const auto& match : ms) {
        Rational prod(match.sign);
        for (std::size_t t = 0; t < q && !prod.is_zero(); ++t) {
          prod *= rep.images[order[t]][match.pairs[2 * t]][match.pairs[2 * t + 1]].re;
        }
        total += prod;
      }
      return total;
    });
    out.set(s, v);
  }
  return out;
}

ClassicalModel classical_model(const std::string& k_name) {
  const auto us = k_name.find('_');
  if (us == std::string::npos) throw UnknownAlgebra(k_name);
  const std::string family = k_name.substr(0, us);
  const std::string digits = k_name.substr(us + 1);
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || n == 0 || n > 8) throw UnknownAlgebra(k_name);
  MatrixBasis basis;
  if (family == "u") {
    basis = models::u(n);
  } else if (family == "su" && n >= 2) {
    basis = models::su(n);
  } else if (family == "so" && n >= 2) {
    basis = models::so(n);
  } else if (family == "sp") {
    basis = models::sp_compact(n);
  } else {
    throw UnknownAlgebra(k_name);
  }
  ClassicalModel model;
  model.algebra = std::make_shared<const LieAlgebra>(algebra_from_matrices(basis));
  model.rep.size = basis.matrices.front().size();
  model.rep.images = basis.matrices;
  return model;
}

std::vector<InvariantPolynomial> generators_from_model(const std::string& family,
                                                       std::shared_ptr<const LieAlgebra> k, const MatrixRep& rep,
                                                       std::size_t max_degree) {
  const std::size_t n = rep.size;
  std::vector<InvariantPolynomial> out;
  if (family == "u" || family == "su") {
    const std::size_t top = std::min(n, max_degree / 2);
    auto forms = chern_forms(std::move(k), rep, top);
    for (auto& f : forms) {
      if (family == "u" || f.degree() >= 2) out.push_back(std::move(f));
    }
  } else if (family == "sp") {
    const std::size_t top = std::min(n / 2, max_degree / 4);
    auto forms = chern_forms(std::move(k), rep, 2 * top);
    for (std::size_t i = 1; i <= top; ++i) {
      out.push_back(std::move(forms[2 * i - 1]));
      out.back().set_name("Q_" + std::to_string(i));
    }
  } else if (family == "so" && n == 2) {
    if (max_degree >= 2) {
      out.push_back(pfaffian_form(std::move(k), rep));
      out.back().set_name("C_1");
    }
  } else if (family == "so") {
    const std::size_t q = n / 2;
    const bool even = n % 2 == 0;
    const std::size_t pont = std::min(even ? q - 1 : q, max_degree / 4);
    auto forms = pontryagin_forms(k, rep, pont);
    for (auto& f : forms) out.push_back(std::move(f));
    if (even && 2 * q <= max_degree) out.push_back(pfaffian_form(std::move(k), rep));
  } else {
    throw UnknownAlgebra(family);
  }
  return out;
}

std::vector<InvariantPolynomial> invariant_generators(const std::string& k_name, std::size_t max_degree) {
  const ClassicalModel model = classical_model(k_name);
  return generators_from_model(k_name.substr(0, k_name.find('_')), model.algebra, model.rep, max_degree);
}

InvariantPolynomial restrict_polynomial(const InvariantPolynomial& p, const Matrix& inclusion,
                                        std::shared_ptr<const LieAlgebra> small) {
  const LieAlgebra& big = p.algebra();
  if (inclusion.rows() != big.dim()) throw DimensionMismatch(big.dim(), inclusion.rows());
  if (inclusion.cols() != small->dim()) throw DimensionMismatch(small->dim(), inclusion.cols());
  for (std::size_t i = 0; i < small->dim(); ++i) {
    for (std::size_t j = i + 1; j < small->dim(); ++j) {
      const SparseVector lhs = inclusion.apply(small->bracket_basis(i, j));
      const SparseVector rhs = big.bracket(inclusion.column(i), inclusion.column(j));
      if (lhs != rhs) throw NotAMorphism(i, j);
    }
  }
  InvariantPolynomial out(small, p.degree(), p.name());
  if (p.degree() == 0) {
    out.set({}, p.value({}));
    return out;
  }
  std::vector<SparseVector> args(p.degree());
  for (const auto& s : multisets(small->dim(), p.degree())) {
    for (std::size_t t = 0; t < s.size(); ++t) args[t] = inclusion.column(s[t]);
    out.set(s, p.evaluate(args));
  }
  return out;
}

namespace {

SparseVector p_part(const SparseVector& adapted, std::size_t k_dim) {
  SparseVector out;
  for (const auto& e : adapted) {
    if (e.index >= k_dim) out.push_back(e);
  }
  return out;
}

SparseVector k_part_half(const SparseVector& adapted, std::size_t k_dim) {
  SparseVector out;
  const Rational half(1, 2);
  for (const auto& e : adapted) {
    if (e.index < k_dim) out.push_back({e.index, e.value * half});
  }
  return out;
}

}  // namespace

SparseVector curvature(const CartanDecomposition& dec, const SparseVector& x, const SparseVector& y) {
  const std::size_t dk = dec.k_dim();
  const SparseVector xp = p_part(dec.to_adapted(x), dk);
  const SparseVector yp = p_part(dec.to_adapted(y), dk);
  return k_part_half(dec.adapted().bracket(xp, yp), dk);
}

Cochain cw(const InvariantPolynomial& p, const CartanDecomposition& dec, const CwOptions& options) {
  if (!dec.parent_semisimple()) throw NotSemisimple("the Chern-Weil map");
  const std::size_t dk = dec.k_dim();
  const std::size_t dp = dec.p_dim();
  const std::size_t dim = dk + dp;
  if (p.algebra().dim() != dk || !(p.algebra() == dec.k_algebra())) throw AlgebraMismatch();
  const std::size_t m = p.degree();
  if (m == 0) return Cochain::constant(dim, p.value({}));
  if (2 * m > dp) return Cochain::zero(dim, 2 * m);

  const LieAlgebra& adapted = dec.adapted();
  std::vector<SparseVector> omega(dp * dp);
  for (std::size_t a = 0; a < dp; ++a) {
    for (std::size_t b = a + 1; b < dp; ++b) {
      omega[a * dp + b] = k_part_half(adapted.bracket_basis(dk + a, dk + b), dk);
    }
  }
  const auto& ms = perfect_matchings(2 * m);
  const Rational weight = factorial(m);
  const ExteriorIndex& local = exterior_index(dp, 2 * m);
  std::vector<linalg::Entry> entries;
  std::vector<SparseVector> args(m);
  for (std::size_t r = 0; r < local.size(); ++r) {
    const auto elems = elements(local.subset(r));
    Rational total;
    for (const auto& match : ms) {
      bool zero = false;
      for (std::size_t t = 0; t < m; ++t) {
        args[t] = omega[elems[match.pairs[2 * t]] * dp + elems[match.pairs[2 * t + 1]]];
        if (args[t].empty()) zero = true;
      }
      if (zero) continue;
      const Rational v = p.evaluate(args);
      if (!v.is_zero()) total += match.sign > 0 ? v : -v;
    }
    if (total.is_zero()) continue;
    const Mask shifted = local.subset(r) << dk;
    entries.push_back({static_cast<Index>(exterior_index(dim, 2 * m).rank(shifted)), total * weight});
  }
  Cochain form{dim, 2 * m, 1, linalg::accumulate(std::move(entries))};
  if (!dec.adapted_is_identity()) form = pullback(form, dec.change_inverse());

  if (options.certify) {
    const LieAlgebra& g = dec.parent();
    const CoefficientModule trivial = CoefficientModule::trivial(g);
    if (!apply_differential(g, trivial, form).is_zero()) {
      throw InternalError("Chern-Weil form of " + p.name() + " is not closed");
    }
    for (std::size_t i = 0; i < dk; ++i) {
      const Cochain pk = insertion(dec.k_basis()[i], form);
      if (!pk.is_zero()) throw InternalError("Chern-Weil form of " + p.name() + " is not horizontal");
      if (!lie_derivative(g, trivial, dec.k_basis()[i], form).is_zero()) {
        throw InternalError("Chern-Weil form of " + p.name() + " is not k-invariant");
      }
    }
  }
  return form;
}

}  // namespace symcoh
