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

#include "symcoh/exterior.hpp"

#include <array>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

#include "symcoh/errors.hpp"

namespace symcoh {

namespace {

struct BinomialTable {
  std::array<std::array<std::size_t, kMaxAlgebraDim + 2>, kMaxAlgebraDim + 2> c{};
  BinomialTable() {
    constexpr std::size_t kSat = std::numeric_limits<std::size_t>::max();
    for (std::size_t n = 0; n < c.size(); ++n) {
      c[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t a = c[n - 1][k - 1];
        const std::size_t b = c[n - 1][k];
        c[n][k] = (a > kSat - b) ? kSat : a + b;
      }
    }
  }
};

const BinomialTable& table() {
  static const BinomialTable t;
  return t;
}

}  // namespace

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (n <= kMaxAlgebraDim + 1) return table().c[n][k];
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int shuffle_sign(Mask a, Mask b) {
  int inversions = 0;
  for (Mask rest = a; rest != 0; rest &= rest - 1) {
    const unsigned bit = static_cast<unsigned>(std::countr_zero(rest));
    inversions += position(b, bit);
  }
  return parity_sign(inversions);
}

ExteriorIndex::ExteriorIndex(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {
  if (dim > kMaxAlgebraDim) {
    throw ValidationError("SizeLimit", "algebras above dimension " + std::to_string(kMaxAlgebraDim) +
                                           " are not supported");
  }
  if (degree > dim) return;
  subsets_.reserve(binomial(dim, degree));
  std::vector<unsigned> idx(degree);
  for (std::size_t i = 0; i < degree; ++i) idx[i] = static_cast<unsigned>(i);
  while (true) {
    Mask m = 0;
    for (auto v : idx) m |= Mask{1} << v;
    subsets_.push_back(m);
    std::size_t i = degree;
    while (i > 0 && idx[i - 1] == dim - degree + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < degree; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t ExteriorIndex::rank(Mask mask) const {
  // Hockey-stick form of the lexicographic combinatorial number system.
  const auto& c = table().c;
  const std::size_t n = dim_;
  const std::size_t k = degree_;
  std::size_t r = 0;
  long prev = -1;
  std::size_t i = 1;
  for (Mask rest = mask; rest != 0; rest &= rest - 1, ++i) {
    const long a = std::countr_zero(rest);
    r += c[static_cast<std::size_t>(static_cast<long>(n) - prev - 1)][k - i + 1] -
         c[n - static_cast<std::size_t>(a)][k - i + 1];
    prev = a;
  }
  return r;
}

const ExteriorIndex& exterior_index(std::size_t dim, std::size_t degree) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<const ExteriorIndex>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{dim, degree}];
  if (!slot) slot = std::make_unique<const ExteriorIndex>(dim, degree);
  return *slot;
}

std::vector<unsigned> elements(Mask mask) {
  std::vector<unsigned> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(static_cast<unsigned>(std::countr_zero(mask)));
  return out;
}

}  // namespace symcoh
