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

// Lexicographic indexing of k-subsets of {0, ..., dim-1} stored as bit masks.

#ifndef SYMCOH_EXTERIOR_HPP
#define SYMCOH_EXTERIOR_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace symcoh {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxAlgebraDim = 64;

/// C(n, k), saturating at SIZE_MAX.
std::size_t binomial(std::size_t n, std::size_t k);

/// Number of elements of `mask` strictly below `bit`.
inline int position(Mask mask, unsigned bit) {
  return std::popcount(mask & ((Mask{1} << bit) - 1));
}

/// (-1)^k as +1/-1.
inline int parity_sign(int k) { return (k & 1) ? -1 : 1; }

/// Sign of the shuffle that sorts the concatenation (A, B) of disjoint sets.
int shuffle_sign(Mask a, Mask b);

class ExteriorIndex {
 public:
  ExteriorIndex(std::size_t dim, std::size_t degree);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
  [[nodiscard]] std::size_t size() const noexcept { return subsets_.size(); }
  [[nodiscard]] Mask subset(std::size_t rank) const { return subsets_[rank]; }
  [[nodiscard]] const std::vector<Mask>& subsets() const noexcept { return subsets_; }
  /// Lexicographic rank of a subset of the right size.
  [[nodiscard]] std::size_t rank(Mask mask) const;

 private:
  std::size_t dim_;
  std::size_t degree_;
  std::vector<Mask> subsets_;
};

/// Shared immutable index; thread-safe.
const ExteriorIndex& exterior_index(std::size_t dim, std::size_t degree);

/// Elements of a mask in increasing order.
std::vector<unsigned> elements(Mask mask);

}  // namespace symcoh

#endif  // SYMCOH_EXTERIOR_HPP
