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

#ifndef SYMCOH_RATIONAL_HPP
#define SYMCOH_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace symcoh {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger is promoted to a shared, immutable GMP rational. Results
/// are demoted back to the inline form whenever they fit again, so the
/// representation of a value is unique and equality is a cheap comparison.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(int value) noexcept : num_(value) {}  // NOLINT(implicit)
  Rational(long value) noexcept : num_(value) {}  // NOLINT(implicit)
  Rational(long long value) noexcept : num_(value) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  /// Parses "n", "-n", or "n/d" (arbitrary length). Throws ParseError.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const noexcept;
  [[nodiscard]] bool is_small() const noexcept { return !big_; }

  [[nodiscard]] mpz_class numerator() const;
  [[nodiscard]] mpz_class denominator() const;
  [[nodiscard]] mpq_class to_mpq() const;
  /// Number of bits in numerator plus denominator; a pivot-quality heuristic.
  [[nodiscard]] std::size_t height() const;

  /// "n" for integers, "n/d" otherwise.
  [[nodiscard]] std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs);
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] Rational abs() const { return sign() < 0 ? -*this : *this; }

 private:
  void assign(const mpq_class& value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Rational with an independent imaginary part. Used only for trace
/// evaluations of complex matrix models.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real) : re(std::move(real)) {}  // NOLINT(implicit)
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  static GaussianRational i() { return {0, 1}; }

  [[nodiscard]] bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
  [[nodiscard]] bool is_real() const noexcept { return im.is_zero(); }
  [[nodiscard]] GaussianRational conj() const { return {re, -im}; }
  /// Real part, asserting that the imaginary part vanishes. Throws InternalError.
  [[nodiscard]] const Rational& real_value() const;

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;
  // A Gaussian rational with zero imaginary part equals the plain rational.
  friend bool operator==(const GaussianRational& a, const Rational& b) { return a.im.is_zero() && a.re == b; }
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& value);

}  // namespace symcoh

#endif  // SYMCOH_RATIONAL_HPP
