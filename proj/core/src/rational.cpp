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

#include "symcoh/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "symcoh/errors.hpp"

namespace symcoh {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

// INT64_MIN is excluded so negation never overflows.
inline bool fits(i128 v) { return v > kMin && v <= kMax; }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), v);
  return z;
}

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  u128 m = abs128(v);
  mpz_class hi;
  mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(m >> 64));
  mpz_class z = hi;
  z <<= 64;
  z += static_cast<unsigned long>(m & 0xFFFFFFFFFFFFFFFFULL);
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ParseError("zero denominator");
  i128 n = num;
  i128 d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const u128 g = gcd128(abs128(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits(n) && fits(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  } else {
    mpq_class q(to_mpz(n), to_mpz(d));
    q.canonicalize();
    assign(q);
  }
}

Rational::Rational(const mpq_class& value) {
  mpq_class q(value);
  q.canonicalize();
  assign(q);
}

void Rational::assign(const mpq_class& value) {
  const auto& n = value.get_num();
  const auto& d = value.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && mpz_cmp_si(n.get_mpz_t(), kMin) != 0) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(value);
  }
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (s.empty()) throw ParseError("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  const auto slash = s.find('/');
  auto check_digits = [&](const std::string& part) {
    std::size_t start = (!part.empty() && part.front() == '-') ? 1 : 0;
    if (part.size() == start) throw ParseError("malformed rational literal '" + std::string(text) + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw ParseError("malformed rational literal '" + std::string(text) + "'");
      }
    }
  };
  mpq_class q;
  if (slash == std::string::npos) {
    check_digits(s);
    q = mpq_class(mpz_class(s, 10));
  } else {
    const std::string ns = s.substr(0, slash);
    const std::string ds = s.substr(slash + 1);
    check_digits(ns);
    check_digits(ds);
    mpz_class d(ds, 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    q = mpq_class(mpz_class(ns, 10), d);
    q.canonicalize();
  }
  Rational r;
  r.assign(q);
  return r;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : to_mpz(num_); }
mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : to_mpz(den_); }

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(to_mpz(num_), to_mpz(den_));
  return q;
}

std::size_t Rational::height() const {
  if (big_) return mpz_sizeinbase(big_->get_num_mpz_t(), 2) + mpz_sizeinbase(big_->get_den_mpz_t(), 2);
  auto bits = [](std::int64_t v) {
    std::uint64_t m = v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v);
    return static_cast<std::size_t>(64 - __builtin_clzll(m | 1));
  };
  return bits(num_) + bits(den_);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.assign(mpq_class(-*big_));
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (rhs.num_ == 0) return *this;
    if (num_ == 0) {
      num_ = rhs.num_;
      den_ = rhs.den_;
      return *this;
    }
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t out;
      if (!__builtin_add_overflow(num_, rhs.num_, &out) && out != kMin) {
        num_ = out;
        return *this;
      }
    }
    const std::int64_t g = std::gcd(den_, rhs.den_);
    const i128 b1 = den_ / g;
    const i128 d1 = rhs.den_ / g;
    i128 n = static_cast<i128>(num_) * d1 + static_cast<i128>(rhs.num_) * b1;
    i128 d = b1 * static_cast<i128>(rhs.den_);
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    const u128 g2 = gcd128(abs128(n), static_cast<u128>(g));
    if (g2 > 1) {
      n /= static_cast<i128>(g2);
      d /= static_cast<i128>(g2);
    }
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    mpq_class q(to_mpz(n), to_mpz(d));
    assign(q);
    return *this;
  }
  assign(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    const std::int64_t g1 = std::gcd(num_, rhs.den_);
    const std::int64_t g2 = std::gcd(rhs.num_, den_);
    const i128 n = static_cast<i128>(num_ / g1) * static_cast<i128>(rhs.num_ / g2);
    const i128 d = static_cast<i128>(den_ / g2) * static_cast<i128>(rhs.den_ / g1);
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    mpq_class q(to_mpz(n), to_mpz(d));
    assign(q);
    return *this;
  }
  assign(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw InternalError("division by zero");
  if (!big_) return Rational(den_, num_);
  Rational r;
  r.assign(mpq_class(1) / *big_);
  return r;
}

Rational& Rational::operator/=(const Rational& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Rational& lhs, const Rational& rhs) {
  if (!lhs.big_ && !rhs.big_) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  if (lhs.big_ && rhs.big_) return *lhs.big_ == *rhs.big_;
  return false;  // representations are canonical
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (!lhs.big_ && !rhs.big_) {
    const i128 a = static_cast<i128>(lhs.num_) * rhs.den_;
    const i128 b = static_cast<i128>(rhs.num_) * lhs.den_;
    return a <=> b;
  }
  const int c = cmp(lhs.to_mpq(), rhs.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

const Rational& GaussianRational::real_value() const {
  if (!im.is_zero()) throw InternalError("expected a real value, imaginary part is " + im.str());
  return re;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  if (im.is_zero() && rhs.im.is_zero()) {
    re *= rhs.re;
    return *this;
  }
  Rational r = re * rhs.re - im * rhs.im;
  Rational i = re * rhs.im + im * rhs.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& value) {
  if (value.im.is_zero()) return os << value.re;
  return os << "(" << value.re << (value.im.sign() < 0 ? "-" : "+") << value.im.abs() << "i)";
}

}  // namespace symcoh
