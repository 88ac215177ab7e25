// Copyright 2026 The maxaffine Authors
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

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace maxaffine {

// Exact rational number. Always canonical: lowest terms, positive denominator.
// Every operation is exact; there is no rounding anywhere in this type.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(n) {}  // NOLINT: implicit on purpose, for integer literals
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& v);
  Scalar(const mpz_class& num, const mpz_class& den);

  // Accepts "p/q" or "p" in base 10 (optional leading sign on p only).
  // Rejects decimals, whitespace, zero denominators. Returns nullopt on failure.
  static std::optional<Scalar> Parse(std::string_view text);
  // Same as Parse but throws Error(kParse) with the offending text.
  static Scalar ParseOrThrow(std::string_view text);

  // 2^e for any integer e (negative exponents give exact fractions).
  static Scalar Pow2(long e);

  mpz_class Num() const { return v_.get_num(); }
  mpz_class Den() const { return v_.get_den(); }
  const mpq_class& Raw() const { return v_; }

  bool IsZero() const { return sgn(v_) == 0; }
  int Sign() const { return sgn(v_); }
  bool IsInteger() const { return v_.get_den() == 1; }

  // Largest integer <= this, as an exact Scalar.
  Scalar Floor() const;
  Scalar Abs() const;

  std::string Str() const;       // "p/q", or "p" when the denominator is 1
  double ToDouble() const { return v_.get_d(); }

  Scalar operator-() const { return Scalar(mpq_class(-v_)); }
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
  friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
  friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }
  friend Scalar operator/(Scalar a, const Scalar& b) { a /= b; return a; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  mpq_class v_;
};

inline const Scalar& Min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline const Scalar& Max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

}  // namespace maxaffine
