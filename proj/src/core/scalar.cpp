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

#include "core/scalar.hpp"

#include <cctype>
#include <ostream>

#include "core/error.hpp"

namespace maxaffine {

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(long num, long den) : v_(num, den) {
  if (den == 0) ThrowInvalidArgument("rational with zero denominator");
  v_.canonicalize();
}

Scalar::Scalar(const mpq_class& v) : v_(v) {
  if (v_.get_den() == 0) ThrowInvalidArgument("rational with zero denominator");
  v_.canonicalize();
}

Scalar::Scalar(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) ThrowInvalidArgument("rational with zero denominator");
  v_.canonicalize();
}

std::optional<Scalar> Scalar::Parse(std::string_view text) {
  // Strict shape check first: mpz_set_str silently skips whitespace, which we
  // do not want for values coming off a command line or a JSON document.
  std::string_view rest = text;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    rest.remove_prefix(1);
  }
  std::string_view num = rest;
  std::string_view den;
  std::size_t slash = rest.find('/');
  if (slash != std::string_view::npos) {
    num = rest.substr(0, slash);
    den = rest.substr(slash + 1);
    if (!AllDigits(den)) return std::nullopt;
  }
  if (!AllDigits(num)) return std::nullopt;

  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), std::string(text).c_str(), 10) != 0) {
    return std::nullopt;
  }
  if (v.get_den() == 0) return std::nullopt;
  v.canonicalize();
  return Scalar(v);
}

Scalar Scalar::ParseOrThrow(std::string_view text) {
  std::optional<Scalar> s = Parse(text);
  if (!s) ThrowParse("not a rational \"p/q\": '" + std::string(text) + "'");
  return *s;
}

Scalar Scalar::Pow2(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Scalar(p, mpz_class(1)) : Scalar(mpz_class(1), p);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.IsZero()) ThrowInvalidArgument("division by zero");
  v_ /= o.v_;
  return *this;
}

Scalar Scalar::Floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return Scalar(q, mpz_class(1));
}

Scalar Scalar::Abs() const { return Scalar(mpq_class(abs(v_))); }

std::string Scalar::Str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.Str(); }

}  // namespace maxaffine
