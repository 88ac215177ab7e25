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

#include "core/json_util.hpp"

#include "core/error.hpp"

namespace maxaffine {

namespace {

Json IntegerToJson(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

mpz_class IntegerFromJson(const Json& j) {
  if (j.is_number_unsigned()) return mpz_class(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (mpz_set_str(z.get_mpz_t(), j.get<std::string>().c_str(), 10) != 0) {
      ThrowParse("not a base-10 integer: '" + j.get<std::string>() + "'");
    }
    return z;
  }
  ThrowParse("expected an integer or a base-10 integer string, got " + j.dump());
}

}  // namespace

Json RationalToJson(const Scalar& v) {
  return Json::array({IntegerToJson(v.Num()), IntegerToJson(v.Den())});
}

Scalar RationalFromJson(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    ThrowParse("expected a [numerator, denominator] pair, got " + j.dump());
  }
  mpz_class num = IntegerFromJson(j[0]);
  mpz_class den = IntegerFromJson(j[1]);
  if (den == 0) ThrowParse("rational with zero denominator");
  return Scalar(num, den);
}

}  // namespace maxaffine
