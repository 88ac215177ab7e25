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

#include <json.hpp>

#include "core/scalar.hpp"

namespace maxaffine {

using Json = nlohmann::ordered_json;

// Exact rationals travel through JSON as [numerator, denominator] pairs.
// Each part is emitted as a JSON integer while it fits in 64 bits and as a
// base-10 string beyond that, so nothing is ever rounded. The reader accepts
// both encodings.
Json RationalToJson(const Scalar& v);
Scalar RationalFromJson(const Json& j);  // throws Error(kParse)

}  // namespace maxaffine
