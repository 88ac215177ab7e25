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

#include <stdexcept>
#include <string>

namespace maxaffine {

enum class Errc {
  kInvalidArgument,
  kDomain,
  kInfeasibleSchedule,
  kDegenerateInput,
  kParse,
  kIo,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void ThrowInvalidArgument(const std::string& what) {
  throw Error(Errc::kInvalidArgument, what);
}
[[noreturn]] inline void ThrowDomain(const std::string& what) {
  throw Error(Errc::kDomain, what);
}
[[noreturn]] inline void ThrowInfeasible(const std::string& what) {
  throw Error(Errc::kInfeasibleSchedule, what);
}
[[noreturn]] inline void ThrowDegenerate(const std::string& what) {
  throw Error(Errc::kDegenerateInput, what);
}
[[noreturn]] inline void ThrowParse(const std::string& what) {
  throw Error(Errc::kParse, what);
}
[[noreturn]] inline void ThrowIo(const std::string& what) {
  throw Error(Errc::kIo, what);
}

}  // namespace maxaffine
