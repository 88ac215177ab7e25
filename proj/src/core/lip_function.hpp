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

#include <optional>
#include <variant>
#include <vector>

#include "core/cantor.hpp"
#include "core/interval_set.hpp"
#include "core/json_util.hpp"
#include "core/scalar.hpp"

namespace maxaffine {

// Continuous piecewise-linear function on [breakpoints.front(),
// breakpoints.back()], evaluated with the right-continuous convention: the
// segment [t_i, t_{i+1}) owns its left endpoint, and the right endpoint of
// the domain belongs to the last segment.
class PLFunction {
 public:
  static PLFunction FromPoints(std::vector<Scalar> breakpoints,
                               std::vector<Scalar> values);

  const std::vector<Scalar>& Breakpoints() const { return breakpoints_; }
  const std::vector<Scalar>& Values() const { return values_; }
  int SegmentCount() const { return static_cast<int>(breakpoints_.size()) - 1; }
  const Scalar& SegmentSlope(int i) const { return slopes_[i]; }

  Interval Domain() const { return Interval(breakpoints_.front(), breakpoints_.back()); }
  Scalar Eval(const Scalar& t) const;  // throws Error(kDomain) outside Domain()
  Scalar LipNumber() const;            // max |slope| over segments

  Json ToJson() const;
  static PLFunction FromJson(const Json& j);

 private:
  PLFunction(std::vector<Scalar> breakpoints, std::vector<Scalar> values);

  std::vector<Scalar> breakpoints_;
  std::vector<Scalar> values_;
  std::vector<Scalar> slopes_;
};

// f(t) = t - lambda(C intersect [0, t]) for a Cantor set C of positive
// measure: 1-Lipschitz, slope 1 across every removed middle and derivative 0
// at density points of C. Evaluation brackets the exact value using the
// finite-depth truncation carried by the set; Refined() tightens the bracket.
class CantorIntegralFunction {
 public:
  explicit CantorIntegralFunction(FatCantorSet set) : set_(std::move(set)) {}

  const FatCantorSet& Set() const { return set_; }
  Bracket Eval(const Scalar& t) const;  // domain [0, 1]
  CantorIntegralFunction Refined(int extra_depth) const {
    return CantorIntegralFunction(set_.Refine(extra_depth));
  }

 private:
  FatCantorSet set_;
};

// The first dim coordinates of the classic sequence-of-tents map: coordinate
// 1 is t clamped to [0, 1]; coordinate n >= 2 vanishes outside (0, 1) and is
// the 2^(2-n)-periodic tent of height 2^(1-n) inside. Every coordinate is
// 1-Lipschitz, and under the sup norm the whole map has Lipschitz number
// exactly 1, attained by coordinate 1.
class TentSequenceFunction {
 public:
  explicit TentSequenceFunction(int dim);

  int Dim() const { return dim_; }
  Scalar Coordinate(int i, const Scalar& t) const;  // i in [1, Dim()]
  std::vector<Scalar> Eval(const Scalar& t) const;

  static constexpr int kMaxDim = 64;

 private:
  int dim_;
};

// Uniform facade over the three function families. Evaluation yields one
// certified bracket per output coordinate (exact values degenerate to
// points), so everything downstream runs on brackets uniformly.
class LipFunction {
 public:
  explicit LipFunction(PLFunction f) : impl_(std::move(f)) {}
  explicit LipFunction(CantorIntegralFunction f) : impl_(std::move(f)) {}
  explicit LipFunction(TentSequenceFunction f) : impl_(std::move(f)) {}

  int Dim() const;
  // Domain of definition; nullopt means the whole real line.
  std::optional<Interval> Domain() const;
  bool InDomain(const Scalar& t) const;
  std::vector<Bracket> Eval(const Scalar& t) const;
  // Certified bracket for the Lipschitz number under the sup norm. Exact
  // (degenerate) for all three families.
  Bracket LipNumber() const;

  const PLFunction* AsPL() const { return std::get_if<PLFunction>(&impl_); }
  const CantorIntegralFunction* AsCantorIntegral() const {
    return std::get_if<CantorIntegralFunction>(&impl_);
  }
  const TentSequenceFunction* AsTentSequence() const {
    return std::get_if<TentSequenceFunction>(&impl_);
  }

 private:
  std::variant<PLFunction, CantorIntegralFunction, TentSequenceFunction> impl_;
};

// Certified bracket for ||f(x) - f(y)|| / |x - y| (sup norm). Requires
// distinct points inside the domain.
Bracket DifferenceQuotient(const LipFunction& f, const Scalar& x, const Scalar& y);

// Per-coordinate bracket for (f(x + h) - f(x)) / h, the secant slope a
// one-sided derivative is the limit of. h may be negative; h = 0 is invalid.
std::vector<Bracket> DerivativeProbe(const LipFunction& f, const Scalar& x,
                                     const Scalar& h);

struct QuotientPair {
  Scalar x;
  Scalar y;
};

enum class AttainmentStatus { kAttained, kNotAttained, kInconclusive };

struct AttainmentReport {
  AttainmentStatus status;
  // Bracket for the largest difference quotient among the probed pairs.
  Bracket best_quotient;
  int best_pair;  // index into the probed pairs
};

// Decides whether the probed pairs witness attainment of the Lipschitz
// number: kAttained when some quotient is certainly >= Lip(f) - tol,
// kNotAttained when every quotient is certainly < Lip(f) - tol, and
// kInconclusive when the brackets are too loose to tell either way.
AttainmentReport StrongAttainmentCheck(const LipFunction& f,
                                       const std::vector<QuotientPair>& pairs,
                                       const Scalar& tol);

struct OscillationWitness {
  Scalar step_a;       // offsets from the base point, both of size < delta
  Scalar step_b;
  Bracket separation;  // certified sup-norm distance between the two secant slopes
};

// Searches steps +-2^-m (the 'scales' smallest m with 2^-m < delta, keeping
// only steps that stay inside the domain) for two secant slopes at x whose
// sup-norm distance is certainly >= lower. Such a pair certifies that no
// derivative at x can explain the behavior of f below scale delta. The scan
// order is deterministic, so equal inputs yield the identical witness.
std::optional<OscillationWitness> FindOscillationWitness(const LipFunction& f,
                                                         const Scalar& x,
                                                         const Scalar& delta,
                                                         const Scalar& lower,
                                                         int scales = 17);

}  // namespace maxaffine
