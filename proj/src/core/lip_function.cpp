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

#include "core/lip_function.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "core/error.hpp"

namespace maxaffine {

namespace {

const Scalar kZero(0);
const Scalar kOne(1);

Bracket SupAbs(const std::vector<Bracket>& a, const std::vector<Bracket>& b) {
  Bracket sup = Bracket::Point(Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    Bracket d = (a[i] - b[i]).Abs();
    sup = Bracket(Max(sup.lo, d.lo), Max(sup.hi, d.hi));
  }
  return sup;
}

}  // namespace

PLFunction::PLFunction(std::vector<Scalar> breakpoints, std::vector<Scalar> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  slopes_.reserve(breakpoints_.size() - 1);
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    slopes_.push_back((values_[i + 1] - values_[i]) /
                      (breakpoints_[i + 1] - breakpoints_[i]));
  }
}

PLFunction PLFunction::FromPoints(std::vector<Scalar> breakpoints,
                                  std::vector<Scalar> values) {
  if (breakpoints.size() != values.size()) {
    ThrowInvalidArgument("breakpoint and value counts differ");
  }
  if (breakpoints.size() < 2) {
    ThrowInvalidArgument("a piecewise-linear function needs at least 2 breakpoints");
  }
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1])) {
      ThrowInvalidArgument("breakpoints must be strictly increasing");
    }
  }
  return PLFunction(std::move(breakpoints), std::move(values));
}

Scalar PLFunction::Eval(const Scalar& t) const {
  if (t < breakpoints_.front() || t > breakpoints_.back()) {
    ThrowDomain("t = " + t.Str() + " outside [" + breakpoints_.front().Str() +
                ", " + breakpoints_.back().Str() + "]");
  }
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  auto idx = static_cast<std::size_t>(it - breakpoints_.begin());
  std::size_t seg = idx == 0 ? 0 : idx - 1;
  if (seg >= slopes_.size()) seg = slopes_.size() - 1;
  return values_[seg] + slopes_[seg] * (t - breakpoints_[seg]);
}

Scalar PLFunction::LipNumber() const {
  Scalar best(0);
  for (const Scalar& s : slopes_) best = Max(best, s.Abs());
  return best;
}

Json PLFunction::ToJson() const {
  Json j;
  j["type"] = "pl";
  Json ts = Json::array();
  Json ys = Json::array();
  for (const Scalar& t : breakpoints_) ts.push_back(RationalToJson(t));
  for (const Scalar& y : values_) ys.push_back(RationalToJson(y));
  j["breakpoints"] = std::move(ts);
  j["values"] = std::move(ys);
  return j;
}

PLFunction PLFunction::FromJson(const Json& j) {
  if (!j.is_object()) ThrowParse("piecewise-linear document must be an object");
  if (j.contains("type") && j["type"] != "pl") {
    ThrowParse("expected a document of type \"pl\"");
  }
  if (!j.contains("breakpoints") || !j.contains("values")) {
    ThrowParse("piecewise-linear document needs \"breakpoints\" and \"values\"");
  }
  const Json& ts = j["breakpoints"];
  const Json& ys = j["values"];
  if (!ts.is_array() || !ys.is_array()) {
    ThrowParse("\"breakpoints\" and \"values\" must be arrays");
  }
  std::vector<Scalar> breakpoints;
  std::vector<Scalar> values;
  breakpoints.reserve(ts.size());
  values.reserve(ys.size());
  for (const Json& e : ts) breakpoints.push_back(RationalFromJson(e));
  for (const Json& e : ys) values.push_back(RationalFromJson(e));
  return FromPoints(std::move(breakpoints), std::move(values));
}

Bracket CantorIntegralFunction::Eval(const Scalar& t) const {
  if (t < kZero || t > kOne) {
    ThrowDomain("t = " + t.Str() + " outside [0, 1]");
  }
  // PrefixMeasure overshoots lambda(C intersect [0, t]) by the mass that
  // later steps still remove there, which is at most min(Tail, PrefixMeasure).
  Scalar prefix = set_.PrefixMeasure(t);
  Scalar slack = Min(set_.Tail(), prefix);
  Scalar lo = t - prefix;
  return Bracket(lo, lo + slack);
}

TentSequenceFunction::TentSequenceFunction(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim) {
    ThrowInvalidArgument("tent sequence dimension must be in [1, " +
                         std::to_string(kMaxDim) + "], got " + std::to_string(dim));
  }
}

Scalar TentSequenceFunction::Coordinate(int i, const Scalar& t) const {
  if (i < 1 || i > dim_) {
    ThrowInvalidArgument("coordinate index " + std::to_string(i) +
                         " outside [1, " + std::to_string(dim_) + "]");
  }
  if (i == 1) {
    if (t <= kZero) return Scalar(0);
    if (t >= kOne) return Scalar(1);
    return t;
  }
  if (t <= kZero || t >= kOne) return Scalar(0);
  Scalar period = Scalar::Pow2(2 - i);
  Scalar r = t - period * (t / period).Floor();
  return Min(r, period - r);
}

std::vector<Scalar> TentSequenceFunction::Eval(const Scalar& t) const {
  std::vector<Scalar> out;
  out.reserve(dim_);
  for (int i = 1; i <= dim_; ++i) out.push_back(Coordinate(i, t));
  return out;
}

int LipFunction::Dim() const {
  if (const auto* tent = AsTentSequence()) return tent->Dim();
  return 1;
}

std::optional<Interval> LipFunction::Domain() const {
  if (const auto* pl = AsPL()) return pl->Domain();
  if (AsCantorIntegral()) return Interval(kZero, kOne);
  return std::nullopt;
}

bool LipFunction::InDomain(const Scalar& t) const {
  auto dom = Domain();
  return !dom || dom->Contains(t);
}

std::vector<Bracket> LipFunction::Eval(const Scalar& t) const {
  if (const auto* pl = AsPL()) return {Bracket::Point(pl->Eval(t))};
  if (const auto* ci = AsCantorIntegral()) return {ci->Eval(t)};
  const auto* tent = AsTentSequence();
  std::vector<Bracket> out;
  out.reserve(tent->Dim());
  for (const Scalar& v : tent->Eval(t)) out.push_back(Bracket::Point(v));
  return out;
}

Bracket LipFunction::LipNumber() const {
  if (const auto* pl = AsPL()) return Bracket::Point(pl->LipNumber());
  // Both remaining families have Lipschitz number exactly 1: slope 1 across
  // any removed middle for the integral family, coordinate 1 for the tents,
  // with no quotient ever exceeding 1.
  return Bracket::Point(Scalar(1));
}

Bracket DifferenceQuotient(const LipFunction& f, const Scalar& x, const Scalar& y) {
  if (x == y) ThrowInvalidArgument("difference quotient needs two distinct points");
  if (!f.InDomain(x) || !f.InDomain(y)) {
    ThrowDomain("difference quotient probe outside the domain");
  }
  Bracket sup = SupAbs(f.Eval(x), f.Eval(y));
  return sup / (x - y).Abs();
}

std::vector<Bracket> DerivativeProbe(const LipFunction& f, const Scalar& x,
                                     const Scalar& h) {
  if (h.IsZero()) ThrowInvalidArgument("derivative probe needs h != 0");
  if (!f.InDomain(x) || !f.InDomain(x + h)) {
    ThrowDomain("derivative probe outside the domain");
  }
  std::vector<Bracket> fx = f.Eval(x);
  std::vector<Bracket> fxh = f.Eval(x + h);
  std::vector<Bracket> out;
  out.reserve(fx.size());
  for (std::size_t i = 0; i < fx.size(); ++i) {
    out.push_back((fxh[i] - fx[i]) / h);
  }
  return out;
}

AttainmentReport StrongAttainmentCheck(const LipFunction& f,
                                       const std::vector<QuotientPair>& pairs,
                                       const Scalar& tol) {
  if (pairs.empty()) ThrowInvalidArgument("attainment check needs at least one pair");
  if (tol < kZero) ThrowInvalidArgument("tolerance must be >= 0");
  Bracket lip = f.LipNumber();
  Bracket best = DifferenceQuotient(f, pairs[0].x, pairs[0].y);
  int best_pair = 0;
  Scalar roof = best.hi;
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    Bracket q = DifferenceQuotient(f, pairs[i].x, pairs[i].y);
    roof = Max(roof, q.hi);
    if (q.lo > best.lo) {
      best = q;
      best_pair = static_cast<int>(i);
    }
  }
  AttainmentStatus status = AttainmentStatus::kInconclusive;
  if (best.lo >= lip.hi - tol) {
    status = AttainmentStatus::kAttained;
  } else if (roof < lip.lo - tol) {
    status = AttainmentStatus::kNotAttained;
  }
  return {status, best, best_pair};
}

std::optional<OscillationWitness> FindOscillationWitness(const LipFunction& f,
                                                         const Scalar& x,
                                                         const Scalar& delta,
                                                         const Scalar& lower,
                                                         int scales) {
  if (!(delta > kZero)) ThrowInvalidArgument("delta must be positive");
  if (!(lower > kZero)) ThrowInvalidArgument("separation threshold must be positive");
  if (scales < 1) ThrowInvalidArgument("need at least one scale");
  if (!f.InDomain(x)) ThrowDomain("witness base point outside the domain");

  long m = 0;
  while (Scalar::Pow2(-m) >= delta) ++m;

  std::vector<Scalar> steps;
  for (int i = 0; i < scales; ++i) {
    Scalar h = Scalar::Pow2(-(m + i));
    if (f.InDomain(x + h)) steps.push_back(h);
    if (f.InDomain(x - h)) steps.push_back(-h);
  }

  std::vector<std::vector<Bracket>> secants;
  secants.reserve(steps.size());
  for (const Scalar& h : steps) secants.push_back(DerivativeProbe(f, x, h));

  for (std::size_t i = 0; i < steps.size(); ++i) {
    for (std::size_t j = i + 1; j < steps.size(); ++j) {
      Bracket sep = SupAbs(secants[i], secants[j]);
      if (sep.lo >= lower) {
        return OscillationWitness{steps[i], steps[j], sep};
      }
    }
  }
  return std::nullopt;
}

}  // namespace maxaffine
