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

#include "core/interval_set.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace maxaffine {

Interval::Interval(Scalar lo_in, Scalar hi_in) : lo(std::move(lo_in)), hi(std::move(hi_in)) {
  if (hi < lo) {
    ThrowInvalidArgument("interval endpoints out of order: [" + lo.Str() + ", " + hi.Str() + "]");
  }
}

std::optional<Interval> Interval::Intersect(const Interval& o) const {
  const Scalar& l = Max(lo, o.lo);
  const Scalar& h = Min(hi, o.hi);
  if (h < l) return std::nullopt;
  return Interval(l, h);
}

std::pair<Interval, Interval> RemoveOpenMiddle(const Interval& iv, const Scalar& len) {
  if (len.Sign() <= 0) {
    ThrowInfeasible("removed middle must have positive length, got " + len.Str());
  }
  if (len >= iv.Length()) {
    ThrowInfeasible("removed middle of length " + len.Str() +
                    " does not fit inside an interval of length " + iv.Length().Str());
  }
  Scalar center = (iv.lo + iv.hi) / Scalar(2);
  Scalar half = len / Scalar(2);
  return {Interval(iv.lo, center - half), Interval(center + half, iv.hi)};
}

DisjointIntervalSet DisjointIntervalSet::Normalized(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  std::vector<Interval> merged;
  merged.reserve(intervals.size());
  for (Interval& iv : intervals) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      if (merged.back().hi < iv.hi) merged.back().hi = iv.hi;
    } else {
      merged.push_back(std::move(iv));
    }
  }
  return DisjointIntervalSet(std::move(merged));
}

DisjointIntervalSet DisjointIntervalSet::FromSortedDisjoint(std::vector<Interval> intervals) {
  for (std::size_t i = 1; i < intervals.size(); ++i) {
    if (!(intervals[i - 1].hi < intervals[i].lo)) {
      ThrowInvalidArgument("components not sorted with positive gaps");
    }
  }
  return DisjointIntervalSet(std::move(intervals));
}

Scalar DisjointIntervalSet::Measure() const {
  Scalar total = 0;
  for (const Interval& iv : components_) total += iv.Length();
  return total;
}

bool DisjointIntervalSet::Contains(const Scalar& t) const {
  // Components are sorted; binary search on the left endpoints.
  auto it = std::upper_bound(components_.begin(), components_.end(), t,
                             [](const Scalar& v, const Interval& iv) { return v < iv.lo; });
  if (it == components_.begin()) return false;
  return t <= std::prev(it)->hi;
}

DisjointIntervalSet DisjointIntervalSet::IntersectWith(const Interval& window) const {
  std::vector<Interval> clipped;
  for (const Interval& iv : components_) {
    if (iv.hi < window.lo) continue;
    if (iv.lo > window.hi) break;
    clipped.emplace_back(Max(iv.lo, window.lo), Min(iv.hi, window.hi));
  }
  // Clipping preserves the positive gaps, so the result is already normal.
  return DisjointIntervalSet(std::move(clipped));
}

DisjointIntervalSet DisjointIntervalSet::ComplementWithin(const Interval& hull) const {
  if (!components_.empty() &&
      (components_.front().lo < hull.lo || hull.hi < components_.back().hi)) {
    ThrowInvalidArgument("complement hull does not contain the set");
  }
  std::vector<Interval> gaps;
  Scalar cursor = hull.lo;
  for (const Interval& iv : components_) {
    if (cursor < iv.lo) gaps.emplace_back(cursor, iv.lo);
    cursor = iv.hi;
  }
  if (cursor < hull.hi) gaps.emplace_back(cursor, hull.hi);
  return DisjointIntervalSet(std::move(gaps));
}

Bracket::Bracket(Scalar lo_in, Scalar hi_in) : lo(std::move(lo_in)), hi(std::move(hi_in)) {
  if (hi < lo) {
    ThrowInvalidArgument("bracket endpoints out of order: [" + lo.Str() + ", " + hi.Str() + "]");
  }
}

Bracket Bracket::Abs() const {
  if (lo.Sign() >= 0) return *this;
  if (hi.Sign() <= 0) return Bracket(-hi, -lo);
  return Bracket(Scalar(0), Max(-lo, hi));
}

Bracket operator/(const Bracket& a, const Scalar& s) {
  if (s.IsZero()) ThrowInvalidArgument("bracket division by zero");
  return s > 0 ? Bracket(a.lo / s, a.hi / s) : Bracket(a.hi / s, a.lo / s);
}

}  // namespace maxaffine
