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
#include <utility>
#include <vector>

#include "core/scalar.hpp"

namespace maxaffine {

// Closed interval [lo, hi] with exact rational endpoints. Degenerate
// intervals (lo == hi) are allowed; lo > hi is rejected at construction.
struct Interval {
  Scalar lo;
  Scalar hi;

  Interval(Scalar lo_in, Scalar hi_in);

  Scalar Length() const { return hi - lo; }
  bool IsPoint() const { return lo == hi; }
  bool Contains(const Scalar& t) const { return lo <= t && t <= hi; }
  bool Contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  std::optional<Interval> Intersect(const Interval& o) const;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// Splits an interval into the two closed pieces left over after removing a
// centered open middle of the given length. Errors when len <= 0 or when
// len >= Length() (nothing would be left to split).
std::pair<Interval, Interval> RemoveOpenMiddle(const Interval& iv, const Scalar& len);

// Finite union of closed intervals, kept sorted with strictly positive gaps
// between consecutive components. Touching or overlapping inputs are merged
// during normalization. Immutable after construction; the empty set is the
// empty component list.
class DisjointIntervalSet {
 public:
  DisjointIntervalSet() = default;

  // Sorts, merges overlapping and touching intervals.
  static DisjointIntervalSet Normalized(std::vector<Interval> intervals);
  // Trusts the input to already satisfy the class invariant (checked).
  static DisjointIntervalSet FromSortedDisjoint(std::vector<Interval> intervals);

  const std::vector<Interval>& Components() const { return components_; }
  bool Empty() const { return components_.empty(); }
  std::size_t Size() const { return components_.size(); }

  Scalar Measure() const;
  bool Contains(const Scalar& t) const;

  // Clips every component to the window. Degenerate point components can
  // appear when the window boundary grazes a component.
  DisjointIntervalSet IntersectWith(const Interval& window) const;

  // Closure of hull \ this. Requires every component to lie inside hull.
  DisjointIntervalSet ComplementWithin(const Interval& hull) const;

  friend bool operator==(const DisjointIntervalSet& a, const DisjointIntervalSet& b) {
    return a.components_ == b.components_;
  }

 private:
  explicit DisjointIntervalSet(std::vector<Interval> components)
      : components_(std::move(components)) {}

  std::vector<Interval> components_;
};

// Certified enclosure [lo, hi] of a real quantity that is not exactly
// representable (or not yet exactly computed). Invariant: lo <= hi.
struct Bracket {
  Scalar lo;
  Scalar hi;

  Bracket(Scalar lo_in, Scalar hi_in);
  static Bracket Point(const Scalar& v) { return Bracket(v, v); }

  Scalar Width() const { return hi - lo; }
  bool IsPoint() const { return lo == hi; }
  bool Contains(const Scalar& v) const { return lo <= v && v <= hi; }
  bool Contains(const Bracket& o) const { return lo <= o.lo && o.hi <= hi; }
  bool Intersects(const Bracket& o) const { return lo <= o.hi && o.lo <= hi; }

  // Enclosure of the absolute value.
  Bracket Abs() const;

  Bracket operator-() const { return Bracket(-hi, -lo); }
  friend Bracket operator+(const Bracket& a, const Bracket& b) {
    return Bracket(a.lo + b.lo, a.hi + b.hi);
  }
  friend Bracket operator-(const Bracket& a, const Bracket& b) {
    return Bracket(a.lo - b.hi, a.hi - b.lo);
  }
  // Scaling by an exact rational (sign-aware).
  friend Bracket operator*(const Bracket& a, const Scalar& s) {
    return s >= 0 ? Bracket(a.lo * s, a.hi * s) : Bracket(a.hi * s, a.lo * s);
  }
  friend Bracket operator/(const Bracket& a, const Scalar& s);

  friend bool operator==(const Bracket& a, const Bracket& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

}  // namespace maxaffine
