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

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "core/interval_set.hpp"
#include "core/json_util.hpp"
#include "core/scalar.hpp"

namespace maxaffine {

enum class ScheduleKind { kTernary, kGeometric };

// Removal schedule for a symmetric Cantor construction on [0, 1]. Step n
// removes the centered open middle from each of the 2^(n-1) surviving
// components:
//   ternary    removes middles of length 3^-n (the classic measure-zero set),
//   geometric  removes middles of length k * c^n / 4^(n-1), which leaves a
//              set of positive measure 1 - kc / (1 - c/2).
// The geometric parameters are restricted to 0 < c < 1 and 0 < k <= 1/4.
class RemovalSchedule {
 public:
  static RemovalSchedule Ternary();
  static RemovalSchedule Geometric(const Scalar& c, const Scalar& k);

  ScheduleKind Kind() const { return kind_; }
  const Scalar& C() const { return c_; }
  const Scalar& K() const { return k_; }

  Scalar RemovalLength(int step) const;  // step >= 1
  Scalar LimitMeasure() const;           // Lebesgue measure of the limit set

  friend bool operator==(const RemovalSchedule& a, const RemovalSchedule& b) {
    return a.kind_ == b.kind_ && a.c_ == b.c_ && a.k_ == b.k_;
  }

 private:
  RemovalSchedule(ScheduleKind kind, Scalar c, Scalar k)
      : kind_(kind), c_(std::move(c)), k_(std::move(k)) {}

  ScheduleKind kind_;
  Scalar c_;  // 0 for ternary
  Scalar k_;  // 0 for ternary
};

// A finite-depth truncation C_d of a Cantor construction, together with the
// exact closed-form measures needed to bracket quantities about the limit
// set C. The truncation has 2^depth components of equal length; they are
// never materialized eagerly, because depth 30 and beyond is routine while
// 2^30 intervals are not. All window queries walk the construction tree and
// visit O(depth) nodes: a subtree is expanded only while it straddles a
// window endpoint.
class FatCantorSet {
 public:
  // Runs the construction step by step, checking at every step that the
  // middle to be removed is strictly shorter than the current components.
  // Throws Error(kInfeasibleSchedule) otherwise and Error(kInvalidArgument)
  // for depth < 1.
  static FatCantorSet Build(const RemovalSchedule& schedule, int depth);

  // The same construction continued extra_depth more steps. The deeper
  // truncation is nested inside this one.
  FatCantorSet Refine(int extra_depth) const;

  const RemovalSchedule& Schedule() const { return schedule_; }
  int Depth() const { return depth_; }

  // Component length at each level; Level(depth) is the leaf length.
  const Scalar& LevelLength(int level) const { return level_length_[level]; }
  const Scalar& ComponentLength() const { return level_length_[depth_]; }
  const Scalar& RemovalAt(int step) const { return removal_length_[step]; }

  const Scalar& TruncationMeasure() const { return truncation_measure_; }
  const Scalar& LimitMeasure() const { return limit_measure_; }
  // TruncationMeasure() - LimitMeasure(): everything still to be removed.
  const Scalar& Tail() const { return tail_; }
  // Measure of the truncation inside one component at the given level.
  const Scalar& ComponentMeasure(int level) const { return component_measure_[level]; }

  // Certified bracket for the measure of C intersected with the window:
  // hi is the exact measure of the truncation inside the window, and
  // lo = max(0, hi - Tail()). Requires window within [0, 1].
  Bracket MeasureIn(const Interval& window) const;

  // Exact measure of the truncation inside [0, t].
  Scalar PrefixMeasure(const Scalar& t) const;

  // One maximal piece of the window in the decomposition induced by the
  // construction tree, emitted left to right by ScanWindow. Pieces tile the
  // window: kFullComponent spans write one whole level-n component, kLeafPart
  // is a (possibly clipped) slice of a single depth-level component, and
  // kGapPart lies inside a removed middle.
  struct WindowPiece {
    enum class Kind { kFullComponent, kLeafPart, kGapPart };
    Kind kind;
    int level;  // meaningful for kFullComponent
    Interval span;
  };
  void ScanWindow(const Interval& window,
                  const std::function<void(const WindowPiece&)>& emit) const;

  // Streams the truncation components left to right (2^depth of them).
  void EnumerateComponents(const std::function<void(const Interval&)>& emit) const;

  // Materializes the truncation. Guarded: throws Error(kInvalidArgument)
  // when 2^depth exceeds max_components.
  DisjointIntervalSet Truncation(std::uint64_t max_components = kDefaultMaterializeCap) const;

  // A closed sub-window of positive length lying strictly inside a removed
  // middle (hence disjoint from every truncation and from the limit set).
  // Guaranteed to exist whenever the window is longer than ComponentLength().
  std::optional<Interval> GapWithin(const Interval& window) const;

  // JSON document {schedule, c, k, depth, components, tail}. Components are
  // included only when 2^depth <= max_components (throws otherwise); pass
  // include_components = false to emit "components": null.
  Json ToJson(bool include_components = true,
              std::uint64_t max_components = kDefaultMaterializeCap) const;
  void WriteJson(std::ostream& os, bool include_components,
                 std::uint64_t max_components = kDefaultSerializeCap) const;
  // Rebuilds from {schedule, c, k, depth}; a components field, if present,
  // is ignored (the construction is deterministic).
  static FatCantorSet FromJson(const Json& j);

  static constexpr std::uint64_t kDefaultMaterializeCap = 1u << 20;
  static constexpr std::uint64_t kDefaultSerializeCap = 1u << 24;
  static constexpr int kMaxDepth = 256;

 private:
  FatCantorSet(RemovalSchedule schedule, int depth);

  void Scan(int level, const Scalar& x, const Interval& window,
            const std::function<void(const WindowPiece&)>& emit) const;
  void Enumerate(int level, const Scalar& x,
                 const std::function<void(const Interval&)>& emit) const;

  RemovalSchedule schedule_;
  int depth_;
  std::vector<Scalar> level_length_;       // L_0 .. L_depth
  std::vector<Scalar> removal_length_;     // unused slot 0, then l_1 .. l_depth
  std::vector<Scalar> component_measure_;  // mu_0 .. mu_depth, mu_n = 2^(d-n) L_d
  Scalar truncation_measure_;
  Scalar limit_measure_;
  Scalar tail_;
};

}  // namespace maxaffine
