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

#include "core/cantor.hpp"

#include <string>
#include <utility>

#include "core/error.hpp"

namespace maxaffine {

namespace {

const Scalar kZero(0);
const Scalar kOne(1);

std::string ScheduleName(ScheduleKind kind) {
  return kind == ScheduleKind::kTernary ? "ternary" : "geometric";
}

}  // namespace

RemovalSchedule RemovalSchedule::Ternary() {
  return RemovalSchedule(ScheduleKind::kTernary, Scalar(0), Scalar(0));
}

RemovalSchedule RemovalSchedule::Geometric(const Scalar& c, const Scalar& k) {
  if (!(c > kZero && c < kOne)) {
    ThrowInvalidArgument("geometric schedule needs 0 < c < 1, got c = " + c.Str());
  }
  if (!(k > kZero && k <= Scalar(1, 4))) {
    ThrowInvalidArgument("geometric schedule needs 0 < k <= 1/4, got k = " + k.Str());
  }
  return RemovalSchedule(ScheduleKind::kGeometric, c, k);
}

Scalar RemovalSchedule::RemovalLength(int step) const {
  if (step < 1) ThrowInvalidArgument("removal step must be >= 1");
  if (kind_ == ScheduleKind::kTernary) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 3, static_cast<unsigned long>(step));
    return Scalar(mpz_class(1), den);
  }
  // k * c^step / 4^(step-1)
  Scalar len = k_;
  for (int i = 0; i < step; ++i) len *= c_;
  for (int i = 1; i < step; ++i) len /= Scalar(4);
  return len;
}

Scalar RemovalSchedule::LimitMeasure() const {
  if (kind_ == ScheduleKind::kTernary) return Scalar(0);
  // Removing 2^(n-1) middles of length k c^n / 4^(n-1) takes out
  // sum_n k c^n / 2^(n-1) = kc / (1 - c/2) in total.
  return kOne - k_ * c_ / (kOne - c_ / Scalar(2));
}

FatCantorSet FatCantorSet::Build(const RemovalSchedule& schedule, int depth) {
  return FatCantorSet(schedule, depth);
}

FatCantorSet::FatCantorSet(RemovalSchedule schedule, int depth)
    : schedule_(std::move(schedule)), depth_(depth) {
  if (depth < 1 || depth > kMaxDepth) {
    ThrowInvalidArgument("depth must be in [1, " + std::to_string(kMaxDepth) +
                         "], got " + std::to_string(depth));
  }
  level_length_.reserve(depth + 1);
  removal_length_.reserve(depth + 1);
  level_length_.push_back(kOne);
  removal_length_.push_back(kZero);  // slot 0 keeps indices aligned with steps
  for (int n = 1; n <= depth; ++n) {
    Scalar removed = schedule_.RemovalLength(n);
    const Scalar& parent = level_length_.back();
    if (!(removed > kZero && removed < parent)) {
      ThrowInfeasible("step " + std::to_string(n) + " removes " + removed.Str() +
                      " from components of length " + parent.Str());
    }
    level_length_.push_back((parent - removed) / Scalar(2));
    removal_length_.push_back(std::move(removed));
  }
  truncation_measure_ = Scalar::Pow2(depth) * level_length_[depth];
  limit_measure_ = schedule_.LimitMeasure();
  tail_ = truncation_measure_ - limit_measure_;
  component_measure_.resize(depth + 1);
  component_measure_[depth] = level_length_[depth];
  for (int n = depth - 1; n >= 0; --n) {
    component_measure_[n] = component_measure_[n + 1] * Scalar(2);
  }
}

FatCantorSet FatCantorSet::Refine(int extra_depth) const {
  if (extra_depth < 0) ThrowInvalidArgument("extra_depth must be >= 0");
  return FatCantorSet(schedule_, depth_ + extra_depth);
}

void FatCantorSet::Scan(int level, const Scalar& x, const Interval& window,
                        const std::function<void(const WindowPiece&)>& emit) const {
  const Scalar hi = x + level_length_[level];
  if (hi <= window.lo || x >= window.hi) return;
  if (window.lo <= x && hi <= window.hi) {
    emit({WindowPiece::Kind::kFullComponent, level, Interval(x, hi)});
    return;
  }
  if (level == depth_) {
    emit({WindowPiece::Kind::kLeafPart, level,
          Interval(Max(x, window.lo), Min(hi, window.hi))});
    return;
  }
  const Scalar& child = level_length_[level + 1];
  Scan(level + 1, x, window, emit);
  Scalar gap_lo = Max(x + child, window.lo);
  Scalar gap_hi = Min(hi - child, window.hi);
  if (gap_lo < gap_hi) {
    emit({WindowPiece::Kind::kGapPart, level + 1,
          Interval(std::move(gap_lo), std::move(gap_hi))});
  }
  Scan(level + 1, hi - child, window, emit);
}

void FatCantorSet::ScanWindow(const Interval& window,
                              const std::function<void(const WindowPiece&)>& emit) const {
  if (window.lo < kZero || window.hi > kOne) {
    ThrowDomain("window [" + window.lo.Str() + ", " + window.hi.Str() +
                "] leaves the hull [0, 1]");
  }
  Scan(0, kZero, window, emit);
}

Bracket FatCantorSet::MeasureIn(const Interval& window) const {
  Scalar inside(0);
  ScanWindow(window, [&](const WindowPiece& piece) {
    switch (piece.kind) {
      case WindowPiece::Kind::kFullComponent:
        inside += component_measure_[piece.level];
        break;
      case WindowPiece::Kind::kLeafPart:
        inside += piece.span.Length();
        break;
      case WindowPiece::Kind::kGapPart:
        break;
    }
  });
  return Bracket(Max(kZero, inside - tail_), inside);
}

Scalar FatCantorSet::PrefixMeasure(const Scalar& t) const {
  if (t <= kZero) return Scalar(0);
  if (t >= kOne) return truncation_measure_;
  return MeasureIn(Interval(kZero, t)).hi;
}

void FatCantorSet::Enumerate(int level, const Scalar& x,
                             const std::function<void(const Interval&)>& emit) const {
  if (level == depth_) {
    emit(Interval(x, x + level_length_[level]));
    return;
  }
  Enumerate(level + 1, x, emit);
  Enumerate(level + 1, x + level_length_[level] - level_length_[level + 1], emit);
}

void FatCantorSet::EnumerateComponents(
    const std::function<void(const Interval&)>& emit) const {
  Enumerate(0, kZero, emit);
}

DisjointIntervalSet FatCantorSet::Truncation(std::uint64_t max_components) const {
  if (depth_ >= 63 || (std::uint64_t{1} << depth_) > max_components) {
    ThrowInvalidArgument("refusing to materialize 2^" + std::to_string(depth_) +
                         " components (cap " + std::to_string(max_components) + ")");
  }
  std::vector<Interval> parts;
  parts.reserve(std::size_t{1} << depth_);
  EnumerateComponents([&](const Interval& iv) { parts.push_back(iv); });
  return DisjointIntervalSet::FromSortedDisjoint(std::move(parts));
}

std::optional<Interval> FatCantorSet::GapWithin(const Interval& window) const {
  std::optional<Interval> found;
  ScanWindow(window, [&](const WindowPiece& piece) {
    if (found) return;
    if (piece.kind == WindowPiece::Kind::kGapPart) {
      // Emitted gap pieces have positive length; their middle half sits
      // strictly inside the removed-middle interval.
      Scalar quarter = piece.span.Length() / Scalar(4);
      found = Interval(piece.span.lo + quarter, piece.span.hi - quarter);
      return;
    }
    if (piece.kind == WindowPiece::Kind::kFullComponent &&
        piece.level < depth_) {
      // The scan does not descend into fully covered components, but every
      // component above leaf level loses its centered middle at the next
      // step; its inner half is already a certified gap.
      Scalar center = (piece.span.lo + piece.span.hi) / Scalar(2);
      Scalar quarter = RemovalAt(piece.level + 1) / Scalar(4);
      found = Interval(center - quarter, center + quarter);
    }
  });
  return found;
}

Json FatCantorSet::ToJson(bool include_components,
                          std::uint64_t max_components) const {
  Json j;
  j["schedule"] = ScheduleName(schedule_.Kind());
  if (schedule_.Kind() == ScheduleKind::kGeometric) {
    j["c"] = RationalToJson(schedule_.C());
    j["k"] = RationalToJson(schedule_.K());
  } else {
    j["c"] = nullptr;
    j["k"] = nullptr;
  }
  j["depth"] = depth_;
  j["truncation_measure"] = RationalToJson(truncation_measure_);
  j["limit_measure"] = RationalToJson(limit_measure_);
  j["tail"] = RationalToJson(tail_);
  if (!include_components) {
    j["components"] = nullptr;
    return j;
  }
  if (depth_ >= 63 || (std::uint64_t{1} << depth_) > max_components) {
    ThrowInvalidArgument("refusing to serialize 2^" + std::to_string(depth_) +
                         " components (cap " + std::to_string(max_components) +
                         "); drop the component list instead");
  }
  Json comps = Json::array();
  EnumerateComponents([&](const Interval& iv) {
    comps.push_back(Json::array({RationalToJson(iv.lo), RationalToJson(iv.hi)}));
  });
  j["components"] = std::move(comps);
  return j;
}

void FatCantorSet::WriteJson(std::ostream& os, bool include_components,
                             std::uint64_t max_components) const {
  Json head = ToJson(false);
  head.erase("components");
  std::string prefix = head.dump();
  prefix.pop_back();  // strip the closing brace, components are streamed next
  os << prefix << ",\"components\":";
  if (!include_components) {
    os << "null}";
    return;
  }
  if (depth_ >= 63 || (std::uint64_t{1} << depth_) > max_components) {
    ThrowInvalidArgument("refusing to serialize 2^" + std::to_string(depth_) +
                         " components (cap " + std::to_string(max_components) +
                         "); drop the component list instead");
  }
  os << '[';
  bool first = true;
  EnumerateComponents([&](const Interval& iv) {
    if (!first) os << ',';
    first = false;
    os << Json::array({RationalToJson(iv.lo), RationalToJson(iv.hi)}).dump();
  });
  os << "]}";
}

FatCantorSet FatCantorSet::FromJson(const Json& j) {
  if (!j.is_object()) ThrowParse("cantor set document must be an object");
  for (const char* key : {"schedule", "depth"}) {
    if (!j.contains(key)) ThrowParse(std::string("cantor set document lacks \"") + key + "\"");
  }
  if (!j["schedule"].is_string()) ThrowParse("\"schedule\" must be a string");
  const std::string kind = j["schedule"].get<std::string>();
  if (!j["depth"].is_number_integer()) ThrowParse("\"depth\" must be an integer");
  const int depth = j["depth"].get<int>();
  if (kind == "ternary") {
    return Build(RemovalSchedule::Ternary(), depth);
  }
  if (kind == "geometric") {
    if (!j.contains("c") || !j.contains("k")) {
      ThrowParse("geometric schedule needs \"c\" and \"k\"");
    }
    return Build(RemovalSchedule::Geometric(RationalFromJson(j["c"]),
                                            RationalFromJson(j["k"])),
                 depth);
  }
  ThrowParse("unknown schedule \"" + kind + "\"");
}

}  // namespace maxaffine
