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
#include <optional>
#include <string>
#include <vector>

#include "core/cantor.hpp"
#include "core/interval_set.hpp"
#include "core/json_util.hpp"
#include "core/lip_function.hpp"
#include "core/scalar.hpp"

namespace maxaffine {

struct AffineMap {
  Scalar slope;      // x0
  Scalar intercept;  // y0; g(t) = x0 * t + y0

  Scalar Eval(const Scalar& t) const { return slope * t + intercept; }
  Scalar LipNumber() const { return slope.Abs(); }
};

// Certified enclosures for the extremes of the residual h(t) = f(t) - x0*t
// over a window.
struct ResidualExtremes {
  Bracket max_h;
  Bracket min_h;
};

// Residual extremes for a scalar-valued f (piecewise-linear or Cantor
// integral; exact points for the former, tail-widened for the latter).
ResidualExtremes ComputeResidualExtremes(const LipFunction& f,
                                         const Interval& window,
                                         const Scalar& slope);

// Walks the construction tree to find the exact extremes of the truncated
// residual h_d(t) = (1 - x0)*t - measure(C_d intersect [0, t]) over a window,
// then widens by [0, Tail]: the limit residual exceeds the truncated one by
// exactly the mass removed after depth d before t. h_d is linear between
// consecutive component endpoints, so per-level extreme offsets (relative to
// the component's left endpoint) obey a two-term recursion and every window
// query costs O(depth) after the O(depth) table build. The set must outlive
// the scanner.
class CantorResidualScanner {
 public:
  CantorResidualScanner(const FatCantorSet& set, const Scalar& slope);

  ResidualExtremes WindowExtremes(const Interval& window) const;

  const Scalar& ComponentDelta(int level) const { return comp_delta_[level]; }
  const Scalar& GapDelta(int step) const { return gap_delta_[step]; }

 private:
  const FatCantorSet* set_;
  Scalar slope_;
  Scalar drift_;                   // 1 - slope, the residual slope across gaps
  std::vector<Scalar> comp_delta_;  // net residual change across a level-n component
  std::vector<Scalar> gap_delta_;   // net residual change across a step-n middle
  std::vector<Scalar> shape_max_;   // extreme offsets within a level-n component
  std::vector<Scalar> shape_min_;
};

// Minimax intercept at fixed slope: over the window, the best intercept is
// the midpoint (max h + min h)/2 of the residual extremes and achieves sup
// error (max h - min h)/2. Both are returned as enclosures; they degenerate
// to exact points for piecewise-linear f.
struct InterceptFit {
  Bracket intercept;
  Bracket sup_error;
};
InterceptFit BestIntercept(const LipFunction& f, const Interval& window,
                           const Scalar& slope);

// Certified sup error of an arbitrary affine map against f over the window.
Bracket AffineSupError(const LipFunction& f, const Interval& window,
                       const AffineMap& g);

struct FitReport {
  Interval interval;  // the sub-window the fit lives on
  AffineMap map;
  Bracket sup_error;  // sup over the sub-window of |f - g|
  Scalar lip_gap;     // Lip(f restricted to the requested interval) - Lip(g)
};

struct MaxAffineDiagnostics {
  Scalar lip_restricted;                  // s = Lip(f restricted to I)
  int sign;                               // +1 or -1: the steep direction kept
  std::vector<Interval> steep_components;  // merged segments with sign*slope > (1 - 2eps/3)s
};

// Constructive affine approximation with a slope of maximal size: picks the
// direction sign whose slopes reach s = Lip(f restricted to I), merges the
// clipped segments steeper than (1 - 2eps/3)*s, takes the longest merged
// component I1 (leftmost on ties, every component has derivative density 1
// there), and balances the intercept so the residual is equioscillating at
// the endpoints. The result satisfies, exactly in rational arithmetic,
//   Lip(g) = s   and   sup_{t in I1} |f - g| <= eps * diam(I1) * Lip(f).
// Requires 0 < eps < 1 and f nonconstant on I (else a degenerate-input
// error).
FitReport MaximalAapConstruct(const PLFunction& f, const Interval& I,
                              const Scalar& eps,
                              MaxAffineDiagnostics* diag = nullptr);

enum class CellStatus { kCertified, kInconclusive };

struct CampaignCell {
  Scalar a;
  Scalar b;
  std::optional<Scalar> slope;  // absent for measure-only campaigns
  Scalar margin_lo;             // certified lower bound of (quantity - threshold)
  CellStatus status;
  int depth;                    // truncation depth the cell was resolved at
};

struct CampaignReport {
  Scalar c;
  Scalar k;
  Scalar grid_step;
  int depth;  // auto-selected depth, or the depth budget for escalating runs
  std::vector<CampaignCell> cells;

  std::uint64_t Total() const { return cells.size(); }
  std::uint64_t Certified() const;
  std::uint64_t Inconclusive() const { return Total() - Certified(); }
  bool AllCertified() const { return Certified() == Total(); }

  Json ToJson() const;
  std::string ToCsv() const;
  static CampaignReport FromJson(const Json& j);
};

// Certifies, cell by cell, that the set built from Geometric(c, k) satisfies
// lambda(C intersect [a, b]) > (b - a)/2 on every grid window with
// b - a >= width_floor. margin_lo is the certified measure lower bound minus
// (b - a)/2. When no depth is given, one is selected so that Tail falls below
// c/2 - kc/(1 - c/2), which certifies every window of width >= c in a single
// pass. threads = 0 uses all hardware threads (capped by MAXAFFINE_THREADS).
CampaignReport CertifyWindowMeasure(const Scalar& c, const Scalar& k,
                                    const Scalar& grid_step,
                                    const Scalar& width_floor,
                                    std::optional<int> depth = std::nullopt,
                                    int threads = 0);

// The default slope grid {+-(7/8 + j/64) : j = 1..16}.
std::vector<Scalar> DefaultFalsifierSlopes();

// Certifies that affine approximation at near-maximal slope fails uniformly
// for f(t) = t - lambda(C intersect [0, t]) over Geometric(c, 1/4): for every
// grid window [a, b] with b - a >= c and every slope (each must have
// |x0| > 7/8), the minimax sup error certifiably exceeds (b - a)/8.
// margin_lo is sup_error.lo - (b - a)/8. Cells are retried at depths
// 6, 12, ... up to depth_budget until certified; cells still unresolved at
// the budget are reported inconclusive, never certified.
CampaignReport FalsifyUniformFit(const Scalar& c, const Scalar& grid_step,
                                 const std::vector<Scalar>& slopes,
                                 int depth_budget, int threads = 0);

}  // namespace maxaffine
