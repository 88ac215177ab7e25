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
#include <ostream>

#include "core/json_util.hpp"
#include "core/lip_function.hpp"
#include "core/rng.hpp"
#include "core/scalar.hpp"

namespace maxaffine {

// Random nonconstant piecewise-linear function on [0, 1]: up to max_segments
// equal segments, slopes on the grid {j/16 : |j| <= 32}. Deterministic given
// the generator state.
PLFunction RandomPL(XorShift64Star& rng, int max_segments = 19);

// A random piecewise-linear function that attains its Lipschitz number at an
// exact pair (p, q): a run of 1 to 3 consecutive segments carries slope
// +-2 while every other slope stays strictly below 2 in size, so the
// quotient over [p, q] (the run's span) equals Lip(f) = 2 exactly.
struct AttainingInstance {
  PLFunction f;
  Scalar p;
  Scalar q;
  Scalar lip;
};
AttainingInstance RandomAttainingPL(XorShift64Star& rng);

// Runs the maximal-slope affine construction over a seeded corpus and checks
// both guarantees exactly in rational arithmetic: Lip(g) > Lip(f|_I) - eps
// and sup error <= eps * diam(I1) * Lip(f). A third cross-check recomputes
// the sup error through the generic residual-extremes path.
struct AapCorpusReport {
  std::uint64_t seed;
  int total;
  int passed;
  Json details;

  bool AllPassed() const { return passed == total; }
  Json ToJson() const;
};
AapCorpusReport RunAapCorpus(std::uint64_t seed, int count, const Scalar& eps);

// Exercises the tent-sequence map of the given dimension: Lipschitz number
// exactly 1, the symmetric secants at (1/2 + 2^-n, 1/2 - 2^-n) equal to the
// first coordinate vector exactly for n = 2..dim-1, and (for dim >= 7)
// oscillation witnesses with separation >= 1/2 at base points p/32 for every
// scale 2^-m with m <= min(8, dim - 4). Smaller dimensions skip the witness
// scan: below scale 2^(1-dim) the finitely many tents are locally affine,
// so no oscillation is there to find.
struct TentExampleReport {
  int dim;
  bool lip_exact;
  bool quotients_exact;
  int witnesses_sought;
  int witnesses_found;
  Json details;

  bool Ok() const {
    return lip_exact && quotients_exact && witnesses_found == witnesses_sought;
  }
  Json ToJson() const;
};
TentExampleReport RunTentExample(int dim);

// Samples every coordinate on the 2^dim-point grid {i/2^dim : 0 <= i < 2^dim}
// as CSV plot data (floating-point formatting; the grid is for pictures, not
// certificates). dim is capped at 24.
void WriteTentGridCsv(std::ostream& os, int dim);

}  // namespace maxaffine
