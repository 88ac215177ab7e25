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

#include "core/pl_corpus.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "core/affine_fit.hpp"
#include "core/error.hpp"

namespace maxaffine {

namespace {

// Accumulates breakpoints i/nseg and values from a start value and per
// segment slopes.
PLFunction AssemblePL(const std::vector<Scalar>& slopes, const Scalar& start) {
  const int nseg = static_cast<int>(slopes.size());
  std::vector<Scalar> ts;
  std::vector<Scalar> ys;
  ts.reserve(nseg + 1);
  ys.reserve(nseg + 1);
  Scalar y = start;
  Scalar width(1, nseg);
  for (int i = 0; i <= nseg; ++i) {
    ts.push_back(Scalar(i, nseg));
    ys.push_back(y);
    if (i < nseg) y += slopes[i] * width;
  }
  return PLFunction::FromPoints(std::move(ts), std::move(ys));
}

Scalar RandomSixteenth(XorShift64Star& rng, long magnitude) {
  long j = static_cast<long>(rng.NextBelow(2 * magnitude + 1)) - magnitude;
  return Scalar(j, 16);
}

}  // namespace

PLFunction RandomPL(XorShift64Star& rng, int max_segments) {
  if (max_segments < 1 || max_segments > 64) {
    ThrowInvalidArgument("segment cap must be in [1, 64]");
  }
  int nseg = 1 + static_cast<int>(rng.NextBelow(max_segments));
  std::vector<Scalar> slopes(nseg);
  bool nonconstant = false;
  while (!nonconstant) {
    for (Scalar& s : slopes) {
      s = RandomSixteenth(rng, 32);
      if (!s.IsZero()) nonconstant = true;
    }
  }
  Scalar start = RandomSixteenth(rng, 16);
  return AssemblePL(slopes, start);
}

AttainingInstance RandomAttainingPL(XorShift64Star& rng) {
  int nseg = 2 + static_cast<int>(rng.NextBelow(18));
  int run = std::min(nseg, 1 + static_cast<int>(rng.NextBelow(3)));
  int at = static_cast<int>(rng.NextBelow(nseg - run + 1));
  Scalar top = rng.NextBool() ? Scalar(2) : Scalar(-2);
  std::vector<Scalar> slopes(nseg);
  for (int i = 0; i < nseg; ++i) {
    if (i >= at && i < at + run) {
      slopes[i] = top;
    } else {
      slopes[i] = RandomSixteenth(rng, 30);  // size <= 15/8, strictly under 2
    }
  }
  Scalar start = RandomSixteenth(rng, 16);
  return {AssemblePL(slopes, start), Scalar(at, nseg), Scalar(at + run, nseg),
          Scalar(2)};
}

AapCorpusReport RunAapCorpus(std::uint64_t seed, int count, const Scalar& eps) {
  if (count < 1) ThrowInvalidArgument("corpus size must be >= 1");
  XorShift64Star rng(seed);
  Json details = Json::array();
  int passed = 0;
  for (int i = 0; i < count; ++i) {
    PLFunction f = RandomPL(rng);
    MaxAffineDiagnostics diag;
    FitReport fit = MaximalAapConstruct(f, f.Domain(), eps, &diag);
    bool lip_ok = fit.map.LipNumber() > diag.lip_restricted - eps;
    Scalar bound = eps * fit.interval.Length() * f.LipNumber();
    bool error_ok = fit.sup_error.hi <= bound;
    Bracket direct = AffineSupError(LipFunction(f), fit.interval, fit.map);
    bool cross_ok =
        direct.lo == fit.sup_error.lo && direct.hi == fit.sup_error.hi;
    bool ok = lip_ok && error_ok && cross_ok;
    if (ok) ++passed;
    Json row;
    row["index"] = i;
    row["segments"] = f.SegmentCount();
    row["lip"] = RationalToJson(f.LipNumber());
    row["lip_restricted"] = RationalToJson(diag.lip_restricted);
    row["interval"] = Json::array(
        {RationalToJson(fit.interval.lo), RationalToJson(fit.interval.hi)});
    row["slope"] = RationalToJson(fit.map.slope);
    row["intercept"] = RationalToJson(fit.map.intercept);
    row["sup_error"] = RationalToJson(fit.sup_error.hi);
    row["bound"] = RationalToJson(bound);
    row["pass"] = ok;
    details.push_back(std::move(row));
  }
  return {seed, count, passed, std::move(details)};
}

Json AapCorpusReport::ToJson() const {
  Json j;
  j["seed"] = seed;
  j["total"] = total;
  j["passed"] = passed;
  j["all_passed"] = AllPassed();
  j["instances"] = details;
  return j;
}

TentExampleReport RunTentExample(int dim) {
  TentSequenceFunction tent(dim);
  LipFunction f(tent);
  TentExampleReport rep{dim, false, true, 0, 0, Json()};

  Bracket lip = f.LipNumber();
  rep.lip_exact = lip.lo == Scalar(1) && lip.hi == Scalar(1);

  // Every coordinate past the first is even about 1/2, so the secant between
  // 1/2 + 2^-n and 1/2 - 2^-n collapses to the first coordinate vector.
  Json quotients = Json::array();
  for (int n = 2; n < dim; ++n) {
    Scalar h = Scalar::Pow2(-n);
    Scalar u = Scalar(1, 2) + h;
    Scalar v = Scalar(1, 2) - h;
    bool row_ok = true;
    for (int i = 1; i <= dim; ++i) {
      Scalar q = (tent.Coordinate(i, u) - tent.Coordinate(i, v)) / (u - v);
      if (q != (i == 1 ? Scalar(1) : Scalar(0))) row_ok = false;
    }
    if (!row_ok) rep.quotients_exact = false;
    Json row;
    row["n"] = n;
    row["equals_e1"] = row_ok;
    quotients.push_back(std::move(row));
  }

  Json witnesses = Json::array();
  if (dim >= 7) {
    const int scale_cap = std::min(8, dim - 4);
    const Scalar half(1, 2);
    for (int p = 0; p < 32; ++p) {
      Scalar t0(p, 32);
      for (int m = 0; m <= scale_cap; ++m) {
        ++rep.witnesses_sought;
        auto witness = FindOscillationWitness(f, t0, Scalar::Pow2(-m), half);
        Json row;
        row["t0"] = RationalToJson(t0);
        row["scale_log2"] = -m;
        row["found"] = witness.has_value();
        if (witness) {
          ++rep.witnesses_found;
          row["step_a"] = RationalToJson(witness->step_a);
          row["step_b"] = RationalToJson(witness->step_b);
          row["separation_lo"] = RationalToJson(witness->separation.lo);
        }
        witnesses.push_back(std::move(row));
      }
    }
  }

  Json details;
  details["symmetric_quotients"] = std::move(quotients);
  details["witnesses"] = std::move(witnesses);
  rep.details = std::move(details);
  return rep;
}

Json TentExampleReport::ToJson() const {
  Json j;
  j["dim"] = dim;
  j["lip_exact"] = lip_exact;
  j["quotients_exact"] = quotients_exact;
  j["witnesses_sought"] = witnesses_sought;
  j["witnesses_found"] = witnesses_found;
  j["ok"] = Ok();
  j["details"] = details;
  return j;
}

void WriteTentGridCsv(std::ostream& os, int dim) {
  if (dim < 1 || dim > 24) {
    ThrowInvalidArgument("grid dimension must be in [1, 24]");
  }
  TentSequenceFunction tent(dim);
  os << "t";
  for (int i = 1; i <= dim; ++i) os << ",x" << i;
  os << '\n';
  os.precision(17);
  const long n = 1L << dim;
  for (long i = 0; i < n; ++i) {
    Scalar t(i, n);
    os << t.ToDouble();
    for (const Scalar& v : tent.Eval(t)) os << ',' << v.ToDouble();
    os << '\n';
  }
}

}  // namespace maxaffine
