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

#include "maxaffine/maxaffine.h"

#include <cstring>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "core/affine_fit.hpp"
#include "core/cantor.hpp"
#include "core/error.hpp"
#include "core/json_util.hpp"
#include "core/lip_function.hpp"
#include "core/pl_corpus.hpp"
#include "core/scalar.hpp"

struct maf_cantor {
  maxaffine::FatCantorSet set;
};

struct maf_function {
  maxaffine::LipFunction fn;
};

namespace {

using maxaffine::Bracket;
using maxaffine::Error;
using maxaffine::Errc;
using maxaffine::Interval;
using maxaffine::Json;
using maxaffine::Scalar;

thread_local std::string g_last_error;

maf_status StatusOf(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument:
      return MAF_ERR_INVALID_ARGUMENT;
    case Errc::kDomain:
      return MAF_ERR_DOMAIN;
    case Errc::kInfeasibleSchedule:
      return MAF_ERR_INFEASIBLE;
    case Errc::kDegenerateInput:
      return MAF_ERR_DEGENERATE;
    case Errc::kParse:
      return MAF_ERR_PARSE;
    case Errc::kIo:
      return MAF_ERR_IO;
  }
  return MAF_ERR_INTERNAL;
}

template <typename Body>
maf_status Guard(Body&& body) {
  try {
    body();
    return MAF_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return StatusOf(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MAF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return MAF_ERR_INTERNAL;
  }
}

char* DupString(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Require(const void* p, const char* what) {
  if (p == nullptr) {
    maxaffine::ThrowInvalidArgument(std::string(what) + " must not be null");
  }
}

Scalar ParseScalarArg(const char* text, const char* what) {
  Require(text, what);
  auto parsed = Scalar::Parse(text);
  if (!parsed) {
    maxaffine::ThrowParse(std::string(what) + ": expected a rational \"p/q\", got \"" +
                          text + "\"");
  }
  return *parsed;
}

Json ParseJsonArg(const char* text, const char* what) {
  Require(text, what);
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    maxaffine::ThrowParse(std::string(what) + ": " + e.what());
  }
}

void PutString(char** out, const char* what, const std::string& value) {
  Require(out, what);
  *out = DupString(value);
}

void PutScalar(char** out, const char* what, const Scalar& value) {
  PutString(out, what, value.Str());
}

Json BracketsToJson(const std::vector<Bracket>& brackets) {
  Json arr = Json::array();
  for (const Bracket& b : brackets) {
    arr.push_back(Json::array({b.lo.Str(), b.hi.Str()}));
  }
  return arr;
}

}  // namespace

extern "C" {

const char* maf_last_error(void) { return g_last_error.c_str(); }

void maf_string_free(char* s) { delete[] s; }

/* ---- fat Cantor sets ------------------------------------------------- */

maf_status maf_cantor_build_ternary(int depth, maf_cantor** out) {
  return Guard([&] {
    Require(out, "out");
    *out = new maf_cantor{maxaffine::FatCantorSet::Build(
        maxaffine::RemovalSchedule::Ternary(), depth)};
  });
}

maf_status maf_cantor_build_geometric(const char* c, const char* k, int depth,
                                      maf_cantor** out) {
  return Guard([&] {
    Require(out, "out");
    auto schedule = maxaffine::RemovalSchedule::Geometric(
        ParseScalarArg(c, "c"), ParseScalarArg(k, "k"));
    *out = new maf_cantor{maxaffine::FatCantorSet::Build(schedule, depth)};
  });
}

maf_status maf_cantor_refine(const maf_cantor* set, int extra_depth,
                             maf_cantor** out) {
  return Guard([&] {
    Require(set, "set");
    Require(out, "out");
    *out = new maf_cantor{set->set.Refine(extra_depth)};
  });
}

void maf_cantor_free(maf_cantor* set) { delete set; }

int maf_cantor_depth(const maf_cantor* set) {
  return set == nullptr ? -1 : set->set.Depth();
}

maf_status maf_cantor_truncation_measure(const maf_cantor* set, char** out) {
  return Guard([&] {
    Require(set, "set");
    PutScalar(out, "out", set->set.TruncationMeasure());
  });
}

maf_status maf_cantor_limit_measure(const maf_cantor* set, char** out) {
  return Guard([&] {
    Require(set, "set");
    PutScalar(out, "out", set->set.LimitMeasure());
  });
}

maf_status maf_cantor_tail(const maf_cantor* set, char** out) {
  return Guard([&] {
    Require(set, "set");
    PutScalar(out, "out", set->set.Tail());
  });
}

maf_status maf_cantor_measure_in(const maf_cantor* set, const char* a,
                                 const char* b, char** lo, char** hi) {
  return Guard([&] {
    Require(set, "set");
    Interval window(ParseScalarArg(a, "a"), ParseScalarArg(b, "b"));
    Bracket measure = set->set.MeasureIn(window);
    PutScalar(lo, "lo", measure.lo);
    PutScalar(hi, "hi", measure.hi);
  });
}

maf_status maf_cantor_gap_within(const maf_cantor* set, const char* a,
                                 const char* b, int* found, char** lo,
                                 char** hi) {
  return Guard([&] {
    Require(set, "set");
    Require(found, "found");
    Interval window(ParseScalarArg(a, "a"), ParseScalarArg(b, "b"));
    auto gap = set->set.GapWithin(window);
    *found = gap.has_value() ? 1 : 0;
    if (gap) {
      PutScalar(lo, "lo", gap->lo);
      PutScalar(hi, "hi", gap->hi);
    }
  });
}

maf_status maf_cantor_to_json(const maf_cantor* set, int include_components,
                              char** out) {
  return Guard([&] {
    Require(set, "set");
    PutString(out, "out", set->set.ToJson(include_components != 0).dump());
  });
}

maf_status maf_cantor_write_json(const maf_cantor* set, int include_components,
                                 const char* path) {
  return Guard([&] {
    Require(set, "set");
    Require(path, "path");
    std::ofstream os(path);
    if (!os) maxaffine::ThrowIo(std::string("cannot open ") + path);
    set->set.WriteJson(os, include_components != 0);
    os.flush();
    if (!os) maxaffine::ThrowIo(std::string("write failed for ") + path);
  });
}

maf_status maf_cantor_from_json(const char* json_text, maf_cantor** out) {
  return Guard([&] {
    Require(out, "out");
    Json doc = ParseJsonArg(json_text, "json_text");
    *out = new maf_cantor{maxaffine::FatCantorSet::FromJson(doc)};
  });
}

/* ---- Lipschitz functions ---------------------------------------------- */

maf_status maf_function_pl_from_json(const char* json_text, maf_function** out) {
  return Guard([&] {
    Require(out, "out");
    Json doc = ParseJsonArg(json_text, "json_text");
    *out = new maf_function{
        maxaffine::LipFunction(maxaffine::PLFunction::FromJson(doc))};
  });
}

maf_status maf_function_tent(int dim, maf_function** out) {
  return Guard([&] {
    Require(out, "out");
    *out = new maf_function{
        maxaffine::LipFunction(maxaffine::TentSequenceFunction(dim))};
  });
}

maf_status maf_function_cantor_integral(const maf_cantor* set,
                                        maf_function** out) {
  return Guard([&] {
    Require(set, "set");
    Require(out, "out");
    *out = new maf_function{
        maxaffine::LipFunction(maxaffine::CantorIntegralFunction(set->set))};
  });
}

void maf_function_free(maf_function* f) { delete f; }

int maf_function_dim(const maf_function* f) {
  return f == nullptr ? -1 : f->fn.Dim();
}

maf_status maf_function_eval(const maf_function* f, const char* t,
                             char** brackets_json) {
  return Guard([&] {
    Require(f, "f");
    auto values = f->fn.Eval(ParseScalarArg(t, "t"));
    PutString(brackets_json, "brackets_json", BracketsToJson(values).dump());
  });
}

maf_status maf_function_lip_number(const maf_function* f, char** lo, char** hi) {
  return Guard([&] {
    Require(f, "f");
    Bracket lip = f->fn.LipNumber();
    PutScalar(lo, "lo", lip.lo);
    PutScalar(hi, "hi", lip.hi);
  });
}

maf_status maf_function_difference_quotient(const maf_function* f, const char* x,
                                            const char* y, char** lo, char** hi) {
  return Guard([&] {
    Require(f, "f");
    Bracket q = maxaffine::DifferenceQuotient(f->fn, ParseScalarArg(x, "x"),
                                              ParseScalarArg(y, "y"));
    PutScalar(lo, "lo", q.lo);
    PutScalar(hi, "hi", q.hi);
  });
}

maf_status maf_function_derivative_probe(const maf_function* f, const char* x,
                                         const char* h, char** brackets_json) {
  return Guard([&] {
    Require(f, "f");
    auto q = maxaffine::DerivativeProbe(f->fn, ParseScalarArg(x, "x"),
                                        ParseScalarArg(h, "h"));
    PutString(brackets_json, "brackets_json", BracketsToJson(q).dump());
  });
}

maf_status maf_function_strong_attainment(const maf_function* f,
                                          const char* pairs_json,
                                          const char* tol,
                                          maf_attainment* status, char** best_lo,
                                          char** best_hi, int* best_pair) {
  return Guard([&] {
    Require(f, "f");
    Require(status, "status");
    Json doc = ParseJsonArg(pairs_json, "pairs_json");
    if (!doc.is_array()) {
      maxaffine::ThrowParse("pairs_json must be an array of [\"x\",\"y\"] pairs");
    }
    std::vector<maxaffine::QuotientPair> pairs;
    pairs.reserve(doc.size());
    for (const Json& e : doc) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        maxaffine::ThrowParse("each pair must be [\"x\",\"y\"] with rational strings");
      }
      pairs.push_back(
          {ParseScalarArg(e[0].get<std::string>().c_str(), "pair x"),
           ParseScalarArg(e[1].get<std::string>().c_str(), "pair y")});
    }
    auto report =
        maxaffine::StrongAttainmentCheck(f->fn, pairs, ParseScalarArg(tol, "tol"));
    switch (report.status) {
      case maxaffine::AttainmentStatus::kAttained:
        *status = MAF_ATTAINMENT_ATTAINED;
        break;
      case maxaffine::AttainmentStatus::kNotAttained:
        *status = MAF_ATTAINMENT_NOT_ATTAINED;
        break;
      case maxaffine::AttainmentStatus::kInconclusive:
        *status = MAF_ATTAINMENT_INCONCLUSIVE;
        break;
    }
    if (best_lo) *best_lo = DupString(report.best_quotient.lo.Str());
    if (best_hi) *best_hi = DupString(report.best_quotient.hi.Str());
    if (best_pair) *best_pair = report.best_pair;
  });
}

maf_status maf_function_oscillation_witness(const maf_function* f, const char* x,
                                            const char* delta, const char* lower,
                                            int* found, char** step_a,
                                            char** step_b, char** separation_lo) {
  return Guard([&] {
    Require(f, "f");
    Require(found, "found");
    auto witness = maxaffine::FindOscillationWitness(
        f->fn, ParseScalarArg(x, "x"), ParseScalarArg(delta, "delta"),
        ParseScalarArg(lower, "lower"));
    *found = witness.has_value() ? 1 : 0;
    if (witness) {
      PutScalar(step_a, "step_a", witness->step_a);
      PutScalar(step_b, "step_b", witness->step_b);
      PutScalar(separation_lo, "separation_lo", witness->separation.lo);
    }
  });
}

/* ---- affine fitting ---------------------------------------------------- */

maf_status maf_residual_extremes(const maf_function* f, const char* a,
                                 const char* b, const char* slope, char** max_lo,
                                 char** max_hi, char** min_lo, char** min_hi) {
  return Guard([&] {
    Require(f, "f");
    Interval window(ParseScalarArg(a, "a"), ParseScalarArg(b, "b"));
    auto ex = maxaffine::ComputeResidualExtremes(f->fn, window,
                                                 ParseScalarArg(slope, "slope"));
    PutScalar(max_lo, "max_lo", ex.max_h.lo);
    PutScalar(max_hi, "max_hi", ex.max_h.hi);
    PutScalar(min_lo, "min_lo", ex.min_h.lo);
    PutScalar(min_hi, "min_hi", ex.min_h.hi);
  });
}

maf_status maf_best_intercept(const maf_function* f, const char* a, const char* b,
                              const char* slope, char** y_lo, char** y_hi,
                              char** err_lo, char** err_hi) {
  return Guard([&] {
    Require(f, "f");
    Interval window(ParseScalarArg(a, "a"), ParseScalarArg(b, "b"));
    auto fit =
        maxaffine::BestIntercept(f->fn, window, ParseScalarArg(slope, "slope"));
    PutScalar(y_lo, "y_lo", fit.intercept.lo);
    PutScalar(y_hi, "y_hi", fit.intercept.hi);
    PutScalar(err_lo, "err_lo", fit.sup_error.lo);
    PutScalar(err_hi, "err_hi", fit.sup_error.hi);
  });
}

maf_status maf_maximal_aap_fit(const maf_function* f, const char* a,
                               const char* b, const char* eps,
                               char** report_json) {
  return Guard([&] {
    Require(f, "f");
    const maxaffine::PLFunction* pl = f->fn.AsPL();
    if (pl == nullptr) {
      maxaffine::ThrowInvalidArgument(
          "the maximal-slope fit needs a piecewise-linear function");
    }
    Interval window(ParseScalarArg(a, "a"), ParseScalarArg(b, "b"));
    Scalar eps_value = ParseScalarArg(eps, "eps");
    maxaffine::MaxAffineDiagnostics diag;
    auto fit = maxaffine::MaximalAapConstruct(*pl, window, eps_value, &diag);
    Json j;
    j["interval"] = Json::array(
        {fit.interval.lo.Str(), fit.interval.hi.Str()});
    j["slope"] = fit.map.slope.Str();
    j["intercept"] = fit.map.intercept.Str();
    j["sup_error"] = fit.sup_error.hi.Str();
    j["bound"] = (eps_value * fit.interval.Length() * pl->LipNumber()).Str();
    j["lip_restricted"] = diag.lip_restricted.Str();
    j["lip_gap"] = fit.lip_gap.Str();
    j["sign"] = diag.sign;
    PutString(report_json, "report_json", j.dump());
  });
}

/* ---- certification campaigns ------------------------------------------ */

maf_status maf_lemma_campaign(const char* c, const char* k, const char* grid_step,
                              const char* width_floor, int depth, int threads,
                              char** report_json, int* all_certified) {
  return Guard([&] {
    Scalar c_value = ParseScalarArg(c, "c");
    Scalar step_value = grid_step == nullptr ? c_value / Scalar(64)
                                             : ParseScalarArg(grid_step, "grid_step");
    Scalar floor_value =
        width_floor == nullptr ? c_value : ParseScalarArg(width_floor, "width_floor");
    std::optional<int> depth_opt;
    if (depth > 0) depth_opt = depth;
    auto report = maxaffine::CertifyWindowMeasure(c_value, ParseScalarArg(k, "k"),
                                                  step_value, floor_value,
                                                  depth_opt, threads);
    if (report_json) *report_json = DupString(report.ToJson().dump());
    if (all_certified) *all_certified = report.AllCertified() ? 1 : 0;
  });
}

maf_status maf_falsify_campaign(const char* c, const char* grid_step,
                                const char* slopes_json, int depth_budget,
                                int threads, char** report_json,
                                int* all_certified) {
  return Guard([&] {
    std::vector<Scalar> slopes;
    if (slopes_json == nullptr) {
      slopes = maxaffine::DefaultFalsifierSlopes();
    } else {
      Json doc = ParseJsonArg(slopes_json, "slopes_json");
      if (!doc.is_array() || doc.empty()) {
        maxaffine::ThrowParse("slopes_json must be a nonempty array of \"p/q\"");
      }
      for (const Json& e : doc) {
        if (!e.is_string()) {
          maxaffine::ThrowParse("slopes_json entries must be rational strings");
        }
        slopes.push_back(ParseScalarArg(e.get<std::string>().c_str(), "slope"));
      }
    }
    auto report = maxaffine::FalsifyUniformFit(
        ParseScalarArg(c, "c"), ParseScalarArg(grid_step, "grid_step"), slopes,
        depth_budget, threads);
    if (report_json) *report_json = DupString(report.ToJson().dump());
    if (all_certified) *all_certified = report.AllCertified() ? 1 : 0;
  });
}

maf_status maf_report_to_csv(const char* report_json, char** csv) {
  return Guard([&] {
    Json doc = ParseJsonArg(report_json, "report_json");
    auto report = maxaffine::CampaignReport::FromJson(doc);
    PutString(csv, "csv", report.ToCsv());
  });
}

maf_status maf_report_summary(const char* report_json, char** summary_json) {
  return Guard([&] {
    Json doc = ParseJsonArg(report_json, "report_json");
    auto report = maxaffine::CampaignReport::FromJson(doc);
    Json j;
    Json params;
    params["c"] = maxaffine::RationalToJson(report.c);
    params["k"] = maxaffine::RationalToJson(report.k);
    params["grid_step"] = maxaffine::RationalToJson(report.grid_step);
    params["depth"] = report.depth;
    j["params"] = std::move(params);
    j["total"] = report.Total();
    j["certified"] = report.Certified();
    j["inconclusive"] = report.Inconclusive();
    j["all_certified"] = report.AllCertified();
    PutString(summary_json, "summary_json", j.dump());
  });
}

/* ---- corpora and worked examples --------------------------------------- */

maf_status maf_aap_corpus(uint64_t seed, int count, const char* eps,
                          char** report_json, int* all_passed) {
  return Guard([&] {
    auto report = maxaffine::RunAapCorpus(seed, count, ParseScalarArg(eps, "eps"));
    if (report_json) *report_json = DupString(report.ToJson().dump());
    if (all_passed) *all_passed = report.AllPassed() ? 1 : 0;
  });
}

maf_status maf_tent_example(int dim, char** report_json, int* ok) {
  return Guard([&] {
    auto report = maxaffine::RunTentExample(dim);
    if (report_json) *report_json = DupString(report.ToJson().dump());
    if (ok) *ok = report.Ok() ? 1 : 0;
  });
}

maf_status maf_tent_grid_csv(int dim, const char* path) {
  return Guard([&] {
    Require(path, "path");
    std::ofstream os(path);
    if (!os) maxaffine::ThrowIo(std::string("cannot open ") + path);
    maxaffine::WriteTentGridCsv(os, dim);
    os.flush();
    if (!os) maxaffine::ThrowIo(std::string("write failed for ") + path);
  });
}

} /* extern "C" */
