// Copyright 2026 The maxaffine Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared library exactly the way an external client would:
// through the C header alone, with rationals crossing as "p/q" strings.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "maxaffine/maxaffine.h"

extern "C" int capi_header_compiles(void);

namespace {

using Json = nlohmann::json;

// Adopts a library-owned string.
std::string Take(char* owned) {
  std::string out = owned == nullptr ? "" : owned;
  maf_string_free(owned);
  return out;
}

struct CantorHandle {
  maf_cantor* set = nullptr;
  ~CantorHandle() { maf_cantor_free(set); }
};

struct FunctionHandle {
  maf_function* f = nullptr;
  ~FunctionHandle() { maf_function_free(f); }
};

constexpr const char* kHatJson =
    "{\"breakpoints\":[[0,1],[1,2],[1,1]],"
    "\"values\":[[1,2],[0,1],[1,2]]}";

}  // namespace

TEST_CASE("the header is consumable from plain c") {
  CHECK(capi_header_compiles() == 0);
}

TEST_CASE("null arguments and bad rationals are reported, not crashed") {
  CHECK(maf_cantor_build_ternary(2, nullptr) == MAF_ERR_INVALID_ARGUMENT);
  CHECK(std::string(maf_last_error()).size() > 0);

  maf_cantor* set = nullptr;
  CHECK(maf_cantor_build_geometric("0.5", "1/4", 3, &set) == MAF_ERR_PARSE);
  CHECK(std::string(maf_last_error()).find("0.5") != std::string::npos);
  CHECK(maf_cantor_build_geometric(nullptr, "1/4", 3, &set) ==
        MAF_ERR_INVALID_ARGUMENT);
  CHECK(maf_cantor_build_geometric("1/2", "1/2", 3, &set) ==
        MAF_ERR_INVALID_ARGUMENT);
  CHECK(maf_cantor_build_ternary(0, &set) == MAF_ERR_INVALID_ARGUMENT);

  maf_string_free(nullptr);   // both must be no-ops
  maf_cantor_free(nullptr);
  maf_function_free(nullptr);
}

TEST_CASE("cantor handles expose exact measures") {
  CantorHandle h;
  REQUIRE(maf_cantor_build_geometric("1/2", "1/4", 4, &h.set) == MAF_OK);
  CHECK(maf_cantor_depth(h.set) == 4);

  char* s = nullptr;
  REQUIRE(maf_cantor_truncation_measure(h.set, &s) == MAF_OK);
  CHECK(Take(s) == "427/512");
  REQUIRE(maf_cantor_limit_measure(h.set, &s) == MAF_OK);
  CHECK(Take(s) == "5/6");
  REQUIRE(maf_cantor_tail(h.set, &s) == MAF_OK);
  CHECK(Take(s) == "1/1536");

  char* lo = nullptr;
  char* hi = nullptr;
  REQUIRE(maf_cantor_measure_in(h.set, "0", "1", &lo, &hi) == MAF_OK);
  CHECK(Take(lo) == "5/6");
  CHECK(Take(hi) == "427/512");
  CHECK(maf_cantor_measure_in(h.set, "1/2", "1/4", &lo, &hi) ==
        MAF_ERR_INVALID_ARGUMENT);
  CHECK(maf_cantor_measure_in(h.set, "-1", "1/2", &lo, &hi) == MAF_ERR_DOMAIN);

  int found = 0;
  REQUIRE(maf_cantor_gap_within(h.set, "0", "1", &found, &lo, &hi) == MAF_OK);
  REQUIRE(found == 1);
  std::string gap_lo = Take(lo);
  std::string gap_hi = Take(hi);
  char* mass_lo = nullptr;
  char* mass_hi = nullptr;
  REQUIRE(maf_cantor_measure_in(h.set, gap_lo.c_str(), gap_hi.c_str(),
                                &mass_lo, &mass_hi) == MAF_OK);
  CHECK(Take(mass_lo) == "0");
  CHECK(Take(mass_hi) == "0");

  found = 1;
  REQUIRE(maf_cantor_gap_within(h.set, "0", "1/1000", &found, &lo, &hi) ==
          MAF_OK);
  CHECK(found == 0);

  CantorHandle finer;
  REQUIRE(maf_cantor_refine(h.set, 3, &finer.set) == MAF_OK);
  CHECK(maf_cantor_depth(finer.set) == 7);
}

TEST_CASE("cantor json crosses the boundary in both directions") {
  CantorHandle h;
  REQUIRE(maf_cantor_build_geometric("3/10", "1/4", 3, &h.set) == MAF_OK);

  char* text = nullptr;
  REQUIRE(maf_cantor_to_json(h.set, 1, &text) == MAF_OK);
  std::string doc = Take(text);
  Json parsed = Json::parse(doc);
  CHECK(parsed["schedule"] == "geometric");
  CHECK(parsed["depth"] == 3);
  CHECK(parsed["components"].size() == 8);

  CantorHandle back;
  REQUIRE(maf_cantor_from_json(doc.c_str(), &back.set) == MAF_OK);
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(maf_cantor_truncation_measure(h.set, &a) == MAF_OK);
  REQUIRE(maf_cantor_truncation_measure(back.set, &b) == MAF_OK);
  CHECK(Take(a) == Take(b));

  CHECK(maf_cantor_from_json("not json", &back.set) == MAF_ERR_PARSE);

  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                       : "/tmp") +
                     "/maf_capi_cantor.json";
  REQUIRE(maf_cantor_write_json(h.set, 0, path.c_str()) == MAF_OK);
  FILE* fp = std::fopen(path.c_str(), "rb");
  REQUIRE(fp != nullptr);
  std::fclose(fp);
  std::remove(path.c_str());
  CHECK(maf_cantor_write_json(h.set, 0, "/nonexistent-dir/x.json") ==
        MAF_ERR_IO);
}

TEST_CASE("function handles evaluate with certified brackets") {
  FunctionHandle hat;
  REQUIRE(maf_function_pl_from_json(kHatJson, &hat.f) == MAF_OK);
  CHECK(maf_function_dim(hat.f) == 1);

  char* text = nullptr;
  REQUIRE(maf_function_eval(hat.f, "1/4", &text) == MAF_OK);
  Json brackets = Json::parse(Take(text));
  REQUIRE(brackets.size() == 1);
  CHECK(brackets[0][0] == "1/4");
  CHECK(brackets[0][1] == "1/4");
  CHECK(maf_function_eval(hat.f, "3/2", &text) == MAF_ERR_DOMAIN);
  CHECK(maf_function_pl_from_json("{\"breakpoints\":[]}", &hat.f) ==
        MAF_ERR_PARSE);

  char* lo = nullptr;
  char* hi = nullptr;
  REQUIRE(maf_function_lip_number(hat.f, &lo, &hi) == MAF_OK);
  CHECK(Take(lo) == "1");
  CHECK(Take(hi) == "1");

  REQUIRE(maf_function_difference_quotient(hat.f, "0", "1/2", &lo, &hi) ==
          MAF_OK);
  CHECK(Take(lo) == "1");
  CHECK(Take(hi) == "1");
  CHECK(maf_function_difference_quotient(hat.f, "0", "0", &lo, &hi) ==
        MAF_ERR_INVALID_ARGUMENT);

  REQUIRE(maf_function_derivative_probe(hat.f, "0", "1/4", &text) == MAF_OK);
  Json probe = Json::parse(Take(text));
  CHECK(probe[0][0] == "-1");
  CHECK(probe[0][1] == "-1");

  FunctionHandle tent;
  REQUIRE(maf_function_tent(12, &tent.f) == MAF_OK);
  CHECK(maf_function_dim(tent.f) == 12);
  REQUIRE(maf_function_eval(tent.f, "1/2", &text) == MAF_OK);
  CHECK(Json::parse(Take(text)).size() == 12);

  CantorHandle set;
  REQUIRE(maf_cantor_build_geometric("1/2", "1/4", 6, &set.set) == MAF_OK);
  FunctionHandle integral;
  REQUIRE(maf_function_cantor_integral(set.set, &integral.f) == MAF_OK);
  REQUIRE(maf_function_eval(integral.f, "1", &text) == MAF_OK);
  Json at_one = Json::parse(Take(text));
  CHECK(at_one[0][0] != at_one[0][1]);  // genuinely an interval
}

TEST_CASE("attainment and oscillation cross the c boundary") {
  FunctionHandle hat;
  REQUIRE(maf_function_pl_from_json(kHatJson, &hat.f) == MAF_OK);

  maf_attainment status = MAF_ATTAINMENT_INCONCLUSIVE;
  char* best_lo = nullptr;
  char* best_hi = nullptr;
  int best_pair = -1;
  REQUIRE(maf_function_strong_attainment(
              hat.f, "[[\"0\",\"1\"],[\"1/2\",\"1\"]]", "1/100", &status,
              &best_lo, &best_hi, &best_pair) == MAF_OK);
  CHECK(status == MAF_ATTAINMENT_ATTAINED);
  CHECK(best_pair == 1);
  CHECK(Take(best_lo) == "1");
  CHECK(Take(best_hi) == "1");

  REQUIRE(maf_function_strong_attainment(hat.f, "[[\"0\",\"1\"]]", "1/100",
                                         &status, nullptr, nullptr,
                                         nullptr) == MAF_OK);
  CHECK(status == MAF_ATTAINMENT_NOT_ATTAINED);
  CHECK(maf_function_strong_attainment(hat.f, "[]", "1/100", &status, nullptr,
                                       nullptr, nullptr) ==
        MAF_ERR_INVALID_ARGUMENT);

  FunctionHandle tent;
  REQUIRE(maf_function_tent(12, &tent.f) == MAF_OK);
  int found = 0;
  char* step_a = nullptr;
  char* step_b = nullptr;
  char* separation = nullptr;
  REQUIRE(maf_function_oscillation_witness(tent.f, "1/3", "1/2", "1/2", &found,
                                           &step_a, &step_b, &separation) ==
          MAF_OK);
  REQUIRE(found == 1);
  CHECK(Take(step_a) != Take(step_b));
  std::string sep = Take(separation);
  CHECK(!sep.empty());
}

TEST_CASE("fitting entry points return exact rationals for pl inputs") {
  FunctionHandle hat;
  REQUIRE(maf_function_pl_from_json(kHatJson, &hat.f) == MAF_OK);

  char* max_lo = nullptr;
  char* max_hi = nullptr;
  char* min_lo = nullptr;
  char* min_hi = nullptr;
  REQUIRE(maf_residual_extremes(hat.f, "0", "1", "0", &max_lo, &max_hi,
                                &min_lo, &min_hi) == MAF_OK);
  CHECK(Take(max_lo) == "1/2");
  CHECK(Take(max_hi) == "1/2");
  CHECK(Take(min_lo) == "0");
  CHECK(Take(min_hi) == "0");

  char* y_lo = nullptr;
  char* y_hi = nullptr;
  char* e_lo = nullptr;
  char* e_hi = nullptr;
  REQUIRE(maf_best_intercept(hat.f, "0", "1", "0", &y_lo, &y_hi, &e_lo,
                             &e_hi) == MAF_OK);
  CHECK(Take(y_lo) == "1/4");
  CHECK(Take(y_hi) == "1/4");
  CHECK(Take(e_lo) == "1/4");
  CHECK(Take(e_hi) == "1/4");

  char* text = nullptr;
  REQUIRE(maf_maximal_aap_fit(hat.f, "0", "1", "1/10", &text) == MAF_OK);
  Json fit = Json::parse(Take(text));
  CHECK(fit["slope"] == "1");
  CHECK(fit["intercept"] == "-1/2");
  CHECK(fit["interval"] == Json::array({"1/2", "1"}));
  CHECK(fit["sup_error"] == "0");
  CHECK(fit["lip_gap"] == "0");
  CHECK(fit["sign"] == 1);

  FunctionHandle tent;
  REQUIRE(maf_function_tent(3, &tent.f) == MAF_OK);
  CHECK(maf_maximal_aap_fit(tent.f, "0", "1", "1/10", &text) ==
        MAF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("campaign entry points certify and render") {
  char* report = nullptr;
  int all = 0;
  REQUIRE(maf_lemma_campaign("1/2", "1/4", "1/8", nullptr, 0, 0, &report,
                             &all) == MAF_OK);
  std::string lemma = Take(report);
  CHECK(all == 1);
  CHECK(Json::parse(lemma)["cells"].size() == 15);

  // A null grid step defaults to c/64.
  REQUIRE(maf_lemma_campaign("1/2", "1/4", nullptr, nullptr, 0, 0, &report,
                             &all) == MAF_OK);
  Json coarse = Json::parse(Take(report));
  CHECK(coarse["params"]["grid_step"] == Json::array({1, 128}));

  char* csv = nullptr;
  REQUIRE(maf_report_to_csv(lemma.c_str(), &csv) == MAF_OK);
  CHECK(Take(csv).rfind("a,b,slope,margin_lo,status,depth\n", 0) == 0);
  char* summary = nullptr;
  REQUIRE(maf_report_summary(lemma.c_str(), &summary) == MAF_OK);
  Json sum = Json::parse(Take(summary));
  CHECK(sum["total"] == 15);
  CHECK(sum["certified"] == 15);
  CHECK(sum["all_certified"] == true);
  CHECK(maf_report_to_csv("{}", &csv) == MAF_ERR_PARSE);

  REQUIRE(maf_falsify_campaign("1/2", "1/4", "[\"1\"]", 12, 0, &report,
                               &all) == MAF_OK);
  CHECK(all == 1);
  CHECK(Json::parse(Take(report))["summary"]["inconclusive"] == 0);
  CHECK(maf_falsify_campaign("1/2", "1/4", "[\"1/2\"]", 12, 0, &report,
                             &all) == MAF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("corpus entry points report success flags") {
  char* report = nullptr;
  int all = 0;
  REQUIRE(maf_aap_corpus(1, 5, "1/10", &report, &all) == MAF_OK);
  CHECK(all == 1);
  Json corpus = Json::parse(Take(report));
  CHECK(corpus["total"] == 5);
  CHECK(corpus["passed"] == 5);

  int ok = 0;
  REQUIRE(maf_tent_example(8, &report, &ok) == MAF_OK);
  CHECK(ok == 1);
  CHECK(Json::parse(Take(report))["dim"] == 8);
  CHECK(maf_tent_example(0, &report, &ok) == MAF_ERR_INVALID_ARGUMENT);

  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                       : "/tmp") +
                     "/maf_capi_tent.csv";
  REQUIRE(maf_tent_grid_csv(4, path.c_str()) == MAF_OK);
  FILE* fp = std::fopen(path.c_str(), "rb");
  REQUIRE(fp != nullptr);
  char head[16] = {0};
  size_t got = std::fread(head, 1, 15, fp);
  std::fclose(fp);
  std::remove(path.c_str());
  CHECK(got > 0);
  CHECK(std::string(head).rfind("t,x1,x2,x3,x4", 0) == 0);
  CHECK(maf_tent_grid_csv(99, path.c_str()) == MAF_ERR_INVALID_ARGUMENT);
}
