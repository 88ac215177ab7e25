// Copyright 2026 The maxaffine Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the library exclusively through the C
// interface in maxaffine/maxaffine.h; every rational flag is passed through
// as a "p/q" string and validated by the library.
//
// Exit codes:
//   0  success, and every certification the command attempted succeeded
//   1  I/O failure or internal error
//   2  usage error (bad flag, unparsable rational, infeasible parameters)
//   3  the run completed but left inconclusive cells, failed instances, or
//      missing witnesses

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "maxaffine/maxaffine.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

int ExitCodeFor(maf_status status) {
  switch (status) {
    case MAF_OK:
      return kExitOk;
    case MAF_ERR_IO:
    case MAF_ERR_INTERNAL:
      return kExitIo;
    default:
      return kExitUsage;
  }
}

// Prints the library's error message and maps the status to an exit code.
int Fail(maf_status status) {
  std::cerr << "error: " << maf_last_error() << "\n";
  return ExitCodeFor(status);
}

// Adopts a string returned by the library and releases it.
std::string Take(char* owned) {
  std::string out = owned == nullptr ? "" : owned;
  maf_string_free(owned);
  return out;
}

std::vector<std::string> SplitList(const std::string& joined) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(joined);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

// Writes content to the path, or to stdout when the path is empty. A single
// trailing newline is guaranteed either way.
int Emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    if (content.empty() || content.back() != '\n') std::cout << '\n';
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return kExitIo;
  }
  out << content;
  if (content.empty() || content.back() != '\n') out << '\n';
  out.flush();
  if (!out) {
    std::cerr << "error: writing " << path << " failed\n";
    return kExitIo;
  }
  return kExitOk;
}

bool ReadFile(const std::string& path, std::string* content) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return false;
  *content = buffer.str();
  return true;
}

struct CantorBuildArgs {
  std::string schedule = "geometric";
  std::string c;
  std::string k;
  int depth = 0;
  std::string out;
};

int RunCantorBuild(const CantorBuildArgs& args) {
  maf_cantor* set = nullptr;
  maf_status status = MAF_OK;
  if (args.schedule == "ternary") {
    if (!args.c.empty() || !args.k.empty()) {
      std::cerr << "error: --c and --k apply to the geometric schedule only\n";
      return kExitUsage;
    }
    status = maf_cantor_build_ternary(args.depth, &set);
  } else {
    if (args.c.empty() || args.k.empty()) {
      std::cerr << "error: the geometric schedule needs --c and --k\n";
      return kExitUsage;
    }
    status = maf_cantor_build_geometric(args.c.c_str(), args.k.c_str(),
                                        args.depth, &set);
  }
  if (status != MAF_OK) return Fail(status);

  char* limit = nullptr;
  char* tail = nullptr;
  if ((status = maf_cantor_limit_measure(set, &limit)) != MAF_OK ||
      (status = maf_cantor_tail(set, &tail)) != MAF_OK) {
    maf_string_free(limit);
    maf_cantor_free(set);
    return Fail(status);
  }
  std::string measures =
      "lambda(C) = " + Take(limit) + "\ntail = " + Take(tail) + "\n";

  // Past depth 20 the component list is omitted from the JSON; the closed
  // forms and the schedule are always present.
  int include_components = args.depth <= 20 ? 1 : 0;
  if (!args.out.empty()) {
    status = maf_cantor_write_json(set, include_components, args.out.c_str());
    maf_cantor_free(set);
    if (status != MAF_OK) return Fail(status);
    std::cout << measures;
    return kExitOk;
  }
  char* json = nullptr;
  status = maf_cantor_to_json(set, include_components, &json);
  maf_cantor_free(set);
  if (status != MAF_OK) return Fail(status);
  std::cerr << measures;
  return Emit("", Take(json));
}

struct VerifyLemmaArgs {
  std::string c_list;
  std::string k = "1/4";
  std::string grid_step;
  std::string width;
  int depth = 0;
  int threads = 0;
  std::string out;
};

int RunVerifyLemma(const VerifyLemmaArgs& args) {
  std::vector<std::string> cs = SplitList(args.c_list);
  if (cs.empty()) {
    std::cerr << "error: --c needs at least one value\n";
    return kExitUsage;
  }
  std::string runs = "[";
  bool all_certified = true;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    char* report = nullptr;
    int certified = 0;
    maf_status status = maf_lemma_campaign(
        cs[i].c_str(), args.k.c_str(),
        args.grid_step.empty() ? nullptr : args.grid_step.c_str(),
        args.width.empty() ? nullptr : args.width.c_str(), args.depth,
        args.threads, &report, &certified);
    if (status != MAF_OK) return Fail(status);
    std::string report_json = Take(report);

    char* summary = nullptr;
    status = maf_report_summary(report_json.c_str(), &summary);
    if (status != MAF_OK) return Fail(status);
    std::cout << Take(summary) << "\n";

    if (i > 0) runs += ",";
    runs += report_json;
    all_certified = all_certified && certified != 0;
  }
  runs += "]";

  if (!args.out.empty()) {
    std::string doc = std::string("{\"runs\":") + runs +
                      ",\"all_certified\":" +
                      (all_certified ? "true" : "false") + "}";
    int rc = Emit(args.out, doc);
    if (rc != kExitOk) return rc;
  }
  return all_certified ? kExitOk : kExitInconclusive;
}

struct AapApproxArgs {
  std::uint64_t seed = 0;
  int count = 50;
  std::string eps = "1/10";
  std::string out;
};

int RunAapApprox(const AapApproxArgs& args) {
  char* report = nullptr;
  int all_passed = 0;
  maf_status status = maf_aap_corpus(args.seed, args.count, args.eps.c_str(),
                                     &report, &all_passed);
  if (status != MAF_OK) return Fail(status);
  int rc = Emit(args.out, Take(report));
  if (rc != kExitOk) return rc;
  if (all_passed == 0) {
    std::cerr << "some instances failed their fit bounds\n";
    return kExitInconclusive;
  }
  return kExitOk;
}

struct VerifyFailureArgs {
  std::string c = "1/2";
  std::string grid_step = "1/128";
  std::string slopes;
  int depth = 30;
  int threads = 0;
  std::string out;
};

int RunVerifyFailure(const VerifyFailureArgs& args) {
  std::string slopes_json;
  if (!args.slopes.empty()) {
    std::vector<std::string> slopes = SplitList(args.slopes);
    slopes_json = "[";
    for (std::size_t i = 0; i < slopes.size(); ++i) {
      if (i > 0) slopes_json += ",";
      slopes_json += "\"" + slopes[i] + "\"";
    }
    slopes_json += "]";
  }
  char* report = nullptr;
  int certified = 0;
  maf_status status = maf_falsify_campaign(
      args.c.c_str(), args.grid_step.c_str(),
      slopes_json.empty() ? nullptr : slopes_json.c_str(), args.depth,
      args.threads, &report, &certified);
  if (status != MAF_OK) return Fail(status);
  std::string report_json = Take(report);

  char* summary = nullptr;
  status = maf_report_summary(report_json.c_str(), &summary);
  if (status != MAF_OK) return Fail(status);
  std::string summary_json = Take(summary);
  if (args.out.empty()) {
    std::cerr << summary_json << "\n";
  } else {
    std::cout << summary_json << "\n";
  }

  int rc = Emit(args.out, report_json);
  if (rc != kExitOk) return rc;
  return certified != 0 ? kExitOk : kExitInconclusive;
}

struct TentExampleArgs {
  int dim = 12;
  std::string out;
};

int RunTentExample(const TentExampleArgs& args) {
  char* report = nullptr;
  int ok = 0;
  maf_status status = maf_tent_example(args.dim, &report, &ok);
  if (status != MAF_OK) return Fail(status);
  std::cout << Take(report) << "\n";
  if (!args.out.empty()) {
    status = maf_tent_grid_csv(args.dim, args.out.c_str());
    if (status != MAF_OK) return Fail(status);
  }
  return ok != 0 ? kExitOk : kExitInconclusive;
}

struct ReportArgs {
  std::string in;
  std::string format = "csv";
  std::string out;
};

int RunReport(const ReportArgs& args) {
  std::string report_json;
  if (!ReadFile(args.in, &report_json)) {
    std::cerr << "error: cannot read " << args.in << "\n";
    return kExitIo;
  }
  char* rendered = nullptr;
  maf_status status = args.format == "csv"
                          ? maf_report_to_csv(report_json.c_str(), &rendered)
                          : maf_report_summary(report_json.c_str(), &rendered);
  if (status != MAF_OK) return Fail(status);
  return Emit(args.out, Take(rendered));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact-rational tooling for fat Cantor sets, affine fits of Lipschitz "
      "functions, and certified fit-failure campaigns."};
  app.require_subcommand(1);

  CantorBuildArgs build_args;
  CLI::App* build = app.add_subcommand(
      "cantor-build", "Build a fat Cantor set and write it as JSON");
  build->add_option("--schedule", build_args.schedule, "ternary or geometric")
      ->check(CLI::IsMember({"ternary", "geometric"}));
  build->add_option("--c", build_args.c, "geometric ratio, rational p/q");
  build->add_option("--k", build_args.k, "first removal scale, rational p/q");
  build->add_option("--depth", build_args.depth, "construction depth")
      ->required();
  build->add_option("--out", build_args.out, "JSON path (default stdout)");

  VerifyLemmaArgs lemma_args;
  CLI::App* lemma = app.add_subcommand(
      "verify-lemma",
      "Certify lambda(C intersect W) > |W|/2 on every wide grid window");
  lemma->add_option("--c", lemma_args.c_list,
                    "comma-separated list of geometric ratios")
      ->required();
  lemma->add_option("--k", lemma_args.k, "first removal scale (default 1/4)");
  lemma->add_option("--grid-step", lemma_args.grid_step,
                    "window endpoint spacing (default c/64)");
  lemma->add_option("--width", lemma_args.width,
                    "minimum window width (default c)");
  lemma->add_option("--depth", lemma_args.depth,
                    "truncation depth (default: from the closed-form slack)");
  lemma->add_option("--threads", lemma_args.threads,
                    "worker threads (default: all)");
  lemma->add_option("--out", lemma_args.out, "write full reports as JSON");

  AapApproxArgs aap_args;
  CLI::App* aap = app.add_subcommand(
      "aap-approx",
      "Fit maximal-slope affine maps to a random piecewise-linear corpus");
  aap->add_option("--seed", aap_args.seed, "RNG seed (default 0)");
  aap->add_option("--count", aap_args.count, "number of instances")
      ->check(CLI::PositiveNumber);
  aap->add_option("--eps", aap_args.eps,
                  "approximation parameter in (0,1), rational p/q");
  aap->add_option("--out", aap_args.out, "JSON path (default stdout)");

  VerifyFailureArgs failure_args;
  CLI::App* failure = app.add_subcommand(
      "verify-failure",
      "Certify that steep affine maps miss the Cantor integral everywhere");
  failure->add_option("--c", failure_args.c, "geometric ratio (default 1/2)");
  failure->add_option("--grid-step", failure_args.grid_step,
                      "window endpoint spacing (default 1/128)");
  failure->add_option("--slopes", failure_args.slopes,
                      "comma-separated slopes, each of size > 7/8 "
                      "(default: +-(7/8 + j/64) for j = 1..16)");
  failure->add_option("--depth", failure_args.depth,
                      "truncation depth budget (default 30)");
  failure->add_option("--threads", failure_args.threads,
                      "worker threads (default: all)");
  failure->add_option("--out", failure_args.out,
                      "report JSON path (default stdout)");

  TentExampleArgs tent_args;
  CLI::App* tent = app.add_subcommand(
      "tent-example",
      "Check Lipschitz attainment for the stacked-tent curve in R^N");
  tent->add_option("--n", tent_args.dim, "target dimension, 2..24")
      ->required()
      ->check(CLI::Range(2, 24));
  tent->add_option("--out", tent_args.out, "grid CSV path (plot data)");

  ReportArgs report_args;
  CLI::App* report = app.add_subcommand(
      "report", "Render a campaign report as CSV or a JSON summary");
  report->add_option("--in", report_args.in, "campaign report JSON path")
      ->required();
  report->add_option("--format", report_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  report->add_option("--out", report_args.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (app.got_subcommand(build)) return RunCantorBuild(build_args);
  if (app.got_subcommand(lemma)) return RunVerifyLemma(lemma_args);
  if (app.got_subcommand(aap)) return RunAapApprox(aap_args);
  if (app.got_subcommand(failure)) return RunVerifyFailure(failure_args);
  if (app.got_subcommand(tent)) return RunTentExample(tent_args);
  if (app.got_subcommand(report)) return RunReport(report_args);
  return kExitUsage;
}
