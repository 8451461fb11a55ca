#pragma once

#include <string>

#include "homalg/scalar.hpp"
#include "json.hpp"

namespace homalg::cli {

using nlohmann::json;

struct Options {
  Ring ring = Ring::integers;
  int n = 2;
  int qmax = 4;
  bool timing = false;
  unsigned threads = 1;
};

// Every report has "scenario", "ring", "parameters", "stages", "tables"
// (name -> {"columns", "rows"}), "checks" (name, expected, actual, pass) and
// "verdict" ("pass" or "fail"); "timing_seconds" only when requested.
json formality_report(const std::string& scenario, const Options& opt);
json ext_table_report(const Options& opt);
json compute_report(const std::string& poset_path, const std::string& reps_path, const std::string& action,
                    const Options& opt);

bool passed(const json& report);

// Tables and checks as tab-separated sections headed by "# name".
std::string to_tsv(const json& report);

}  // namespace homalg::cli
