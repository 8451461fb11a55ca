#include "cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli/input.hpp"
#include "cli/report.hpp"
#include "homalg/errors.hpp"

namespace homalg::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

unsigned thread_count() {
  const char* env = std::getenv("HOMALG_THREADS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) throw InputError("HOMALG_THREADS must be an integer in 1..1024");
  return static_cast<unsigned>(v);
}

int emit(const json& report, const std::string& format, const std::string& path, std::ostream& out) {
  std::string text = format == "tsv" ? to_tsv(report) : report.dump(2) + "\n";
  if (path.empty()) {
    out << text;
  } else {
    std::ofstream f(path);
    if (!f) throw InputError(path + ": cannot write file");
    f << text;
  }
  return passed(report) ? exit_ok : exit_mismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact homological algebra for stratified spaces"};
  app.require_subcommand(1);
  Options opt;
  std::string ring = "Z", format = "json", output;
  const std::vector<std::string> rings = {"Z", "Q"};
  const std::vector<std::string> formats = {"json", "tsv"};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--ring", ring, "Coefficient ring")->check(CLI::IsMember(rings));
    sub->add_option("--out", format, "Report format")->check(CLI::IsMember(formats));
    sub->add_option("-o,--output", output, "Write the report to a file instead of stdout");
    sub->add_flag("--timing", opt.timing, "Include per-stage wall-clock times");
  };

  std::string scenario;
  auto* formality = app.add_subcommand("formality", "Run a formality scenario and compare with expected values");
  formality->add_option("scenario", scenario, "trivial, one-point, n-points or de-rham")
      ->required()
      ->check(CLI::IsMember({"trivial", "one-point", "n-points", "de-rham"}));
  formality->add_option("--n", opt.n, "Number of points (sphere dimension for de-rham)");
  common(formality);

  auto* ext_table = app.add_subcommand("ext-table", "Ext between closure representations of the n-point model");
  ext_table->add_option("--n", opt.n, "Number of points")->required();
  ext_table->add_option("--qmax", opt.qmax, "Highest Ext degree");
  common(ext_table);

  std::string poset, reps, action;
  auto* compute = app.add_subcommand("compute", "Hom, Ext, End or cohomology for user input");
  compute->add_option("--poset", poset, "Poset JSON file")->required();
  compute->add_option("--reps", reps, "Representations JSON file")->required();
  compute->add_option("--action", action, "hom, ext, end or cohomology")
      ->required()
      ->check(CLI::IsMember({"hom", "ext", "end", "cohomology"}));
  compute->add_option("--qmax", opt.qmax, "Highest Ext degree");
  common(compute);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    opt.ring = parse_ring(ring);
    opt.threads = thread_count();
    json report;
    if (*formality) {
      if (scenario == "de-rham" && formality->count("--ring") == 0) opt.ring = Ring::rationals;
      report = formality_report(scenario, opt);
    } else if (*ext_table) {
      report = ext_table_report(opt);
    } else {
      report = compute_report(poset, reps, action, opt);
    }
    return emit(report, format, output, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_mismatch;
  }
}

}  // namespace homalg::cli
