#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "homalg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = homalg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HOMALG_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("homalg_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

json table_rows(const json& report, const std::string& name) { return report.at("tables").at(name).at("rows"); }

std::map<int, long> ranks(const json& rows) {
  std::map<int, long> r;
  for (const auto& row : rows) r[row[0].get<int>()] = row[1].get<long>();
  return r;
}

bool has_key(const json& j, const std::string& key) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      if (k == key || has_key(v, key)) return true;
  } else if (j.is_array()) {
    for (const auto& v : j)
      if (has_key(v, key)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("formality scenarios pass") {
  Outcome t = run({"formality", "trivial", "--ring", "Z", "--out", "json"});
  REQUIRE(t.code == 0);
  json r = json::parse(t.out);
  CHECK(r["verdict"] == "pass");
  CHECK(r["stages"]["cohomology"]["betti"] == json{{"0", 1}, {"1", 0}, {"2", 1}});

  Outcome n5 = run({"formality", "n-points", "--n", "5", "--ring", "Z"});
  REQUIRE(n5.code == 0);
  json r5 = json::parse(n5.out);
  CHECK(ranks(table_rows(r5, "end_ranks")) == std::map<int, long>{{-1, 5}, {0, 27}, {1, 35}, {2, 10}});

  CHECK(run({"formality", "one-point"}).code == 0);
  CHECK(run({"formality", "de-rham", "--n", "3"}).code == 0);
  CHECK(run({"formality", "trivial", "--ring", "Q"}).code == 0);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({"formality", "n-points", "--n", "1"}).code == 2);
  CHECK(run({"formality", "n-points", "--n", "abc"}).code == 2);
  CHECK(run({"formality", "bogus"}).code == 2);
  CHECK(run({"formality", "de-rham", "--ring", "Z"}).code == 2);
  CHECK(run({"formality", "trivial", "--n", "3"}).code == 2);
  CHECK(run({"ext-table"}).code == 2);
  CHECK(run({"ext-table", "--n", "x"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"compute", "--poset", "/nonexistent.json", "--reps", data("sphere_two_points.reps.json"), "--action",
             "hom"})
            .code == 2);

  std::string empty = write_temp("empty.poset.json", R"({"strata": [], "covers": []})");
  Outcome e = run({"compute", "--poset", empty, "--reps", data("sphere_two_points.reps.json"), "--action", "hom"});
  CHECK(e.code == 2);
  CHECK(e.err.find("/strata") != std::string::npos);

  std::string frac = write_temp("frac.reps.json", R"j({"reps": [{"name": "X", "stalks": {"P1": 1, "E1": 1},
      "arrows": {"(P1,E1)": [["1/2"]]}}]})j");
  Outcome f = run({"compute", "--poset", data("sphere_two_points.poset.json"), "--reps", frac, "--action", "hom"});
  CHECK(f.code == 2);
  CHECK(f.err.find("/reps/0/arrows") != std::string::npos);
  // the same entry is fine over Q
  CHECK(run({"compute", "--poset", data("sphere_two_points.poset.json"), "--reps", frac, "--action", "hom", "--ring",
             "Q"})
            .code == 0);

  std::string noncover = write_temp("noncover.reps.json", R"j({"reps": [{"name": "X", "stalks": {"P1": 1, "H1": 1},
      "arrows": {"(P1,H1)": [[1]]}}]})j");
  CHECK(run({"compute", "--poset", data("sphere_two_points.poset.json"), "--reps", noncover, "--action", "hom"}).code ==
        2);

  std::string bad_json = write_temp("bad.json", "{ not json");
  CHECK(run({"compute", "--poset", bad_json, "--reps", bad_json, "--action", "hom"}).code == 2);

  std::string broken = write_temp("broken.reps.json", R"j({"reps": [{"name": "X",
      "stalks": {"P1": 1, "P2": 1, "E1": 1, "E2": 1, "H1": 1, "H2": 1},
      "arrows": {"(P1,E1)": [[-1]], "(P2,E1)": [[1]], "(P1,E2)": [[1]], "(P2,E2)": [[1]],
                 "(E1,H1)": [[1]], "(E1,H2)": [[1]], "(E2,H1)": [[1]], "(E2,H2)": [[1]]}}]})j");
  Outcome nc = run({"compute", "--poset", data("sphere_two_points.poset.json"), "--reps", broken, "--action", "hom"});
  CHECK(nc.code == 2);
}

TEST_CASE("reports are byte-stable") {
  for (const char* s : {"trivial", "one-point"}) {
    Outcome a = run({"formality", s, "--out", "json"});
    Outcome b = run({"formality", s, "--out", "json"});
    CHECK(a.out == b.out);
    Outcome c = run({"formality", s, "--out", "tsv"});
    Outcome d = run({"formality", s, "--out", "tsv"});
    CHECK(c.out == d.out);
  }
  CHECK(run({"formality", "trivial", "--out", "json"}).out == slurp(std::string(HOMALG_GOLDEN_DIR) + "/formality_trivial.json"));
  CHECK(run({"formality", "trivial", "--out", "tsv"}).out == slurp(std::string(HOMALG_GOLDEN_DIR) + "/formality_trivial.tsv"));
}

TEST_CASE("json keys are sorted and timing is opt-in") {
  json r = json::parse(run({"formality", "trivial"}).out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.items()) keys.push_back(k);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK_FALSE(r.contains("timing_seconds"));
  json t = json::parse(run({"formality", "trivial", "--timing"}).out);
  CHECK(t.contains("timing_seconds"));
  CHECK(run({"formality", "trivial", "--out", "tsv", "--timing"}).out.find("# timing_seconds") != std::string::npos);
}

TEST_CASE("tsv sections") {
  std::string tsv = run({"formality", "trivial", "--out", "tsv"}).out;
  CHECK(tsv.rfind("# report\n", 0) == 0);
  CHECK(tsv.find("\n# end_differential\n") != std::string::npos);
  CHECK(tsv.find("\n# checks\n") != std::string::npos);
  CHECK(tsv.find("h1\the_{11} + he_{12}") != std::string::npos);
}

TEST_CASE("output file option") {
  auto path = (std::filesystem::temp_directory_path() / "homalg_test_out.json").string();
  std::filesystem::remove(path);
  Outcome o = run({"formality", "trivial", "-o", path});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  CHECK(json::parse(slurp(path))["verdict"] == "pass");
}

TEST_CASE("compute end on the constant representation reproduces the trivial scenario") {
  Outcome c = run({"compute", "--poset", data("sphere_two_points.poset.json"), "--reps",
                   data("sphere_two_points.reps.json"), "--action", "end"});
  REQUIRE(c.code == 0);
  json r = json::parse(c.out);
  json t = json::parse(run({"formality", "trivial"}).out);
  CHECK(ranks(table_rows(r, "C_end_ranks")) == ranks(table_rows(t, "end_ranks")));
  CHECK(r["stages"]["C_cohomology"]["betti"] == t["stages"]["cohomology"]["betti"]);
}

TEST_CASE("compute actions") {
  const std::string poset = data("sphere_two_points.poset.json"), reps = data("sphere_two_points.reps.json");
  json hom = json::parse(run({"compute", "--poset", poset, "--reps", reps, "--action", "hom"}).out);
  for (const auto& row : table_rows(hom, "hom"))
    if (row[0] == "C" && row[1] == "C") CHECK(row[2] == 1);
  json ext = json::parse(run({"compute", "--poset", poset, "--reps", reps, "--action", "ext", "--qmax", "2"}).out);
  CHECK(table_rows(ext, "ext").size() == 3 * 3 * 3);
  json coh = json::parse(run({"compute", "--poset", poset, "--reps", reps, "--action", "cohomology"}).out);
  std::map<std::pair<std::string, int>, long> h;
  for (const auto& row : table_rows(coh, "cohomology")) h[{row[0].get<std::string>(), row[1].get<int>()}] = row[2].get<long>();
  CHECK(h[{"C", 0}] == 1);
  CHECK(h[{"C", 1}] == 0);
  CHECK(h[{"C", 2}] == 1);
}

TEST_CASE("rational runs carry no torsion fields") {
  const std::string poset = data("sphere_two_points.poset.json"), reps = data("sphere_two_points.reps.json");
  for (const char* action : {"ext", "end", "cohomology"}) {
    json q = json::parse(run({"compute", "--poset", poset, "--reps", reps, "--action", action, "--ring", "Q"}).out);
    CHECK_FALSE(has_key(q, "torsion"));
    CHECK(q.dump().find("torsion") == std::string::npos);
    json z = json::parse(run({"compute", "--poset", poset, "--reps", reps, "--action", action}).out);
    CHECK(z.dump().find("torsion") != std::string::npos);
  }
}

TEST_CASE("ext table") {
  Outcome o = run({"ext-table", "--n", "2"});
  REQUIRE(o.code == 0);
  json r = json::parse(o.out);
  CHECK(r["stages"]["ext"]["pairs"] == 36);
  CHECK(table_rows(r, "ext").size() == 36 * 5);
  CHECK(run({"ext-table", "--n", "4", "--qmax", "2"}).code == 0);
}

TEST_CASE("thread count comes from the environment") {
  setenv("HOMALG_THREADS", "3", 1);
  Outcome threaded = run({"ext-table", "--n", "3"});
  unsetenv("HOMALG_THREADS");
  Outcome serial = run({"ext-table", "--n", "3"});
  CHECK(threaded.code == 0);
  CHECK(threaded.out == serial.out);
  setenv("HOMALG_THREADS", "zero", 1);
  CHECK(run({"ext-table", "--n", "2"}).code == 2);
  unsetenv("HOMALG_THREADS");
}
