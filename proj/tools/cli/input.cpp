#include "cli/input.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"

#include "homalg/errors.hpp"

namespace homalg::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& path, const std::string& what) {
  throw InputError(source + ": " + (path.empty() ? "/" : path) + ": " + what);
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
}

const json& require(const json& obj, const char* key, const std::string& source, const std::string& path) {
  if (!obj.is_object()) fail(source, path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(source, path, std::string("missing field '") + key + "'");
  return *it;
}

Scalar parse_entry(const json& x, Ring ring, const std::string& source, const std::string& path) {
  Scalar v;
  if (x.is_number_integer()) {
    v = Scalar(std::to_string(x.get<long long>()));
  } else if (x.is_string()) {
    static const std::regex pat(R"(\s*-?\d+(/\d+)?\s*)");
    const std::string s = x.get<std::string>();
    if (!std::regex_match(s, pat)) fail(source, path, "'" + s + "' is not an integer or fraction");
    v = Scalar(s);
    if (v.get_den() == 0) fail(source, path, "zero denominator");
    v.canonicalize();
  } else {
    fail(source, path, "expected an integer or a fraction string");
  }
  if (ring == Ring::integers && !is_integral(v)) fail(source, path, "non-integral entry over Z");
  return v;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StratPoset parse_poset(const std::string& text, const std::string& source) {
  json doc = parse_json(text, source);
  const json& strata = require(doc, "strata", source, "");
  if (!strata.is_array()) fail(source, "/strata", "expected an array");
  if (strata.empty()) fail(source, "/strata", "poset has no strata");
  std::vector<Stratum> out;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const std::string path = "/strata/" + std::to_string(i);
    const json& name = require(strata[i], "name", source, path);
    const json& dim = require(strata[i], "dim", source, path);
    if (!name.is_string() || name.get<std::string>().empty()) fail(source, path + "/name", "expected a non-empty string");
    if (!dim.is_number_integer() || dim.get<long long>() < 0) fail(source, path + "/dim", "expected a non-negative integer");
    out.push_back({name.get<std::string>(), static_cast<int>(dim.get<long long>())});
  }
  std::vector<std::pair<std::string, std::string>> relations;
  if (doc.contains("covers")) {
    const json& covers = doc["covers"];
    if (!covers.is_array()) fail(source, "/covers", "expected an array");
    for (std::size_t i = 0; i < covers.size(); ++i) {
      const std::string path = "/covers/" + std::to_string(i);
      const json& c = covers[i];
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
        fail(source, path, "expected [lower, upper]");
      relations.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  bool asserted = false;
  if (doc.contains("acyclicity_asserted")) {
    if (!doc["acyclicity_asserted"].is_boolean()) fail(source, "/acyclicity_asserted", "expected a boolean");
    asserted = doc["acyclicity_asserted"].get<bool>();
  }
  try {
    return StratPoset(out, relations, asserted);
  } catch (const PreconditionError& e) {
    throw InputError(source + ": " + e.what());
  }
}

std::vector<NamedRepresentation> parse_representations(const std::string& text,
                                                       const std::shared_ptr<const Quiver>& quiver, Ring ring,
                                                       const std::string& source) {
  json doc = parse_json(text, source);
  const json& reps = require(doc, "reps", source, "");
  if (!reps.is_array()) fail(source, "/reps", "expected an array");
  if (reps.empty()) fail(source, "/reps", "no representations given");
  static const std::regex arrow_key(R"(\(\s*([^,\s]+)\s*,\s*([^)\s]+)\s*\))");
  std::vector<NamedRepresentation> out;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const std::string path = "/reps/" + std::to_string(r);
    const json& name = require(reps[r], "name", source, path);
    if (!name.is_string()) fail(source, path + "/name", "expected a string");
    const json& stalks = require(reps[r], "stalks", source, path);
    if (!stalks.is_object()) fail(source, path + "/stalks", "expected an object");
    std::vector<std::size_t> ranks(quiver->vertex_count(), 0);
    for (const auto& [v, rk] : stalks.items()) {
      auto x = quiver->poset().find(v);
      if (!x) fail(source, path + "/stalks/" + v, "unknown stratum");
      if (!rk.is_number_integer() || rk.get<long long>() < 0)
        fail(source, path + "/stalks/" + v, "expected a non-negative integer");
      ranks[*x] = static_cast<std::size_t>(rk.get<long long>());
    }
    Representation rep(quiver, ring, ranks);
    if (reps[r].contains("arrows")) {
      const json& arrows = reps[r]["arrows"];
      if (!arrows.is_object()) fail(source, path + "/arrows", "expected an object");
      for (const auto& [key, m] : arrows.items()) {
        const std::string apath = path + "/arrows/" + key;
        std::smatch match;
        if (!std::regex_match(key, match, arrow_key)) fail(source, apath, "expected a key of the form (src,dst)");
        auto s = quiver->poset().find(match[1].str());
        auto t = quiver->poset().find(match[2].str());
        if (!s || !t) fail(source, apath, "unknown stratum");
        auto a = quiver->arrow(*s, *t);
        if (!a) fail(source, apath, "not a covering pair (lower, upper)");
        const std::size_t rows = ranks[*t], cols = ranks[*s];
        if (!m.is_array() || m.size() != rows) fail(source, apath, "expected " + std::to_string(rows) + " rows");
        Matrix mat(ring, rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
          if (!m[i].is_array() || m[i].size() != cols)
            fail(source, apath + "/" + std::to_string(i), "expected " + std::to_string(cols) + " entries");
          for (std::size_t j = 0; j < cols; ++j)
            mat(i, j) = parse_entry(m[i][j], ring, source, apath + "/" + std::to_string(i) + "/" + std::to_string(j));
        }
        rep.set_arrow(*a, std::move(mat));
      }
    }
    auto bad = validate_representation(rep);
    if (!bad.empty()) fail(source, path, bad.front());
    out.push_back({name.get<std::string>(), std::make_shared<const Representation>(std::move(rep))});
  }
  return out;
}

}  // namespace homalg::cli
