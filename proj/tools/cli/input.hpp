#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "homalg/complex_of_reps.hpp"
#include "homalg/poset.hpp"

namespace homalg::cli {

// Malformed input; the message names the file and the offending field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedRepresentation {
  std::string name;
  RepresentationPtr rep;
};

// {"strata": [{"name": "P1", "dim": 0}, ...], "covers": [["P1", "E1"], ...],
//  "acyclicity_asserted": true}
StratPoset parse_poset(const std::string& text, const std::string& source = "poset");

// {"reps": [{"name": "C", "stalks": {"P1": 1, ...},
//            "arrows": {"(P1,E1)": [[1]], ...}}]}
// Arrows run along covers from the lower stratum to the upper one; missing
// arrows are zero. Entries are integers or strings such as "1/2".
std::vector<NamedRepresentation> parse_representations(const std::string& text,
                                                       const std::shared_ptr<const Quiver>& quiver, Ring ring,
                                                       const std::string& source = "reps");

std::string read_file(const std::string& path);

}  // namespace homalg::cli
