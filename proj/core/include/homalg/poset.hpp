#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homalg {

struct Stratum {
  std::string name;
  int dim = 0;
};

// Finite poset of strata. S <= T means S lies in the closure of T.
class StratPoset {
 public:
  StratPoset() = default;
  // relations are (lower, upper) pairs; the order is their reflexive and
  // transitive closure. Throws PreconditionError on duplicate or unknown
  // names and on cycles.
  StratPoset(std::vector<Stratum> strata, const std::vector<std::pair<std::string, std::string>>& relations,
             bool acyclicity_asserted = false);

  std::size_t size() const { return strata_.size(); }
  const Stratum& stratum(std::size_t i) const { return strata_.at(i); }
  const std::vector<Stratum>& strata() const { return strata_; }
  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index(const std::string& name) const;  // throws on unknown

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  // Covering pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  // The user's assertion that the stratification is acyclic; recorded only.
  bool acyclicity_asserted() const { return acyclic_; }

 private:
  std::vector<Stratum> strata_;
  std::vector<char> leq_;
  bool acyclic_ = false;
};

// Hasse quiver of a stratification poset. Arrows point from the lower
// stratum to the upper one; all parallel paths are identified.
class Quiver {
 public:
  struct Arrow {
    std::size_t source;
    std::size_t target;
  };

  std::size_t vertex_count() const { return poset_.size(); }
  const std::string& vertex_name(std::size_t v) const { return poset_.stratum(v).name; }
  std::size_t vertex(const std::string& name) const { return poset_.index(name); }
  const StratPoset& poset() const { return poset_; }

  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::optional<std::size_t> arrow(std::size_t source, std::size_t target) const;
  const std::vector<std::size_t>& incoming(std::size_t v) const { return incoming_[v]; }
  const std::vector<std::size_t>& outgoing(std::size_t v) const { return outgoing_[v]; }

  // a path exists from a to b (a <= b)
  bool reaches(std::size_t a, std::size_t b) const { return poset_.leq(a, b); }
  // Vertices ordered so every arrow goes forward.
  const std::vector<std::size_t>& topological_order() const { return order_; }

  friend Quiver build_quiver(const StratPoset& p);

 private:
  StratPoset poset_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::size_t>> incoming_, outgoing_;
  std::vector<std::size_t> order_;
};

Quiver build_quiver(const StratPoset& p);

}  // namespace homalg
