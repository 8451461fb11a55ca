#pragma once

#include <map>
#include <string>
#include <vector>

#include "homalg/lattice.hpp"
#include "homalg/matrix.hpp"

namespace homalg {

// Bounded cochain complex of finitely generated free modules. The
// differential d^q : C^q -> C^{q+1} is stored as a rank(q+1) x rank(q)
// matrix; degrees without an entry are zero.
class ChainComplex {
 public:
  explicit ChainComplex(Ring ring = Ring::integers) : ring_(ring) {}

  Ring ring() const { return ring_; }

  void set_degree(int q, std::vector<std::string> labels);
  void set_rank(int q, std::size_t rank);
  // Shapes are checked against the current ranks.
  void set_differential(int q, Matrix d);

  std::size_t rank(int q) const;
  const std::vector<std::string>& labels(int q) const;
  // Zero matrix of the right shape when nothing was stored.
  Matrix differential(int q) const;
  bool has_differential(int q) const { return differentials_.count(q) != 0; }

  // Degrees with nonzero rank, ascending.
  std::vector<int> support() const;
  bool is_zero() const { return support().empty(); }
  int min_degree() const;
  int max_degree() const;

 private:
  Ring ring_;
  std::map<int, std::vector<std::string>> labels_;
  std::map<int, Matrix> differentials_;
};

struct Violation {
  int degree = 0;
  std::string message;
};

// Every degree where d^{q+1} d^q != 0 or a stored shape is inconsistent.
std::vector<Violation> validate_complex(const ChainComplex& c);

struct CohomologyProfile {
  std::map<int, Subquotient> groups;

  std::size_t betti(int q) const;
  std::vector<Scalar> torsion(int q) const;
  bool is_zero() const;
};

// Per-degree ker d^q / im d^{q-1} with cocycle representatives. Throws
// PreconditionError on an invalid complex.
CohomologyProfile cohomology(const ChainComplex& c);

// Ranks only, from the Smith forms of the differentials.
struct CohomologyRanks {
  std::map<int, std::size_t> betti;
  std::map<int, std::vector<Scalar>> torsion;
  bool acyclic() const;
};
CohomologyRanks cohomology_ranks(const ChainComplex& c);

struct ChainMap {
  ChainComplex source;
  ChainComplex target;
  std::map<int, Matrix> components;  // rank_target(q) x rank_source(q)

  Matrix component(int q) const;
};

ChainMap identity_map(const ChainComplex& c);
ChainMap compose(const ChainMap& g, const ChainMap& f);  // g after f
std::vector<Violation> validate_chain_map(const ChainMap& f);

// cone(f)^q = source^{q+1} (+) target^q with d(x, y) = (-d_s x, f x + d_t y).
ChainComplex mapping_cone(const ChainMap& f);

struct QuasiIsoReport {
  bool quasi_isomorphism = false;
  // cone cohomology in each degree where it does not vanish
  std::map<int, std::size_t> cone_betti;
  std::map<int, std::vector<Scalar>> cone_torsion;
};
QuasiIsoReport is_quasi_iso(const ChainMap& f);

// Output degree q is input degree q + k; differentials pick up (-1)^k.
ChainComplex shift(const ChainComplex& c, int k);

// Euler characteristic from ranks of the chain groups.
long euler_characteristic(const ChainComplex& c);

}  // namespace homalg
