#pragma once

#include <map>
#include <string>
#include <vector>

#include "homalg/dg_constructions.hpp"

namespace homalg {

enum class Direction { forward, backward };

// A_0 - A_1 - ... - A_k; arrow i joins A_i and A_{i+1}. A forward arrow maps
// A_i -> A_{i+1}, a backward arrow maps A_{i+1} -> A_i.
struct FormalityChain {
  std::vector<DgAlgebraPtr> algebras;
  std::vector<std::pair<DgMorphism, Direction>> arrows;
};

struct ArrowReport {
  Direction direction = Direction::forward;
  std::vector<std::string> violations;  // dg morphism defects
  bool quasi_isomorphism = false;
  QuasiIsoReport cone;
};

struct FormalityReport {
  bool verdict = false;
  std::vector<std::string> problems;
  std::vector<ArrowReport> arrows;
  bool terminal_has_zero_differential = false;
  // Image of each basis element of the terminal algebra in the automatic
  // cohomology basis of A_0, per degree (columns).
  std::map<int, Matrix> identification;
  bool identification_multiplicative = false;
};

FormalityReport verify_formality_chain(const FormalityChain& chain);

// Graded basis with left A-action, right B-action and a differential.
struct DgBimodule {
  DgAlgebraPtr left;
  DgAlgebraPtr right;
  std::vector<BasisElement> basis;  // sorted by degree
  std::vector<std::map<std::size_t, SparseVec>> left_action;   // [a][m] -> a.m
  std::vector<std::map<std::size_t, SparseVec>> right_action;  // [m][b] -> m.b
  std::vector<SparseVec> diff;

  SparseVec act_left(const SparseVec& a, const SparseVec& m) const;
  SparseVec act_right(const SparseVec& m, const SparseVec& b) const;
  SparseVec d(const SparseVec& m) const;
  ChainComplex complex() const;
};

// A as an (A, A)-bimodule.
DgBimodule regular_bimodule(const DgAlgebraPtr& a);
// A as an (A, B)-bimodule, B acting on the right through f : B -> A.
DgBimodule restricted_bimodule(const DgAlgebraPtr& a, const DgMorphism& f);

// d^2, both Leibniz rules, associativity of both actions, their
// compatibility, and unit actions.
std::vector<std::string> validate_bimodule(const DgBimodule& m);

struct QuasiEquivalenceReport {
  bool verdict = false;
  std::string reason;
  QuasiIsoReport left;   // a -> a.c
  QuasiIsoReport right;  // b -> c.b
};

// c must be a degree-0 cycle whose left and right multiplication maps are
// quasi-isomorphisms A -> M and B -> M.
QuasiEquivalenceReport verify_quasi_equivalence(const DgBimodule& m, const SparseVec& c);

}  // namespace homalg
