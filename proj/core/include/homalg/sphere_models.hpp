#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "homalg/complex_of_reps.hpp"
#include "homalg/formality.hpp"
#include "homalg/hom_complex.hpp"

namespace homalg {

// The sphere stratified by n points P1..Pn on a great circle, the arcs
// E1..En between them and the two hemispheres H1, H2. Arc E_i joins
// P_{i-1} and P_i (indices mod n), so P_i lies under E_i and E_{i+1}.
struct SphereModel {
  int n = 0;
  Ring ring = Ring::integers;
  StratPoset poset;
  std::shared_ptr<const Quiver> quiver;
  std::map<std::string, RepresentationPtr> closures;  // I_S by stratum name

  std::size_t vertex(const std::string& stratum) const { return quiver->vertex(stratum); }
  RepresentationPtr closure(const std::string& stratum) const;
  std::vector<std::string> strata() const;
};

SphereModel build_An(int n, Ring ring = Ring::integers);

Representation constant_rep(const SphereModel& m);
Representation skyscraper(const SphereModel& m, int i);  // W_i, supported at P_i
Representation closure_rep(const SphereModel& m, const std::string& stratum);

// Generator of the rank-one space Hom(I_S, I_T).
RepMorphism canonical_morphism(const SphereModel& m, const std::string& s, const std::string& t);

// Labels: h1, e2, p1 on diagonal blocks, he_{ji} for H_j -> E_i, hp_{ji} for
// H_j -> P_i, e_{ji} for E_j -> P_i.
std::string sphere_block_label(const std::string& source, const std::string& target, std::size_t k,
                               std::size_t rank);

struct ModelResolution {
  ComplexOfReps complex;
  std::vector<ResolutionTarget> targets;
};

// C resolved by I_H -> I_E -> I_P in degrees 0, 1, 2 (n = 2).
ModelResolution resolution_trivial(const SphereModel& m);
// W_1 (+) C[1]: I_H -> I_E (+) I_P1 -> I_P in degrees -1, 0, 1 (n = 2).
ModelResolution resolution_one_point(const SphereModel& m);
// W_1 (+) ... (+) W_n (+) C[1]: I_H -> I_E (+) I_P -> I_P in degrees -1, 0, 1.
ModelResolution resolution_n_points(const SphereModel& m);

DgAlgebraPtr end_algebra(const ModelResolution& r);

struct Witness {
  CohomologyAlgebra cohomology;
  DgMorphism map;  // H -> E
  std::vector<std::string> violations;
  bool quasi_isomorphism = false;
};

// H(E) -> E from named representatives (labels of E's basis or "1" for the
// unit).
Witness witness_from_representatives(const DgAlgebraPtr& e, const std::vector<std::pair<std::string, int>>& reps);
Witness formality_witness_trivial(const DgAlgebraPtr& e);
Witness formality_witness_one_point(const DgAlgebraPtr& e);

struct NPointChain {
  FormalityChain chain;
  Subalgebra u;
  Ideal ideal;
  Quotient quotient;
  CohomologyAlgebra cohomology;  // of U/I, with the named representatives
};

// End J <- U ->> U/I <- H(U/I) for the n-point resolution.
NPointChain formality_chain_n_points(const DgAlgebraPtr& e, int n);

// Spanning elements of U and generators of I in terms of End J.
std::vector<LabeledElement> n_point_subalgebra_span(const DgAlgebra& e, int n);
std::vector<SparseVec> n_point_ideal_generators(const DgAlgebra& u, int n);

// rank Hom(I_S, I_T) for every ordered pair of strata
std::map<std::pair<std::string, std::string>, std::size_t> hom_rank_table(const SphereModel& m);

// Nonzero pairs of the Hom list for n points, computed from the incidence
// rule alone.
std::map<std::pair<std::string, std::string>, std::size_t> expected_hom_ranks(int n);

// Finite model of the de Rham matrix algebra of the n-sphere with a disc D:
// entries (1,1) {1_A, omega_A}, (1,2) {omega_B}, (2,1) {1_C, tau_C, omegaD_C},
// (2,2) {1_D, tau_D, omegaD_D}, with d tau = omegaD.
struct DeRhamModel {
  int n = 0;
  DgAlgebraPtr algebra;
  Ideal acyclic_ideal;  // spanned by tau and omegaD in both rows
  Quotient cohomology;  // projection onto H
  std::map<std::string, std::pair<int, int>> entry;  // label -> matrix entry
};

DeRhamModel de_rham_model(int n);

}  // namespace homalg
