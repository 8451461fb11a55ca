#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homalg/dg_morphism.hpp"
#include "homalg/lattice.hpp"

namespace homalg {

using LabeledElement = std::pair<std::string, SparseVec>;

// Cohomology of a dg algebra as a dg algebra with zero differential,
// together with a cocycle representative for every basis class.
struct CohomologyAlgebra {
  DgAlgebraPtr source;
  DgAlgebraPtr algebra;
  std::map<int, Subquotient> groups;
  std::vector<SparseVec> section;  // indexed by basis of `algebra`
  // free subquotient coordinates -> coordinates in the chosen basis
  std::map<int, Matrix> change_of_basis;
  // change_of_basis composed with the free coordinates, per degree
  std::map<int, Matrix> classifier;

  // Class of a cocycle, in the basis of `algebra`.
  SparseVec classify(const SparseVec& cocycle) const;
  // The section as a linear map H -> A; a dg morphism exactly when the
  // representatives are closed under multiplication.
  DgMorphism section_morphism() const;
};

// Representatives are the free-part lifts of the cohomology subquotients.
// Throws TorsionError when some H^m has torsion.
CohomologyAlgebra cohomology_algebra(const DgAlgebraPtr& a);
// Uses the given labeled cocycles, which must form a basis of H (over the
// ring) in each degree.
CohomologyAlgebra cohomology_algebra(const DgAlgebraPtr& a, const std::vector<LabeledElement>& representatives);

struct Subalgebra {
  DgAlgebraPtr algebra;
  DgMorphism inclusion;
};

// Sub dg algebra spanned by homogeneous elements. Independent elements keep
// their labels; dependent spans are replaced by a lattice basis. Throws
// ClosureError when the span misses the unit or is not closed under d or
// products.
Subalgebra subalgebra_from_span(const DgAlgebraPtr& a, const std::vector<LabeledElement>& elements);

struct Ideal {
  DgAlgebraPtr algebra;
  std::map<int, Matrix> basis;  // columns in degree-local coordinates of `algebra`
  bool generated_by_input = true;  // closure under products added nothing

  std::size_t rank(int m) const;
  ChainComplex complex() const;
};

// Two-sided ideal generated by homogeneous elements. Throws ClosureError if
// the closure is not stable under d.
Ideal ideal_from_span(const DgAlgebraPtr& u, const std::vector<SparseVec>& elements);

struct Quotient {
  DgAlgebraPtr algebra;
  DgMorphism projection;
};

// U/I with a complement of standard basis vectors chosen greedily when that
// gives a lattice complement, otherwise a Smith complement. Throws
// TorsionError when U^m/I^m has torsion and PreconditionError when the unit
// dies.
Quotient quotient(const Ideal& ideal);

// H(f) in degree m between the automatic cohomology bases (free parts).
Matrix induced_cohomology_map(const DgMorphism& f, int m, const Subquotient& source, const Subquotient& target);

}  // namespace homalg
