#pragma once

#include <memory>
#include <string>
#include <vector>

#include "homalg/chain_complex.hpp"
#include "homalg/dg_algebra.hpp"

namespace homalg {

using DgAlgebraPtr = std::shared_ptr<const DgAlgebra>;

// Linear map given by the image of every source basis element.
struct DgMorphism {
  DgAlgebraPtr source;
  DgAlgebraPtr target;
  std::vector<SparseVec> images;

  SparseVec apply(const SparseVec& x) const;
  // Degree-m component in degree-local coordinates.
  Matrix component(int m) const;
  ChainMap chain_map() const;
};

DgMorphism identity_dg_morphism(DgAlgebraPtr a);
DgMorphism compose(const DgMorphism& g, const DgMorphism& f);  // g after f

// Degree preservation, compatibility with d, multiplicativity on all basis
// pairs, and unit preservation.
std::vector<std::string> validate_dg_morphism(const DgMorphism& f);

QuasiIsoReport quasi_iso_report(const DgMorphism& f);
bool is_quasi_iso_dg(const DgMorphism& f);

}  // namespace homalg
