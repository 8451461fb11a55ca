#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "homalg/complex_of_reps.hpp"
#include "homalg/dg_morphism.hpp"

namespace homalg {

// Names the k-th basis morphism of Hom(source block, target block), where
// rank is the rank of that Hom space.
using BlockLabeler =
    std::function<std::string(const std::string& source, const std::string& target, std::size_t k, std::size_t rank)>;

// "{source}>{target}", with "#k" appended when the Hom space has rank > 1.
std::string generic_block_label(const std::string& source, const std::string& target, std::size_t k,
                                std::size_t rank);

// One basis element of Hom^m(X, Y): the k-th basis morphism from block s of
// X^p to block t of Y^{p+m}.
struct HomElement {
  int p = 0;
  std::size_t source_block = 0;
  std::size_t target_block = 0;
  std::size_t k = 0;
  std::string label;
};

struct LabeledHomComplex {
  ChainComplex complex;
  std::map<int, std::vector<HomElement>> elements;  // same order as the complex basis
};

// Degree m is the direct sum over p and block pairs of Hom(X^p_s, Y^{p+m}_t),
// ordered by (p, s, t, k). d(f) = d_Y f - (-1)^{|f|} f d_X. A label that occurs
// more than once in a degree gets the source degree appended as "^{(p)}".
LabeledHomComplex hom_complex(const ComplexOfReps& x, const ComplexOfReps& y,
                              const BlockLabeler& labeler = generic_block_label);

// End(X) with composition as multiplication and the identity as unit.
DgAlgebraPtr end_dg_algebra(const ComplexOfReps& x, const BlockLabeler& labeler = generic_block_label);

}  // namespace homalg
