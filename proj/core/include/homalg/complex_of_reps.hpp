#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "homalg/chain_complex.hpp"
#include "homalg/representation.hpp"

namespace homalg {

using RepresentationPtr = std::shared_ptr<const Representation>;

// A named direct summand of a term. Blocks sharing the same representation
// pointer share cached Hom computations.
struct Block {
  std::string name;
  RepresentationPtr rep;
};

// Bounded cochain complex of representations. Each term is a list of blocks;
// the differential d^q is stored blockwise, keyed by (target block in degree
// q+1, source block in degree q).
class ComplexOfReps {
 public:
  ComplexOfReps() = default;
  ComplexOfReps(std::shared_ptr<const Quiver> quiver, Ring ring) : quiver_(std::move(quiver)), ring_(ring) {}

  const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
  const Quiver& quiver() const { return *quiver_; }
  Ring ring() const { return ring_; }

  void set_term(int q, std::vector<Block> blocks);
  const std::vector<Block>& blocks(int q) const;
  std::vector<int> support() const;

  void set_differential_block(int q, std::size_t target, std::size_t source, RepMorphism f);
  const std::map<std::pair<std::size_t, std::size_t>, RepMorphism>& differential_blocks(int q) const;

  // Direct sum of the blocks and the assembled differential.
  Representation term(int q) const;
  RepMorphism differential(int q) const;
  // Start of each block inside the stalk of term(q) at vertex v.
  std::vector<std::size_t> block_offsets(int q, std::size_t v) const;

  ChainComplex stalk_complex(std::size_t v) const;

  // Degree q of the result is degree q + k of this complex; differentials
  // pick up the sign (-1)^k.
  ComplexOfReps shifted(int k) const;

 private:
  std::shared_ptr<const Quiver> quiver_;
  Ring ring_ = Ring::integers;
  std::map<int, std::vector<Block>> terms_;
  std::map<int, std::map<std::pair<std::size_t, std::size_t>, RepMorphism>> diff_;
};

// Block morphisms that are not morphisms, and vertices where d^2 != 0.
std::vector<std::string> validate_complex_of_reps(const ComplexOfReps& c);

// Single-term complex.
ComplexOfReps stalk(const Block& b, int degree);

// A representation concentrated in one degree with its map into the
// resolving complex.
struct ResolutionTarget {
  int degree = 0;
  RepresentationPtr rep;
  RepMorphism augmentation;  // rep -> term(degree)
};

struct ResolutionViolation {
  std::string vertex;
  int degree = 0;
  std::string message;
};

// The augmented complex (targets -> J) is checked stalk by stalk: d^2 = 0,
// augmentations are morphisms killed by d, and the augmentation is a
// quasi-isomorphism over the ring at every vertex.
std::vector<ResolutionViolation> validate_resolution(const ComplexOfReps& j,
                                                     const std::vector<ResolutionTarget>& targets);
std::vector<ResolutionViolation> validate_resolution(const ComplexOfReps& j, RepresentationPtr target,
                                                     const RepMorphism& augmentation, int placement_degree);

}  // namespace homalg
