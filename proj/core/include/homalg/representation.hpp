#pragma once

#include <memory>
#include <string>
#include <vector>

#include "homalg/lattice.hpp"
#include "homalg/matrix.hpp"
#include "homalg/poset.hpp"

namespace homalg {

// Poset functor with free stalks: a rank per vertex and a matrix
// (rank(target) x rank(source)) per Hasse arrow.
class Representation {
 public:
  Representation() = default;
  Representation(std::shared_ptr<const Quiver> quiver, Ring ring);
  Representation(std::shared_ptr<const Quiver> quiver, Ring ring, std::vector<std::size_t> ranks);

  const Quiver& quiver() const { return *quiver_; }
  const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
  Ring ring() const { return ring_; }

  std::size_t rank(std::size_t v) const { return ranks_.at(v); }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  std::size_t total_rank() const;
  bool is_zero() const { return total_rank() == 0; }

  const Matrix& arrow(std::size_t a) const { return arrows_.at(a); }
  // Throws PreconditionError on a shape mismatch.
  void set_arrow(std::size_t a, Matrix m);

  // Composite along some path from x to y; identity when x == y.
  Matrix path_map(std::size_t x, std::size_t y) const;

 private:
  std::shared_ptr<const Quiver> quiver_;
  Ring ring_ = Ring::integers;
  std::vector<std::size_t> ranks_;
  std::vector<Matrix> arrows_;
};

// Every pair of Hasse paths with the same endpoints whose composites differ.
std::vector<std::string> validate_representation(const Representation& v);

// Per-vertex matrices rank_W(v) x rank_V(v).
struct RepMorphism {
  std::vector<Matrix> components;

  bool is_zero() const;
};

RepMorphism zero_morphism(const Representation& v, const Representation& w);
RepMorphism identity_morphism(const Representation& v);
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);  // g after f
RepMorphism operator+(const RepMorphism& a, const RepMorphism& b);
RepMorphism operator*(const Scalar& s, const RepMorphism& f);
bool operator==(const RepMorphism& a, const RepMorphism& b);

std::vector<std::string> validate_morphism(const RepMorphism& f, const Representation& v,
                                           const Representation& w);

// Lattice of morphisms V -> W with a normalized basis: each basis morphism
// has its first nonzero entry (vertex order, row-major) positive.
class HomSpace {
 public:
  std::size_t rank() const { return basis_.size(); }
  const std::vector<RepMorphism>& basis() const { return basis_; }
  // Coordinates of a morphism in the basis; throws PreconditionError when f
  // is not a morphism V -> W.
  Vector coordinates(const RepMorphism& f) const;
  RepMorphism element(const Vector& coords) const;

  friend HomSpace hom_space(const Representation& v, const Representation& w);

 private:
  Ring ring_ = Ring::integers;
  std::vector<std::size_t> source_ranks_, target_ranks_;
  std::vector<std::size_t> offsets_;  // start of each vertex block in the flat layout
  std::size_t unknowns_ = 0;
  std::vector<RepMorphism> basis_;
  std::vector<Vector> flat_basis_;
  LatticeSolver solver_;
};

HomSpace hom_space(const Representation& v, const Representation& w);

Representation direct_sum(const std::vector<Representation>& vs);
// As above; the empty sum is the zero representation on q.
Representation direct_sum(std::shared_ptr<const Quiver> q, Ring ring, const std::vector<Representation>& vs);

// R at every vertex y >= x, identity arrows inside the support.
Representation indecomposable_projective(std::shared_ptr<const Quiver> q, Ring ring, std::size_t x);
// R on the closure {t : t <= s}, identity arrows inside, zero leaving it.
Representation closure_representation(std::shared_ptr<const Quiver> q, Ring ring, std::size_t s);
Representation constant_representation(std::shared_ptr<const Quiver> q, Ring ring);

struct KernelData {
  Representation kernel;
  RepMorphism inclusion;
};
// Stalkwise saturated kernels with induced arrows.
KernelData kernel(const RepMorphism& f, const Representation& v, const Representation& w);

}  // namespace homalg
