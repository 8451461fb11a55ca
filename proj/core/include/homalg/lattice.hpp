#pragma once

#include <optional>
#include <vector>

#include "homalg/matrix.hpp"
#include "homalg/smith.hpp"

namespace homalg {

// Basis of {x : Mx = 0}. Over the integers the basis spans the full
// (saturated) kernel lattice. Returned in Hermite normal form.
Matrix kernel_basis(const Matrix& m);

// Basis of the column span (Hermite normal form).
Matrix image_basis(const Matrix& m);

// Precomputed Smith data for repeated membership queries against the column
// span of a fixed matrix.
class LatticeSolver {
 public:
  LatticeSolver() = default;
  explicit LatticeSolver(const Matrix& generators);

  // Some x with generators * x == b, or nullopt when b is not in the span
  // (over the ring; 3 is not in 2Z).
  std::optional<Vector> solve(const Vector& b) const;
  bool contains(const Vector& b) const { return solve(b).has_value(); }

  std::size_t rank() const { return smith_.rank; }
  // Linear map b -> solve(b), valid for b in the span (generator_count x
  // ambient_dimension).
  Matrix solution_map() const;
  std::size_t ambient_dimension() const { return rows_; }
  std::size_t generator_count() const { return cols_; }

 private:
  Ring ring_ = Ring::integers;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  SmithForm smith_;
  // nonzero entries of the columns of U and of the first rank columns of V
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> left_cols_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> right_cols_;
};

std::optional<Vector> solve_in_image(const Matrix& m, const Vector& b);

// Presentation of span(kernel_gens) / span(image_gens).
class Subquotient {
 public:
  Ring ring() const { return ring_; }
  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t betti() const { return betti_; }
  // Invariant factors > 1, in divisibility order. Always empty over Q.
  const std::vector<Scalar>& torsion() const { return torsion_; }
  // Columns are cocycle representatives of a basis of the free part.
  const Matrix& lift() const { return lift_; }
  // Representatives of the torsion generators, one per torsion factor.
  const Matrix& torsion_lift() const { return torsion_lift_; }
  bool is_zero() const { return betti_ == 0 && torsion_.empty(); }

  struct Coordinates {
    Vector free;
    Vector torsion;  // reduced into [0, t_i)
  };

  // x == sum free_i * lift_i + sum torsion_j * torsion_lift_j modulo the
  // image span. Throws NotACocycle when x is outside the kernel span.
  Coordinates coordinates(const Vector& x) const;
  // Linear map x -> coordinates(x).free, valid on the kernel span
  // (betti x ambient_dimension).
  Matrix free_coordinate_map() const;

  friend Subquotient subquotient(const Matrix& kernel_gens, const Matrix& image_gens);

 private:
  Ring ring_ = Ring::integers;
  std::size_t ambient_ = 0;
  std::size_t betti_ = 0;
  std::vector<Scalar> torsion_;
  Matrix lift_;
  Matrix torsion_lift_;
  // coordinates: x = K y; z = change * y; free = z[first_free..], torsion from
  // z at torsion_index_.
  LatticeSolver kernel_solver_;
  Matrix change_;
  std::size_t first_free_ = 0;
  std::vector<std::size_t> torsion_index_;
};

// Throws PreconditionError("image not contained in kernel") when some image
// generator is outside the kernel span.
Subquotient subquotient(const Matrix& kernel_gens, const Matrix& image_gens);

}  // namespace homalg
