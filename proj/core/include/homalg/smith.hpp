#pragma once

#include <optional>
#include <vector>

#include "homalg/matrix.hpp"

namespace homalg {

// D = left * M * right with D diagonal. Over the integers the diagonal is the
// Smith normal form (d_1 | d_2 | ... , all d_i > 0, zeros trailing) and the
// transforms are unimodular. Over the rationals the nonzero diagonal entries
// are all 1.
struct SmithForm {
  Matrix left;
  Matrix diagonal;
  Matrix right;
  Matrix left_inverse;
  Matrix right_inverse;
  std::size_t rank = 0;

  // The nonzero diagonal entries d_1, ..., d_rank.
  std::vector<Scalar> invariant_factors() const;
};

// Which transforms to compute; the others are left empty.
enum SmithTransforms : unsigned {
  smith_left = 1,
  smith_right = 2,
  smith_left_inverse = 4,
  smith_right_inverse = 8,
  smith_all = 15,
};

SmithForm smith_normal_form(const Matrix& m, unsigned transforms = smith_all);

// Rank over the fraction field.
std::size_t rank(const Matrix& m);
// Nonzero diagonal entries of the Smith form; all ones over a field.
std::vector<Scalar> invariant_factors(const Matrix& m);

// Two-sided inverse over the matrix's ring; nullopt when singular, or when
// the inverse is not integral over the integers.
std::optional<Matrix> inverse(const Matrix& m);

// Lattice basis of the column span in Hermite normal form (column echelon,
// positive pivots, entries left of a pivot reduced modulo it). Over the
// rationals this is the reduced column echelon form.
Matrix hermite_basis(const Matrix& generators);

}  // namespace homalg
