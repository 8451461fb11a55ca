#include "homalg/lattice.hpp"

#include "homalg/errors.hpp"

namespace homalg {

Matrix kernel_basis(const Matrix& m) {
  SmithForm s = smith_normal_form(m, smith_right);
  std::size_t nullity = m.cols() - s.rank;
  Matrix basis = s.right.columns(s.rank, nullity);
  return hermite_basis(basis).with_ring(m.ring());
}

Matrix image_basis(const Matrix& m) { return hermite_basis(m).with_ring(m.ring()); }

LatticeSolver::LatticeSolver(const Matrix& generators)
    : ring_(generators.ring()),
      rows_(generators.rows()),
      cols_(generators.cols()),
      smith_(smith_normal_form(generators, smith_left | smith_right)) {
  left_cols_.resize(rows_);
  for (std::size_t k = 0; k < rows_; ++k)
    for (std::size_t i = 0; i < rows_; ++i)
      if (!is_zero(smith_.left(i, k))) left_cols_[k].emplace_back(i, smith_.left(i, k));
  right_cols_.resize(smith_.rank);
  for (std::size_t i = 0; i < smith_.rank; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!is_zero(smith_.right(j, i))) right_cols_[i].emplace_back(j, smith_.right(j, i));
}

std::optional<Vector> LatticeSolver::solve(const Vector& b) const {
  if (b.size() != rows_) throw PreconditionError("solve: right-hand side has wrong length");
  // c = U b, using only the nonzero entries of b
  Vector c(rows_, Scalar(0));
  for (std::size_t k = 0; k < rows_; ++k) {
    if (is_zero(b[k])) continue;
    for (const auto& [i, u] : left_cols_[k]) c[i] += u * b[k];
  }
  for (std::size_t i = smith_.rank; i < rows_; ++i)
    if (!is_zero(c[i])) return std::nullopt;
  Vector x(cols_, Scalar(0));
  for (std::size_t i = 0; i < smith_.rank; ++i) {
    if (is_zero(c[i])) continue;
    Scalar y = c[i] / smith_.diagonal(i, i);
    if (ring_ == Ring::integers && !is_integral(y)) return std::nullopt;
    for (const auto& [j, v] : right_cols_[i]) x[j] += v * y;
  }
  return x;
}

Matrix LatticeSolver::solution_map() const {
  Matrix out(ring_, cols_, rows_);
  for (std::size_t i = 0; i < smith_.rank; ++i) {
    Scalar inv = 1 / smith_.diagonal(i, i);
    for (std::size_t k = 0; k < rows_; ++k) {
      const Scalar& u = smith_.left(i, k);
      if (is_zero(u)) continue;
      Scalar w = u * inv;
      for (const auto& [j, v] : right_cols_[i]) out(j, k) += v * w;
    }
  }
  return out;
}

std::optional<Vector> solve_in_image(const Matrix& m, const Vector& b) {
  return LatticeSolver(m).solve(b);
}

Subquotient subquotient(const Matrix& kernel_gens, const Matrix& image_gens) {
  if (kernel_gens.rows() != image_gens.rows())
    throw PreconditionError("subquotient: ambient dimensions differ");
  const Ring ring = kernel_gens.ring();
  Subquotient sq;
  sq.ring_ = ring;
  sq.ambient_ = kernel_gens.rows();

  Matrix basis = kernel_gens;
  if (rank(basis) != basis.cols()) basis = image_basis(basis);
  const std::size_t k = basis.cols();
  sq.kernel_solver_ = LatticeSolver(basis);

  // image generators in kernel coordinates
  Matrix rel(ring, k, image_gens.cols());
  for (std::size_t j = 0; j < image_gens.cols(); ++j) {
    auto y = sq.kernel_solver_.solve(image_gens.column(j));
    if (!y) throw PreconditionError("image not contained in kernel");
    rel.set_column(j, *y);
  }

  SmithForm s = smith_normal_form(rel, smith_left | smith_left_inverse);
  // new kernel basis K' = K U^-1 puts the relations in diagonal position
  Matrix adapted = basis * s.left_inverse.with_ring(ring);
  sq.change_ = s.left.with_ring(ring);
  sq.first_free_ = s.rank;
  sq.betti_ = k - s.rank;
  sq.lift_ = adapted.columns(s.rank, sq.betti_);

  std::vector<Vector> tors_cols;
  for (std::size_t i = 0; i < s.rank; ++i) {
    const Scalar& d = s.diagonal(i, i);
    if (ring == Ring::integers && d != 1) {
      sq.torsion_.push_back(d);
      sq.torsion_index_.push_back(i);
      tors_cols.push_back(adapted.column(i));
    }
  }
  sq.torsion_lift_ = Matrix::from_columns(ring, sq.ambient_, tors_cols);
  return sq;
}

Matrix Subquotient::free_coordinate_map() const {
  Matrix rows(ring_, betti_, change_.cols());
  for (std::size_t r = 0; r < betti_; ++r)
    for (std::size_t c = 0; c < change_.cols(); ++c) rows(r, c) = change_(first_free_ + r, c);
  return rows * kernel_solver_.solution_map();
}

Subquotient::Coordinates Subquotient::coordinates(const Vector& x) const {
  auto y = kernel_solver_.solve(x);
  if (!y) throw NotACocycle("vector is not in the kernel span");
  Vector z = change_.apply(*y);
  Coordinates out;
  out.free.assign(z.begin() + static_cast<std::ptrdiff_t>(first_free_), z.end());
  for (std::size_t t = 0; t < torsion_index_.size(); ++t) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), z[torsion_index_[t]].get_num_mpz_t(), torsion_[t].get_num_mpz_t());
    out.torsion.push_back(Scalar(r));
  }
  return out;
}

}  // namespace homalg
