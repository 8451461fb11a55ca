#include "homalg/smith.hpp"

#include <algorithm>
#include <utility>

#include "homalg/errors.hpp"

namespace homalg {
namespace {

// Integer arithmetic: Euclidean steps, divisibility chain, positive pivots.
struct IntegerDomain {
  using T = mpz_class;
  static constexpr bool exact_division = false;
  static T from(const Scalar& x) { return x.get_num(); }
  static Scalar to(const T& x) { return Scalar(x); }
  static T quotient(const T& a, const T& b) {
    T q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static bool divides(const T& d, const T& a) { return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0; }
  static bool smaller(const T& a, const T& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
};

// Field arithmetic: any nonzero pivot, exact elimination.
struct FieldDomain {
  using T = mpq_class;
  static constexpr bool exact_division = true;
  static T from(const Scalar& x) { return x; }
  static Scalar to(const T& x) { return x; }
  static T quotient(const T& a, const T& b) { return a / b; }
  static bool divides(const T&, const T&) { return true; }
  // Prefer small numerators so +-1 pivots win.
  static bool smaller(const T& a, const T& b) { return mpz_cmpabs(a.get_num_mpz_t(), b.get_num_mpz_t()) < 0; }
};

template <class D>
class Dense {
 public:
  using T = typename D::T;
  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}
  static Dense identity(std::size_t n) {
    Dense d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = 1;
    return d;
  }
  T& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const T& q) {
    if (sgn(q) == 0) return;
    for (std::size_t c = 0; c < cols; ++c) {
      const T& x = (*this)(j, c);
      if (sgn(x) != 0) (*this)(i, c) += q * x;
    }
  }
  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const T& q) {
    if (sgn(q) == 0) return;
    for (std::size_t r = 0; r < rows; ++r) {
      const T& x = (*this)(r, j);
      if (sgn(x) != 0) (*this)(r, i) += q * x;
    }
  }
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  void scale_row(std::size_t i, const T& s) {
    for (std::size_t c = 0; c < cols; ++c) (*this)(i, c) *= s;
  }
  void scale_col(std::size_t i, const T& s) {
    for (std::size_t r = 0; r < rows; ++r) (*this)(r, i) *= s;
  }

  Matrix to_matrix(Ring ring) const {
    Matrix m(ring, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = D::to((*this)(r, c));
    return m;
  }

  std::size_t rows, cols;
  std::vector<T> a;
};

// Keeps the requested subset of U, U^-1, V, V^-1 in sync with the elementary
// operations applied to A.
template <class D>
struct Transformed {
  using T = typename D::T;
  Dense<D> a, u, uinv, v, vinv;
  bool tu, tuinv, tv, tvinv;

  Transformed(const Matrix& m, unsigned which)
      : a(m.rows(), m.cols()),
        u(Dense<D>::identity(which & smith_left ? m.rows() : 0)),
        uinv(Dense<D>::identity(which & smith_left_inverse ? m.rows() : 0)),
        v(Dense<D>::identity(which & smith_right ? m.cols() : 0)),
        vinv(Dense<D>::identity(which & smith_right_inverse ? m.cols() : 0)),
        tu(which & smith_left),
        tuinv(which & smith_left_inverse),
        tv(which & smith_right),
        tvinv(which & smith_right_inverse) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) a(r, c) = D::from(m(r, c));
  }

  void add_row(std::size_t i, std::size_t j, const T& q) {  // row_i += q row_j
    a.add_row(i, j, q);
    if (tu) u.add_row(i, j, q);
    if (tuinv) uinv.add_col(j, i, -q);
  }
  void add_col(std::size_t i, std::size_t j, const T& q) {  // col_i += q col_j
    a.add_col(i, j, q);
    if (tv) v.add_col(i, j, q);
    if (tvinv) vinv.add_row(j, i, -q);
  }
  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (tu) u.swap_rows(i, j);
    if (tuinv) uinv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (tv) v.swap_cols(i, j);
    if (tvinv) vinv.swap_rows(i, j);
  }
  void scale_row(std::size_t i, const T& s) {  // s must be a unit
    a.scale_row(i, s);
    if (tu) u.scale_row(i, s);
    if (tuinv) uinv.scale_col(i, T(1) / s);
  }
};

template <class D>
SmithForm diagonalize(const Matrix& m, unsigned which) {
  using T = typename D::T;
  Transformed<D> t(m, which);
  auto& a = t.a;
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t rank = 0;

  for (std::size_t p = 0; p < std::min(nr, nc); ++p) {
    bool found_any = false;
    for (;;) {
      // pivot: smallest nonzero entry of the trailing block
      std::size_t pr = nr, pc = nc;
      for (std::size_t r = p; r < nr; ++r)
        for (std::size_t c = p; c < nc; ++c) {
          const T& x = a(r, c);
          if (sgn(x) == 0) continue;
          if (pr == nr || D::smaller(x, a(pr, pc))) {
            pr = r;
            pc = c;
          }
        }
      if (pr == nr) break;
      found_any = true;
      t.swap_rows(p, pr);
      t.swap_cols(p, pc);

      bool clean = true;
      for (std::size_t r = p + 1; r < nr; ++r) {
        if (sgn(a(r, p)) == 0) continue;
        T q = D::quotient(a(r, p), a(p, p));
        t.add_row(r, p, -q);
        if (sgn(a(r, p)) != 0) clean = false;
      }
      for (std::size_t c = p + 1; c < nc; ++c) {
        if (sgn(a(p, c)) == 0) continue;
        T q = D::quotient(a(p, c), a(p, p));
        t.add_col(c, p, -q);
        if (sgn(a(p, c)) != 0) clean = false;
      }
      if (!clean) continue;

      if constexpr (!D::exact_division) {
        std::size_t bad = nr;
        for (std::size_t r = p + 1; r < nr && bad == nr; ++r)
          for (std::size_t c = p + 1; c < nc; ++c)
            if (sgn(a(r, c)) != 0 && !D::divides(a(p, p), a(r, c))) {
              bad = r;
              break;
            }
        if (bad != nr) {
          t.add_row(p, bad, T(1));
          continue;
        }
      }
      break;
    }
    if (!found_any) break;
    if constexpr (D::exact_division) {
      t.scale_row(p, T(1) / a(p, p));
    } else {
      if (sgn(a(p, p)) < 0) t.scale_row(p, T(-1));
    }
    ++rank;
  }

  Ring ring = D::exact_division ? Ring::rationals : Ring::integers;
  SmithForm out;
  out.diagonal = a.to_matrix(ring);
  if (t.tu) out.left = t.u.to_matrix(ring);
  if (t.tv) out.right = t.v.to_matrix(ring);
  if (t.tuinv) out.left_inverse = t.uinv.to_matrix(ring);
  if (t.tvinv) out.right_inverse = t.vinv.to_matrix(ring);
  out.rank = rank;
  return out;
}

}  // namespace

std::vector<Scalar> SmithForm::invariant_factors() const {
  std::vector<Scalar> d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(diagonal(i, i));
  return d;
}

SmithForm smith_normal_form(const Matrix& m, unsigned transforms) {
  if (m.ring() == Ring::integers) {
    if (!m.is_integral()) throw PreconditionError("smith_normal_form: non-integral entry over Z");
    return diagonalize<IntegerDomain>(m, transforms);
  }
  return diagonalize<FieldDomain>(m, transforms);
}

std::vector<Scalar> invariant_factors(const Matrix& m) {
  if (m.ring() == Ring::integers) {
    if (!m.is_integral()) throw PreconditionError("invariant_factors: non-integral entry over Z");
    return diagonalize<IntegerDomain>(m, 0).invariant_factors();
  }
  return std::vector<Scalar>(rank(m), Scalar(1));
}

std::size_t rank(const Matrix& m) {
  // Gaussian elimination over Q on a copy; cheaper than a full Smith form.
  std::size_t nr = m.rows(), nc = m.cols();
  std::vector<mpq_class> a(nr * nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) a[r * nc + c] = m(r, c);
  std::size_t rk = 0;
  for (std::size_t c = 0; c < nc && rk < nr; ++c) {
    std::size_t piv = nr;
    for (std::size_t r = rk; r < nr; ++r)
      if (sgn(a[r * nc + c]) != 0) {
        piv = r;
        break;
      }
    if (piv == nr) continue;
    if (piv != rk)
      for (std::size_t k = 0; k < nc; ++k) std::swap(a[piv * nc + k], a[rk * nc + k]);
    for (std::size_t r = rk + 1; r < nr; ++r) {
      if (sgn(a[r * nc + c]) == 0) continue;
      mpq_class f = a[r * nc + c] / a[rk * nc + c];
      for (std::size_t k = c; k < nc; ++k)
        if (sgn(a[rk * nc + k]) != 0) a[r * nc + k] -= f * a[rk * nc + k];
    }
    ++rk;
  }
  return rk;
}

namespace {

template <class D>
Matrix hermite(const Matrix& gens) {
  using T = typename D::T;
  const std::size_t dim = gens.rows();
  // one row per generator
  std::vector<std::vector<T>> rows;
  rows.reserve(gens.cols());
  for (std::size_t j = 0; j < gens.cols(); ++j) {
    std::vector<T> r(dim);
    bool nonzero = false;
    for (std::size_t i = 0; i < dim; ++i) {
      r[i] = D::from(gens(i, j));
      nonzero = nonzero || sgn(r[i]) != 0;
    }
    if (nonzero) rows.push_back(std::move(r));
  }
  auto axpy = [&](std::vector<T>& dst, const std::vector<T>& src, const T& q, std::size_t from) {
    for (std::size_t k = from; k < dim; ++k)
      if (sgn(src[k]) != 0) dst[k] += q * src[k];
  };

  std::size_t k = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < dim && k < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      std::size_t count = 0;
      for (std::size_t r = k; r < rows.size(); ++r) {
        if (sgn(rows[r][c]) == 0) continue;
        ++count;
        if (best == rows.size() || D::smaller(rows[r][c], rows[best][c])) best = r;
      }
      if (count == 0) break;
      std::swap(rows[k], rows[best]);
      if (count == 1) break;
      for (std::size_t r = k + 1; r < rows.size(); ++r) {
        if (sgn(rows[r][c]) == 0) continue;
        T q = D::quotient(rows[r][c], rows[k][c]);
        axpy(rows[r], rows[k], -q, c);
      }
    }
    if (k >= rows.size() || sgn(rows[k][c]) == 0) continue;
    if constexpr (D::exact_division) {
      T inv = T(1) / rows[k][c];
      for (std::size_t i = c; i < dim; ++i) rows[k][i] *= inv;
    } else if (sgn(rows[k][c]) < 0) {
      for (std::size_t i = c; i < dim; ++i) rows[k][i] = -rows[k][i];
    }
    for (std::size_t r = 0; r < k; ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      T q;
      if constexpr (D::exact_division) {
        q = rows[r][c];
      } else {
        mpz_class fq;
        mpz_fdiv_q(fq.get_mpz_t(), rows[r][c].get_mpz_t(), rows[k][c].get_mpz_t());
        q = fq;
      }
      axpy(rows[r], rows[k], -q, c);
    }
    pivots.push_back(c);
    ++k;
  }

  Ring ring = D::exact_division ? Ring::rationals : Ring::integers;
  Matrix out(ring, dim, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < dim; ++i) out(i, j) = D::to(rows[j][i]);
  return out;
}

}  // namespace

Matrix hermite_basis(const Matrix& generators) {
  if (generators.ring() == Ring::integers) {
    if (!generators.is_integral()) throw PreconditionError("hermite_basis: non-integral entry over Z");
    return hermite<IntegerDomain>(generators);
  }
  return hermite<FieldDomain>(generators);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix a = m.with_ring(Ring::rationals);
  Matrix inv = Matrix::identity(Ring::rationals, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && is_zero(a(piv, c))) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    Scalar s = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || is_zero(a(r, c))) continue;
      Scalar f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero(a(c, j))) a(r, j) -= f * a(c, j);
        if (!is_zero(inv(c, j))) inv(r, j) -= f * inv(c, j);
      }
    }
  }
  if (m.ring() == Ring::integers && !inv.is_integral()) return std::nullopt;
  return inv.with_ring(m.ring());
}

}  // namespace homalg
