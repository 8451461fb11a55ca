#include "homalg/matrix.hpp"

#include <sstream>

#include "homalg/errors.hpp"

namespace homalg {

std::string_view to_string(Ring ring) {
  return ring == Ring::integers ? "Z" : "Q";
}

Ring parse_ring(std::string_view text) {
  if (text == "Z" || text == "integers") return Ring::integers;
  if (text == "Q" || text == "rationals") return Ring::rationals;
  throw PreconditionError("unknown ring '" + std::string(text) + "' (expected Z or Q)");
}

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Scalar(0));
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

void require_same_ring(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring()) throw PreconditionError("matrices over different rings");
}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(Ring ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Ring ring, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr ? rows.begin()->size() : 0;
  Matrix m(ring, nr, nc);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) throw PreconditionError("ragged matrix literal");
    std::size_t c = 0;
    for (long v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

Matrix Matrix::from_rows(Ring ring, const std::vector<std::vector<Scalar>>& rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr ? rows.front().size() : 0;
  Matrix m(ring, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    if (rows[r].size() != nc) throw PreconditionError("ragged matrix rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c];
  }
  if (ring == Ring::integers && !m.is_integral())
    throw PreconditionError("non-integral entry in an integer matrix");
  return m;
}

Matrix Matrix::from_columns(Ring ring, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(ring, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw PreconditionError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw PreconditionError("block out of range");
  Matrix b(ring_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw PreconditionError("block out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!homalg::is_zero(x)) return false;
  return true;
}

bool Matrix::is_integral() const {
  for (const auto& x : data_)
    if (!homalg::is_integral(x)) return false;
  return true;
}

Matrix Matrix::with_ring(Ring ring) const {
  if (ring == Ring::integers && !is_integral())
    throw PreconditionError("matrix has non-integral entries");
  Matrix m = *this;
  m.ring_ = ring;
  return m;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw PreconditionError("vector length mismatch in apply");
  Vector y(rows_, Scalar(0));
  for (std::size_t c = 0; c < cols_; ++c) {
    if (homalg::is_zero(x[c])) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!homalg::is_zero(a)) y[r] += a * x[c];
    }
  }
  return y;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("shape mismatch in *");
  Matrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!is_zero(y)) c(i, j) += x * y;
      }
    }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw PreconditionError("row mismatch in hcat");
  Matrix m(a.ring(), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw PreconditionError("column mismatch in vcat");
  Matrix m(a.ring(), a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace homalg
