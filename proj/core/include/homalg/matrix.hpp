#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "homalg/scalar.hpp"

namespace homalg {

// Dense row-major matrix over the coefficient ring.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Ring ring, std::size_t rows, std::size_t cols);

  static Matrix identity(Ring ring, std::size_t n);
  static Matrix from_rows(Ring ring, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(Ring ring, const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_columns(Ring ring, std::size_t rows, const std::vector<Vector>& columns);

  Ring ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix columns(std::size_t c0, std::size_t nc) const { return block(0, c0, rows_, nc); }

  bool is_zero() const;
  bool is_integral() const;
  // Reinterprets the same entries over another ring; integral data is required
  // when moving to the integers.
  Matrix with_ring(Ring ring) const;

  Vector apply(const Vector& x) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= Scalar(-1); }
  friend bool operator==(const Matrix& a, const Matrix& b);

  static Matrix hcat(const Matrix& a, const Matrix& b);
  static Matrix vcat(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Ring ring_ = Ring::integers;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

void require_same_ring(const Matrix& a, const Matrix& b);

}  // namespace homalg
