#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homalg/chain_complex.hpp"

namespace homalg {

// Sparse coordinate vector: (index, coefficient) pairs, indices increasing,
// no zero coefficients.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

// y += a * x
void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);
SparseVec operator+(const SparseVec& a, const SparseVec& b);
SparseVec operator-(const SparseVec& a, const SparseVec& b);
SparseVec scaled(const Scalar& a, const SparseVec& x);
SparseVec sparse_from_dense(const Vector& v, std::size_t offset = 0);
Vector dense_from_sparse(const SparseVec& v, std::size_t size, std::size_t offset = 0);
SparseVec single(std::size_t i, const Scalar& c = 1);

struct BasisElement {
  std::string label;
  int degree = 0;
};

// Finitely generated free dg algebra with structure constants on a graded
// basis. Basis elements are stored in nondecreasing degree order, so every
// degree occupies a contiguous index range.
class DgAlgebra {
 public:
  DgAlgebra() = default;
  DgAlgebra(Ring ring, std::vector<BasisElement> basis);

  Ring ring() const { return ring_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int degree(std::size_t i) const { return basis_.at(i).degree; }
  const std::string& label(std::size_t i) const { return basis_.at(i).label; }

  // Degrees with at least one basis element, ascending.
  std::vector<int> degrees() const;
  std::size_t degree_offset(int m) const;
  std::size_t degree_rank(int m) const;
  std::optional<std::size_t> find(const std::string& label, int degree) const;
  std::optional<std::size_t> find(const std::string& label) const;  // first match in any degree
  std::size_t index(const std::string& label, int degree) const;    // throws

  // b_i * b_j; the product must be homogeneous of degree |i| + |j|.
  void set_product(std::size_t i, std::size_t j, SparseVec v);
  const SparseVec& product(std::size_t i, std::size_t j) const;
  // Nonzero products b_i * b_j keyed by j.
  const std::map<std::size_t, SparseVec>& right_products(std::size_t i) const { return products_.at(i); }

  void set_differential(std::size_t i, SparseVec v);
  const SparseVec& differential(std::size_t i) const { return diff_.at(i); }
  bool has_zero_differential() const;

  void set_unit(SparseVec u) { unit_ = std::move(u); }
  const SparseVec& unit() const { return unit_; }

  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  SparseVec d(const SparseVec& a) const;
  // degree of a nonzero homogeneous element; nullopt for zero, throws if mixed
  std::optional<int> degree_of(const SparseVec& a) const;

  // Differential d^m as a matrix in degree-local coordinates.
  Matrix differential_matrix(int m) const;
  ChainComplex complex() const;

  std::string format(const SparseVec& v) const;

 private:
  Ring ring_ = Ring::integers;
  std::vector<BasisElement> basis_;
  std::vector<std::map<std::size_t, SparseVec>> products_;
  std::vector<SparseVec> diff_;
  SparseVec unit_;
};

// Checks degree homogeneity, d^2 = 0, the Leibniz rule, associativity and the
// unit laws over every basis pair/triple that can give a nonzero term.
std::vector<std::string> validate_dg_algebra(const DgAlgebra& a);

}  // namespace homalg
