#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "homalg/chain_complex.hpp"
#include "homalg/matrix.hpp"

// Reference computations written without the library's Smith and lattice
// code, used to cross-check it.
namespace oracle {

using homalg::ChainComplex;
using homalg::Matrix;
using homalg::Scalar;

// Fraction-free (Bareiss) determinant of a square matrix.
Scalar determinant(const Matrix& m);

// Rank over the rationals by plain Gaussian elimination.
std::size_t rank_q(const Matrix& m);

// gcd of all k x k minors; 0 when every minor vanishes.
Scalar minor_gcd(const Matrix& m, std::size_t k);

// Betti numbers over the rationals from ranks of the differentials.
long betti_q(const ChainComplex& c, int q);

// Random integer matrix with entries in [-bound, bound].
Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound);

// Random unimodular matrix and its inverse, as products of elementary
// operations.
struct Unimodular {
  Matrix forward;
  Matrix inverse;
};
Unimodular random_unimodular(std::mt19937& rng, std::size_t n, int steps);

// Integer complex with known cohomology: a direct sum of copies of Z and of
// Z --t--> Z pieces, conjugated by random unimodular changes of basis.
struct KnownComplex {
  ChainComplex complex;
  std::vector<long> betti;                  // indexed by degree 0..top
  std::vector<std::vector<long>> torsion;   // sorted factors > 1 per degree
};
KnownComplex random_known_complex(std::mt19937& rng, int top_degree);

}  // namespace oracle
