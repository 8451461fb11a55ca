#include <random>

#include "doctest.h"
#include "homalg/chain_complex.hpp"
#include "homalg/errors.hpp"
#include "homalg/lattice.hpp"
#include "homalg/smith.hpp"
#include "support/oracles.hpp"

using namespace homalg;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("scalars and rings") {
  CHECK(parse_ring("Z") == Ring::integers);
  CHECK(parse_ring("rationals") == Ring::rationals);
  CHECK_THROWS(parse_ring("R"));
  Scalar x(6, -4);
  x.canonicalize();
  CHECK(x.get_num() == -3);
  CHECK(x.get_den() == 2);
  // no fixed-width overflow
  Scalar big("123456789012345678901234567890");
  CHECK(Scalar(big * big).get_str() == "15241578753238836750495351562536198787501905199875019052100");
}

TEST_CASE("smith normal form of the identity") {
  Matrix id = Matrix::identity(Ring::integers, 2);
  SmithForm s = smith_normal_form(id);
  CHECK(s.diagonal == id);
  CHECK(s.rank == 2);
  CHECK(s.left * id * s.right == s.diagonal);
}

TEST_CASE("smith normal form of a 2x2 integer matrix") {
  Matrix m = Matrix::from_rows(Ring::integers, {{2, 4}, {6, 8}});
  SmithForm s = smith_normal_form(m);
  CHECK(s.left * m * s.right == s.diagonal);
  // d1 is the gcd of the entries and d1 * d2 = |det|
  CHECK(s.diagonal(0, 0) == 2);
  CHECK(s.diagonal(0, 0) * s.diagonal(1, 1) == abs(oracle::determinant(m)));
  CHECK(s.diagonal(1, 1) == 4);
  CHECK(s.invariant_factors() == std::vector<Scalar>{2, 4});
  CHECK(s.left * s.left_inverse == Matrix::identity(Ring::integers, 2));
  CHECK(s.right * s.right_inverse == Matrix::identity(Ring::integers, 2));
}

TEST_CASE("smith normal form of a zero matrix") {
  Matrix z(Ring::integers, 3, 3);
  SmithForm s = smith_normal_form(z);
  CHECK(s.diagonal.is_zero());
  CHECK(s.rank == 0);
  CHECK(invariant_factors(z).empty());
}

TEST_CASE("smith transforms are only computed on request") {
  Matrix m = Matrix::from_rows(Ring::integers, {{2, 4}, {6, 8}});
  SmithForm s = smith_normal_form(m, smith_left);
  CHECK(s.left.rows() == 2);
  CHECK(s.right.rows() == 0);
  CHECK(invariant_factors(m) == std::vector<Scalar>{2, 4});
}

TEST_CASE("smith over the rationals has unit factors") {
  Matrix m = Matrix::from_rows(Ring::rationals, {{2, 4}, {6, 8}});
  CHECK(invariant_factors(m) == std::vector<Scalar>{1, 1});
}

TEST_CASE("kernel basis examples") {
  CHECK(kernel_basis(Matrix::identity(Ring::integers, 3)).cols() == 0);

  Matrix k = kernel_basis(Matrix::from_rows(Ring::integers, {{1, -1}}));
  REQUIRE(k.cols() == 1);
  CHECK(abs(k(0, 0)) == 1);
  CHECK(k(0, 0) == k(1, 0));

  // the primitive solution of 2x - 4y = 0 found by enumeration
  Matrix m = Matrix::from_rows(Ring::integers, {{2, -4}});
  Vector primitive;
  for (long y = 1; y <= 5 && primitive.empty(); ++y)
    for (long x = -10; x <= 10; ++x)
      if (2 * x - 4 * y == 0) {
        primitive = vec({x, y});
        break;
      }
  k = kernel_basis(m);
  REQUIRE(k.cols() == 1);
  Vector negated = primitive;
  for (auto& x : negated) x = -x;
  Vector c = k.column(0);
  CHECK((c == primitive || c == negated));
  CHECK(c == vec({2, 1}));
}

TEST_CASE("kernel bases over Z are saturated") {
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    Matrix m = oracle::random_matrix(rng, 3, 5, 6);
    for (std::size_t j = 0; j < 5; ++j) m(2, j) = m(0, j) + 2 * m(1, j);
    Matrix k = kernel_basis(m);
    CHECK((m * k).is_zero());
    CHECK(k.cols() + oracle::rank_q(m) == m.cols());
    // a lattice basis of a saturated sublattice has coprime maximal minors
    CHECK(oracle::minor_gcd(k, k.cols()) == 1);
  }
}

TEST_CASE("solve in image") {
  Matrix id = Matrix::identity(Ring::integers, 3);
  auto x = solve_in_image(id, vec({4, -1, 7}));
  REQUIRE(x);
  CHECK(*x == vec({4, -1, 7}));

  CHECK_FALSE(solve_in_image(Matrix::from_rows(Ring::integers, {{2}}), vec({3})).has_value());

  auto q = solve_in_image(Matrix::from_rows(Ring::rationals, {{2}}), vec({3}));
  REQUIRE(q);
  CHECK((*q)[0] == Scalar(3, 2));
}

TEST_CASE("solve multiplies back exactly") {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    Matrix m = oracle::random_matrix(rng, 4, 6, 5);
    Matrix y = oracle::random_matrix(rng, 6, 1, 3);
    Vector b = m.apply(y.column(0));
    auto x = solve_in_image(m, b);
    REQUIRE(x);
    CHECK(m.apply(*x) == b);
  }
}

TEST_CASE("lattice solver map") {
  Matrix m = Matrix::from_rows(Ring::integers, {{2, 0}, {0, 3}, {2, 3}});
  LatticeSolver s(m);
  CHECK(s.rank() == 2);
  CHECK(s.contains(vec({2, 3, 5})));
  CHECK_FALSE(s.contains(vec({1, 0, 1})));
  Vector b = vec({4, -3, 1});
  CHECK(s.solution_map().apply(b) == *s.solve(b));
}

TEST_CASE("subquotient examples") {
  Matrix k1 = Matrix::from_rows(Ring::integers, {{1}});
  Matrix none(Ring::integers, 1, 0);
  Subquotient a = subquotient(k1, none);
  CHECK(a.betti() == 1);
  CHECK(a.torsion().empty());

  Subquotient b = subquotient(k1, Matrix::from_rows(Ring::integers, {{2}}));
  CHECK(b.betti() == 0);
  CHECK(b.torsion() == std::vector<Scalar>{2});

  Subquotient c = subquotient(k1.with_ring(Ring::rationals), Matrix::from_rows(Ring::rationals, {{2}}));
  CHECK(c.is_zero());

  CHECK_THROWS_AS(subquotient(Matrix::from_rows(Ring::integers, {{2}}), Matrix::from_rows(Ring::integers, {{1}})),
                  PreconditionError);
}

TEST_CASE("subquotient coordinates") {
  // kernel = Z^3, image spanned by (1, 1, 0) and (0, 0, 2)
  Matrix k = Matrix::identity(Ring::integers, 3);
  Matrix im = Matrix::from_rows(Ring::integers, {{1, 0}, {1, 0}, {0, 2}});
  Subquotient s = subquotient(k, im);
  CHECK(s.betti() == 1);
  CHECK(s.torsion() == std::vector<Scalar>{2});
  for (std::size_t i = 0; i < s.betti(); ++i) {
    auto c = s.coordinates(s.lift().column(i));
    CHECK(c.free == unit_vector(s.betti(), i));
  }
  auto z = s.coordinates(im.column(0));
  CHECK(is_zero(z.free));
  CHECK(is_zero(z.torsion));
  CHECK(s.free_coordinate_map().apply(s.lift().column(0)) == unit_vector(1, 0));

  // a vector outside the kernel span is not a cocycle
  Subquotient t = subquotient(Matrix::from_rows(Ring::integers, {{1}, {0}}), Matrix(Ring::integers, 2, 0));
  CHECK_THROWS_AS(t.coordinates(vec({0, 1})), NotACocycle);
}

TEST_CASE("Z and Q subquotients agree without torsion") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto kc = oracle::random_known_complex(rng, 3);
    bool torsion_free = true;
    for (const auto& tor : kc.torsion) torsion_free = torsion_free && tor.empty();
    auto hz = cohomology_ranks(kc.complex);
    ChainComplex q(Ring::rationals);
    for (int d = 0; d <= 3; ++d) q.set_rank(d, kc.complex.rank(d));
    for (int d = 0; d < 3; ++d) q.set_differential(d, kc.complex.differential(d).with_ring(Ring::rationals));
    auto hq = cohomology_ranks(q);
    if (torsion_free) CHECK(hz.betti == hq.betti);
    for (int d = 0; d <= 3; ++d) CHECK(hq.betti[d] == static_cast<std::size_t>(oracle::betti_q(q, d)));
  }
}

TEST_CASE("inverse and hermite basis") {
  Matrix m = Matrix::from_rows(Ring::integers, {{2, 1}, {1, 1}});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == Matrix::identity(Ring::integers, 2));
  CHECK_FALSE(inverse(Matrix::from_rows(Ring::integers, {{2, 0}, {0, 1}})).has_value());
  CHECK(inverse(Matrix::from_rows(Ring::rationals, {{2, 0}, {0, 1}})).has_value());

  Matrix h = hermite_basis(Matrix::from_rows(Ring::integers, {{2, 4, 6}, {1, 3, 5}}));
  CHECK(h.cols() == 2);
  CHECK(oracle::minor_gcd(h, 2) == 2);
}
