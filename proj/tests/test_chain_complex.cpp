#include <random>

#include "doctest.h"
#include "homalg/chain_complex.hpp"
#include "homalg/errors.hpp"
#include "homalg/sphere_models.hpp"
#include "support/oracles.hpp"

using namespace homalg;

namespace {

ChainComplex single(int degree, Ring ring = Ring::integers) {
  ChainComplex c(ring);
  c.set_rank(degree, 1);
  return c;
}

ChainComplex arrow(long t, Ring ring = Ring::integers) {
  ChainComplex c(ring);
  c.set_rank(0, 1);
  c.set_rank(1, 1);
  c.set_differential(0, Matrix::from_rows(ring, {{t}}));
  return c;
}

// C --G--> C' where C' is C with every degree conjugated by a unimodular G_q
ChainMap random_isomorphism(std::mt19937& rng, const ChainComplex& c) {
  std::map<int, oracle::Unimodular> g;
  for (int q : c.support()) g[q] = oracle::random_unimodular(rng, c.rank(q), 10);
  ChainComplex t(c.ring());
  for (int q : c.support()) t.set_rank(q, c.rank(q));
  for (int q : c.support())
    if (g.count(q + 1)) t.set_differential(q, g[q + 1].forward * c.differential(q) * g[q].inverse);
  ChainMap f{c, t, {}};
  for (int q : c.support()) f.components[q] = g[q].forward;
  return f;
}

// C --> C (+) (Z --1--> Z in degrees 0, 1)
ChainMap include_into_acyclic_sum(const ChainComplex& c) {
  ChainComplex t(c.ring());
  int lo = std::min(0, c.min_degree()), hi = std::max(1, c.max_degree());
  for (int q = lo; q <= hi; ++q) t.set_rank(q, c.rank(q) + (q == 0 || q == 1 ? 1 : 0));
  for (int q = lo; q < hi; ++q) {
    Matrix d(c.ring(), t.rank(q + 1), t.rank(q));
    d.set_block(0, 0, c.differential(q));
    if (q == 0) d(c.rank(1), c.rank(0)) = 1;
    t.set_differential(q, d);
  }
  ChainMap f{c, t, {}};
  for (int q = lo; q <= hi; ++q) {
    Matrix m(c.ring(), t.rank(q), c.rank(q));
    m.set_block(0, 0, Matrix::identity(c.ring(), c.rank(q)));
    f.components[q] = m;
  }
  return f;
}

}  // namespace

TEST_CASE("validate complex") {
  CHECK(validate_complex(ChainComplex()).empty());

  ChainComplex c;
  for (int q = 0; q < 3; ++q) c.set_rank(q, 1);
  c.set_differential(0, Matrix::identity(Ring::integers, 1));
  c.set_differential(1, Matrix::identity(Ring::integers, 1));
  auto v = validate_complex(c);
  REQUIRE(v.size() == 1);
  CHECK(v[0].degree == 0);
  CHECK_THROWS_AS(cohomology(c), PreconditionError);

  SphereModel m = build_An(2);
  CHECK(validate_complex(end_algebra(resolution_trivial(m))->complex()).empty());

  CHECK_THROWS(c.set_differential(0, Matrix(Ring::integers, 2, 1)));
}

TEST_CASE("cohomology of multiplication by two") {
  CohomologyProfile h = cohomology(arrow(2));
  CHECK(h.betti(0) == 0);
  CHECK(h.torsion(0).empty());
  CHECK(h.betti(1) == 0);
  CHECK(h.torsion(1) == std::vector<Scalar>{2});

  CohomologyProfile hq = cohomology(arrow(2, Ring::rationals));
  CHECK(hq.is_zero());
}

TEST_CASE("cohomology of the two-point endomorphism complex") {
  SphereModel m = build_An(2);
  ChainComplex e = end_algebra(resolution_trivial(m))->complex();
  CohomologyProfile h = cohomology(e);
  CHECK(h.betti(0) == 1);
  CHECK(h.betti(1) == 0);
  CHECK(h.betti(2) == 1);
  for (int q = 0; q <= 2; ++q) CHECK(h.torsion(q).empty());
  for (const auto& [q, g] : h.groups)
    for (std::size_t i = 0; i < g.lift().cols(); ++i) CHECK(is_zero(e.differential(q).apply(g.lift().column(i))));
}

TEST_CASE("cohomology of the three-point endomorphism complex") {
  ChainComplex e = end_algebra(resolution_n_points(build_An(3)))->complex();
  CohomologyRanks h = cohomology_ranks(e);
  CHECK(h.betti[-1] == 0);
  CHECK(h.betti[0] == 4);
  CHECK(h.betti[1] == 6);
  CHECK(h.betti[2] == 1);
}

TEST_CASE("cohomology of random complexes matches their construction") {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    auto kc = oracle::random_known_complex(rng, 4);
    CHECK(validate_complex(kc.complex).empty());
    CohomologyProfile h = cohomology(kc.complex);
    CohomologyRanks r = cohomology_ranks(kc.complex);
    for (int q = 0; q <= 4; ++q) {
      CHECK(h.betti(q) == static_cast<std::size_t>(kc.betti[q]));
      CHECK(r.betti[q] == static_cast<std::size_t>(kc.betti[q]));
      std::vector<Scalar> expected(kc.torsion[q].begin(), kc.torsion[q].end());
      CHECK(h.torsion(q) == expected);
      CHECK(r.torsion[q] == expected);
      auto g = h.groups.find(q);
      if (g == h.groups.end()) continue;
      for (std::size_t i = 0; i < g->second.lift().cols(); ++i)
        CHECK(is_zero(kc.complex.differential(q).apply(g->second.lift().column(i))));
    }
  }
}

TEST_CASE("mapping cones") {
  ChainComplex z = single(0);
  ChainComplex cone = mapping_cone(identity_map(z));
  CHECK(cone.rank(-1) == 1);
  CHECK(cone.rank(0) == 1);
  CHECK(cohomology_ranks(cone).acyclic());

  ChainMap zero{z, z, {{0, Matrix(Ring::integers, 1, 1)}}};
  CohomologyRanks h = cohomology_ranks(mapping_cone(zero));
  CHECK(h.betti[-1] == 1);
  CHECK(h.betti[0] == 1);

  ChainMap bad{z, arrow(1), {{0, Matrix::identity(Ring::integers, 1)}}};
  CHECK_FALSE(validate_chain_map(bad).empty());
  CHECK_THROWS_AS(mapping_cone(bad), PreconditionError);
}

TEST_CASE("augmentation of the two-point resolution has acyclic cones") {
  SphereModel m = build_An(2);
  ModelResolution r = resolution_trivial(m);
  const ResolutionTarget& t = r.targets.at(0);
  for (std::size_t v = 0; v < m.quiver->vertex_count(); ++v) {
    ChainComplex source(Ring::integers);
    source.set_rank(t.degree, t.rep->rank(v));
    ChainMap f{source, r.complex.stalk_complex(v), {{t.degree, t.augmentation.components[v]}}};
    CHECK(validate_chain_map(f).empty());
    CHECK(cohomology_ranks(mapping_cone(f)).acyclic());
  }
}

TEST_CASE("quasi-isomorphism detection") {
  ChainComplex z = single(0);
  CHECK(is_quasi_iso(identity_map(z)).quasi_isomorphism);
  ChainMap zero{z, z, {{0, Matrix(Ring::integers, 1, 1)}}};
  QuasiIsoReport r = is_quasi_iso(zero);
  CHECK_FALSE(r.quasi_isomorphism);
  CHECK_FALSE(r.cone_betti.empty());

  // multiplication by 2 is a rational but not an integral quasi-isomorphism
  ChainMap two{z, z, {{0, Matrix::from_rows(Ring::integers, {{2}})}}};
  CHECK_FALSE(is_quasi_iso(two).quasi_isomorphism);
  ChainComplex zq = single(0, Ring::rationals);
  ChainMap twoq{zq, zq, {{0, Matrix::from_rows(Ring::rationals, {{2}})}}};
  CHECK(is_quasi_iso(twoq).quasi_isomorphism);

  DgAlgebraPtr e = end_algebra(resolution_trivial(build_An(2)));
  Witness w = formality_witness_trivial(e);
  CHECK(is_quasi_iso(w.map.chain_map()).quasi_isomorphism);
}

TEST_CASE("quasi-isomorphisms are closed under composition") {
  std::mt19937 rng(17);
  for (int t = 0; t < 15; ++t) {
    auto kc = oracle::random_known_complex(rng, 3);
    if (kc.complex.is_zero()) continue;
    ChainMap f = random_isomorphism(rng, kc.complex);
    ChainMap g = include_into_acyclic_sum(f.target);
    CHECK(validate_chain_map(f).empty());
    CHECK(validate_chain_map(g).empty());
    CHECK(is_quasi_iso(f).quasi_isomorphism);
    CHECK(is_quasi_iso(g).quasi_isomorphism);
    ChainMap gf = compose(g, f);
    CHECK(validate_chain_map(gf).empty());
    CHECK(is_quasi_iso(gf).quasi_isomorphism);
  }
}

TEST_CASE("shift") {
  std::mt19937 rng(23);
  auto kc = oracle::random_known_complex(rng, 3);
  ChainComplex s0 = shift(kc.complex, 0);
  for (int q = 0; q <= 3; ++q) {
    CHECK(s0.rank(q) == kc.complex.rank(q));
    CHECK(s0.differential(q) == kc.complex.differential(q));
  }

  ChainComplex s = shift(single(0), 1);
  CHECK(s.rank(-1) == 1);
  CHECK(s.rank(0) == 0);

  for (int k = -2; k <= 2; ++k) {
    ChainComplex c = shift(kc.complex, k);
    CHECK(validate_complex(c).empty());
    CohomologyRanks a = cohomology_ranks(kc.complex), b = cohomology_ranks(c);
    for (int q = 0; q <= 3; ++q) {
      CHECK(b.betti[q - k] == a.betti[q]);
      CHECK(b.torsion[q - k] == a.torsion[q]);
    }
    CHECK(c.differential(-k) == (k % 2 == 0 ? kc.complex.differential(0) : -kc.complex.differential(0)));
  }
}

TEST_CASE("euler characteristic") {
  std::mt19937 rng(29);
  for (int t = 0; t < 20; ++t) {
    auto kc = oracle::random_known_complex(rng, 4);
    long chi = 0;
    for (int q = 0; q <= 4; ++q) chi += (q % 2 == 0 ? 1 : -1) * kc.betti[q];
    CHECK(euler_characteristic(kc.complex) == chi);
  }
}
