#include <random>

#include "doctest.h"
#include "homalg/errors.hpp"
#include "homalg/resolution.hpp"
#include "homalg/sphere_models.hpp"
#include "support/oracles.hpp"

using namespace homalg;

namespace {

std::shared_ptr<const Quiver> quiver_of(int n) { return build_An(n).quiver; }

// V with every stalk changed by a random unimodular matrix; arrows conjugated
Representation scramble(std::mt19937& rng, const Representation& v) {
  std::vector<oracle::Unimodular> g;
  for (std::size_t x = 0; x < v.quiver().vertex_count(); ++x) g.push_back(oracle::random_unimodular(rng, v.rank(x), 8));
  Representation w(v.quiver_ptr(), v.ring(), v.ranks());
  for (std::size_t a = 0; a < v.quiver().arrows().size(); ++a) {
    const auto& arr = v.quiver().arrows()[a];
    w.set_arrow(a, g[arr.target].forward * v.arrow(a) * g[arr.source].inverse);
  }
  return w;
}

Representation random_rep(std::mt19937& rng, const std::shared_ptr<const Quiver>& q) {
  std::uniform_int_distribution<std::size_t> vertex(0, q->vertex_count() - 1);
  std::uniform_int_distribution<int> kind(0, 1), count(1, 3);
  std::vector<Representation> parts;
  for (int i = count(rng); i > 0; --i) {
    std::size_t x = vertex(rng);
    parts.push_back(kind(rng) ? closure_representation(q, Ring::integers, x)
                              : indecomposable_projective(q, Ring::integers, x));
  }
  return scramble(rng, direct_sum(parts));
}

// P_len -> ... -> P_0 -> V in degrees -len..1 at vertex v
ChainComplex augmented_stalk(const ProjectiveResolution& p, const Representation& v, std::size_t x) {
  ChainComplex s = p.complex.stalk_complex(x);
  ChainComplex c(v.ring());
  for (int q = -static_cast<int>(p.length); q <= 0; ++q) c.set_rank(q, s.rank(q));
  c.set_rank(1, v.rank(x));
  for (int q = -static_cast<int>(p.length); q < 0; ++q) c.set_differential(q, s.differential(q));
  c.set_differential(0, p.augmentation.components[x]);
  return c;
}

void check_resolution(const ProjectiveResolution& p, const Representation& v) {
  CHECK(validate_complex_of_reps(p.complex).empty());
  CHECK(validate_morphism(p.augmentation, p.complex.term(0), v).empty());
  for (int q : p.complex.support())
    for (const auto& b : p.complex.blocks(q)) {
      // every block is an indecomposable projective
      auto rep = *b.rep;
      bool found = false;
      for (std::size_t x = 0; x < v.quiver().vertex_count() && !found; ++x) {
        Representation px = indecomposable_projective(v.quiver_ptr(), v.ring(), x);
        found = px.ranks() == rep.ranks();
      }
      CHECK(found);
    }
  for (std::size_t x = 0; x < v.quiver().vertex_count(); ++x)
    CHECK(cohomology_ranks(augmented_stalk(p, v, x)).acyclic());
}

}  // namespace

TEST_CASE("quivers of the sphere models") {
  auto q2 = quiver_of(2);
  CHECK(q2->vertex_count() == 6);
  CHECK(q2->arrows().size() == 8);
  for (const auto& a : q2->arrows()) {
    // points under arcs, arcs under hemispheres
    const auto& s = q2->vertex_name(a.source);
    const auto& t = q2->vertex_name(a.target);
    CHECK(((s[0] == 'P' && t[0] == 'E') || (s[0] == 'E' && t[0] == 'H')));
  }
  for (int n = 3; n <= 6; ++n) {
    auto q = quiver_of(n);
    CHECK(q->vertex_count() == static_cast<std::size_t>(2 * n + 2));
    CHECK(q->arrows().size() == static_cast<std::size_t>(4 * n));
  }

  Quiver one = build_quiver(StratPoset({{"X", 0}}, {}));
  CHECK(one.vertex_count() == 1);
  CHECK(one.arrows().empty());
}

TEST_CASE("posets reject malformed relations") {
  CHECK_THROWS_AS(StratPoset({{"A", 0}, {"B", 1}}, {{"A", "B"}, {"B", "A"}}), PreconditionError);
  CHECK_THROWS_AS(StratPoset({{"A", 0}, {"A", 1}}, {}), PreconditionError);
  CHECK_THROWS_AS(StratPoset({{"A", 0}}, {{"A", "Z"}}), PreconditionError);
  // transitive relations are not covers
  StratPoset p({{"a", 0}, {"b", 1}, {"c", 2}}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}, true);
  CHECK(p.covers().size() == 2);
  CHECK(p.leq(0, 2));
  CHECK(p.acyclicity_asserted());
}

TEST_CASE("validate representation") {
  auto q = quiver_of(2);
  Representation c = constant_representation(q, Ring::integers);
  CHECK(validate_representation(c).empty());
  CHECK(validate_representation(Representation(q, Ring::integers)).empty());

  // negating P1 -> E1 breaks the square P1 -> E1 -> H1 vs P1 -> E2 -> H1
  Representation bad = c;
  auto a = q->arrow(q->vertex("P1"), q->vertex("E1"));
  REQUIRE(a);
  bad.set_arrow(*a, -Matrix::identity(Ring::integers, 1));
  auto v = validate_representation(bad);
  CHECK_FALSE(v.empty());
  bool names_p1 = false;
  for (const auto& s : v) names_p1 = names_p1 || s.find("P1") != std::string::npos;
  CHECK(names_p1);
}

TEST_CASE("hom spaces between closure representations") {
  SphereModel m = build_An(2);
  CHECK(hom_space(closure_rep(m, "H1"), closure_rep(m, "E1")).rank() == 1);
  CHECK(hom_space(closure_rep(m, "P1"), closure_rep(m, "H1")).rank() == 0);
  for (int n = 2; n <= 5; ++n) {
    SphereModel mn = build_An(n);
    Representation c = constant_rep(mn);
    HomSpace h = hom_space(c, c);
    CHECK(h.rank() == 1);
    CHECK(h.basis()[0] == identity_morphism(c));
  }
}

TEST_CASE("hom space basis morphisms commute") {
  std::mt19937 rng(41);
  auto q = quiver_of(2);
  for (int t = 0; t < 10; ++t) {
    Representation v = random_rep(rng, q), w = random_rep(rng, q);
    HomSpace h = hom_space(v, w);
    for (const auto& f : h.basis()) {
      CHECK(validate_morphism(f, v, w).empty());
      CHECK(h.coordinates(f) == unit_vector(h.rank(), &f - h.basis().data()));
    }
  }
}

TEST_CASE("direct sums") {
  auto q = quiver_of(2);
  CHECK(direct_sum(q, Ring::integers, {}).is_zero());
  SphereModel m = build_An(2);
  Representation s = direct_sum({closure_rep(m, "P1"), closure_rep(m, "P2")});
  CHECK(s.ranks() == std::vector<std::size_t>{1, 1, 0, 0, 0, 0});
  Representation cc = direct_sum({constant_rep(m), constant_rep(m)});
  for (std::size_t x = 0; x < 6; ++x) CHECK(cc.rank(x) == 2);
  CHECK(validate_representation(cc).empty());
}

TEST_CASE("indecomposable projectives") {
  auto q = quiver_of(2);
  Representation ph = indecomposable_projective(q, Ring::integers, q->vertex("H1"));
  CHECK(ph.total_rank() == 1);
  CHECK(ph.rank(q->vertex("H1")) == 1);

  Representation pp = indecomposable_projective(q, Ring::integers, q->vertex("P1"));
  for (const char* s : {"P1", "E1", "E2", "H1", "H2"}) CHECK(pp.rank(q->vertex(s)) == 1);
  CHECK(pp.rank(q->vertex("P2")) == 0);

  Representation c = constant_representation(q, Ring::integers);
  for (std::size_t x = 0; x < 6; ++x)
    CHECK(hom_space(indecomposable_projective(q, Ring::integers, x), c).rank() == 1);
  CHECK_THROWS_AS(indecomposable_projective(q, Ring::integers, 99), PreconditionError);
}

TEST_CASE("yoneda on random representations") {
  std::mt19937 rng(43);
  for (int n = 2; n <= 3; ++n) {
    auto q = quiver_of(n);
    for (int t = 0; t < 6; ++t) {
      Representation w = random_rep(rng, q);
      CHECK(validate_representation(w).empty());
      for (std::size_t x = 0; x < q->vertex_count(); ++x)
        CHECK(hom_space(indecomposable_projective(q, Ring::integers, x), w).rank() == w.rank(x));
    }
  }
}

TEST_CASE("projective resolutions") {
  auto q = quiver_of(2);
  Representation p = indecomposable_projective(q, Ring::integers, q->vertex("E1"));
  ProjectiveResolution rp = projective_resolution(p);
  CHECK(rp.length == 0);
  check_resolution(rp, p);

  SphereModel m = build_An(2);
  for (const std::string& s : m.strata()) {
    Representation v = closure_rep(m, s);
    ProjectiveResolution r = projective_resolution(v);
    CHECK(r.length <= q->vertex_count());
    check_resolution(r, v);
  }
  Representation c = constant_rep(m);
  check_resolution(projective_resolution(c), c);

  std::mt19937 rng(47);
  for (int t = 0; t < 5; ++t) {
    Representation w = random_rep(rng, q);
    check_resolution(projective_resolution(w), w);
  }

  CHECK_THROWS_AS(projective_resolution(closure_rep(m, "P1"), 0), ResolutionError);
}

TEST_CASE("ext groups") {
  SphereModel m = build_An(2);
  CHECK(ext(closure_rep(m, "H1"), closure_rep(m, "P1"), 1).is_zero());
  ExtGroup e0 = ext(closure_rep(m, "E1"), closure_rep(m, "P1"), 0);
  CHECK(e0.betti == 1);
  CHECK(e0.torsion.empty());
  CHECK_THROWS_AS(ext(closure_rep(m, "E1"), closure_rep(m, "P1"), -1), PreconditionError);

  std::mt19937 rng(53);
  for (int t = 0; t < 4; ++t) {
    Representation w = random_rep(rng, m.quiver);
    for (std::size_t x = 0; x < 6; ++x)
      for (int qd = 1; qd <= 3; ++qd)
        CHECK(ext(indecomposable_projective(m.quiver, Ring::integers, x), w, qd).is_zero());
  }
}

TEST_CASE("ext zero agrees with hom") {
  SphereModel m = build_An(2);
  std::vector<Representation> reps = {constant_rep(m), skyscraper(m, 1), skyscraper(m, 2)};
  for (const auto& s : m.strata()) reps.push_back(closure_rep(m, s));
  for (const auto& v : reps)
    for (const auto& w : reps) CHECK(ext(v, w, 0).betti == hom_space(v, w).rank());
}

TEST_CASE("higher ext between closure representations vanishes") {
  for (int n = 2; n <= 4; ++n) {
    SphereModel m = build_An(n);
    for (const auto& s : m.strata()) {
      ProjectiveResolution p = projective_resolution(*m.closure(s));
      for (const auto& t : m.strata()) {
        auto groups = ext_groups(p, m.closure(t), 4);
        for (int q = 1; q <= 4; ++q) CHECK(groups[q].is_zero());
      }
    }
  }
}

TEST_CASE("injective resolutions") {
  SphereModel m = build_An(2);
  Representation c = constant_rep(m);
  InjectiveResolution r = injective_resolution(c);
  CHECK(validate_complex_of_reps(r.complex).empty());
  auto v = validate_resolution(r.complex, std::make_shared<const Representation>(c), r.coaugmentation, 0);
  CHECK(v.empty());
  for (int q : r.complex.support())
    for (const auto& b : r.complex.blocks(q)) CHECK(b.name.rfind("I(", 0) == 0);
}
