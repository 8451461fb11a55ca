#include "homalg/resolution.hpp"

#include "homalg/errors.hpp"
#include "homalg/hom_complex.hpp"

namespace homalg {

namespace {

struct Cover {
  std::vector<Block> blocks;
  RepMorphism map;  // sum of blocks -> V
};

// Generators of V(x) modulo everything arriving from below.
Cover projective_cover(const Representation& v, const std::vector<RepresentationPtr>& projectives) {
  const Quiver& q = v.quiver();
  const std::size_t n = q.vertex_count();
  const Ring ring = v.ring();
  std::vector<std::pair<std::size_t, Vector>> gens;  // (vertex, element of V(x))
  for (std::size_t x = 0; x < n; ++x) {
    if (v.rank(x) == 0) continue;
    Matrix incoming(ring, v.rank(x), 0);
    for (std::size_t a : q.incoming(x)) incoming = Matrix::hcat(incoming, v.arrow(a));
    Subquotient top = subquotient(Matrix::identity(ring, v.rank(x)), incoming);
    for (std::size_t c = 0; c < top.torsion_lift().cols(); ++c) gens.emplace_back(x, top.torsion_lift().column(c));
    for (std::size_t c = 0; c < top.lift().cols(); ++c) gens.emplace_back(x, top.lift().column(c));
  }
  Cover cover;
  for (const auto& [x, g] : gens) cover.blocks.push_back({"P(" + q.vertex_name(x) + ")", projectives[x]});
  for (std::size_t y = 0; y < n; ++y) {
    std::vector<Vector> cols;
    for (const auto& [x, g] : gens)
      if (q.reaches(x, y)) cols.push_back(v.path_map(x, y).apply(g));
    cover.map.components.push_back(Matrix::from_columns(ring, v.rank(y), cols));
  }
  return cover;
}

}  // namespace

ProjectiveResolution projective_resolution(const Representation& v, std::optional<std::size_t> max_len) {
  auto bad = validate_representation(v);
  if (!bad.empty()) throw PreconditionError("projective_resolution: " + bad.front());
  const auto& qp = v.quiver_ptr();
  const std::size_t n = qp->vertex_count();
  const std::size_t cap = max_len.value_or(n + 2);
  std::vector<RepresentationPtr> projectives;
  for (std::size_t x = 0; x < n; ++x)
    projectives.push_back(std::make_shared<const Representation>(indecomposable_projective(qp, v.ring(), x)));

  ProjectiveResolution res{ComplexOfReps(qp, v.ring()), {}, 0};
  Representation current = v;
  // maps the current module into the previous term (identity-free start)
  std::optional<RepMorphism> into_previous;
  for (std::size_t k = 0;; ++k) {
    if (current.is_zero()) {
      if (k == 0) res.augmentation = zero_morphism(Representation(qp, v.ring()), v);
      res.length = k == 0 ? 0 : k - 1;
      return res;
    }
    if (k > cap) throw ResolutionError("resolution did not terminate within max_len = " + std::to_string(cap));
    Cover cover = projective_cover(current, projectives);
    const int deg = -static_cast<int>(k);
    res.complex.set_term(deg, cover.blocks);
    Representation term = res.complex.term(deg);
    if (k == 0) {
      res.augmentation = cover.map;
    } else {
      // P_k -> K_{k-1} -> P_{k-1}, cut into blocks
      RepMorphism d = compose(*into_previous, cover.map);
      for (std::size_t t = 0; t < res.complex.blocks(deg + 1).size(); ++t)
        for (std::size_t s = 0; s < cover.blocks.size(); ++s) {
          RepMorphism b;
          for (std::size_t y = 0; y < n; ++y) {
            auto to = res.complex.block_offsets(deg + 1, y);
            auto so = res.complex.block_offsets(deg, y);
            b.components.push_back(d.components[y].block(to[t], so[s], to[t + 1] - to[t], so[s + 1] - so[s]));
          }
          res.complex.set_differential_block(deg, t, s, std::move(b));
        }
    }
    KernelData ker = kernel(cover.map, term, current);
    into_previous = ker.inclusion;
    current = ker.kernel;
  }
}

namespace {

Matrix transposed(const Matrix& m) { return m.transpose(); }

RepMorphism transposed(const RepMorphism& f) {
  RepMorphism out;
  for (const auto& c : f.components) out.components.push_back(c.transpose());
  return out;
}

std::string block_vertex(const std::string& name) { return name.substr(2, name.size() - 3); }

}  // namespace

InjectiveResolution injective_resolution(const Representation& v, std::optional<std::size_t> max_len) {
  auto bad = validate_representation(v);
  if (!bad.empty()) throw PreconditionError("injective_resolution: " + bad.front());
  const Quiver& q = v.quiver();
  const StratPoset& p = q.poset();
  std::vector<std::pair<std::string, std::string>> reversed;
  for (const auto& [lo, hi] : p.covers()) reversed.emplace_back(p.stratum(hi).name, p.stratum(lo).name);
  auto op = std::make_shared<const Quiver>(build_quiver(StratPoset(p.strata(), reversed, p.acyclicity_asserted())));

  Representation dual(op, v.ring(), v.ranks());
  for (std::size_t a = 0; a < op->arrows().size(); ++a) {
    const auto& arr = op->arrows()[a];
    dual.set_arrow(a, transposed(v.arrow(*q.arrow(arr.target, arr.source))));
  }
  ProjectiveResolution pr = projective_resolution(dual, max_len);

  std::vector<RepresentationPtr> closures(q.vertex_count());
  auto closure = [&](std::size_t x) {
    if (!closures[x])
      closures[x] = std::make_shared<const Representation>(closure_representation(v.quiver_ptr(), v.ring(), x));
    return closures[x];
  };
  InjectiveResolution out{ComplexOfReps(v.quiver_ptr(), v.ring()), transposed(pr.augmentation), pr.length};
  for (int deg : pr.complex.support()) {
    std::vector<Block> blocks;
    for (const auto& b : pr.complex.blocks(deg)) {
      std::string x = block_vertex(b.name);
      blocks.push_back({"I(" + x + ")", closure(q.vertex(x))});
    }
    out.complex.set_term(-deg, std::move(blocks));
  }
  for (int deg : pr.complex.support())
    for (const auto& [key, f] : pr.complex.differential_blocks(deg))
      out.complex.set_differential_block(-deg - 1, key.second, key.first, transposed(f));
  return out;
}

std::vector<ExtGroup> ext_groups(const ProjectiveResolution& p, const RepresentationPtr& w, int qmax) {
  LabeledHomComplex h = hom_complex(p.complex, stalk({"W", w}, 0));
  CohomologyRanks r = cohomology_ranks(h.complex);
  std::vector<ExtGroup> out;
  for (int q = 0; q <= qmax; ++q) {
    ExtGroup g;
    if (r.betti.count(q)) g.betti = r.betti.at(q);
    if (r.torsion.count(q)) g.torsion = r.torsion.at(q);
    out.push_back(std::move(g));
  }
  return out;
}

ExtGroup ext(const Representation& v, const Representation& w, int q) {
  if (q < 0) throw PreconditionError("ext: negative degree");
  auto p = projective_resolution(v);
  return ext_groups(p, std::make_shared<const Representation>(w), q).back();
}

}  // namespace homalg
