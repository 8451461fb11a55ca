#include "homalg/sphere_models.hpp"

#include <regex>

#include "homalg/errors.hpp"

namespace homalg {

namespace {

std::string name(char kind, int i) { return std::string(1, kind) + std::to_string(i); }

// 1-based index mod n
int wrap(int i, int n) { return ((i - 1) % n + n) % n + 1; }

std::string pair_index(int j, int i) {
  if (j < 10 && i < 10) return "{" + std::to_string(j) + std::to_string(i) + "}";
  return "{" + std::to_string(j) + "," + std::to_string(i) + "}";
}

Block block(const SphereModel& m, const std::string& s) { return {s, m.closure(s)}; }

// Map from the constant representation into the sum of the given blocks,
// 1 in every stalk where the block is nonzero.
RepMorphism constant_into(const SphereModel& m, const std::vector<Block>& blocks) {
  RepMorphism f;
  for (std::size_t v = 0; v < m.quiver->vertex_count(); ++v) {
    std::size_t rows = 0;
    for (const auto& b : blocks) rows += b.rep->rank(v);
    Matrix c(m.ring, rows, 1);
    for (std::size_t r = 0; r < rows; ++r) c(r, 0) = 1;
    f.components.push_back(std::move(c));
  }
  return f;
}

// Map from W_i into the sum of blocks, identity onto the block named P_i.
RepMorphism skyscraper_into(const SphereModel& m, int i, const std::vector<Block>& blocks) {
  const std::size_t p = m.vertex(name('P', i));
  RepMorphism f;
  for (std::size_t v = 0; v < m.quiver->vertex_count(); ++v) {
    std::size_t rows = 0, at = 0;
    bool found = false;
    for (const auto& b : blocks) {
      if (!found && b.name == name('P', i)) {
        at = rows;
        found = true;
      }
      rows += b.rep->rank(v);
    }
    Matrix c(m.ring, rows, v == p ? 1 : 0);
    if (v == p) c(at, 0) = 1;
    f.components.push_back(std::move(c));
  }
  return f;
}

// d from the hemisphere blocks to the arc blocks and from the arc blocks to
// the point blocks. Block (E_i, H_1) = he_{1i}, (E_i, H_2) = -he_{2i},
// (P_i, E_i) = e_{ii}, (P_i, E_{i+1}) = -e_{(i+1)i}.
void add_differentials(const SphereModel& m, ComplexOfReps& j, int deg_h, int deg_e) {
  const int n = m.n;
  const auto& eb = j.blocks(deg_e);
  const auto& pb = j.blocks(deg_e + 1);
  auto find = [](const std::vector<Block>& bs, const std::string& s) {
    for (std::size_t k = 0; k < bs.size(); ++k)
      if (bs[k].name == s) return k;
    throw Error("block " + s + " not found");
  };
  for (int i = 1; i <= n; ++i) {
    std::size_t e = find(eb, name('E', i));
    j.set_differential_block(deg_h, e, 0, canonical_morphism(m, "H1", name('E', i)));
    j.set_differential_block(deg_h, e, 1, Scalar(-1) * canonical_morphism(m, "H2", name('E', i)));
  }
  for (int i = 1; i <= n; ++i) {
    std::size_t p = find(pb, name('P', i));
    std::size_t ei = find(eb, name('E', i));
    std::size_t en = find(eb, name('E', wrap(i + 1, n)));
    j.set_differential_block(deg_e, p, ei, canonical_morphism(m, name('E', i), name('P', i)));
    j.set_differential_block(deg_e, p, en,
                             Scalar(-1) * canonical_morphism(m, name('E', wrap(i + 1, n)), name('P', i)));
  }
}

}  // namespace

RepresentationPtr SphereModel::closure(const std::string& stratum) const {
  auto it = closures.find(stratum);
  if (it == closures.end()) throw PreconditionError("unknown stratum '" + stratum + "'");
  return it->second;
}

std::vector<std::string> SphereModel::strata() const {
  std::vector<std::string> out;
  for (const auto& s : poset.strata()) out.push_back(s.name);
  return out;
}

SphereModel build_An(int n, Ring ring) {
  if (n < 2) throw PreconditionError("the sphere model needs n >= 2 points, got " + std::to_string(n));
  std::vector<Stratum> strata;
  for (int i = 1; i <= n; ++i) strata.push_back({name('P', i), 0});
  for (int i = 1; i <= n; ++i) strata.push_back({name('E', i), 1});
  strata.push_back({"H1", 2});
  strata.push_back({"H2", 2});
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 1; i <= n; ++i) {
    rel.emplace_back(name('P', wrap(i - 1, n)), name('E', i));
    rel.emplace_back(name('P', i), name('E', i));
    rel.emplace_back(name('E', i), "H1");
    rel.emplace_back(name('E', i), "H2");
  }
  SphereModel m;
  m.n = n;
  m.ring = ring;
  m.poset = StratPoset(strata, rel, true);
  m.quiver = std::make_shared<const Quiver>(build_quiver(m.poset));
  for (std::size_t v = 0; v < m.quiver->vertex_count(); ++v)
    m.closures[m.quiver->vertex_name(v)] =
        std::make_shared<const Representation>(closure_representation(m.quiver, ring, v));
  return m;
}

Representation constant_rep(const SphereModel& m) { return constant_representation(m.quiver, m.ring); }

Representation skyscraper(const SphereModel& m, int i) {
  if (i < 1 || i > m.n) throw PreconditionError("skyscraper: no point P" + std::to_string(i));
  return *m.closure(name('P', i));
}

Representation closure_rep(const SphereModel& m, const std::string& stratum) { return *m.closure(stratum); }

RepMorphism canonical_morphism(const SphereModel& m, const std::string& s, const std::string& t) {
  HomSpace h = hom_space(*m.closure(s), *m.closure(t));
  if (h.rank() != 1)
    throw Error("Hom(I_" + s + ", I_" + t + ") has rank " + std::to_string(h.rank()) + ", expected 1");
  return h.basis()[0];
}

std::string sphere_block_label(const std::string& source, const std::string& target, std::size_t k,
                               std::size_t rank) {
  static const std::regex pat("([HEP])([0-9]+)");
  std::smatch a, b;
  if (rank != 1 || !std::regex_match(source, a, pat) || !std::regex_match(target, b, pat))
    return generic_block_label(source, target, k, rank);
  const char s = a[1].str()[0], t = b[1].str()[0];
  const int j = std::stoi(a[2].str()), i = std::stoi(b[2].str());
  if (source == target) return std::string(1, static_cast<char>(std::tolower(s))) + a[2].str();
  if (s == 'H' && t == 'E') return "he_" + pair_index(j, i);
  if (s == 'H' && t == 'P') return "hp_" + pair_index(j, i);
  if (s == 'E' && t == 'P') return "e_" + pair_index(j, i);
  return generic_block_label(source, target, k, rank);
}

ModelResolution resolution_trivial(const SphereModel& m) {
  if (m.n != 2) throw PreconditionError("the trivial stratification uses the two-point model");
  ModelResolution r{ComplexOfReps(m.quiver, m.ring), {}};
  auto& j = r.complex;
  j.set_term(0, {block(m, "H1"), block(m, "H2")});
  j.set_term(1, {block(m, "E1"), block(m, "E2")});
  j.set_term(2, {block(m, "P1"), block(m, "P2")});
  add_differentials(m, j, 0, 1);
  auto c = std::make_shared<const Representation>(constant_rep(m));
  r.targets.push_back({0, c, constant_into(m, j.blocks(0))});
  return r;
}

ModelResolution resolution_one_point(const SphereModel& m) {
  if (m.n != 2) throw PreconditionError("the one-point stratification uses the two-point model");
  ModelResolution r{ComplexOfReps(m.quiver, m.ring), {}};
  auto& j = r.complex;
  j.set_term(-1, {block(m, "H1"), block(m, "H2")});
  j.set_term(0, {block(m, "E1"), block(m, "E2"), block(m, "P1")});
  j.set_term(1, {block(m, "P1"), block(m, "P2")});
  add_differentials(m, j, -1, 0);
  auto c = std::make_shared<const Representation>(constant_rep(m));
  r.targets.push_back({-1, c, constant_into(m, j.blocks(-1))});
  auto w = std::make_shared<const Representation>(skyscraper(m, 1));
  r.targets.push_back({0, w, skyscraper_into(m, 1, j.blocks(0))});
  return r;
}

ModelResolution resolution_n_points(const SphereModel& m) {
  ModelResolution r{ComplexOfReps(m.quiver, m.ring), {}};
  auto& j = r.complex;
  std::vector<Block> middle, top;
  for (int i = 1; i <= m.n; ++i) middle.push_back(block(m, name('E', i)));
  for (int i = 1; i <= m.n; ++i) middle.push_back(block(m, name('P', i)));
  for (int i = 1; i <= m.n; ++i) top.push_back(block(m, name('P', i)));
  j.set_term(-1, {block(m, "H1"), block(m, "H2")});
  j.set_term(0, middle);
  j.set_term(1, top);
  add_differentials(m, j, -1, 0);
  auto c = std::make_shared<const Representation>(constant_rep(m));
  r.targets.push_back({-1, c, constant_into(m, j.blocks(-1))});
  for (int i = 1; i <= m.n; ++i) {
    auto w = std::make_shared<const Representation>(skyscraper(m, i));
    r.targets.push_back({0, w, skyscraper_into(m, i, j.blocks(0))});
  }
  return r;
}

DgAlgebraPtr end_algebra(const ModelResolution& r) { return end_dg_algebra(r.complex, sphere_block_label); }

Witness witness_from_representatives(const DgAlgebraPtr& e, const std::vector<std::pair<std::string, int>>& reps) {
  std::vector<LabeledElement> elems;
  for (const auto& [label, deg] : reps) {
    if (label == "1")
      elems.emplace_back(label, e->unit());
    else
      elems.emplace_back(label, single(e->index(label, deg)));
  }
  Witness w{cohomology_algebra(e, elems), {}, {}, false};
  w.map = w.cohomology.section_morphism();
  w.violations = validate_dg_morphism(w.map);
  if (w.violations.empty()) w.quasi_isomorphism = is_quasi_iso_dg(w.map);
  return w;
}

Witness formality_witness_trivial(const DgAlgebraPtr& e) {
  return witness_from_representatives(e, {{"1", 0}, {"hp_{11}", 2}});
}

Witness formality_witness_one_point(const DgAlgebraPtr& e) {
  return witness_from_representatives(e, {{"1", 0}, {"p1^{(0)}", 0}, {"hp_{11}", 1}, {"p1", 1}, {"hp_{11}", 2}});
}

std::vector<LabeledElement> n_point_subalgebra_span(const DgAlgebra& e, int n) {
  std::vector<LabeledElement> span;
  auto el = [&](const std::string& label, int deg) { return single(e.index(label, deg)); };
  auto add = [&](const std::string& label, int deg) { span.emplace_back(label, el(label, deg)); };
  add("h1", 0);
  add("h2", 0);
  for (int i = 1; i <= n; ++i) add(name('e', i), 0);
  for (int i = 1; i <= n; ++i) add(name('p', i) + "^{(0)}", 0);
  SparseVec sum;
  for (int i = 1; i <= n; ++i) axpy(sum, 1, el(name('p', i) + "^{(1)}", 0));
  span.emplace_back("sum p_i^{(1)}", sum);
  for (int i = 1; i <= n; ++i) add("he_" + pair_index(1, i), 1);
  for (int i = 1; i <= n; ++i) add("he_" + pair_index(2, i), 1);
  for (int i = 1; i <= n; ++i) add("hp_" + pair_index(1, i), 1);
  add("e_" + pair_index(1, 1), 1);
  add("e_" + pair_index(1, n), 1);
  for (int i = 2; i <= n; ++i) {
    std::string a = "e_" + pair_index(i, i), b = "e_" + pair_index(i, i - 1);
    span.emplace_back(a + "-" + b, el(a, 1) - el(b, 1));
  }
  for (int i = 1; i <= n; ++i) add(name('p', i), 1);
  for (int j = 1; j <= 2; ++j)
    for (int i = 1; i <= n; ++i) add("hp_" + pair_index(j, i), 2);
  return span;
}

std::vector<SparseVec> n_point_ideal_generators(const DgAlgebra& u, int n) {
  std::vector<SparseVec> gens;
  for (int i = 2; i <= n; ++i) gens.push_back(single(u.index("he_" + pair_index(1, i), 1)));
  for (int i = 2; i <= n; ++i)
    gens.push_back(single(u.index("hp_" + pair_index(1, i), 2)) - single(u.index("hp_" + pair_index(1, i - 1), 2)));
  return gens;
}

NPointChain formality_chain_n_points(const DgAlgebraPtr& e, int n) {
  Subalgebra u = subalgebra_from_span(e, n_point_subalgebra_span(*e, n));
  Ideal ideal = ideal_from_span(u.algebra, n_point_ideal_generators(*u.algebra, n));
  Quotient q = quotient(ideal);
  // representatives of H(U/I): images of named elements of U
  std::vector<LabeledElement> reps;
  auto from_u = [&](const std::string& label, int deg) {
    reps.emplace_back(label, u.algebra->find(label, deg) ? q.projection.images[u.algebra->index(label, deg)]
                                                         : SparseVec{});
  };
  reps.emplace_back("1", q.algebra->unit());
  for (int i = 1; i <= n; ++i) from_u(name('p', i) + "^{(0)}", 0);
  for (int i = 1; i <= n; ++i) from_u("hp_" + pair_index(1, i), 1);
  for (int i = 1; i <= n; ++i) from_u(name('p', i), 1);
  from_u("hp_" + pair_index(1, 1), 2);
  CohomologyAlgebra h = cohomology_algebra(q.algebra, reps);

  NPointChain out{{}, u, ideal, q, h};
  out.chain.algebras = {e, u.algebra, q.algebra, h.algebra};
  out.chain.arrows.emplace_back(u.inclusion, Direction::backward);
  out.chain.arrows.emplace_back(q.projection, Direction::forward);
  out.chain.arrows.emplace_back(h.section_morphism(), Direction::backward);
  return out;
}

std::map<std::pair<std::string, std::string>, std::size_t> hom_rank_table(const SphereModel& m) {
  std::map<std::pair<std::string, std::string>, std::size_t> out;
  for (const auto& s : m.strata())
    for (const auto& t : m.strata()) out[{s, t}] = hom_space(*m.closure(s), *m.closure(t)).rank();
  return out;
}

std::map<std::pair<std::string, std::string>, std::size_t> expected_hom_ranks(int n) {
  std::map<std::pair<std::string, std::string>, std::size_t> out;
  for (int j = 1; j <= 2; ++j) {
    out[{name('H', j), name('H', j)}] = 1;
    for (int i = 1; i <= n; ++i) {
      out[{name('H', j), name('E', i)}] = 1;
      out[{name('H', j), name('P', i)}] = 1;
    }
  }
  for (int i = 1; i <= n; ++i) {
    out[{name('E', i), name('E', i)}] = 1;
    out[{name('E', i), name('P', i)}] = 1;
    out[{name('E', i), name('P', wrap(i - 1, n))}] = 1;
    out[{name('P', i), name('P', i)}] = 1;
  }
  return out;
}

DeRhamModel de_rham_model(int n) {
  if (n < 2) throw PreconditionError("the de Rham model needs n >= 2, got " + std::to_string(n));
  DeRhamModel m;
  m.n = n;
  std::vector<BasisElement> basis = {{"1_A", 0},         {"1_C", 0},          {"1_D", 0},
                                     {"tau_C", n - 1},   {"tau_D", n - 1},    {"omega_A", n},
                                     {"omega_B", n},     {"omegaD_C", n},     {"omegaD_D", n}};
  m.entry = {{"1_A", {1, 1}},     {"omega_A", {1, 1}}, {"omega_B", {1, 2}},  {"1_C", {2, 1}},   {"tau_C", {2, 1}},
             {"omegaD_C", {2, 1}}, {"1_D", {2, 2}},    {"tau_D", {2, 2}},    {"omegaD_D", {2, 2}}};
  auto a = std::make_shared<DgAlgebra>(Ring::rationals, basis);
  auto ix = [&](const std::string& l) { return *a->find(l); };
  auto set = [&](const std::string& x, const std::string& y, const std::string& z) {
    a->set_product(ix(x), ix(y), single(ix(z)));
  };
  // unit actions: 1_A on row/column 1, 1_D on row/column 2
  for (const auto& [label, e] : m.entry) {
    if (e.first == 1) set("1_A", label, label);
    if (e.second == 1) set(label, "1_A", label);
    if (e.first == 2) set("1_D", label, label);
    if (e.second == 2) set(label, "1_D", label);
  }
  // wedge products of forms across the entries; everything of total degree
  // above n vanishes, as does tau * tau
  set("1_C", "omega_A", "omegaD_C");
  set("omega_B", "1_C", "omega_A");
  set("1_C", "omega_B", "omegaD_D");
  set("tau_D", "1_C", "tau_C");
  set("omegaD_D", "1_C", "omegaD_C");
  a->set_differential(ix("tau_C"), single(ix("omegaD_C")));
  a->set_differential(ix("tau_D"), single(ix("omegaD_D")));
  a->set_unit(single(ix("1_A")) + single(ix("1_D")));
  m.algebra = a;
  m.acyclic_ideal = ideal_from_span(a, {single(ix("tau_C")), single(ix("tau_D")), single(ix("omegaD_C")),
                                        single(ix("omegaD_D"))});
  m.cohomology = quotient(m.acyclic_ideal);
  return m;
}

}  // namespace homalg
