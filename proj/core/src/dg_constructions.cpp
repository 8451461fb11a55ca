#include "homalg/dg_constructions.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "homalg/errors.hpp"

namespace homalg {

namespace {

Vector local(const DgAlgebra& a, const SparseVec& x, int m) {
  return dense_from_sparse(x, a.degree_rank(m), a.degree_offset(m));
}

std::map<int, Subquotient> cohomology_groups(const DgAlgebra& a) {
  CohomologyProfile p = cohomology(a.complex());
  for (const auto& [m, g] : p.groups)
    if (!g.torsion().empty())
      throw TorsionError("torsion cohomology in degree " + std::to_string(m) +
                         ": multiplicative reduction unsupported");
  return p.groups;
}

// Fills products and unit of H from the section and checks that a second,
// perturbed section gives the same products.
void multiply_out(CohomologyAlgebra& h, DgAlgebra& alg) {
  const DgAlgebra& a = *h.source;
  for (const auto& [m, c] : h.change_of_basis)
    if (c.rows() > 0) h.classifier[m] = c * h.groups.at(m).free_coordinate_map();
  const std::size_t n = alg.dim();
  std::map<SparseVec, SparseVec> seen;
  auto products = [&](const std::vector<SparseVec>& reps) {
    std::vector<std::vector<SparseVec>> out(n, std::vector<SparseVec>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        SparseVec x = a.multiply(reps[i], reps[j]);
        if (x.empty()) continue;
        auto it = seen.find(x);
        if (it == seen.end()) it = seen.emplace(x, h.classify(x)).first;
        out[i][j] = it->second;
      }
    return out;
  };
  auto table = products(h.section);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) alg.set_product(i, j, table[i][j]);
  alg.set_unit(h.classify(a.unit()));

  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::vector<SparseVec> other = h.section;
  for (std::size_t i = 0; i < n; ++i) {
    int m = alg.degree(i);
    std::size_t lo = a.degree_offset(m - 1), cnt = a.degree_rank(m - 1);
    SparseVec y;
    for (std::size_t k = 0; k < cnt; ++k) axpy(y, coef(rng), single(lo + k));
    axpy(other[i], 1, a.d(y));
  }
  if (products(other) != table) throw Error("cohomology products depend on the choice of representatives");
}

}  // namespace

SparseVec CohomologyAlgebra::classify(const SparseVec& cocycle) const {
  if (cocycle.empty()) return {};
  int m = *source->degree_of(cocycle);
  if (!source->d(cocycle).empty()) throw NotACocycle("classify: element is not a cocycle");
  auto g = classifier.find(m);
  if (g == classifier.end()) return {};
  const Matrix& phi = g->second;
  const std::size_t off = source->degree_offset(m);
  Vector c(phi.rows(), Scalar(0));
  for (const auto& [i, x] : cocycle)
    for (std::size_t r = 0; r < phi.rows(); ++r) {
      const Scalar& p = phi(r, i - off);
      if (!is_zero(p)) c[r] += p * x;
    }
  return sparse_from_dense(c, algebra->degree_offset(m));
}

DgMorphism CohomologyAlgebra::section_morphism() const { return DgMorphism{algebra, source, section}; }

CohomologyAlgebra cohomology_algebra(const DgAlgebraPtr& a) {
  CohomologyAlgebra h;
  h.source = a;
  h.groups = cohomology_groups(*a);
  std::vector<BasisElement> basis;
  for (const auto& [m, g] : h.groups) {
    const std::size_t off = a->degree_offset(m);
    for (std::size_t k = 0; k < g.betti(); ++k) {
      SparseVec rep = sparse_from_dense(g.lift().column(k), off);
      std::string label = (rep.size() == 1 && rep[0].second == 1)
                              ? a->label(rep[0].first)
                              : "[" + std::to_string(m) + "." + std::to_string(k) + "]";
      basis.push_back({label, m});
      h.section.push_back(std::move(rep));
    }
    h.change_of_basis[m] = Matrix::identity(a->ring(), g.betti());
  }
  auto alg = std::make_shared<DgAlgebra>(a->ring(), basis);
  h.algebra = alg;
  multiply_out(h, *alg);
  return h;
}

CohomologyAlgebra cohomology_algebra(const DgAlgebraPtr& a, const std::vector<LabeledElement>& representatives) {
  CohomologyAlgebra h;
  h.source = a;
  h.groups = cohomology_groups(*a);
  std::vector<LabeledElement> reps = representatives;
  std::vector<int> degs;
  for (const auto& [label, x] : reps) {
    auto m = a->degree_of(x);
    if (!m) throw PreconditionError("representative '" + label + "' is zero");
    if (!a->d(x).empty()) throw NotACocycle("representative '" + label + "' is not a cocycle");
    degs.push_back(*m);
  }
  std::vector<std::size_t> order(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return degs[x] < degs[y]; });

  std::vector<BasisElement> basis;
  std::map<int, std::vector<Vector>> coords;
  for (std::size_t i : order) {
    basis.push_back({reps[i].first, degs[i]});
    h.section.push_back(reps[i].second);
    auto g = h.groups.find(degs[i]);
    if (g == h.groups.end()) throw PreconditionError("representative '" + reps[i].first + "' in a degree with zero cohomology");
    coords[degs[i]].push_back(g->second.coordinates(local(*a, reps[i].second, degs[i])).free);
  }
  for (const auto& [m, g] : h.groups) {
    if (g.betti() == 0) continue;
    auto it = coords.find(m);
    std::size_t given = it == coords.end() ? 0 : it->second.size();
    if (given != g.betti())
      throw PreconditionError("degree " + std::to_string(m) + " needs " + std::to_string(g.betti()) +
                              " representatives, got " + std::to_string(given));
    Matrix c = Matrix::from_columns(a->ring(), g.betti(), it->second);
    auto inv = inverse(c);
    if (!inv) throw PreconditionError("representatives in degree " + std::to_string(m) + " do not form a basis of H");
    h.change_of_basis[m] = *inv;
  }
  auto alg = std::make_shared<DgAlgebra>(a->ring(), basis);
  h.algebra = alg;
  multiply_out(h, *alg);
  return h;
}

Subalgebra subalgebra_from_span(const DgAlgebraPtr& a, const std::vector<LabeledElement>& elements) {
  std::map<int, std::vector<LabeledElement>> by_degree;
  for (const auto& e : elements) {
    auto m = a->degree_of(e.second);
    if (!m) throw PreconditionError("span element '" + e.first + "' is zero");
    by_degree[*m].push_back(e);
  }
  std::vector<BasisElement> basis;
  std::vector<SparseVec> vectors;
  std::map<int, LatticeSolver> solvers;
  std::map<int, std::size_t> start;
  for (auto& [m, elems] : by_degree) {
    std::vector<Vector> cols;
    for (const auto& e : elems) cols.push_back(local(*a, e.second, m));
    Matrix g = Matrix::from_columns(a->ring(), a->degree_rank(m), cols);
    start[m] = basis.size();
    if (rank(g) == g.cols()) {
      for (const auto& e : elems) {
        basis.push_back({e.first, m});
        vectors.push_back(e.second);
      }
    } else {
      g = image_basis(g);
      for (std::size_t k = 0; k < g.cols(); ++k) {
        basis.push_back({"u" + std::to_string(m) + "." + std::to_string(k), m});
        vectors.push_back(sparse_from_dense(g.column(k), a->degree_offset(m)));
      }
    }
    solvers.emplace(m, LatticeSolver(g));
  }
  auto coords = [&](const SparseVec& x) -> std::optional<SparseVec> {
    if (x.empty()) return SparseVec{};
    int m = *a->degree_of(x);
    auto s = solvers.find(m);
    if (s == solvers.end()) return std::nullopt;
    auto y = s->second.solve(local(*a, x, m));
    if (!y) return std::nullopt;
    return sparse_from_dense(*y, start[m]);
  };

  auto sub = std::make_shared<DgAlgebra>(a->ring(), basis);
  auto unit = coords(a->unit());
  if (!unit || unit->empty()) throw ClosureError("span does not contain the unit");
  sub->set_unit(*unit);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    auto dx = coords(a->d(vectors[i]));
    if (!dx) throw ClosureError("span not closed under the differential: d(" + basis[i].label + ")");
    sub->set_differential(i, *dx);
  }
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      SparseVec x = a->multiply(vectors[i], vectors[j]);
      if (x.empty()) continue;
      auto c = coords(x);
      if (!c)
        throw ClosureError("span not closed under multiplication: " + basis[i].label + " * " + basis[j].label);
      sub->set_product(i, j, *c);
    }
  return {sub, DgMorphism{sub, a, vectors}};
}

std::size_t Ideal::rank(int m) const {
  auto it = basis.find(m);
  return it == basis.end() ? 0 : it->second.cols();
}

ChainComplex Ideal::complex() const {
  ChainComplex c(algebra->ring());
  for (const auto& [m, b] : basis) {
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < b.cols(); ++k) labels.push_back("i" + std::to_string(m) + "." + std::to_string(k));
    c.set_degree(m, labels);
  }
  for (const auto& [m, b] : basis) {
    auto next = basis.find(m + 1);
    if (next == basis.end()) continue;
    LatticeSolver solver(next->second);
    Matrix d(algebra->ring(), next->second.cols(), b.cols());
    Matrix dm = algebra->differential_matrix(m);
    for (std::size_t k = 0; k < b.cols(); ++k) {
      auto y = solver.solve(dm.apply(b.column(k)));
      if (!y) throw ClosureError("ideal not closed under the differential in degree " + std::to_string(m));
      d.set_column(k, *y);
    }
    c.set_differential(m, std::move(d));
  }
  return c;
}

Ideal ideal_from_span(const DgAlgebraPtr& u, const std::vector<SparseVec>& elements) {
  const DgAlgebra& a = *u;
  Ideal ideal;
  ideal.algebra = u;
  std::map<int, std::vector<Vector>> gens;
  std::map<int, LatticeSolver> solvers;
  std::deque<SparseVec> work;

  auto rebuild = [&](int m) {
    Matrix g = Matrix::from_columns(a.ring(), a.degree_rank(m), gens[m]);
    ideal.basis[m] = image_basis(g);
    solvers[m] = LatticeSolver(ideal.basis[m]);
  };
  auto contains = [&](const SparseVec& x, int m) {
    auto s = solvers.find(m);
    return s != solvers.end() && s->second.contains(local(a, x, m));
  };

  std::map<int, bool> touched;
  for (const auto& x : elements) {
    auto m = a.degree_of(x);
    if (!m) continue;
    gens[*m].push_back(local(a, x, *m));
    touched[*m] = true;
    work.push_back(x);
  }
  for (const auto& [m, t] : touched) rebuild(m);

  while (!work.empty()) {
    SparseVec x = std::move(work.front());
    work.pop_front();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (int side = 0; side < 2; ++side) {
        SparseVec y = side == 0 ? a.multiply(single(i), x) : a.multiply(x, single(i));
        if (y.empty()) continue;
        int m = *a.degree_of(y);
        if (contains(y, m)) continue;
        gens[m].push_back(local(a, y, m));
        rebuild(m);
        ideal.generated_by_input = false;
        work.push_back(std::move(y));
      }
    }
  }
  for (auto it = ideal.basis.begin(); it != ideal.basis.end();)
    it = it->second.cols() == 0 ? ideal.basis.erase(it) : std::next(it);
  for (const auto& [m, b] : ideal.basis) {
    Matrix dm = a.differential_matrix(m);
    for (std::size_t k = 0; k < b.cols(); ++k) {
      Vector dx = dm.apply(b.column(k));
      if (is_zero(dx)) continue;
      if (!contains(sparse_from_dense(dx, a.degree_offset(m + 1)), m + 1))
        throw ClosureError("ideal not closed under the differential: d(" +
                           a.format(sparse_from_dense(b.column(k), a.degree_offset(m))) + ")");
    }
  }
  return ideal;
}

Quotient quotient(const Ideal& ideal) {
  const DgAlgebra& a = *ideal.algebra;
  const Ring ring = a.ring();
  std::vector<BasisElement> basis;
  std::map<int, Matrix> proj;  // per degree: quotient coords (r x u) of U^m
  std::map<int, std::size_t> start;
  for (int m : a.degrees()) {
    const std::size_t u = a.degree_rank(m);
    Matrix im = ideal.basis.count(m) ? ideal.basis.at(m) : Matrix(ring, u, 0);
    const std::size_t k = im.cols();
    Matrix q;  // (u - k) x u, kernel exactly span(im)
    if (k == 0) {
      q = Matrix::identity(ring, u);
    } else {
      SmithForm s = smith_normal_form(im, smith_left);
      for (const auto& f : s.invariant_factors())
        if (f != 1) throw TorsionError("quotient has torsion in degree " + std::to_string(m));
      q = s.left.with_ring(ring).block(k, 0, u - k, u);
    }
    const std::size_t r = u - k;
    start[m] = basis.size();
    if (r == 0) continue;
    // greedy: standard basis vectors whose images stay independent
    std::vector<std::size_t> picked;
    std::vector<Vector> reduced;  // echelon rows over Q
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < u && picked.size() < r; ++i) {
      Vector v = q.with_ring(Ring::rationals).column(i);
      for (std::size_t t = 0; t < reduced.size(); ++t) {
        if (is_zero(v[pivots[t]])) continue;
        Scalar f = v[pivots[t]] / reduced[t][pivots[t]];
        for (std::size_t j = 0; j < r; ++j) v[j] -= f * reduced[t][j];
      }
      auto nz = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !is_zero(x); });
      if (nz == v.end()) continue;
      pivots.push_back(static_cast<std::size_t>(nz - v.begin()));
      reduced.push_back(std::move(v));
      picked.push_back(i);
    }
    Matrix t(ring, r, r);
    for (std::size_t c = 0; c < r; ++c) t.set_column(c, q.column(picked[c]));
    auto tinv = inverse(t);
    if (tinv) {
      proj[m] = *tinv * q;
      for (std::size_t i : picked) basis.push_back({a.label(a.degree_offset(m) + i), m});
    } else {
      // q is onto with kernel I^m; use its rows directly as quotient coordinates
      proj[m] = q;
      for (std::size_t c = 0; c < r; ++c) basis.push_back({"q" + std::to_string(m) + "." + std::to_string(c), m});
    }
  }

  auto qa = std::make_shared<DgAlgebra>(ring, basis);
  auto project = [&](const SparseVec& x) -> SparseVec {
    if (x.empty()) return {};
    int m = *a.degree_of(x);
    auto p = proj.find(m);
    if (p == proj.end()) return {};
    return sparse_from_dense(p->second.apply(local(a, x, m)), start.at(m));
  };
  // a preimage for every quotient basis element
  std::vector<SparseVec> lifts(basis.size());
  for (const auto& [m, p] : proj) {
    LatticeSolver s(p);
    for (std::size_t c = 0; c < p.rows(); ++c) {
      auto y = s.solve(unit_vector(p.rows(), c));
      if (!y) throw Error("quotient: projection is not onto");
      lifts[start.at(m) + c] = sparse_from_dense(*y, a.degree_offset(m));
    }
  }
  DgMorphism pi{ideal.algebra, qa, {}};
  for (std::size_t i = 0; i < a.dim(); ++i) pi.images.push_back(project(single(i)));
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    qa->set_differential(i, project(a.d(lifts[i])));
    for (std::size_t j = 0; j < lifts.size(); ++j) qa->set_product(i, j, project(a.multiply(lifts[i], lifts[j])));
  }
  SparseVec unit = project(a.unit());
  if (unit.empty()) throw PreconditionError("quotient kills the unit");
  qa->set_unit(std::move(unit));
  pi.target = qa;
  return {qa, std::move(pi)};
}

Matrix induced_cohomology_map(const DgMorphism& f, int m, const Subquotient& source, const Subquotient& target) {
  Matrix out(f.target->ring(), target.betti(), source.betti());
  const std::size_t so = f.source->degree_offset(m);
  const std::size_t to = f.target->degree_offset(m);
  for (std::size_t k = 0; k < source.betti(); ++k) {
    SparseVec image = f.apply(sparse_from_dense(source.lift().column(k), so));
    Vector c = target.coordinates(dense_from_sparse(image, f.target->degree_rank(m), to)).free;
    out.set_column(k, c);
  }
  return out;
}

}  // namespace homalg
