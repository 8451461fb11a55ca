#include "homalg/formality.hpp"

#include <set>

#include "homalg/errors.hpp"

namespace homalg {

FormalityReport verify_formality_chain(const FormalityChain& chain) {
  FormalityReport rep;
  const auto& algs = chain.algebras;
  if (algs.empty() || chain.arrows.size() + 1 != algs.size()) {
    rep.problems.push_back("chain needs k+1 algebras for k arrows");
    return rep;
  }
  bool ok = true;
  for (std::size_t i = 0; i < chain.arrows.size(); ++i) {
    const auto& [f, dir] = chain.arrows[i];
    ArrowReport ar;
    ar.direction = dir;
    const DgAlgebraPtr& from = dir == Direction::forward ? algs[i] : algs[i + 1];
    const DgAlgebraPtr& to = dir == Direction::forward ? algs[i + 1] : algs[i];
    if (f.source.get() != from.get() || f.target.get() != to.get())
      ar.violations.push_back("arrow " + std::to_string(i) + " does not join its neighbouring algebras");
    if (ar.violations.empty()) ar.violations = validate_dg_morphism(f);
    if (ar.violations.empty()) {
      ar.cone = quasi_iso_report(f);
      ar.quasi_isomorphism = ar.cone.quasi_isomorphism;
    }
    if (!ar.violations.empty() || !ar.quasi_isomorphism) {
      ok = false;
      rep.problems.push_back("arrow " + std::to_string(i) +
                             (ar.violations.empty() ? " is not a quasi-isomorphism" : ": " + ar.violations.front()));
    }
    rep.arrows.push_back(std::move(ar));
  }
  rep.terminal_has_zero_differential = algs.back()->has_zero_differential();
  if (!rep.terminal_has_zero_differential) {
    ok = false;
    rep.problems.push_back("terminal algebra has nonzero differential");
  }
  if (!ok) return rep;

  // phi_i : H(A_i) -> H(A_0), composed arrow by arrow
  std::vector<std::map<int, Subquotient>> groups;
  for (const auto& a : algs) {
    CohomologyProfile p = cohomology(a->complex());
    groups.push_back(p.groups);
  }
  std::set<int> degrees;
  for (const auto& g : groups)
    for (const auto& [m, s] : g) degrees.insert(m);
  const Ring ring = algs.front()->ring();
  auto sq = [&](std::size_t i, int m) -> Subquotient {
    auto it = groups[i].find(m);
    if (it != groups[i].end()) return it->second;
    return subquotient(Matrix(ring, algs[i]->degree_rank(m), 0), Matrix(ring, algs[i]->degree_rank(m), 0));
  };
  std::map<int, Matrix> phi;
  for (int m : degrees) phi[m] = Matrix::identity(ring, sq(0, m).betti());
  for (std::size_t i = 0; i < chain.arrows.size(); ++i) {
    const auto& [f, dir] = chain.arrows[i];
    for (int m : degrees) {
      if (dir == Direction::forward) {
        Matrix h = induced_cohomology_map(f, m, sq(i, m), sq(i + 1, m));
        auto inv = inverse(h);
        if (!inv) {
          rep.problems.push_back("induced map of arrow " + std::to_string(i) + " is not invertible");
          return rep;
        }
        phi[m] = phi[m] * *inv;
      } else {
        phi[m] = phi[m] * induced_cohomology_map(f, m, sq(i + 1, m), sq(i, m));
      }
    }
  }
  const std::size_t last = algs.size() - 1;
  const DgAlgebra& t = *algs[last];
  for (int m : degrees) {
    Subquotient s = sq(last, m);
    Matrix cols(ring, phi[m].rows(), t.degree_rank(m));
    for (std::size_t k = 0; k < t.degree_rank(m); ++k) {
      Vector e = unit_vector(t.degree_rank(m), k);
      cols.set_column(k, phi[m].apply(s.coordinates(e).free));
    }
    rep.identification[m] = cols;
  }

  // the identification must respect products and unit
  CohomologyAlgebra h0 = cohomology_algebra(algs.front());
  const DgAlgebra& h = *h0.algebra;
  auto ident = [&](const SparseVec& x) {
    SparseVec out;
    for (const auto& [i, c] : x) {
      int m = t.degree(i);
      Vector col = rep.identification.at(m).column(i - t.degree_offset(m));
      axpy(out, c, sparse_from_dense(col, h.degree_offset(m)));
    }
    return out;
  };
  bool mult = ident(t.unit()) == h.unit();
  for (std::size_t i = 0; i < t.dim() && mult; ++i)
    for (std::size_t j = 0; j < t.dim() && mult; ++j)
      if (ident(t.product(i, j)) != h.multiply(ident(single(i)), ident(single(j)))) {
        mult = false;
        rep.problems.push_back("identification is not multiplicative on (" + t.label(i) + ", " + t.label(j) + ")");
      }
  rep.identification_multiplicative = mult;
  rep.verdict = mult;
  return rep;
}

SparseVec DgBimodule::act_left(const SparseVec& a, const SparseVec& m) const {
  SparseVec out;
  for (const auto& [i, x] : a) {
    const auto& row = left_action.at(i);
    for (const auto& [k, y] : m) {
      auto it = row.find(k);
      if (it != row.end()) axpy(out, x * y, it->second);
    }
  }
  return out;
}

SparseVec DgBimodule::act_right(const SparseVec& m, const SparseVec& b) const {
  SparseVec out;
  for (const auto& [k, x] : m) {
    const auto& row = right_action.at(k);
    for (const auto& [j, y] : b) {
      auto it = row.find(j);
      if (it != row.end()) axpy(out, x * y, it->second);
    }
  }
  return out;
}

SparseVec DgBimodule::d(const SparseVec& m) const {
  SparseVec out;
  for (const auto& [k, x] : m) axpy(out, x, diff.at(k));
  return out;
}

ChainComplex DgBimodule::complex() const {
  DgAlgebra shape(left->ring(), basis);
  for (std::size_t k = 0; k < basis.size(); ++k) shape.set_differential(k, diff[k]);
  return shape.complex();
}

DgBimodule regular_bimodule(const DgAlgebraPtr& a) {
  return restricted_bimodule(a, identity_dg_morphism(a));
}

DgBimodule restricted_bimodule(const DgAlgebraPtr& a, const DgMorphism& f) {
  if (f.target.get() != a.get()) throw PreconditionError("restricted_bimodule: morphism must land in the algebra");
  DgBimodule m;
  m.left = a;
  m.right = f.source;
  m.basis = a->basis();
  m.left_action.resize(a->dim());
  m.right_action.resize(a->dim());
  for (std::size_t i = 0; i < a->dim(); ++i) {
    m.left_action[i] = a->right_products(i);
    m.diff.push_back(a->differential(i));
    for (std::size_t j = 0; j < f.source->dim(); ++j) {
      SparseVec x = a->multiply(single(i), f.images[j]);
      if (!x.empty()) m.right_action[i][j] = std::move(x);
    }
  }
  return m;
}

std::vector<std::string> validate_bimodule(const DgBimodule& m) {
  std::vector<std::string> out;
  const DgAlgebra& a = *m.left;
  const DgAlgebra& b = *m.right;
  const std::size_t n = m.basis.size();
  auto deg = [&](std::size_t k) { return m.basis[k].degree; };
  for (std::size_t k = 0; k < n; ++k)
    if (!m.d(m.diff[k]).empty()) out.push_back("d^2 != 0 on " + m.basis[k].label);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < n; ++k) {
      SparseVec lhs = m.d(m.act_left(single(i), single(k)));
      SparseVec rhs = m.act_left(a.differential(i), single(k));
      axpy(rhs, a.degree(i) % 2 == 0 ? 1 : -1, m.act_left(single(i), m.diff[k]));
      if (lhs != rhs) out.push_back("left Leibniz fails on (" + a.label(i) + ", " + m.basis[k].label + ")");
    }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      SparseVec lhs = m.d(m.act_right(single(k), single(j)));
      SparseVec rhs = m.act_right(m.diff[k], single(j));
      axpy(rhs, deg(k) % 2 == 0 ? 1 : -1, m.act_right(single(k), b.differential(j)));
      if (lhs != rhs) out.push_back("right Leibniz fails on (" + m.basis[k].label + ", " + b.label(j) + ")");
    }
  // (a a') m = a (a' m)
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t i2 = 0; i2 < a.dim(); ++i2)
      for (std::size_t k = 0; k < n; ++k) {
        const SparseVec& aa = a.product(i, i2);
        SparseVec inner = m.act_left(single(i2), single(k));
        if (aa.empty() && inner.empty()) continue;
        if (m.act_left(aa, single(k)) != m.act_left(single(i), inner))
          out.push_back("left action not associative on (" + a.label(i) + ", " + a.label(i2) + ", " +
                        m.basis[k].label + ")");
      }
  // m (b b') = (m b) b'
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      SparseVec mb = m.act_right(single(k), single(j));
      for (std::size_t j2 = 0; j2 < b.dim(); ++j2) {
        const SparseVec& bb = b.product(j, j2);
        if (mb.empty() && bb.empty()) continue;
        if (m.act_right(single(k), bb) != m.act_right(mb, single(j2)))
          out.push_back("right action not associative on (" + m.basis[k].label + ", " + b.label(j) + ", " +
                        b.label(j2) + ")");
      }
    }
  // (a m) b = a (m b)
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < n; ++k) {
      SparseVec am = m.act_left(single(i), single(k));
      for (std::size_t j = 0; j < b.dim(); ++j) {
        SparseVec mb = m.act_right(single(k), single(j));
        if (am.empty() && mb.empty()) continue;
        if (m.act_right(am, single(j)) != m.act_left(single(i), mb))
          out.push_back("actions do not commute on (" + a.label(i) + ", " + m.basis[k].label + ", " + b.label(j) +
                        ")");
      }
    }
  for (std::size_t k = 0; k < n; ++k) {
    if (m.act_left(a.unit(), single(k)) != single(k)) out.push_back("left unit fails on " + m.basis[k].label);
    if (m.act_right(single(k), b.unit()) != single(k)) out.push_back("right unit fails on " + m.basis[k].label);
  }
  return out;
}

QuasiEquivalenceReport verify_quasi_equivalence(const DgBimodule& m, const SparseVec& c) {
  QuasiEquivalenceReport rep;
  for (const auto& [k, x] : c)
    if (m.basis.at(k).degree != 0) {
      rep.reason = "c is not homogeneous of degree 0";
      return rep;
    }
  if (c.empty()) {
    rep.reason = "c is zero";
    return rep;
  }
  if (!m.d(c).empty()) {
    rep.reason = "c is not a cycle";
    return rep;
  }
  ChainComplex mc = m.complex();
  DgAlgebra shape(m.left->ring(), m.basis);
  auto build = [&](const DgAlgebra& src, bool left_side) {
    ChainMap f{src.complex(), mc, {}};
    for (int d : src.degrees()) {
      Matrix comp(src.ring(), mc.rank(d), src.degree_rank(d));
      for (std::size_t j = 0; j < src.degree_rank(d); ++j) {
        SparseVec x = single(src.degree_offset(d) + j);
        SparseVec y = left_side ? m.act_left(x, c) : m.act_right(c, x);
        comp.set_column(j, dense_from_sparse(y, shape.degree_rank(d), shape.degree_offset(d)));
      }
      f.components[d] = comp;
    }
    return f;
  };
  ChainMap l = build(*m.left, true);
  ChainMap r = build(*m.right, false);
  if (!validate_chain_map(l).empty() || !validate_chain_map(r).empty()) {
    rep.reason = "multiplication by c is not a chain map";
    return rep;
  }
  rep.left = is_quasi_iso(l);
  rep.right = is_quasi_iso(r);
  rep.verdict = rep.left.quasi_isomorphism && rep.right.quasi_isomorphism;
  if (!rep.verdict)
    rep.reason = !rep.left.quasi_isomorphism ? "a -> a.c is not a quasi-isomorphism" : "b -> c.b is not a quasi-isomorphism";
  return rep;
}

}  // namespace homalg
