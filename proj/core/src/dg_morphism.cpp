#include "homalg/dg_morphism.hpp"

#include "homalg/errors.hpp"

namespace homalg {

SparseVec DgMorphism::apply(const SparseVec& x) const {
  SparseVec out;
  for (const auto& [i, c] : x) axpy(out, c, images.at(i));
  return out;
}

Matrix DgMorphism::component(int m) const {
  const std::size_t s0 = source->degree_offset(m), ns = source->degree_rank(m);
  const std::size_t t0 = target->degree_offset(m), nt = target->degree_rank(m);
  Matrix out(target->ring(), nt, ns);
  for (std::size_t j = 0; j < ns; ++j)
    for (const auto& [k, c] : images.at(s0 + j)) {
      if (k < t0 || k >= t0 + nt) throw PreconditionError("dg morphism does not preserve degrees");
      out(k - t0, j) = c;
    }
  return out;
}

ChainMap DgMorphism::chain_map() const {
  ChainMap f{source->complex(), target->complex(), {}};
  for (int m : source->degrees()) f.components[m] = component(m);
  return f;
}

DgMorphism identity_dg_morphism(DgAlgebraPtr a) {
  DgMorphism f{a, a, {}};
  for (std::size_t i = 0; i < a->dim(); ++i) f.images.push_back(single(i));
  return f;
}

DgMorphism compose(const DgMorphism& g, const DgMorphism& f) {
  if (f.target.get() != g.source.get()) throw PreconditionError("compose: dg morphisms are not composable");
  DgMorphism h{f.source, g.target, {}};
  for (const auto& x : f.images) h.images.push_back(g.apply(x));
  return h;
}

std::vector<std::string> validate_dg_morphism(const DgMorphism& f) {
  std::vector<std::string> out;
  if (!f.source || !f.target) return {"dg morphism without source or target"};
  const DgAlgebra& a = *f.source;
  const DgAlgebra& b = *f.target;
  if (f.images.size() != a.dim()) return {"dg morphism has wrong number of images"};
  if (a.ring() != b.ring()) out.push_back("source and target rings differ");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (const auto& [k, c] : f.images[i])
      if (k >= b.dim() || b.degree(k) != a.degree(i)) {
        out.push_back("image of " + a.label(i) + " is not in degree " + std::to_string(a.degree(i)));
        break;
      }
  if (!out.empty()) return out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    SparseVec lhs = b.d(f.images[i]);
    SparseVec rhs = f.apply(a.differential(i));
    if (lhs != rhs)
      out.push_back("d does not commute with the map on " + a.label(i) + ": " + b.format(lhs) + " != " + b.format(rhs));
  }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (f.images[i].empty() && a.right_products(i).empty()) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const SparseVec& ab = a.product(i, j);
      if (ab.empty() && (f.images[i].empty() || f.images[j].empty())) continue;
      SparseVec lhs = f.apply(ab);
      SparseVec rhs = b.multiply(f.images[i], f.images[j]);
      if (lhs != rhs)
        out.push_back("not multiplicative on (" + a.label(i) + ", " + a.label(j) + "): " + b.format(lhs) +
                      " != " + b.format(rhs));
    }
  }
  if (f.apply(a.unit()) != b.unit()) out.push_back("unit is not preserved");
  return out;
}

QuasiIsoReport quasi_iso_report(const DgMorphism& f) { return is_quasi_iso(f.chain_map()); }

bool is_quasi_iso_dg(const DgMorphism& f) { return quasi_iso_report(f).quasi_isomorphism; }

}  // namespace homalg
