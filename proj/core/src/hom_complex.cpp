#include "homalg/hom_complex.hpp"

#include <tuple>

#include "homalg/errors.hpp"

namespace homalg {

std::string generic_block_label(const std::string& source, const std::string& target, std::size_t k,
                                std::size_t rank) {
  std::string s = source + ">" + target;
  if (rank > 1) s += "#" + std::to_string(k);
  return s;
}

namespace {

// Hom spaces between blocks, shared by every degree that needs them.
class HomCache {
 public:
  const HomSpace& get(const RepresentationPtr& v, const RepresentationPtr& w) {
    auto key = std::make_pair(v.get(), w.get());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, hom_space(*v, *w)).first->second;
  }

 private:
  std::map<std::pair<const Representation*, const Representation*>, HomSpace> cache_;
};

using Key = std::tuple<int, std::size_t, std::size_t>;  // (p, s, t)

struct Layout {
  LabeledHomComplex result;
  // (m, p, s, t) -> offset of the block in degree m
  std::map<int, std::map<Key, std::size_t>> offsets;
  HomCache cache;
};

void build_layout(Layout& lay, const ComplexOfReps& x, const ComplexOfReps& y, const BlockLabeler& labeler) {
  auto xs = x.support(), ys = y.support();
  if (xs.empty() || ys.empty()) return;
  for (int m = ys.front() - xs.back(); m <= ys.back() - xs.front(); ++m) {
    std::vector<HomElement> elems;
    for (int p : xs) {
      const auto& tb = y.blocks(p + m);
      if (tb.empty()) continue;
      const auto& sb = x.blocks(p);
      for (std::size_t s = 0; s < sb.size(); ++s)
        for (std::size_t t = 0; t < tb.size(); ++t) {
          const HomSpace& h = lay.cache.get(sb[s].rep, tb[t].rep);
          if (h.rank() == 0) continue;
          lay.offsets[m][{p, s, t}] = elems.size();
          for (std::size_t k = 0; k < h.rank(); ++k)
            elems.push_back({p, s, t, k, labeler(sb[s].name, tb[t].name, k, h.rank())});
        }
    }
    if (elems.empty()) continue;
    std::map<std::string, int> count;
    for (const auto& e : elems) ++count[e.label];
    std::vector<std::string> labels;
    for (auto& e : elems) {
      if (count[e.label] > 1) e.label += "^{(" + std::to_string(e.p) + ")}";
      labels.push_back(e.label);
    }
    lay.result.complex.set_degree(m, std::move(labels));
    lay.result.elements[m] = std::move(elems);
  }
}

void fill_differentials(Layout& lay, const ComplexOfReps& x, const ComplexOfReps& y) {
  auto& res = lay.result;

  for (const auto& [m, elems] : res.elements) {
    auto next = lay.offsets.find(m + 1);
    if (next == lay.offsets.end()) continue;
    const auto& next_off = next->second;
    Matrix d(x.ring(), res.complex.rank(m + 1), elems.size());
    const Scalar sign = (m % 2 == 0) ? -1 : 1;  // -(-1)^m
    for (std::size_t col = 0; col < elems.size(); ++col) {
      const HomElement& e = elems[col];
      const auto& sblk = x.blocks(e.p)[e.source_block];
      const auto& tblk = y.blocks(e.p + m)[e.target_block];
      const RepMorphism& f = lay.cache.get(sblk.rep, tblk.rep).basis()[e.k];
      // d_Y after f: lands in Hom(X^p_s, Y^{p+m+1}_t')
      for (const auto& [key, g] : y.differential_blocks(e.p + m)) {
        if (key.second != e.target_block) continue;
        auto off = next_off.find({e.p, e.source_block, key.first});
        RepMorphism gf = compose(g, f);
        if (gf.is_zero()) continue;
        if (off == next_off.end()) throw Error("hom_complex: composite outside the Hom basis");
        const auto& tgt = y.blocks(e.p + m + 1)[key.first];
        Vector c = lay.cache.get(sblk.rep, tgt.rep).coordinates(gf);
        for (std::size_t i = 0; i < c.size(); ++i) d(off->second + i, col) += c[i];
      }
      // f after d_X: lands in Hom(X^{p-1}_s', Y^{p+m}_t)
      for (const auto& [key, g] : x.differential_blocks(e.p - 1)) {
        if (key.first != e.source_block) continue;
        RepMorphism fg = compose(f, g);
        if (fg.is_zero()) continue;
        auto off = next_off.find({e.p - 1, key.second, e.target_block});
        if (off == next_off.end()) throw Error("hom_complex: composite outside the Hom basis");
        const auto& src = x.blocks(e.p - 1)[key.second];
        Vector c = lay.cache.get(src.rep, tblk.rep).coordinates(fg);
        for (std::size_t i = 0; i < c.size(); ++i) d(off->second + i, col) += sign * c[i];
      }
    }
    res.complex.set_differential(m, std::move(d));
  }
}

}  // namespace

LabeledHomComplex hom_complex(const ComplexOfReps& x, const ComplexOfReps& y, const BlockLabeler& labeler) {
  if (x.quiver().vertex_count() != y.quiver().vertex_count())
    throw PreconditionError("hom_complex: complexes live on different quivers");
  Layout lay;
  lay.result.complex = ChainComplex(x.ring());
  build_layout(lay, x, y, labeler);
  fill_differentials(lay, x, y);
  return std::move(lay.result);
}

DgAlgebraPtr end_dg_algebra(const ComplexOfReps& x, const BlockLabeler& labeler) {
  Layout lay;
  lay.result.complex = ChainComplex(x.ring());
  build_layout(lay, x, x, labeler);
  fill_differentials(lay, x, x);
  const LabeledHomComplex& hc = lay.result;

  std::vector<BasisElement> basis;
  std::map<int, std::size_t> start;
  for (const auto& [m, elems] : hc.elements) {
    start[m] = basis.size();
    for (const auto& e : elems) basis.push_back({e.label, m});
  }
  auto alg = std::make_shared<DgAlgebra>(x.ring(), basis);

  for (const auto& [m, elems] : hc.elements) {
    Matrix d = hc.complex.differential(m);
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (!hc.elements.count(m + 1)) break;
      alg->set_differential(start[m] + j, sparse_from_dense(d.column(j), start[m + 1]));
    }
  }

  // f (degree a, X^p_s -> X^{p+a}_t) after g (degree b, X^{p'}_{s'} -> X^{p'+b}_{t'})
  // is nonzero only when p = p' + b and s = t'.
  std::map<std::pair<int, std::size_t>, std::vector<std::size_t>> by_source, by_target;
  for (const auto& [m, elems] : hc.elements)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const auto& e = elems[j];
      by_source[{e.p, e.source_block}].push_back(start[m] + j);
      by_target[{e.p + m, e.target_block}].push_back(start[m] + j);
    }
  auto element = [&](std::size_t i) -> const HomElement& {
    int m = basis[i].degree;
    return hc.elements.at(m)[i - start.at(m)];
  };
  for (const auto& [key, sources] : by_source) {
    auto it = by_target.find(key);
    if (it == by_target.end()) continue;
    for (std::size_t i : sources) {
      const HomElement& ei = element(i);
      const int a = basis[i].degree;
      const auto& mid = x.blocks(ei.p)[ei.source_block];
      const auto& top = x.blocks(ei.p + a)[ei.target_block];
      const RepMorphism& f = lay.cache.get(mid.rep, top.rep).basis()[ei.k];
      for (std::size_t j : it->second) {
        const HomElement& ej = element(j);
        const int b = basis[j].degree;
        const auto& bottom = x.blocks(ej.p)[ej.source_block];
        const RepMorphism& g = lay.cache.get(bottom.rep, mid.rep).basis()[ej.k];
        RepMorphism fg = compose(f, g);
        if (fg.is_zero()) continue;
        auto off = lay.offsets.at(a + b).find({ej.p, ej.source_block, ei.target_block});
        if (off == lay.offsets.at(a + b).end()) throw Error("end_dg_algebra: composite outside the Hom basis");
        Vector c = lay.cache.get(bottom.rep, top.rep).coordinates(fg);
        alg->set_product(i, j, sparse_from_dense(c, start[a + b] + off->second));
      }
    }
  }

  SparseVec unit;
  for (int p : x.support()) {
    const auto& bs = x.blocks(p);
    for (std::size_t s = 0; s < bs.size(); ++s) {
      const HomSpace& h = lay.cache.get(bs[s].rep, bs[s].rep);
      if (h.rank() == 0) continue;
      Vector c = h.coordinates(identity_morphism(*bs[s].rep));
      axpy(unit, 1, sparse_from_dense(c, start.at(0) + lay.offsets.at(0).at({p, s, s})));
    }
  }
  alg->set_unit(std::move(unit));
  return alg;
}

}  // namespace homalg
