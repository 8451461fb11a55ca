#include "homalg/complex_of_reps.hpp"

#include "homalg/errors.hpp"

namespace homalg {

void ComplexOfReps::set_term(int q, std::vector<Block> blocks) {
  for (const auto& b : blocks) {
    if (!b.rep) throw PreconditionError("block '" + b.name + "' has no representation");
    if (b.rep->quiver().vertex_count() != quiver_->vertex_count())
      throw PreconditionError("block '" + b.name + "' lives on a different quiver");
  }
  diff_.erase(q);
  diff_.erase(q - 1);
  if (blocks.empty())
    terms_.erase(q);
  else
    terms_[q] = std::move(blocks);
}

const std::vector<Block>& ComplexOfReps::blocks(int q) const {
  static const std::vector<Block> empty;
  auto it = terms_.find(q);
  return it == terms_.end() ? empty : it->second;
}

std::vector<int> ComplexOfReps::support() const {
  std::vector<int> out;
  for (const auto& [q, b] : terms_) out.push_back(q);
  return out;
}

void ComplexOfReps::set_differential_block(int q, std::size_t target, std::size_t source, RepMorphism f) {
  const auto& src = blocks(q);
  const auto& dst = blocks(q + 1);
  if (source >= src.size() || target >= dst.size())
    throw PreconditionError("differential block index out of range in degree " + std::to_string(q));
  auto bad = validate_morphism(f, *src[source].rep, *dst[target].rep);
  if (!bad.empty())
    throw PreconditionError("differential block " + src[source].name + " -> " + dst[target].name + ": " + bad.front());
  if (f.is_zero())
    diff_[q].erase({target, source});
  else
    diff_[q][{target, source}] = std::move(f);
}

const std::map<std::pair<std::size_t, std::size_t>, RepMorphism>& ComplexOfReps::differential_blocks(int q) const {
  static const std::map<std::pair<std::size_t, std::size_t>, RepMorphism> empty;
  auto it = diff_.find(q);
  return it == diff_.end() ? empty : it->second;
}

Representation ComplexOfReps::term(int q) const {
  const auto& bs = blocks(q);
  if (bs.empty()) return Representation(quiver_, ring_);
  std::vector<Representation> reps;
  for (const auto& b : bs) reps.push_back(*b.rep);
  return direct_sum(reps);
}

std::vector<std::size_t> ComplexOfReps::block_offsets(int q, std::size_t v) const {
  std::vector<std::size_t> out;
  std::size_t at = 0;
  for (const auto& b : blocks(q)) {
    out.push_back(at);
    at += b.rep->rank(v);
  }
  out.push_back(at);
  return out;
}

RepMorphism ComplexOfReps::differential(int q) const {
  const std::size_t n = quiver_->vertex_count();
  RepMorphism d;
  for (std::size_t v = 0; v < n; ++v) {
    auto so = block_offsets(q, v);
    auto to = block_offsets(q + 1, v);
    Matrix m(ring_, to.back(), so.back());
    for (const auto& [key, f] : differential_blocks(q)) m.set_block(to[key.first], so[key.second], f.components[v]);
    d.components.push_back(std::move(m));
  }
  return d;
}

ChainComplex ComplexOfReps::stalk_complex(std::size_t v) const {
  ChainComplex c(ring_);
  for (const auto& [q, bs] : terms_) {
    std::vector<std::string> labels;
    for (const auto& b : bs)
      for (std::size_t k = 0; k < b.rep->rank(v); ++k)
        labels.push_back(b.rep->rank(v) == 1 ? b.name : b.name + "#" + std::to_string(k));
    c.set_degree(q, std::move(labels));
  }
  for (const auto& [q, bs] : terms_)
    if (c.rank(q) && c.rank(q + 1)) c.set_differential(q, differential(q).components[v]);
  return c;
}

ComplexOfReps ComplexOfReps::shifted(int k) const {
  ComplexOfReps out(quiver_, ring_);
  for (const auto& [q, bs] : terms_) out.terms_[q - k] = bs;
  const Scalar sign = (k % 2 == 0) ? 1 : -1;
  for (const auto& [q, blocks] : diff_)
    for (const auto& [key, f] : blocks) out.diff_[q - k][key] = sign * f;
  return out;
}

std::vector<std::string> validate_complex_of_reps(const ComplexOfReps& c) {
  std::vector<std::string> out;
  for (int q : c.support()) {
    for (const auto& [key, f] : c.differential_blocks(q)) {
      auto bad = validate_morphism(f, *c.blocks(q)[key.second].rep, *c.blocks(q + 1)[key.first].rep);
      for (const auto& b : bad) out.push_back("degree " + std::to_string(q) + ": " + b);
    }
  }
  if (!out.empty()) return out;
  for (std::size_t v = 0; v < c.quiver().vertex_count(); ++v)
    for (const auto& viol : validate_complex(c.stalk_complex(v)))
      out.push_back("at " + c.quiver().vertex_name(v) + ": " + viol.message);
  return out;
}

ComplexOfReps stalk(const Block& b, int degree) {
  ComplexOfReps c(b.rep->quiver_ptr(), b.rep->ring());
  c.set_term(degree, {b});
  return c;
}

std::vector<ResolutionViolation> validate_resolution(const ComplexOfReps& j,
                                                     const std::vector<ResolutionTarget>& targets) {
  std::vector<ResolutionViolation> out;
  const Quiver& q = j.quiver();
  std::map<int, Representation> terms;
  for (const auto& t : targets) {
    if (!terms.count(t.degree)) terms.emplace(t.degree, j.term(t.degree));
    auto bad = validate_morphism(t.augmentation, *t.rep, terms.at(t.degree));
    for (const auto& b : bad) out.push_back({"", t.degree, "augmentation: " + b});
  }
  if (!out.empty()) return out;

  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const std::string& name = q.vertex_name(v);
    ChainComplex s = j.stalk_complex(v);
    auto dd = validate_complex(s);
    for (const auto& viol : dd) out.push_back({name, viol.degree, viol.message});
    if (!dd.empty()) continue;

    ChainComplex t(j.ring());
    std::map<int, Matrix> aug;
    for (const auto& tg : targets) {
      std::size_t r = tg.rep->rank(v);
      std::vector<std::string> labels = t.labels(tg.degree);
      for (std::size_t k = 0; k < r; ++k) labels.push_back("t" + std::to_string(labels.size()));
      t.set_degree(tg.degree, labels);
      const Matrix& m = tg.augmentation.components[v];
      auto it = aug.find(tg.degree);
      if (it == aug.end())
        aug.emplace(tg.degree, m);
      else
        it->second = Matrix::hcat(it->second, m);
    }
    ChainMap f{t, s, {}};
    for (auto& [deg, m] : aug)
      if (m.rows() == s.rank(deg) && m.cols() == t.rank(deg)) f.components[deg] = m;
    auto cm = validate_chain_map(f);
    for (const auto& viol : cm) out.push_back({name, viol.degree, "augmentation is not killed by d"});
    if (!cm.empty()) continue;
    QuasiIsoReport r = is_quasi_iso(f);
    if (r.quasi_isomorphism) continue;
    std::map<int, bool> bad;
    for (const auto& [deg, b] : r.cone_betti) bad[deg] = true;
    for (const auto& [deg, tor] : r.cone_torsion) bad[deg] = true;
    for (const auto& [deg, flag] : bad) {
      std::string detail = "not exact at degree " + std::to_string(deg);
      if (r.cone_betti.count(deg)) detail += " (rank " + std::to_string(r.cone_betti.at(deg)) + ")";
      if (r.cone_torsion.count(deg)) detail += " (torsion)";
      out.push_back({name, deg, detail});
    }
  }
  return out;
}

std::vector<ResolutionViolation> validate_resolution(const ComplexOfReps& j, RepresentationPtr target,
                                                     const RepMorphism& augmentation, int placement_degree) {
  return validate_resolution(j, {{placement_degree, std::move(target), augmentation}});
}

}  // namespace homalg
