#include "homalg/chain_complex.hpp"

#include <algorithm>

#include "homalg/errors.hpp"

namespace homalg {

void ChainComplex::set_degree(int q, std::vector<std::string> labels) {
  if (labels.empty())
    labels_.erase(q);
  else
    labels_[q] = std::move(labels);
}

void ChainComplex::set_rank(int q, std::size_t rank) {
  std::vector<std::string> labels;
  labels.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) labels.push_back("x" + std::to_string(q) + "_" + std::to_string(i));
  set_degree(q, std::move(labels));
}

void ChainComplex::set_differential(int q, Matrix d) {
  if (d.rows() != rank(q + 1) || d.cols() != rank(q))
    throw PreconditionError("differential d^" + std::to_string(q) + " has shape " + std::to_string(d.rows()) +
                            "x" + std::to_string(d.cols()) + ", expected " + std::to_string(rank(q + 1)) + "x" +
                            std::to_string(rank(q)));
  if (d.ring() != ring_) d = d.with_ring(ring_);
  if (d.is_zero())
    differentials_.erase(q);
  else
    differentials_[q] = std::move(d);
}

std::size_t ChainComplex::rank(int q) const {
  auto it = labels_.find(q);
  return it == labels_.end() ? 0 : it->second.size();
}

const std::vector<std::string>& ChainComplex::labels(int q) const {
  static const std::vector<std::string> empty;
  auto it = labels_.find(q);
  return it == labels_.end() ? empty : it->second;
}

Matrix ChainComplex::differential(int q) const {
  auto it = differentials_.find(q);
  if (it != differentials_.end() && it->second.rows() == rank(q + 1) && it->second.cols() == rank(q))
    return it->second;
  return Matrix(ring_, rank(q + 1), rank(q));
}

std::vector<int> ChainComplex::support() const {
  std::vector<int> s;
  for (const auto& [q, l] : labels_)
    if (!l.empty()) s.push_back(q);
  return s;
}

int ChainComplex::min_degree() const {
  auto s = support();
  return s.empty() ? 0 : s.front();
}

int ChainComplex::max_degree() const {
  auto s = support();
  return s.empty() ? 0 : s.back();
}

std::vector<Violation> validate_complex(const ChainComplex& c) {
  std::vector<Violation> out;
  auto s = c.support();
  if (s.empty()) return out;
  for (int q = s.front() - 1; q <= s.back(); ++q) {
    if (c.has_differential(q)) {
      Matrix d = c.differential(q);
      if (d.rows() != c.rank(q + 1) || d.cols() != c.rank(q))
        out.push_back({q, "differential shape does not match ranks"});
    }
    Matrix dd = c.differential(q + 1) * c.differential(q);
    if (!dd.is_zero()) out.push_back({q, "d^" + std::to_string(q + 1) + " d^" + std::to_string(q) + " != 0"});
  }
  return out;
}

std::size_t CohomologyProfile::betti(int q) const {
  auto it = groups.find(q);
  return it == groups.end() ? 0 : it->second.betti();
}

std::vector<Scalar> CohomologyProfile::torsion(int q) const {
  auto it = groups.find(q);
  return it == groups.end() ? std::vector<Scalar>{} : it->second.torsion();
}

bool CohomologyProfile::is_zero() const {
  return std::all_of(groups.begin(), groups.end(), [](const auto& g) { return g.second.is_zero(); });
}

CohomologyProfile cohomology(const ChainComplex& c) {
  auto bad = validate_complex(c);
  if (!bad.empty()) throw PreconditionError("cohomology: invalid complex (" + bad.front().message + ")");
  CohomologyProfile out;
  auto s = c.support();
  if (s.empty()) return out;
  for (int q = s.front(); q <= s.back(); ++q) {
    Matrix ker = kernel_basis(c.differential(q));
    out.groups.emplace(q, subquotient(ker, c.differential(q - 1)));
  }
  return out;
}

bool CohomologyRanks::acyclic() const {
  for (const auto& [q, b] : betti)
    if (b != 0) return false;
  for (const auto& [q, t] : torsion)
    if (!t.empty()) return false;
  return true;
}

CohomologyRanks cohomology_ranks(const ChainComplex& c) {
  auto bad = validate_complex(c);
  if (!bad.empty()) throw PreconditionError("cohomology: invalid complex (" + bad.front().message + ")");
  CohomologyRanks out;
  auto s = c.support();
  if (s.empty()) return out;
  std::map<int, std::size_t> rk;
  std::map<int, std::vector<Scalar>> factors;
  for (int q = s.front() - 1; q <= s.back(); ++q) {
    Matrix d = c.differential(q);
    if (d.empty()) {
      rk[q] = 0;
      continue;
    }
    if (c.ring() == Ring::integers) {
      auto inv = invariant_factors(d);
      rk[q] = inv.size();
      for (const auto& f : inv)
        if (f != 1) factors[q + 1].push_back(f);
    } else {
      rk[q] = rank(d);
    }
  }
  for (int q = s.front(); q <= s.back(); ++q) {
    out.betti[q] = c.rank(q) - rk[q] - rk[q - 1];
    if (factors.count(q)) out.torsion[q] = factors[q];
  }
  return out;
}

Matrix ChainMap::component(int q) const {
  auto it = components.find(q);
  if (it != components.end()) return it->second;
  return Matrix(target.ring(), target.rank(q), source.rank(q));
}

ChainMap identity_map(const ChainComplex& c) {
  ChainMap f{c, c, {}};
  for (int q : c.support()) f.components[q] = Matrix::identity(c.ring(), c.rank(q));
  return f;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  ChainMap h{f.source, g.target, {}};
  for (int q : f.source.support()) h.components[q] = g.component(q) * f.component(q);
  return h;
}

std::vector<Violation> validate_chain_map(const ChainMap& f) {
  std::vector<Violation> out;
  for (const auto& [q, m] : f.components)
    if (m.rows() != f.target.rank(q) || m.cols() != f.source.rank(q))
      out.push_back({q, "component shape mismatch"});
  if (!out.empty()) return out;
  std::vector<int> degrees = f.source.support();
  for (int q : f.target.support()) degrees.push_back(q);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  for (int q : degrees) {
    for (int p : {q - 1, q}) {
      Matrix lhs = f.target.differential(p) * f.component(p);
      Matrix rhs = f.component(p + 1) * f.source.differential(p);
      if (!(lhs == rhs)) out.push_back({p, "f does not commute with d in degree " + std::to_string(p)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) { return a.degree < b.degree; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Violation& a, const Violation& b) { return a.degree == b.degree; }),
            out.end());
  return out;
}

ChainComplex mapping_cone(const ChainMap& f) {
  auto bad = validate_chain_map(f);
  if (!bad.empty()) throw PreconditionError("mapping_cone: not a chain map (" + bad.front().message + ")");
  const ChainComplex& s = f.source;
  const ChainComplex& t = f.target;
  ChainComplex cone(t.ring());
  int lo = std::min(s.min_degree() - 1, t.min_degree());
  int hi = std::max(s.max_degree() - 1, t.max_degree());
  if (s.is_zero()) lo = t.min_degree(), hi = t.max_degree();
  if (t.is_zero()) lo = s.min_degree() - 1, hi = s.max_degree() - 1;
  for (int q = lo; q <= hi; ++q) {
    std::vector<std::string> labels;
    for (const auto& l : s.labels(q + 1)) labels.push_back("s:" + l);
    for (const auto& l : t.labels(q)) labels.push_back("t:" + l);
    cone.set_degree(q, std::move(labels));
  }
  for (int q = lo; q < hi; ++q) {
    std::size_t sa = s.rank(q + 1), ta = t.rank(q);
    std::size_t sb = s.rank(q + 2), tb = t.rank(q + 1);
    Matrix d(t.ring(), sb + tb, sa + ta);
    d.set_block(0, 0, -s.differential(q + 1));
    d.set_block(sb, 0, f.component(q + 1));
    d.set_block(sb, sa, t.differential(q));
    cone.set_differential(q, std::move(d));
  }
  return cone;
}

QuasiIsoReport is_quasi_iso(const ChainMap& f) {
  CohomologyRanks r = cohomology_ranks(mapping_cone(f));
  QuasiIsoReport out;
  out.quasi_isomorphism = r.acyclic();
  out.cone_betti = r.betti;
  out.cone_torsion = r.torsion;
  return out;
}

ChainComplex shift(const ChainComplex& c, int k) {
  ChainComplex out(c.ring());
  for (int q : c.support()) out.set_degree(q - k, c.labels(q));
  Scalar sign = (k % 2 == 0) ? 1 : -1;
  for (int q : c.support()) {
    Matrix d = c.differential(q);
    if (d.is_zero()) continue;
    d *= sign;
    out.set_differential(q - k, std::move(d));
  }
  return out;
}

long euler_characteristic(const ChainComplex& c) {
  long chi = 0;
  for (int q : c.support()) chi += (q % 2 == 0 ? 1 : -1) * static_cast<long>(c.rank(q));
  return chi;
}

}  // namespace homalg
