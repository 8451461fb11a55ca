#include "homalg/dg_algebra.hpp"

#include <algorithm>
#include <set>

#include "homalg/errors.hpp"

namespace homalg {

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (is_zero(a) || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  auto i = y.begin();
  auto j = x.begin();
  while (i != y.end() || j != x.end()) {
    if (j == x.end() || (i != y.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == y.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      Scalar s = i->second + a * j->second;
      if (!is_zero(s)) out.emplace_back(i->first, std::move(s));
      ++i, ++j;
    }
  }
  y = std::move(out);
}

SparseVec operator+(const SparseVec& a, const SparseVec& b) {
  SparseVec y = a;
  axpy(y, 1, b);
  return y;
}

SparseVec operator-(const SparseVec& a, const SparseVec& b) {
  SparseVec y = a;
  axpy(y, -1, b);
  return y;
}

SparseVec scaled(const Scalar& a, const SparseVec& x) {
  SparseVec y;
  axpy(y, a, x);
  return y;
}

SparseVec sparse_from_dense(const Vector& v, std::size_t offset) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) out.emplace_back(offset + i, v[i]);
  return out;
}

Vector dense_from_sparse(const SparseVec& v, std::size_t size, std::size_t offset) {
  Vector out(size, Scalar(0));
  for (const auto& [i, c] : v) {
    if (i < offset || i >= offset + size) throw PreconditionError("dense_from_sparse: index outside range");
    out[i - offset] = c;
  }
  return out;
}

SparseVec single(std::size_t i, const Scalar& c) {
  if (is_zero(c)) return {};
  return {{i, c}};
}

DgAlgebra::DgAlgebra(Ring ring, std::vector<BasisElement> basis)
    : ring_(ring), basis_(std::move(basis)), products_(basis_.size()), diff_(basis_.size()) {
  for (std::size_t i = 1; i < basis_.size(); ++i)
    if (basis_[i].degree < basis_[i - 1].degree) throw PreconditionError("dg algebra basis must be sorted by degree");
}

std::vector<int> DgAlgebra::degrees() const {
  std::vector<int> out;
  for (const auto& b : basis_)
    if (out.empty() || out.back() != b.degree) out.push_back(b.degree);
  return out;
}

std::size_t DgAlgebra::degree_offset(int m) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), m,
                             [](const BasisElement& b, int deg) { return b.degree < deg; });
  return static_cast<std::size_t>(it - basis_.begin());
}

std::size_t DgAlgebra::degree_rank(int m) const {
  auto lo = std::lower_bound(basis_.begin(), basis_.end(), m,
                             [](const BasisElement& b, int deg) { return b.degree < deg; });
  auto hi = std::upper_bound(basis_.begin(), basis_.end(), m,
                             [](int deg, const BasisElement& b) { return deg < b.degree; });
  return static_cast<std::size_t>(hi - lo);
}

std::optional<std::size_t> DgAlgebra::find(const std::string& label, int degree) const {
  std::size_t lo = degree_offset(degree), n = degree_rank(degree);
  for (std::size_t i = lo; i < lo + n; ++i)
    if (basis_[i].label == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> DgAlgebra::find(const std::string& label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].label == label) return i;
  return std::nullopt;
}

std::size_t DgAlgebra::index(const std::string& label, int degree) const {
  auto i = find(label, degree);
  if (!i) throw PreconditionError("no basis element '" + label + "' in degree " + std::to_string(degree));
  return *i;
}

void DgAlgebra::set_product(std::size_t i, std::size_t j, SparseVec v) {
  const int deg = degree(i) + degree(j);
  for (const auto& [k, c] : v)
    if (k >= dim() || degree(k) != deg)
      throw PreconditionError("product " + label(i) + "*" + label(j) + " is not homogeneous of degree " +
                              std::to_string(deg));
  if (v.empty())
    products_.at(i).erase(j);
  else
    products_.at(i)[j] = std::move(v);
}

const SparseVec& DgAlgebra::product(std::size_t i, std::size_t j) const {
  static const SparseVec zero;
  const auto& row = products_.at(i);
  auto it = row.find(j);
  return it == row.end() ? zero : it->second;
}

void DgAlgebra::set_differential(std::size_t i, SparseVec v) {
  for (const auto& [k, c] : v)
    if (k >= dim() || degree(k) != degree(i) + 1)
      throw PreconditionError("differential of " + label(i) + " is not homogeneous of degree " +
                              std::to_string(degree(i) + 1));
  diff_.at(i) = std::move(v);
}

bool DgAlgebra::has_zero_differential() const {
  return std::all_of(diff_.begin(), diff_.end(), [](const SparseVec& v) { return v.empty(); });
}

SparseVec DgAlgebra::multiply(const SparseVec& a, const SparseVec& b) const {
  std::map<std::size_t, Scalar> acc;
  for (const auto& [i, x] : a) {
    const auto& row = products_.at(i);
    if (row.empty()) continue;
    for (const auto& [j, y] : b) {
      auto it = row.find(j);
      if (it == row.end()) continue;
      Scalar xy = x * y;
      for (const auto& [k, c] : it->second) acc[k] += xy * c;
    }
  }
  SparseVec out;
  for (auto& [k, c] : acc)
    if (!is_zero(c)) out.emplace_back(k, std::move(c));
  return out;
}

SparseVec DgAlgebra::d(const SparseVec& a) const {
  SparseVec out;
  for (const auto& [i, x] : a) axpy(out, x, diff_.at(i));
  return out;
}

std::optional<int> DgAlgebra::degree_of(const SparseVec& a) const {
  if (a.empty()) return std::nullopt;
  int deg = degree(a.front().first);
  for (const auto& [i, c] : a)
    if (degree(i) != deg) throw PreconditionError("element " + format(a) + " is not homogeneous");
  return deg;
}

Matrix DgAlgebra::differential_matrix(int m) const {
  const std::size_t src = degree_offset(m), ns = degree_rank(m);
  const std::size_t dst = degree_offset(m + 1), nt = degree_rank(m + 1);
  Matrix out(ring_, nt, ns);
  for (std::size_t j = 0; j < ns; ++j)
    for (const auto& [k, c] : diff_[src + j]) out(k - dst, j) = c;
  return out;
}

ChainComplex DgAlgebra::complex() const {
  ChainComplex c(ring_);
  for (int m : degrees()) {
    std::vector<std::string> labels;
    std::size_t lo = degree_offset(m), n = degree_rank(m);
    for (std::size_t i = lo; i < lo + n; ++i) labels.push_back(basis_[i].label);
    c.set_degree(m, std::move(labels));
  }
  for (int m : degrees())
    if (degree_rank(m + 1)) c.set_differential(m, differential_matrix(m));
  return c;
}

std::string DgAlgebra::format(const SparseVec& v) const {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : v) {
    bool neg = sgn(c) < 0;
    Scalar mag = neg ? Scalar(-c) : c;
    if (!out.empty())
      out += neg ? " - " : " + ";
    else if (neg)
      out += "-";
    if (mag != 1) out += mag.get_str() + "*";
    out += basis_[i].label;
  }
  return out;
}

namespace {

std::string triple(const DgAlgebra& a, std::size_t i, std::size_t j, std::size_t k) {
  return "(" + a.label(i) + ", " + a.label(j) + ", " + a.label(k) + ")";
}

}  // namespace

std::vector<std::string> validate_dg_algebra(const DgAlgebra& a) {
  std::vector<std::string> out;
  const std::size_t n = a.dim();

  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [k, c] : a.differential(i))
      if (a.degree(k) != a.degree(i) + 1) out.push_back("differential of " + a.label(i) + " has wrong degree");
    for (const auto& [j, v] : a.right_products(i))
      for (const auto& [k, c] : v)
        if (a.degree(k) != a.degree(i) + a.degree(j))
          out.push_back("product " + a.label(i) + "*" + a.label(j) + " has wrong degree");
  }
  if (!out.empty()) return out;

  // d^2 = 0
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec dd = a.d(a.differential(i));
    if (!dd.empty()) out.push_back("d^2(" + a.label(i) + ") = " + a.format(dd));
  }

  // left partners: L[j] = {i : b_i b_j != 0}; D^-1[l] = {j : l in supp d(b_j)}
  std::vector<std::vector<std::size_t>> left(n), dinv(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [j, v] : a.right_products(i)) left[j].push_back(i);
    for (const auto& [l, c] : a.differential(i)) dinv[l].push_back(i);
  }

  // Leibniz: d(b_i b_j) = d(b_i) b_j + (-1)^{|i|} b_i d(b_j)
  for (std::size_t i = 0; i < n; ++i) {
    std::set<std::size_t> cand;
    for (const auto& [j, v] : a.right_products(i)) {
      cand.insert(j);
      for (std::size_t jj : dinv[j]) cand.insert(jj);
    }
    for (const auto& [l, c] : a.differential(i))
      for (const auto& [j, v] : a.right_products(l)) cand.insert(j);
    const Scalar sign = (a.degree(i) % 2 == 0) ? 1 : -1;
    for (std::size_t j : cand) {
      SparseVec lhs = a.d(a.product(i, j));
      SparseVec rhs = a.multiply(a.differential(i), single(j));
      axpy(rhs, sign, a.multiply(single(i), a.differential(j)));
      if (lhs != rhs)
        out.push_back("Leibniz fails on (" + a.label(i) + ", " + a.label(j) + "): " + a.format(lhs) +
                      " != " + a.format(rhs));
    }
  }

  // associativity over triples where some side can be nonzero
  for (std::size_t j = 0; j < n; ++j) {
    std::set<std::pair<std::size_t, std::size_t>> cand;  // (i, k)
    for (const auto& [k, v] : a.right_products(j)) {
      for (std::size_t i : left[j]) cand.emplace(i, k);
      for (const auto& [l, c] : v)
        for (std::size_t i : left[l]) cand.emplace(i, k);
    }
    for (std::size_t i : left[j])
      for (const auto& [l, c] : a.product(i, j))
        for (const auto& [k, v] : a.right_products(l)) cand.emplace(i, k);
    for (auto [i, k] : cand) {
      SparseVec lhs = a.multiply(a.product(i, j), single(k));
      SparseVec rhs = a.multiply(single(i), a.product(j, k));
      if (lhs != rhs) out.push_back("associativity fails on " + triple(a, i, j, k));
    }
  }

  // unit
  const SparseVec& u = a.unit();
  if (u.empty() && n > 0) out.push_back("unit is zero");
  for (const auto& [k, c] : u)
    if (a.degree(k) != 0) out.push_back("unit is not in degree 0");
  if (!a.d(u).empty()) out.push_back("unit is not a cycle");
  for (std::size_t i = 0; i < n; ++i) {
    if (a.multiply(u, single(i)) != single(i)) out.push_back("unit is not a left identity on " + a.label(i));
    if (a.multiply(single(i), u) != single(i)) out.push_back("unit is not a right identity on " + a.label(i));
  }
  return out;
}

}  // namespace homalg
