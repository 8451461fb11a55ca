#include "support/properties.hpp"

#include <random>
#include <sstream>

#include "homalg/dg_constructions.hpp"
#include "homalg/smith.hpp"
#include "homalg/sphere_models.hpp"
#include "support/oracles.hpp"

namespace properties {

using namespace homalg;

void Result::merge(const Result& r) {
  cases += r.cases;
  failures.insert(failures.end(), r.failures.begin(), r.failures.end());
}

namespace {

bool is_diagonal(const Matrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && !is_zero(d(i, j))) return false;
  return true;
}

bool is_unit(const Scalar& x) { return x == 1 || x == -1; }

std::string check_smith(const Matrix& m) {
  SmithForm s = smith_normal_form(m);
  if (!(s.left * m * s.right == s.diagonal)) return "D != U M V";
  if (!is_unit(oracle::determinant(s.left))) return "U is not unimodular";
  if (!is_unit(oracle::determinant(s.right))) return "V is not unimodular";
  if (!is_diagonal(s.diagonal)) return "D is not diagonal";
  const std::size_t r = std::min(m.rows(), m.cols());
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const Scalar& d = s.diagonal(i, i);
    if (sgn(d) < 0) return "negative diagonal entry";
    if (is_zero(d)) {
      for (std::size_t j = i + 1; j < r; ++j)
        if (!is_zero(s.diagonal(j, j))) return "zero before a nonzero diagonal entry";
      break;
    }
    ++nonzero;
    if (i + 1 < r && !is_zero(s.diagonal(i + 1, i + 1))) {
      mpz_class a = d.get_num(), b = s.diagonal(i + 1, i + 1).get_num();
      if (b % a != 0) return "divisibility chain broken";
    }
  }
  if (nonzero != oracle::rank_q(m)) return "rank mismatch";
  if (m.rows() == m.cols()) {
    Scalar det = abs(oracle::determinant(m));
    if (!is_zero(det)) {
      Scalar prod = 1;
      for (std::size_t i = 0; i < r; ++i) prod *= s.diagonal(i, i);
      if (prod != det) return "product of invariant factors differs from |det|";
    }
  }
  return {};
}

DgAlgebraPtr end_of(const ModelResolution& r) { return end_algebra(r); }

// f -> (-1)^{k |f|} f from the basis of a to the equally labeled basis of b
std::optional<SparseVec> twist(const DgAlgebra& a, const DgAlgebra& b, const SparseVec& v, int k) {
  SparseVec out;
  for (const auto& [i, c] : v) {
    auto j = b.find(a.label(i), a.degree(i));
    if (!j) return std::nullopt;
    const bool odd = ((k * a.degree(i)) % 2) != 0;
    axpy(out, odd ? Scalar(-c) : c, single(*j));
  }
  return out;
}

}  // namespace

Result smith_invariants(std::size_t count, unsigned seed) {
  Result r;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, 20);
  std::uniform_int_distribution<int> kind(0, 3);
  for (std::size_t c = 0; c < count; ++c) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    Matrix m = oracle::random_matrix(rng, rows, cols, 10);
    // force some rank deficiency in a quarter of the cases
    if (kind(rng) == 0 && rows > 1)
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = 2 * m(0, j) - m(rows / 2, j);
    ++r.cases;
    std::string err = check_smith(m);
    if (!err.empty()) r.failures.push_back("smith case " + std::to_string(c) + ": " + err);
  }
  return r;
}

std::vector<NamedAlgebra> scenario_algebras(int max_n) {
  std::vector<NamedAlgebra> out;
  SphereModel two = build_An(2);
  out.emplace_back("trivial End", end_of(resolution_trivial(two)));
  out.emplace_back("one-point End", end_of(resolution_one_point(two)));
  for (int n = 2; n <= max_n; ++n) {
    const std::string tag = " (n=" + std::to_string(n) + ")";
    DgAlgebraPtr e = end_of(resolution_n_points(build_An(n)));
    NPointChain chain = formality_chain_n_points(e, n);
    out.emplace_back("n-point End" + tag, e);
    out.emplace_back("n-point subalgebra" + tag, chain.u.algebra);
    out.emplace_back("n-point quotient" + tag, chain.quotient.algebra);
    out.emplace_back("n-point formal algebra" + tag, chain.cohomology.algebra);
  }
  for (int n = 2; n <= 10; ++n) {
    DeRhamModel m = de_rham_model(n);
    const std::string tag = " (n=" + std::to_string(n) + ")";
    out.emplace_back("de Rham model" + tag, m.algebra);
    out.emplace_back("de Rham cohomology" + tag, m.cohomology.algebra);
  }
  return out;
}

Result dg_axioms(const std::vector<NamedAlgebra>& algebras) {
  Result r;
  for (const auto& [name, ap] : algebras) {
    const DgAlgebra& a = *ap;
    ++r.cases;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!a.d(a.differential(i)).empty()) r.failures.push_back(name + ": d^2 != 0 on " + a.label(i));
      for (std::size_t j = 0; j < a.dim(); ++j) {
        SparseVec lhs = a.d(a.product(i, j));
        SparseVec rhs = a.multiply(a.differential(i), single(j));
        SparseVec second = a.multiply(single(i), a.differential(j));
        if (a.degree(i) % 2 == 0)
          rhs = rhs + second;
        else
          rhs = rhs - second;
        if (lhs != rhs) r.failures.push_back(name + ": Leibniz fails on " + a.label(i) + ", " + a.label(j));
      }
    }
  }
  return r;
}

std::vector<NamedComplex> scenario_complexes(const std::vector<NamedAlgebra>& algebras, unsigned seed) {
  std::vector<NamedComplex> out;
  for (const auto& [name, a] : algebras) out.emplace_back(name, a->complex());
  SphereModel two = build_An(2);
  std::vector<std::pair<std::string, ModelResolution>> res = {{"trivial", resolution_trivial(two)},
                                                              {"one-point", resolution_one_point(two)}};
  for (int n = 2; n <= 4; ++n) res.emplace_back("n-point n=" + std::to_string(n), resolution_n_points(build_An(n)));
  for (const auto& [name, r] : res)
    for (std::size_t v = 0; v < r.complex.quiver().vertex_count(); ++v)
      out.emplace_back(name + " stalk " + r.complex.quiver().vertex_name(v), r.complex.stalk_complex(v));
  std::mt19937 rng(seed);
  for (int i = 0; i < 50; ++i) out.emplace_back("random complex " + std::to_string(i), oracle::random_known_complex(rng, 4).complex);
  return out;
}

Result euler_identity(const std::vector<NamedComplex>& complexes) {
  Result r;
  for (const auto& [name, c] : complexes) {
    ++r.cases;
    if (c.is_zero()) continue;
    long chi = 0;
    for (int q = c.min_degree(); q <= c.max_degree(); ++q) {
      long b = oracle::betti_q(c, q);
      chi += (q % 2 == 0) ? b : -b;
    }
    if (chi != euler_characteristic(c)) {
      std::ostringstream os;
      os << name << ": chain Euler characteristic " << euler_characteristic(c) << ", cohomology " << chi;
      r.failures.push_back(os.str());
    }
  }
  return r;
}

Result end_shift_invariance() {
  Result r;
  SphereModel two = build_An(2);
  ModelResolution base = resolution_trivial(two);
  DgAlgebraPtr e0 = end_algebra(base);
  CohomologyRanks h0 = cohomology_ranks(e0->complex());
  for (int k = -2; k <= 2; ++k) {
    ++r.cases;
    const std::string tag = "shift " + std::to_string(k) + ": ";
    DgAlgebraPtr ek = end_dg_algebra(base.complex.shifted(k), sphere_block_label);
    if (ek->dim() != e0->dim()) {
      r.failures.push_back(tag + "dimension differs");
      continue;
    }
    bool labels = true;
    for (std::size_t i = 0; i < e0->dim(); ++i) {
      auto img = twist(*e0, *ek, single(i), k);
      auto d = twist(*e0, *ek, e0->differential(i), k);
      if (!img || !d) {
        labels = false;
        break;
      }
      if (ek->d(*img) != *d) r.failures.push_back(tag + "differential differs on " + e0->label(i));
      for (std::size_t j = 0; j < e0->dim(); ++j) {
        auto prod = twist(*e0, *ek, e0->product(i, j), k);
        auto rhs = ek->multiply(*img, *twist(*e0, *ek, single(j), k));
        if (!prod || *prod != rhs) r.failures.push_back(tag + "product differs on " + e0->label(i) + ", " + e0->label(j));
      }
    }
    if (!labels) {
      r.failures.push_back(tag + "labels differ");
      continue;
    }
    if (twist(*e0, *ek, e0->unit(), k) != ek->unit()) r.failures.push_back(tag + "unit differs");
    if (cohomology_ranks(ek->complex()).betti != h0.betti) r.failures.push_back(tag + "cohomology differs");
  }
  return r;
}

Result ring_agreement(int max_n) {
  Result r;
  auto betti = [](const ChainComplex& c) {
    auto b = cohomology_ranks(c).betti;
    std::erase_if(b, [](const auto& kv) { return kv.second == 0; });
    return b;
  };
  auto compare = [&](const std::string& name, const ChainComplex& z, const ChainComplex& q) {
    ++r.cases;
    if (betti(z) != betti(q)) r.failures.push_back(name + ": betti numbers differ between Z and Q");
  };
  SphereModel tz = build_An(2, Ring::integers), tq = build_An(2, Ring::rationals);
  compare("trivial End", end_algebra(resolution_trivial(tz))->complex(), end_algebra(resolution_trivial(tq))->complex());
  compare("one-point End", end_algebra(resolution_one_point(tz))->complex(),
          end_algebra(resolution_one_point(tq))->complex());
  for (int n = 2; n <= max_n; ++n) {
    const std::string tag = " (n=" + std::to_string(n) + ")";
    DgAlgebraPtr ez = end_algebra(resolution_n_points(build_An(n, Ring::integers)));
    DgAlgebraPtr eq = end_algebra(resolution_n_points(build_An(n, Ring::rationals)));
    compare("n-point End" + tag, ez->complex(), eq->complex());
    NPointChain cz = formality_chain_n_points(ez, n), cq = formality_chain_n_points(eq, n);
    compare("n-point subalgebra" + tag, cz.u.algebra->complex(), cq.u.algebra->complex());
    compare("n-point ideal" + tag, cz.ideal.complex(), cq.ideal.complex());
    compare("n-point quotient" + tag, cz.quotient.algebra->complex(), cq.quotient.algebra->complex());
  }
  return r;
}

}  // namespace properties
