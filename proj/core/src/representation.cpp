#include "homalg/representation.hpp"

#include <numeric>

#include "homalg/errors.hpp"

namespace homalg {

Representation::Representation(std::shared_ptr<const Quiver> quiver, Ring ring)
    : Representation(quiver, ring, std::vector<std::size_t>(quiver->vertex_count(), 0)) {}

Representation::Representation(std::shared_ptr<const Quiver> quiver, Ring ring, std::vector<std::size_t> ranks)
    : quiver_(std::move(quiver)), ring_(ring), ranks_(std::move(ranks)) {
  if (!quiver_) throw PreconditionError("representation without a quiver");
  if (ranks_.size() != quiver_->vertex_count()) throw PreconditionError("representation: wrong number of stalks");
  for (const auto& a : quiver_->arrows()) arrows_.emplace_back(ring_, ranks_[a.target], ranks_[a.source]);
}

std::size_t Representation::total_rank() const { return std::accumulate(ranks_.begin(), ranks_.end(), std::size_t{0}); }

void Representation::set_arrow(std::size_t a, Matrix m) {
  const auto& arr = quiver_->arrows().at(a);
  if (m.rows() != ranks_[arr.target] || m.cols() != ranks_[arr.source])
    throw PreconditionError("arrow (" + quiver_->vertex_name(arr.source) + "," + quiver_->vertex_name(arr.target) +
                            ") has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                            ", expected " + std::to_string(ranks_[arr.target]) + "x" +
                            std::to_string(ranks_[arr.source]));
  arrows_[a] = m.with_ring(ring_);
}

Matrix Representation::path_map(std::size_t x, std::size_t y) const {
  if (!quiver_->reaches(x, y))
    throw PreconditionError("no path from " + quiver_->vertex_name(x) + " to " + quiver_->vertex_name(y));
  Matrix m = Matrix::identity(ring_, ranks_[x]);
  std::size_t at = x;
  while (at != y) {
    for (std::size_t a : quiver_->outgoing(at)) {
      std::size_t next = quiver_->arrows()[a].target;
      if (quiver_->reaches(next, y)) {
        m = arrows_[a] * m;
        at = next;
        break;
      }
    }
  }
  return m;
}

std::vector<std::string> validate_representation(const Representation& v) {
  std::vector<std::string> out;
  const Quiver& q = v.quiver();
  const std::size_t n = q.vertex_count();
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrows()[a];
    const Matrix& m = v.arrow(a);
    if (m.rows() != v.rank(arr.target) || m.cols() != v.rank(arr.source))
      out.push_back("arrow (" + q.vertex_name(arr.source) + "," + q.vertex_name(arr.target) + ") has wrong shape");
  }
  if (!out.empty()) return out;
  // Composites from x to every y, built in topological order; a disagreement
  // between two last arrows into y is a pair of parallel paths that differ.
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Matrix> to(n);
    std::vector<char> known(n, 0);
    to[x] = Matrix::identity(v.ring(), v.rank(x));
    known[x] = 1;
    for (std::size_t y : q.topological_order()) {
      if (y == x || !q.reaches(x, y)) continue;
      std::size_t first_via = 0;
      for (std::size_t a : q.incoming(y)) {
        std::size_t z = q.arrows()[a].source;
        if (!known[z]) continue;
        Matrix m = v.arrow(a) * to[z];
        if (!known[y]) {
          to[y] = std::move(m);
          known[y] = 1;
          first_via = z;
        } else if (!(m == to[y])) {
          out.push_back("paths " + q.vertex_name(x) + " -> " + q.vertex_name(y) + " through " +
                        q.vertex_name(first_via) + " and " + q.vertex_name(z) + " disagree");
        }
      }
    }
  }
  return out;
}

bool RepMorphism::is_zero() const {
  for (const auto& m : components)
    if (!m.is_zero()) return false;
  return true;
}

RepMorphism zero_morphism(const Representation& v, const Representation& w) {
  RepMorphism f;
  for (std::size_t x = 0; x < v.quiver().vertex_count(); ++x) f.components.emplace_back(v.ring(), w.rank(x), v.rank(x));
  return f;
}

RepMorphism identity_morphism(const Representation& v) {
  RepMorphism f;
  for (std::size_t x = 0; x < v.quiver().vertex_count(); ++x) f.components.push_back(Matrix::identity(v.ring(), v.rank(x)));
  return f;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  if (g.components.size() != f.components.size()) throw PreconditionError("compose: vertex counts differ");
  RepMorphism h;
  h.components.reserve(f.components.size());
  for (std::size_t x = 0; x < f.components.size(); ++x) h.components.push_back(g.components[x] * f.components[x]);
  return h;
}

RepMorphism operator+(const RepMorphism& a, const RepMorphism& b) {
  RepMorphism h = a;
  for (std::size_t x = 0; x < h.components.size(); ++x) h.components[x] += b.components.at(x);
  return h;
}

RepMorphism operator*(const Scalar& s, const RepMorphism& f) {
  RepMorphism h = f;
  for (auto& m : h.components) m *= s;
  return h;
}

bool operator==(const RepMorphism& a, const RepMorphism& b) { return a.components == b.components; }

std::vector<std::string> validate_morphism(const RepMorphism& f, const Representation& v, const Representation& w) {
  std::vector<std::string> out;
  const Quiver& q = v.quiver();
  if (f.components.size() != q.vertex_count()) return {"morphism has wrong number of components"};
  for (std::size_t x = 0; x < q.vertex_count(); ++x)
    if (f.components[x].rows() != w.rank(x) || f.components[x].cols() != v.rank(x))
      out.push_back("component at " + q.vertex_name(x) + " has wrong shape");
  if (!out.empty()) return out;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrows()[a];
    if (!(w.arrow(a) * f.components[arr.source] == f.components[arr.target] * v.arrow(a)))
      out.push_back("square at arrow (" + q.vertex_name(arr.source) + "," + q.vertex_name(arr.target) +
                    ") does not commute");
  }
  return out;
}

HomSpace hom_space(const Representation& v, const Representation& w) {
  if (v.quiver_ptr() != w.quiver_ptr() && v.quiver().vertex_count() != w.quiver().vertex_count())
    throw PreconditionError("hom_space: representations live on different quivers");
  const Quiver& q = v.quiver();
  const std::size_t n = q.vertex_count();
  const Ring ring = v.ring();
  HomSpace h;
  h.ring_ = ring;
  h.source_ranks_ = v.ranks();
  h.target_ranks_ = w.ranks();
  h.offsets_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    h.offsets_[x] = h.unknowns_;
    h.unknowns_ += v.rank(x) * w.rank(x);
  }
  std::size_t equations = 0;
  for (const auto& a : q.arrows()) equations += w.rank(a.target) * v.rank(a.source);

  Matrix basis;
  if (h.unknowns_ == 0) {
    basis = Matrix(ring, 0, 0);
  } else if (equations == 0) {
    basis = Matrix::identity(ring, h.unknowns_);
  } else {
    // W_a f_x - f_y V_a = 0 for each arrow a : x -> y
    Matrix eq(ring, equations, h.unknowns_);
    std::size_t row = 0;
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
      const auto& a = q.arrows()[ai];
      const std::size_t x = a.source, y = a.target;
      const Matrix& wa = w.arrow(ai);
      const Matrix& va = v.arrow(ai);
      for (std::size_t r = 0; r < w.rank(y); ++r)
        for (std::size_t c = 0; c < v.rank(x); ++c, ++row) {
          for (std::size_t k = 0; k < w.rank(x); ++k)
            if (!is_zero(wa(r, k))) eq(row, h.offsets_[x] + k * v.rank(x) + c) += wa(r, k);
          for (std::size_t k = 0; k < v.rank(y); ++k)
            if (!is_zero(va(k, c))) eq(row, h.offsets_[y] + r * v.rank(y) + k) -= va(k, c);
        }
    }
    basis = kernel_basis(eq);
  }
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      if (is_zero(basis(i, j))) continue;
      if (sgn(basis(i, j)) < 0)
        for (std::size_t k = 0; k < basis.rows(); ++k) basis(k, j) = -basis(k, j);
      break;
    }
  }
  h.solver_ = LatticeSolver(basis);
  for (std::size_t j = 0; j < basis.cols(); ++j) h.flat_basis_.push_back(basis.column(j));
  for (std::size_t j = 0; j < basis.cols(); ++j) h.basis_.push_back(h.element(unit_vector(basis.cols(), j)));
  return h;
}

RepMorphism HomSpace::element(const Vector& coords) const {
  if (coords.size() != basis_.size() && coords.size() != flat_basis_.size())
    throw PreconditionError("hom element: wrong coordinate count");
  const std::size_t n = source_ranks_.size();
  Vector flat(unknowns_, Scalar(0));
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (is_zero(coords[j])) continue;
    const Vector& col = flat_basis_[j];
    for (std::size_t i = 0; i < unknowns_; ++i)
      if (!is_zero(col[i])) flat[i] += coords[j] * col[i];
  }
  RepMorphism f;
  for (std::size_t x = 0; x < n; ++x) {
    Matrix m(ring_, target_ranks_[x], source_ranks_[x]);
    for (std::size_t r = 0; r < target_ranks_[x]; ++r)
      for (std::size_t c = 0; c < source_ranks_[x]; ++c) m(r, c) = flat[offsets_[x] + r * source_ranks_[x] + c];
    f.components.push_back(std::move(m));
  }
  return f;
}

Vector HomSpace::coordinates(const RepMorphism& f) const {
  const std::size_t n = source_ranks_.size();
  if (f.components.size() != n) throw PreconditionError("hom coordinates: wrong number of components");
  Vector flat(unknowns_, Scalar(0));
  for (std::size_t x = 0; x < n; ++x) {
    const Matrix& m = f.components[x];
    if (m.rows() != target_ranks_[x] || m.cols() != source_ranks_[x])
      throw PreconditionError("hom coordinates: component shape mismatch");
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) flat[offsets_[x] + r * m.cols() + c] = m(r, c);
  }
  if (flat_basis_.empty()) {
    if (!is_zero(flat)) throw PreconditionError("hom coordinates: not a morphism");
    return {};
  }
  auto y = solver_.solve(flat);
  if (!y) throw PreconditionError("hom coordinates: not a morphism");
  return *y;
}

Representation direct_sum(const std::vector<Representation>& vs) {
  if (vs.empty()) throw PreconditionError("direct_sum of nothing needs a quiver; use the zero representation");
  const auto& q = vs.front().quiver_ptr();
  const std::size_t n = q->vertex_count();
  std::vector<std::size_t> ranks(n, 0);
  for (const auto& v : vs) {
    if (v.quiver().vertex_count() != n) throw PreconditionError("direct_sum: different quivers");
    for (std::size_t x = 0; x < n; ++x) ranks[x] += v.rank(x);
  }
  Representation sum(q, vs.front().ring(), ranks);
  for (std::size_t a = 0; a < q->arrows().size(); ++a) {
    const auto& arr = q->arrows()[a];
    Matrix m(sum.ring(), ranks[arr.target], ranks[arr.source]);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& v : vs) {
      m.set_block(r0, c0, v.arrow(a));
      r0 += v.rank(arr.target);
      c0 += v.rank(arr.source);
    }
    sum.set_arrow(a, std::move(m));
  }
  return sum;
}

Representation direct_sum(std::shared_ptr<const Quiver> q, Ring ring, const std::vector<Representation>& vs) {
  if (vs.empty()) return Representation(std::move(q), ring);
  return direct_sum(vs);
}

namespace {

Representation indicator(std::shared_ptr<const Quiver> q, Ring ring, const std::vector<char>& support) {
  std::vector<std::size_t> ranks(support.begin(), support.end());
  Representation v(q, ring, ranks);
  for (std::size_t a = 0; a < q->arrows().size(); ++a) {
    const auto& arr = q->arrows()[a];
    if (support[arr.source] && support[arr.target]) v.set_arrow(a, Matrix::identity(ring, 1));
  }
  return v;
}

}  // namespace

Representation indecomposable_projective(std::shared_ptr<const Quiver> q, Ring ring, std::size_t x) {
  if (x >= q->vertex_count()) throw PreconditionError("indecomposable_projective: unknown vertex");
  std::vector<char> support(q->vertex_count());
  for (std::size_t y = 0; y < support.size(); ++y) support[y] = q->reaches(x, y);
  return indicator(q, ring, support);
}

Representation closure_representation(std::shared_ptr<const Quiver> q, Ring ring, std::size_t s) {
  if (s >= q->vertex_count()) throw PreconditionError("closure_representation: unknown stratum");
  std::vector<char> support(q->vertex_count());
  for (std::size_t t = 0; t < support.size(); ++t) support[t] = q->reaches(t, s);
  return indicator(q, ring, support);
}

Representation constant_representation(std::shared_ptr<const Quiver> q, Ring ring) {
  return indicator(q, ring, std::vector<char>(q->vertex_count(), 1));
}

KernelData kernel(const RepMorphism& f, const Representation& v, const Representation& w) {
  auto bad = validate_morphism(f, v, w);
  if (!bad.empty()) throw PreconditionError("kernel: " + bad.front());
  const Quiver& q = v.quiver();
  const std::size_t n = q.vertex_count();
  std::vector<Matrix> bases(n);
  std::vector<std::size_t> ranks(n);
  for (std::size_t x = 0; x < n; ++x) {
    bases[x] = v.rank(x) ? kernel_basis(f.components[x]) : Matrix(v.ring(), 0, 0);
    ranks[x] = bases[x].cols();
  }
  KernelData out{Representation(v.quiver_ptr(), v.ring(), ranks), {}};
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrows()[a];
    if (ranks[arr.source] == 0 || ranks[arr.target] == 0) continue;
    LatticeSolver solver(bases[arr.target]);
    Matrix image = v.arrow(a) * bases[arr.source];
    Matrix m(v.ring(), ranks[arr.target], ranks[arr.source]);
    for (std::size_t c = 0; c < image.cols(); ++c) {
      auto y = solver.solve(image.column(c));
      if (!y) throw Error("kernel: arrow does not preserve the kernel");
      m.set_column(c, *y);
    }
    out.kernel.set_arrow(a, std::move(m));
  }
  for (std::size_t x = 0; x < n; ++x)
    out.inclusion.components.push_back(bases[x].cols() ? bases[x] : Matrix(v.ring(), v.rank(x), 0));
  return out;
}

}  // namespace homalg
