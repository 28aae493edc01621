#include "tx/algebra.hpp"

#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tx {

Algebra::Algebra(Field f, std::size_t dim, std::vector<Elem> constants, Vec unit, std::string name)
    : f_(f), n_(dim), c_(std::move(constants)), unit_(std::move(unit)), name_(std::move(name)) {
  if (n_ == 0) throw std::invalid_argument("algebra must be nonzero (dim >= 1)");
  if (c_.size() != n_ * n_ * n_) throw std::invalid_argument("structure constant table has wrong size");
  if (unit_.size() != n_) throw std::invalid_argument("unit vector has wrong length");
  for (auto& x : c_) x %= f_.p();
  for (auto& x : unit_) x %= f_.p();
}

Vec Algebra::basis_vector(std::size_t i) const {
  Vec v(n_, 0);
  v.at(i) = 1;
  return v;
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  Vec out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (b[j] == 0) continue;
      Elem s = f_.mul(a[i], b[j]);
      for (std::size_t k = 0; k < n_; ++k) {
        Elem ck = c(i, j, k);
        if (ck) out[k] = f_.add(out[k], f_.mul(s, ck));
      }
    }
  }
  return out;
}

Matrix Algebra::left_mult(const Vec& a) const {
  Matrix m(f_, n_, n_);
  for (std::size_t j = 0; j < n_; ++j) {
    Vec col = multiply(a, basis_vector(j));
    for (std::size_t k = 0; k < n_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Matrix Algebra::right_mult(const Vec& a) const {
  Matrix m(f_, n_, n_);
  for (std::size_t j = 0; j < n_; ++j) {
    Vec col = multiply(basis_vector(j), a);
    for (std::size_t k = 0; k < n_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

bool Algebra::same_structure(const Algebra& o) const {
  return f_ == o.f_ && n_ == o.n_ && c_ == o.c_ && unit_ == o.unit_;
}

std::string Algebra::content_key() const {
  std::ostringstream s;
  s << f_.p() << ':' << n_ << ':';
  for (auto c : c_) s << c << ',';
  s << ':';
  for (auto u : unit_) s << u << ',';
  return s.str();
}

AlgebraPtr make_algebra(Field f, std::size_t dim, std::vector<Elem> constants, Vec unit,
                        std::string name) {
  return std::make_shared<const Algebra>(f, dim, std::move(constants), std::move(unit),
                                         std::move(name));
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_structure(*b);
}

Validation validate_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  for (std::size_t i = 0; i < n; ++i) {
    Vec bi = a.basis_vector(i);
    if (a.multiply(a.unit(), bi) != bi || a.multiply(bi, a.unit()) != bi)
      return Validation::fail("unit law violated at basis element " + std::to_string(i));
  }
  std::vector<Vec> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = a.c(i, j, k);
      prod[i * n + j] = v;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs(n, 0), rhs(n, 0);
        const Vec& ij = prod[i * n + j];
        const Vec& jk = prod[j * n + k];
        for (std::size_t l = 0; l < n; ++l) {
          if (ij[l])
            for (std::size_t m = 0; m < n; ++m) lhs[m] = f.add(lhs[m], f.mul(ij[l], prod[l * n + k][m]));
          if (jk[l])
            for (std::size_t m = 0; m < n; ++m) rhs[m] = f.add(rhs[m], f.mul(jk[l], prod[i * n + l][m]));
        }
        if (lhs != rhs)
          return Validation::fail("associativity violated at triple (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(k) + ")");
      }
  return Validation::pass();
}

AlgebraPtr ground_algebra(Field f) { return make_algebra(f, 1, {1}, {1}, "k"); }

AlgebraPtr opposite_algebra(const AlgebraPtr& a) {
  const std::size_t n = a->dim();
  std::vector<Elem> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = a->c(j, i, k);
  std::string name = a->name();
  if (name.size() >= 3 && name.compare(name.size() - 3, 3, "^op") == 0)
    name = name.substr(0, name.size() - 3);
  else if (!name.empty())
    name += "^op";
  return make_algebra(a->field(), n, std::move(c), a->unit(), name);
}

ProductAlgebra product_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!(a->field() == b->field())) throw std::invalid_argument("product_algebra: field mismatch");
  const std::size_t na = a->dim(), nb = b->dim(), n = na + nb;
  std::vector<Elem> c(n * n * n, 0);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) c[(i * n + j) * n + k] = a->c(i, j, k);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) c[((na + i) * n + na + j) * n + na + k] = b->c(i, j, k);
  Vec unit(n, 0), e1(n, 0), e2(n, 0);
  for (std::size_t i = 0; i < na; ++i) unit[i] = e1[i] = a->unit()[i];
  for (std::size_t i = 0; i < nb; ++i) unit[na + i] = e2[na + i] = b->unit()[i];
  std::string name;
  if (!a->name().empty() && !b->name().empty()) name = a->name() + "x" + b->name();
  Matrix ea(a->field(), n, na), eb(a->field(), n, nb);
  for (std::size_t i = 0; i < na; ++i) ea.at(i, i) = 1;
  for (std::size_t i = 0; i < nb; ++i) eb.at(na + i, i) = 1;
  return {make_algebra(a->field(), n, std::move(c), unit, name), e1, e2, ea, eb};
}

namespace {

struct PathKey {
  std::size_t vertex;  // meaningful only for trivial paths
  std::vector<std::size_t> arrows;
  bool operator<(const PathKey& o) const {
    if (arrows != o.arrows) return arrows < o.arrows;
    return arrows.empty() && vertex < o.vertex;
  }
};

bool contains_relation(const std::vector<std::size_t>& path,
                       const std::vector<std::vector<std::size_t>>& relations) {
  for (const auto& r : relations) {
    if (r.empty() || r.size() > path.size()) continue;
    for (std::size_t s = 0; s + r.size() <= path.size(); ++s) {
      bool match = true;
      for (std::size_t t = 0; t < r.size() && match; ++t) match = path[s + t] == r[t];
      if (match) return true;
    }
  }
  return false;
}

}  // namespace

AlgebraPtr monomial_quiver_algebra(Field f, std::size_t vertices, const std::vector<Arrow>& arrows,
                                   const std::vector<std::vector<std::size_t>>& relations,
                                   std::string name) {
  if (vertices == 0) throw std::invalid_argument("quiver needs at least one vertex");
  for (const auto& a : arrows)
    if (a.source >= vertices || a.target >= vertices) throw std::invalid_argument("arrow endpoint out of range");
  for (const auto& r : relations) {
    if (r.empty()) throw std::invalid_argument("empty relation");
    for (std::size_t t = 0; t < r.size(); ++t) {
      if (r[t] >= arrows.size()) throw std::invalid_argument("relation uses unknown arrow");
      if (t + 1 < r.size() && arrows[r[t]].target != arrows[r[t + 1]].source)
        throw std::invalid_argument("relation is not a path");
    }
  }
  constexpr std::size_t kMaxLength = 64;
  constexpr std::size_t kMaxDim = 4096;
  struct P {
    std::size_t src, tgt;
    std::vector<std::size_t> arrows;
  };
  std::vector<P> paths;
  for (std::size_t v = 0; v < vertices; ++v) paths.push_back({v, v, {}});
  std::vector<std::size_t> frontier;
  for (std::size_t v = 0; v < vertices; ++v) frontier.push_back(v);
  for (std::size_t len = 1; !frontier.empty(); ++len) {
    if (len > kMaxLength || paths.size() > kMaxDim)
      throw std::invalid_argument("quiver with relations has no finite path basis within bound");
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (std::size_t a = 0; a < arrows.size(); ++a) {
        if (arrows[a].source != paths[idx].tgt) continue;
        std::vector<std::size_t> np = paths[idx].arrows;
        np.push_back(a);
        if (contains_relation(np, relations)) continue;
        paths.push_back({paths[idx].src, arrows[a].target, np});
        next.push_back(paths.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  const std::size_t n = paths.size();
  std::map<PathKey, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[{paths[i].src, paths[i].arrows}] = i;
  std::vector<Elem> c(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const P& p = paths[i];
      const P& q = paths[j];
      if (q.tgt != p.src) continue;
      std::vector<std::size_t> cat = q.arrows;
      cat.insert(cat.end(), p.arrows.begin(), p.arrows.end());
      if (!cat.empty() && contains_relation(cat, relations)) continue;
      auto it = index.find({q.src, cat});
      if (it == index.end()) continue;
      c[(i * n + j) * n + it->second] = 1;
    }
  Vec unit(n, 0);
  for (std::size_t v = 0; v < vertices; ++v) unit[v] = 1;
  return make_algebra(f, n, std::move(c), unit, std::move(name));
}

namespace {

Matrix combine_actions(const std::vector<Matrix>& act, const Vec& a, const Field& f, std::size_t d) {
  Matrix out(f, d, d);
  for (std::size_t i = 0; i < act.size(); ++i)
    if (a.at(i)) out = out + act[i].scaled(a[i]);
  return out;
}

bool is_scalar(const Matrix& m, Elem s) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? s : 0u)) return false;
  return true;
}

Validation check_law(const AlgebraPtr& ring, const std::vector<Matrix>& act, bool right,
                     const std::string& what) {
  if (!ring) return Validation::fail(what + ": missing algebra");
  const std::size_t n = ring->dim();
  if (act.size() != n) return Validation::fail(what + ": expected one action matrix per basis element");
  const std::size_t d = act[0].rows();
  for (const auto& a : act)
    if (a.rows() != d || a.cols() != d || !(a.field() == ring->field()))
      return Validation::fail(what + ": action matrices must be square of equal size over the algebra's field");
  const Field& f = ring->field();
  if (!combine_actions(act, ring->unit(), f, d).is_identity())
    return Validation::fail(what + ": unit does not act as identity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec coeff(n);
      for (std::size_t k = 0; k < n; ++k) coeff[k] = right ? ring->c(j, i, k) : ring->c(i, j, k);
      if (act[i] * act[j] != combine_actions(act, coeff, f, d))
        return Validation::fail(what + ": composition law violated at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
    }
  return Validation::pass();
}

}  // namespace

Matrix Module::action_of(const Vec& a) const { return combine_actions(act, a, field(), dim()); }
Matrix RightModule::action_of(const Vec& a) const { return combine_actions(act, a, field(), dim()); }

Validation validate_module(const Module& m) { return check_law(m.ring, m.act, false, "left module"); }

Validation validate_right_module(const RightModule& m) {
  return check_law(m.ring, m.act, true, "right module");
}

Validation validate_bimodule(const Bimodule& m) {
  auto l = check_law(m.left_ring, m.left_act, false, "bimodule left action");
  if (!l) return l;
  auto r = check_law(m.right_ring, m.right_act, true, "bimodule right action");
  if (!r) return r;
  if (m.left_act[0].rows() != m.right_act[0].rows())
    return Validation::fail("bimodule: left and right actions have different dimensions");
  for (std::size_t i = 0; i < m.left_act.size(); ++i)
    for (std::size_t j = 0; j < m.right_act.size(); ++j)
      if (m.left_act[i] * m.right_act[j] != m.right_act[j] * m.left_act[i])
        return Validation::fail("bimodule: left action " + std::to_string(i) +
                                " does not commute with right action " + std::to_string(j));
  return Validation::pass();
}

bool is_module_map(const Module& s, const Module& t, const Matrix& f) {
  if (f.rows() != t.dim() || f.cols() != s.dim()) return false;
  for (std::size_t i = 0; i < s.act.size(); ++i)
    if (f * s.act[i] != t.act[i] * f) return false;
  return true;
}

Validation validate_hom(const ModuleHom& h) {
  if (!same_algebra(h.source.ring, h.target.ring)) return Validation::fail("hom: algebra mismatch");
  if (h.matrix.rows() != h.target.dim() || h.matrix.cols() != h.source.dim())
    return Validation::fail("hom: matrix shape does not match source/target");
  if (!is_module_map(h.source, h.target, h.matrix)) return Validation::fail("hom: does not intertwine actions");
  return Validation::pass();
}

Module regular_module(const AlgebraPtr& a) {
  Module m{a, {}};
  for (std::size_t i = 0; i < a->dim(); ++i) m.act.push_back(a->left_mult(a->basis_vector(i)));
  return m;
}

RightModule regular_right_module(const AlgebraPtr& a) {
  RightModule m{a, {}};
  for (std::size_t i = 0; i < a->dim(); ++i) m.act.push_back(a->right_mult(a->basis_vector(i)));
  return m;
}

Module zero_module(const AlgebraPtr& a) {
  return Module{a, std::vector<Matrix>(a->dim(), Matrix(a->field(), 0, 0))};
}

Module direct_sum(const Module& a, const Module& b) {
  if (!same_algebra(a.ring, b.ring)) throw std::invalid_argument("direct_sum: algebra mismatch");
  Module m{a.ring, {}};
  for (std::size_t i = 0; i < a.act.size(); ++i) m.act.push_back(direct_sum(a.act[i], b.act[i]));
  return m;
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
  Bimodule m{a, a, {}, {}};
  for (std::size_t i = 0; i < a->dim(); ++i) {
    m.left_act.push_back(a->left_mult(a->basis_vector(i)));
    m.right_act.push_back(a->right_mult(a->basis_vector(i)));
  }
  return m;
}

Bimodule zero_bimodule(const AlgebraPtr& left, const AlgebraPtr& right) {
  return Bimodule{left, right, std::vector<Matrix>(left->dim(), Matrix(left->field(), 0, 0)),
                  std::vector<Matrix>(right->dim(), Matrix(left->field(), 0, 0))};
}

Bimodule direct_sum(const Bimodule& a, const Bimodule& b) {
  if (!same_algebra(a.left_ring, b.left_ring) || !same_algebra(a.right_ring, b.right_ring))
    throw std::invalid_argument("direct_sum: bimodule rings differ");
  Bimodule m{a.left_ring, a.right_ring, {}, {}};
  for (std::size_t i = 0; i < a.left_act.size(); ++i) m.left_act.push_back(direct_sum(a.left_act[i], b.left_act[i]));
  for (std::size_t i = 0; i < a.right_act.size(); ++i)
    m.right_act.push_back(direct_sum(a.right_act[i], b.right_act[i]));
  return m;
}

Module left_part(const Bimodule& m) { return Module{m.left_ring, m.left_act}; }
RightModule right_part(const Bimodule& m) { return RightModule{m.right_ring, m.right_act}; }
Module as_left_opposite(const RightModule& m) { return Module{opposite_algebra(m.ring), m.act}; }
RightModule as_right_opposite(const Module& m) { return RightModule{opposite_algebra(m.ring), m.act}; }

Bimodule flip(const Bimodule& m) {
  return Bimodule{opposite_algebra(m.right_ring), opposite_algebra(m.left_ring), m.right_act, m.left_act};
}

Bimodule as_bimodule(const RightModule& w) {
  AlgebraPtr k = ground_algebra(w.field());
  return Bimodule{k, w.ring, {Matrix::identity(w.field(), w.dim())}, w.act};
}

Bimodule as_bimodule(const Module& x) {
  AlgebraPtr k = ground_algebra(x.field());
  return Bimodule{x.ring, k, x.act, {Matrix::identity(x.field(), x.dim())}};
}

Module restrict_scalars(const Module& x, const AlgebraPtr& a, const Matrix& phi) {
  if (phi.rows() != x.ring->dim() || phi.cols() != a->dim())
    throw std::invalid_argument("restrict_scalars: homomorphism shape mismatch");
  Module m{a, {}};
  for (std::size_t i = 0; i < a->dim(); ++i) m.act.push_back(x.action_of(phi.col_vec(i)));
  return m;
}

Matrix HomSpace::element(std::size_t j) const {
  Matrix m(basis.field(), target_dim, source_dim);
  for (std::size_t a = 0; a < target_dim; ++a)
    for (std::size_t b = 0; b < source_dim; ++b) m.at(a, b) = basis(j, a * source_dim + b);
  return m;
}

Matrix HomSpace::combine(const Vec& coeffs) const {
  const Field& f = basis.field();
  Matrix m(f, target_dim, source_dim);
  for (std::size_t j = 0; j < dim(); ++j) {
    if (coeffs.at(j) == 0) continue;
    for (std::size_t a = 0; a < target_dim; ++a)
      for (std::size_t b = 0; b < source_dim; ++b)
        m.at(a, b) = f.add(m(a, b), f.mul(coeffs[j], basis(j, a * source_dim + b)));
  }
  return m;
}

Vec HomSpace::coords(const Matrix& f) const {
  Vec c(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    std::size_t p = pivots[j];
    c[j] = f(p / source_dim, p % source_dim);
  }
  return c;
}

bool HomSpace::contains(const Matrix& f) const {
  return f.rows() == target_dim && f.cols() == source_dim && combine(coords(f)) == f;
}

HomSpace intertwiners(const Field& f, std::size_t source_dim, std::size_t target_dim,
                      const std::vector<Matrix>& src, const std::vector<Matrix>& tgt) {
  if (src.size() != tgt.size()) throw std::invalid_argument("intertwiners: action count mismatch");
  const std::size_t N = source_dim * target_dim;
  Matrix K = Matrix::identity(f, N);
  for (std::size_t i = 0; i < src.size() && K.rows() > 0; ++i) {
    Elem s = src[i].rows() ? src[i](0, 0) : (tgt[i].rows() ? tgt[i](0, 0) : 0);
    if (is_scalar(src[i], s) && is_scalar(tgt[i], s)) continue;
    const std::size_t u = K.rows();
    Matrix C(f, N, u);
    for (std::size_t k = 0; k < u; ++k) {
      Matrix F(f, target_dim, source_dim);
      for (std::size_t a = 0; a < N; ++a) F.at(a / source_dim, a % source_dim) = K(k, a);
      Matrix D = F * src[i] - tgt[i] * F;
      for (std::size_t a = 0; a < N; ++a) C.at(a, k) = D(a / source_dim, a % source_dim);
    }
    K = kernel_basis(C) * K;
  }
  auto rr = rref(K);
  HomSpace h;
  h.target_dim = target_dim;
  h.source_dim = source_dim;
  h.basis = rr.reduced.block(0, 0, rr.rank, N);
  h.pivots = rr.pivot_cols;
  return h;
}

HomSpace hom_space(const Module& m, const Module& n) {
  if (!same_algebra(m.ring, n.ring)) throw std::invalid_argument("hom_space: algebra mismatch");
  return intertwiners(m.field(), m.dim(), n.dim(), m.act, n.act);
}

HomSpace hom_space(const RightModule& m, const RightModule& n) {
  if (!same_algebra(m.ring, n.ring)) throw std::invalid_argument("hom_space: algebra mismatch");
  return intertwiners(m.field(), m.dim(), n.dim(), m.act, n.act);
}

HomSpace hom_space(const Bimodule& m, const Bimodule& n) {
  if (!same_algebra(m.left_ring, n.left_ring) || !same_algebra(m.right_ring, n.right_ring))
    throw std::invalid_argument("hom_space: bimodule rings differ");
  std::vector<Matrix> s = m.left_act, t = n.left_act;
  s.insert(s.end(), m.right_act.begin(), m.right_act.end());
  t.insert(t.end(), n.right_act.begin(), n.right_act.end());
  return intertwiners(m.field(), m.dim(), n.dim(), s, t);
}

TensorProduct tensor_over(const Bimodule& m, const Module& x) {
  if (!same_algebra(m.right_ring, x.ring)) throw std::invalid_argument("tensor_over: ring mismatch");
  const Field& f = x.field();
  const std::size_t dm = m.dim(), dx = x.dim(), N = dm * dx;
  EchelonBasis rel(f, N);
  Matrix Im = Matrix::identity(f, dm), Ix = Matrix::identity(f, dx);
  for (std::size_t i = 0; i < x.ring->dim() && rel.dim() < N; ++i) {
    Matrix B = kron(m.right_act[i], Ix) - kron(Im, x.act[i]);
    for (std::size_t c = 0; c < N && rel.dim() < N; ++c) {
      Vec col = B.col_vec(c);
      bool nz = false;
      for (auto v : col) nz = nz || v != 0;
      if (nz) rel.add(col);
    }
  }
  Quotient q = quotient(rel.subspace());
  TensorProduct t{Module{m.left_ring, {}}, dm, dx, q.proj, q.section};
  for (std::size_t j = 0; j < m.left_act.size(); ++j)
    t.space.act.push_back(q.proj * kron(m.left_act[j], Ix) * q.section);
  return t;
}

TensorProduct tensor_over(const RightModule& w, const Module& x) { return tensor_over(as_bimodule(w), x); }

Matrix tensor_map(const TensorProduct& src, const TensorProduct& tgt, const Matrix& f) {
  if (src.left_dim != tgt.left_dim) throw std::invalid_argument("tensor_map: left factors differ");
  Matrix I = Matrix::identity(f.field(), src.left_dim);
  return tgt.proj * kron(I, f) * src.section;
}

Matrix tensor_map_left(const TensorProduct& src, const TensorProduct& tgt, const Matrix& g) {
  if (src.right_dim != tgt.right_dim) throw std::invalid_argument("tensor_map_left: right factors differ");
  Matrix I = Matrix::identity(g.field(), src.right_dim);
  return tgt.proj * kron(g, I) * src.section;
}

HomModule hom_from_bimodule(const Bimodule& m, const Module& y) {
  if (!same_algebra(m.left_ring, y.ring)) throw std::invalid_argument("hom_from_bimodule: ring mismatch");
  HomModule h{Module{m.right_ring, {}}, intertwiners(y.field(), m.dim(), y.dim(), m.left_act, y.act)};
  const std::size_t d = h.homs.dim();
  for (const auto& rho : m.right_act) {
    Matrix a(y.field(), d, d);
    for (std::size_t k = 0; k < d; ++k) {
      Vec c = h.homs.coords(h.homs.element(k) * rho);
      for (std::size_t r = 0; r < d; ++r) a.at(r, k) = c[r];
    }
    h.module.act.push_back(a);
  }
  return h;
}

Matrix hom_functor_map(const HomModule& src, const HomModule& tgt, const Matrix& f) {
  Matrix out(f.field(), tgt.homs.dim(), src.homs.dim());
  for (std::size_t k = 0; k < src.homs.dim(); ++k) {
    Vec c = tgt.homs.coords(f * src.homs.element(k));
    for (std::size_t r = 0; r < c.size(); ++r) out.at(r, k) = c[r];
  }
  return out;
}

HomIntoBimodule hom_into_bimodule(const Module& x, const Bimodule& n) {
  if (!same_algebra(n.left_ring, x.ring)) throw std::invalid_argument("hom_into_bimodule: ring mismatch");
  HomIntoBimodule h{RightModule{n.right_ring, {}}, intertwiners(x.field(), x.dim(), n.dim(), x.act, n.left_act)};
  const std::size_t d = h.homs.dim();
  for (const auto& rho : n.right_act) {
    Matrix a(x.field(), d, d);
    for (std::size_t k = 0; k < d; ++k) {
      Vec c = h.homs.coords(rho * h.homs.element(k));
      for (std::size_t r = 0; r < d; ++r) a.at(r, k) = c[r];
    }
    h.module.act.push_back(a);
  }
  return h;
}

Matrix hom_precompose_map(const HomIntoBimodule& src, const HomIntoBimodule& tgt, const Matrix& f) {
  Matrix out(f.field(), tgt.homs.dim(), src.homs.dim());
  for (std::size_t k = 0; k < src.homs.dim(); ++k) {
    Vec c = tgt.homs.coords(src.homs.element(k) * f);
    for (std::size_t r = 0; r < c.size(); ++r) out.at(r, k) = c[r];
  }
  return out;
}

RightModule dual_module(const Module& x) {
  RightModule r{x.ring, {}};
  for (const auto& a : x.act) r.act.push_back(a.transpose());
  return r;
}

Module dual_module(const RightModule& x) {
  Module r{x.ring, {}};
  for (const auto& a : x.act) r.act.push_back(a.transpose());
  return r;
}

Bimodule dual_bimodule(const Bimodule& m) {
  Bimodule d{m.right_ring, m.left_ring, {}, {}};
  for (const auto& a : m.right_act) d.left_act.push_back(a.transpose());
  for (const auto& a : m.left_act) d.right_act.push_back(a.transpose());
  return d;
}

Submodule submodule(const Module& m, const Subspace& s) {
  Submodule out{Module{m.ring, {}}, s.basis};
  for (const auto& a : m.act) {
    Matrix img = a * s.basis;
    if (!s.contains(img)) throw std::invalid_argument("submodule: subspace is not invariant");
    out.module.act.push_back(s.coords(img));
  }
  return out;
}

QuotientModule quotient_module(const Module& m, const Subspace& s) {
  Quotient q = quotient(s);
  QuotientModule out{Module{m.ring, {}}, q.proj, q.section};
  for (const auto& a : m.act) {
    if (!s.contains(a * s.basis)) throw std::invalid_argument("quotient_module: subspace is not invariant");
    out.module.act.push_back(q.proj * a * q.section);
  }
  return out;
}

Submodule kernel_module(const ModuleHom& f) { return submodule(f.source, Subspace::kernel(f.matrix)); }
QuotientModule cokernel_module(const ModuleHom& f) { return quotient_module(f.target, Subspace::span(f.matrix)); }
Submodule image_module(const ModuleHom& f) { return submodule(f.target, Subspace::span(f.matrix)); }

bool is_exact_at(const Matrix& f, const Matrix& g) {
  if (f.rows() != g.cols()) throw std::invalid_argument("is_exact_at: maps are not composable");
  if (!(g * f).is_zero()) return false;
  return rank(f) == g.cols() - rank(g);
}

bool is_exact_at(const ModuleHom& f, const ModuleHom& g) { return is_exact_at(f.matrix, g.matrix); }

Subspace spin(const Matrix& v, const std::vector<Matrix>& acts) {
  const Field& f = v.field();
  EchelonBasis eb(f, v.rows());
  std::deque<Vec> queue;
  for (std::size_t j = 0; j < v.cols(); ++j) queue.push_back(v.col_vec(j));
  while (!queue.empty() && eb.dim() < v.rows()) {
    Vec w = std::move(queue.front());
    queue.pop_front();
    if (!eb.add(w)) continue;
    for (const auto& a : acts) queue.push_back(a.apply(w));
  }
  if (eb.dim() == v.rows()) return Subspace::whole(f, v.rows());
  return eb.subspace();
}

namespace {

bool enumerate_small(std::size_t h, Elem p, std::uint64_t budget, std::uint64_t& total) {
  total = 1;
  for (std::size_t i = 0; i < h; ++i) {
    total *= p;
    if (total > budget) return false;
  }
  return true;
}

}  // namespace

std::optional<Matrix> find_isomorphism(const Module& a, const Module& b, std::uint64_t seed) {
  if (!same_algebra(a.ring, b.ring) || a.dim() != b.dim()) return std::nullopt;
  const std::size_t d = a.dim();
  if (d == 0) return Matrix(a.field(), 0, 0);
  HomSpace h = hom_space(a, b);
  if (h.dim() == 0) return std::nullopt;
  if (hom_space(a, a).dim() != h.dim() || hom_space(b, b).dim() != h.dim()) return std::nullopt;
  const Field& f = a.field();
  auto try_coeffs = [&](const Vec& c) -> std::optional<Matrix> {
    Matrix m = h.combine(c);
    if (rank(m) == d) return m;
    return std::nullopt;
  };
  for (std::size_t j = 0; j < h.dim(); ++j) {
    Vec c(h.dim(), 0);
    c[j] = 1;
    if (auto m = try_coeffs(c)) return m;
  }
  std::uint64_t total = 0;
  if (enumerate_small(h.dim(), f.p(), 1u << 14, total)) {
    Vec c(h.dim(), 0);
    for (std::uint64_t t = 1; t < total; ++t) {
      std::uint64_t x = t;
      for (std::size_t j = 0; j < h.dim(); ++j) {
        c[j] = static_cast<Elem>(x % f.p());
        x /= f.p();
      }
      if (auto m = try_coeffs(c)) return m;
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 2048; ++t) {
    Vec c(h.dim());
    for (auto& x : c) x = static_cast<Elem>(rng() % f.p());
    if (auto m = try_coeffs(c)) return m;
  }
  return std::nullopt;
}

bool is_isomorphic(const Module& a, const Module& b, std::uint64_t seed) {
  return find_isomorphism(a, b, seed).has_value();
}

}  // namespace tx
