#include "tx/morita.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "tx/catalog.hpp"

namespace tx {

namespace {

Matrix embed_block(const Field& f, std::size_t rows, std::size_t cols, std::size_t r0, std::size_t c0,
                   const Matrix& b) {
  Matrix m(f, rows, cols);
  m.set_block(r0, c0, b);
  return m;
}

struct TensorPart {
  const TensorProduct* small;
  std::size_t m_offset;
  std::size_t x_offset;
};

// Map from the direct sum of smaller tensor products into big, induced by
// the inclusions of their factors.
Matrix tensor_split(const TensorProduct& big, const std::vector<TensorPart>& parts) {
  const Field& f = big.proj.field();
  std::vector<Matrix> cols;
  for (const auto& p : parts) {
    Matrix L(f, big.left_dim * big.right_dim, p.small->left_dim * p.small->right_dim);
    for (std::size_t a = 0; a < p.small->left_dim; ++a)
      for (std::size_t b = 0; b < p.small->right_dim; ++b)
        L.at((p.m_offset + a) * big.right_dim + p.x_offset + b, a * p.small->right_dim + b) = 1;
    cols.push_back(big.proj * L * p.small->section);
  }
  return hstack(cols, f, big.space.dim());
}

Matrix invert_or_throw(const Matrix& m, const char* what) {
  auto inv = inverse(m);
  if (!inv) throw std::logic_error(std::string(what) + ": identification is not invertible");
  return *inv;
}

// Basis change making the action of the idempotent e block diagonal: the
// image of e first, then the image of 1 - e.
struct Split {
  Matrix s;
  Matrix s_inv;
  std::size_t first_dim = 0;
};

Split split_by_idempotent(const Field& f, const Matrix& e) {
  const std::size_t n = e.rows();
  Subspace a = Subspace::span(e), b = Subspace::span(Matrix::identity(f, n) - e);
  Split sp;
  sp.s = hstack(a.basis, b.basis);
  sp.s_inv = invert_or_throw(sp.s, "split_by_idempotent");
  sp.first_dim = a.dim();
  return sp;
}

std::vector<Matrix> conjugate(const std::vector<Matrix>& acts, const Split& sp) {
  std::vector<Matrix> out;
  for (const auto& m : acts) out.push_back(sp.s_inv * m * sp.s);
  return out;
}

std::vector<Matrix> diagonal_blocks(const std::vector<Matrix>& acts, std::size_t from, std::size_t count,
                                    std::size_t offset, std::size_t dim) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(acts[from + i].block(offset, offset, dim, dim));
  return out;
}

std::size_t solution_dim(const Field& f, std::size_t rows_a, std::size_t cols_a, std::size_t rows_b,
                         std::size_t cols_b, const std::function<std::vector<Matrix>(const Matrix&, const Matrix&)>& eq) {
  const std::size_t na = rows_a * cols_a, nb = rows_b * cols_b, n = na + nb;
  if (n == 0) return 0;
  std::vector<Vec> columns;
  for (std::size_t k = 0; k < n; ++k) {
    Matrix a(f, rows_a, cols_a), b(f, rows_b, cols_b);
    if (k < na) a.at(k / cols_a, k % cols_a) = 1;
    else b.at((k - na) / cols_b, (k - na) % cols_b) = 1;
    Vec col;
    for (const auto& r : eq(a, b)) col.insert(col.end(), r.data().begin(), r.data().end());
    columns.push_back(std::move(col));
  }
  Matrix m(f, columns[0].size(), n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < columns[k].size(); ++i) m.at(i, k) = columns[k][i];
  return n - rank(m);
}

bool shape(const Matrix& m, std::size_t r, std::size_t c) { return m.rows() == r && m.cols() == c; }

Module lambda_module(const MoritaRing& r, const Module& over_total) {
  return restrict_scalars(over_total, r.lambda, r.iso);
}
Module total_module(const MoritaRing& r, const Module& over_lambda) {
  return restrict_scalars(over_lambda, r.extension.total, r.iso_inverse);
}

void finish(MoritaReport& m) {
  m.rhs = m.first_exact && m.second_exact && m.first_component.positive() && m.second_component.positive();
  m.agree = m.lhs.positive() == m.rhs;
  m.sufficiency_established = m.u_report.established() && m.v_report.established();
  m.converse_established = m.zr_report.established();
  bool forward = !m.sufficiency_established || !m.rhs || m.lhs.positive();
  bool backward = !m.converse_established || !m.lhs.positive() || m.rhs;
  m.consistent = forward && backward;
}

}  // namespace

Validation validate_context(const MoritaContextData& d) {
  if (!d.a || !d.b) return Validation::fail("context: missing algebra");
  if (!(d.a->field() == d.b->field())) return Validation::fail("context: field mismatch");
  if (!same_algebra(d.u.left_ring, d.b) || !same_algebra(d.u.right_ring, d.a))
    return Validation::fail("context: U must be a B-A bimodule");
  if (!same_algebra(d.v.left_ring, d.a) || !same_algebra(d.v.right_ring, d.b))
    return Validation::fail("context: V must be an A-B bimodule");
  if (auto v = validate_bimodule(d.u); !v) return Validation::fail("context: U: " + v.message);
  if (auto v = validate_bimodule(d.v); !v) return Validation::fail("context: V: " + v.message);
  return Validation::pass();
}

Bimodule sum_bimodule(const MoritaContextData& d, const AlgebraPtr& product) {
  const Field& f = d.a->field();
  const std::size_t na = d.a->dim(), nb = d.b->dim(), nu = d.u.dim(), nv = d.v.dim();
  Bimodule m{product, product, {}, {}};
  Matrix zu(f, nu, nu), zv(f, nv, nv);
  for (std::size_t i = 0; i < na; ++i) m.left_act.push_back(direct_sum(zu, d.v.left_act[i]));
  for (std::size_t j = 0; j < nb; ++j) m.left_act.push_back(direct_sum(d.u.left_act[j], zv));
  for (std::size_t i = 0; i < na; ++i) m.right_act.push_back(direct_sum(d.u.right_act[i], zv));
  for (std::size_t j = 0; j < nb; ++j) m.right_act.push_back(direct_sum(zu, d.v.right_act[j]));
  return m;
}

MoritaRing morita_ring(const MoritaContextData& d) {
  if (auto v = validate_context(d); !v) throw std::invalid_argument("morita_ring: " + v.message);
  const Field& f = d.a->field();
  const std::size_t na = d.a->dim(), nb = d.b->dim(), nu = d.u.dim(), nv = d.v.dim();
  const std::size_t n = na + nv + nu + nb;
  const std::size_t oa = 0, ov = na, ou = na + nv, ob = na + nv + nu;
  std::vector<Elem> c(n * n * n, 0);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, Elem v) { c[(i * n + j) * n + k] = v; };
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) set(oa + i, oa + j, oa + k, d.a->c(i, j, k));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) set(ob + i, ob + j, ob + k, d.b->c(i, j, k));
  for (std::size_t p = 0; p < nv; ++p)
    for (std::size_t l = 0; l < nv; ++l) {
      for (std::size_t i = 0; i < na; ++i) set(oa + i, ov + p, ov + l, d.v.left_act[i](l, p));
      for (std::size_t j = 0; j < nb; ++j) set(ov + p, ob + j, ov + l, d.v.right_act[j](l, p));
    }
  for (std::size_t p = 0; p < nu; ++p)
    for (std::size_t l = 0; l < nu; ++l) {
      for (std::size_t j = 0; j < nb; ++j) set(ob + j, ou + p, ou + l, d.u.left_act[j](l, p));
      for (std::size_t i = 0; i < na; ++i) set(ou + p, oa + i, ou + l, d.u.right_act[i](l, p));
    }
  Vec unit(n, 0);
  for (std::size_t i = 0; i < na; ++i) unit[oa + i] = d.a->unit()[i];
  for (std::size_t j = 0; j < nb; ++j) unit[ob + j] = d.b->unit()[j];
  std::string name = d.name.empty() ? std::string() : "L(" + d.name + ")";

  MoritaRing r{d, make_algebra(f, n, std::move(c), unit, name), product_algebra(d.a, d.b), {}, {}, {}, false};
  r.extension = trivial_extension(r.product.algebra, sum_bimodule(d, r.product.algebra));

  // (A, V, U, B) -> (A, B, U, V)
  r.iso = Matrix(f, n, n);
  for (std::size_t i = 0; i < na; ++i) r.iso.at(i, oa + i) = 1;
  for (std::size_t j = 0; j < nb; ++j) r.iso.at(na + j, ob + j) = 1;
  for (std::size_t p = 0; p < nu; ++p) r.iso.at(na + nb + p, ou + p) = 1;
  for (std::size_t p = 0; p < nv; ++p) r.iso.at(na + nb + nu + p, ov + p) = 1;
  r.iso_inverse = invert_or_throw(r.iso, "morita_ring");

  const Algebra& L = *r.lambda;
  const Algebra& T = *r.extension.total;
  bool ok = validate_algebra(L).ok && r.iso.apply(L.unit()) == T.unit();
  for (std::size_t i = 0; i < n && ok; ++i)
    for (std::size_t j = 0; j < n && ok; ++j) {
      Vec lhs = r.iso.apply(L.multiply(L.basis_vector(i), L.basis_vector(j)));
      ok = lhs == T.multiply(r.iso.col_vec(i), r.iso.col_vec(j));
    }
  r.iso_valid = ok;
  return r;
}

MoritaContextData split_context(Field f) {
  auto k = catalog::field_algebra(f);
  return {k, k, zero_bimodule(k, k), zero_bimodule(k, k), "split"};
}

MoritaContextData triangular_context(Field f) {
  auto k = catalog::field_algebra(f);
  return {k, k, regular_bimodule(k), zero_bimodule(k, k), "triangular"};
}

MoritaContextData cyclic_context(Field f) {
  auto k = catalog::field_algebra(f);
  return {k, k, regular_bimodule(k), regular_bimodule(k), "cyclic"};
}

Module product_module(const MoritaRing& r, const Module& x, const Module& y) {
  const Field& f = r.data.a->field();
  Module m{r.product.algebra, {}};
  Matrix zx(f, x.dim(), x.dim()), zy(f, y.dim(), y.dim());
  for (const auto& a : x.act) m.act.push_back(direct_sum(a, zy));
  for (const auto& b : y.act) m.act.push_back(direct_sum(zx, b));
  return m;
}

RightModule product_right_module(const MoritaRing& r, const RightModule& w, const RightModule& q) {
  Module m = product_module(r, Module{r.data.a, w.act}, Module{r.data.b, q.act});
  return RightModule{r.product.algebra, m.act};
}

Validation validate_tuple(const MoritaRing& r, const TupleModule& t) {
  const auto& d = r.data;
  if (!same_algebra(t.x.ring, d.a) || !same_algebra(t.y.ring, d.b)) return Validation::fail("tuple: ring mismatch");
  if (auto v = validate_module(t.x); !v) return Validation::fail("tuple: X: " + v.message);
  if (auto v = validate_module(t.y); !v) return Validation::fail("tuple: Y: " + v.message);
  TensorProduct ux = tensor_over(d.u, t.x), vy = tensor_over(d.v, t.y);
  if (!shape(t.f, t.y.dim(), ux.space.dim()) || !shape(t.g, t.x.dim(), vy.space.dim()))
    return Validation::fail("tuple: f or g has the wrong shape");
  if (!is_module_map(ux.space, t.y, t.f)) return Validation::fail("tuple: f is not B-linear");
  if (!is_module_map(vy.space, t.x, t.g)) return Validation::fail("tuple: g is not A-linear");
  TensorProduct vux = tensor_over(d.v, ux.space), uvy = tensor_over(d.u, vy.space);
  if (!(t.g * tensor_map(vux, vy, t.f)).is_zero()) return Validation::fail("tuple: g (V (x) f) != 0");
  if (!(t.f * tensor_map(uvy, ux, t.g)).is_zero()) return Validation::fail("tuple: f (U (x) g) != 0");
  return Validation::pass();
}

Validation validate_cotuple(const MoritaRing& r, const CotupleModule& t) {
  const auto& d = r.data;
  if (!same_algebra(t.x.ring, d.a) || !same_algebra(t.y.ring, d.b))
    return Validation::fail("cotuple: ring mismatch");
  if (auto v = validate_module(t.x); !v) return Validation::fail("cotuple: X: " + v.message);
  if (auto v = validate_module(t.y); !v) return Validation::fail("cotuple: Y: " + v.message);
  HomModule huy = hom_from_bimodule(d.u, t.y), hvx = hom_from_bimodule(d.v, t.x);
  if (!shape(t.f, huy.module.dim(), t.x.dim()) || !shape(t.g, hvx.module.dim(), t.y.dim()))
    return Validation::fail("cotuple: f or g has the wrong shape");
  if (!is_module_map(t.x, huy.module, t.f)) return Validation::fail("cotuple: f is not A-linear");
  if (!is_module_map(t.y, hvx.module, t.g)) return Validation::fail("cotuple: g is not B-linear");
  HomModule hu_hvx = hom_from_bimodule(d.u, hvx.module), hv_huy = hom_from_bimodule(d.v, huy.module);
  if (!(hom_functor_map(huy, hu_hvx, t.g) * t.f).is_zero()) return Validation::fail("cotuple: Hom(U, g) f != 0");
  if (!(hom_functor_map(hvx, hv_huy, t.f) * t.g).is_zero()) return Validation::fail("cotuple: Hom(V, f) g != 0");
  return Validation::pass();
}

Validation validate_right_tuple(const MoritaRing& r, const RightTupleModule& t) {
  const auto& d = r.data;
  if (!same_algebra(t.w.ring, d.a) || !same_algebra(t.q.ring, d.b))
    return Validation::fail("right tuple: ring mismatch");
  if (auto v = validate_right_module(t.w); !v) return Validation::fail("right tuple: W: " + v.message);
  if (auto v = validate_right_module(t.q); !v) return Validation::fail("right tuple: Q: " + v.message);
  Bimodule fu = flip(d.u), fv = flip(d.v);
  Module w = as_left_opposite(t.w), q = as_left_opposite(t.q);
  TensorProduct qu = tensor_over(fu, q), wv = tensor_over(fv, w);
  if (!shape(t.f, w.dim(), qu.space.dim()) || !shape(t.g, q.dim(), wv.space.dim()))
    return Validation::fail("right tuple: f or g has the wrong shape");
  if (!is_module_map(qu.space, w, t.f)) return Validation::fail("right tuple: f is not A-linear");
  if (!is_module_map(wv.space, q, t.g)) return Validation::fail("right tuple: g is not B-linear");
  TensorProduct quv = tensor_over(fv, qu.space), wvu = tensor_over(fu, wv.space);
  if (!(t.g * tensor_map(quv, wv, t.f)).is_zero()) return Validation::fail("right tuple: g (f (x) V) != 0");
  if (!(t.f * tensor_map(wvu, qu, t.g)).is_zero()) return Validation::fail("right tuple: f (g (x) U) != 0");
  return Validation::pass();
}

namespace {

// (U (+) V) (x) (X, Y) <- (V (x) Y) (+) (U (x) X)
Matrix left_tensor_identification(const MoritaRing& r, const TensorProduct& big, const Module& x, const Module& y) {
  TensorProduct ux = tensor_over(r.data.u, x), vy = tensor_over(r.data.v, y);
  return tensor_split(big, {{&vy, r.data.u.dim(), x.dim()}, {&ux, 0, 0}});
}

// (W, Q) (x) (U (+) V) <- (Q (x) U) (+) (W (x) V)
Matrix right_tensor_identification(const MoritaRing& r, const TensorProduct& big, const RightModule& w,
                                   const RightModule& q) {
  TensorProduct qu = tensor_over(flip(r.data.u), as_left_opposite(q));
  TensorProduct wv = tensor_over(flip(r.data.v), as_left_opposite(w));
  return tensor_split(big, {{&qu, 0, w.dim()}, {&wv, r.data.u.dim(), 0}});
}

// Hom(U (+) V, (X, Y)) <- Hom(U, Y) (+) Hom(V, X)
Matrix hom_identification(const MoritaRing& r, const HomModule& big, const Module& x, const Module& y) {
  const Field& f = x.field();
  HomModule huy = hom_from_bimodule(r.data.u, y), hvx = hom_from_bimodule(r.data.v, x);
  const std::size_t rows = x.dim() + y.dim(), cols = r.data.u.dim() + r.data.v.dim();
  Matrix k(f, big.module.dim(), huy.module.dim() + hvx.module.dim());
  for (std::size_t j = 0; j < huy.homs.dim(); ++j) {
    Vec c = big.homs.coords(embed_block(f, rows, cols, x.dim(), 0, huy.homs.element(j)));
    for (std::size_t i = 0; i < c.size(); ++i) k.at(i, j) = c[i];
  }
  for (std::size_t j = 0; j < hvx.homs.dim(); ++j) {
    Vec c = big.homs.coords(embed_block(f, rows, cols, 0, r.data.u.dim(), hvx.homs.element(j)));
    for (std::size_t i = 0; i < c.size(); ++i) k.at(i, huy.homs.dim() + j) = c[i];
  }
  return k;
}

}  // namespace

PairModule theta(const MoritaRing& r, const TupleModule& t) {
  if (auto v = validate_tuple(r, t); !v) throw std::invalid_argument("theta: " + v.message);
  Module xy = product_module(r, t.x, t.y);
  TensorProduct big = tensor_over(r.extension.bimodule, xy);
  Matrix j = left_tensor_identification(r, big, t.x, t.y);
  return PairModule{xy, direct_sum(t.g, t.f) * invert_or_throw(j, "theta")};
}

TupleModule theta_inverse(const MoritaRing& r, const PairModule& p) {
  const Field& f = p.x.field();
  const std::size_t na = r.data.a->dim(), nb = r.data.b->dim();
  Split sp = split_by_idempotent(f, p.x.action_of(r.product.first_idempotent));
  Module xs{p.x.ring, conjugate(p.x.act, sp)};
  const std::size_t dx = sp.first_dim, dy = p.x.dim() - dx;
  TensorProduct big = tensor_over(r.extension.bimodule, p.x), bigs = tensor_over(r.extension.bimodule, xs);
  Matrix alpha = sp.s_inv * p.alpha * tensor_map(bigs, big, sp.s);
  TupleModule t{Module{r.data.a, diagonal_blocks(xs.act, 0, na, 0, dx)},
                Module{r.data.b, diagonal_blocks(xs.act, na, nb, dx, dy)}, {}, {}};
  Matrix blocks = alpha * left_tensor_identification(r, bigs, t.x, t.y);
  const std::size_t dvy = tensor_over(r.data.v, t.y).space.dim();
  t.g = blocks.block(0, 0, dx, dvy);
  t.f = blocks.block(dx, dvy, dy, blocks.cols() - dvy);
  return t;
}

CopairModule cotheta(const MoritaRing& r, const CotupleModule& t) {
  if (auto v = validate_cotuple(r, t); !v) throw std::invalid_argument("cotheta: " + v.message);
  Module xy = product_module(r, t.x, t.y);
  HomModule big = hom_from_bimodule(r.extension.bimodule, xy);
  return CopairModule{xy, hom_identification(r, big, t.x, t.y) * direct_sum(t.f, t.g)};
}

CotupleModule cotheta_inverse(const MoritaRing& r, const CopairModule& c) {
  const Field& f = c.y.field();
  const std::size_t na = r.data.a->dim(), nb = r.data.b->dim();
  Split sp = split_by_idempotent(f, c.y.action_of(r.product.first_idempotent));
  Module ys{c.y.ring, conjugate(c.y.act, sp)};
  const std::size_t dx = sp.first_dim, dy = c.y.dim() - dx;
  HomModule big = hom_from_bimodule(r.extension.bimodule, c.y), bigs = hom_from_bimodule(r.extension.bimodule, ys);
  Matrix beta = hom_functor_map(big, bigs, sp.s_inv) * c.beta * sp.s;
  CotupleModule t{Module{r.data.a, diagonal_blocks(ys.act, 0, na, 0, dx)},
                  Module{r.data.b, diagonal_blocks(ys.act, na, nb, dx, dy)}, {}, {}};
  Matrix blocks = invert_or_throw(hom_identification(r, bigs, t.x, t.y), "cotheta_inverse") * beta;
  const std::size_t duy = hom_from_bimodule(r.data.u, t.y).module.dim();
  t.f = blocks.block(0, 0, duy, dx);
  t.g = blocks.block(duy, dx, blocks.rows() - duy, dy);
  return t;
}

RightPairModule upsilon(const MoritaRing& r, const RightTupleModule& t) {
  if (auto v = validate_right_tuple(r, t); !v) throw std::invalid_argument("upsilon: " + v.message);
  RightModule wq = product_right_module(r, t.w, t.q);
  TensorProduct big = tensor_over(flip(r.extension.bimodule), as_left_opposite(wq));
  Matrix j = right_tensor_identification(r, big, t.w, t.q);
  return RightPairModule{wq, direct_sum(t.f, t.g) * invert_or_throw(j, "upsilon")};
}

RightTupleModule upsilon_inverse(const MoritaRing& r, const RightPairModule& p) {
  const Field& f = p.x.field();
  const std::size_t na = r.data.a->dim(), nb = r.data.b->dim();
  Split sp = split_by_idempotent(f, p.x.action_of(r.product.first_idempotent));
  RightModule xs{p.x.ring, conjugate(p.x.act, sp)};
  const std::size_t dw = sp.first_dim, dq = p.x.dim() - dw;
  Bimodule fm = flip(r.extension.bimodule);
  TensorProduct big = tensor_over(fm, as_left_opposite(p.x)), bigs = tensor_over(fm, as_left_opposite(xs));
  Matrix alpha = sp.s_inv * p.alpha * tensor_map(bigs, big, sp.s);
  RightTupleModule t{RightModule{r.data.a, diagonal_blocks(xs.act, 0, na, 0, dw)},
                     RightModule{r.data.b, diagonal_blocks(xs.act, na, nb, dw, dq)}, {}, {}};
  Matrix blocks = alpha * right_tensor_identification(r, bigs, t.w, t.q);
  const std::size_t dqu = tensor_over(flip(r.data.u), as_left_opposite(t.q)).space.dim();
  t.f = blocks.block(0, 0, dw, dqu);
  t.g = blocks.block(dw, dqu, dq, blocks.cols() - dqu);
  return t;
}

Module tuple_to_module(const MoritaRing& r, const TupleModule& t) {
  return lambda_module(r, pair_to_module(r.extension, theta(r, t)));
}

Module cotuple_to_module(const MoritaRing& r, const CotupleModule& t) {
  return lambda_module(r, copair_to_module(r.extension, cotheta(r, t)));
}

RightModule right_tuple_to_module(const MoritaRing& r, const RightTupleModule& t) {
  RightModule m = right_pair_to_module(r.extension, upsilon(r, t));
  return RightModule{r.lambda, lambda_module(r, Module{m.ring, m.act}).act};
}

TupleModule module_to_tuple(const MoritaRing& r, const Module& m) {
  return theta_inverse(r, module_to_pair(r.extension, total_module(r, m)));
}

CotupleModule module_to_cotuple(const MoritaRing& r, const Module& m) {
  return cotheta_inverse(r, module_to_copair(r.extension, total_module(r, m)));
}

RightTupleModule module_to_right_tuple(const MoritaRing& r, const RightModule& m) {
  RightModule over_total{r.extension.total, total_module(r, Module{m.ring, m.act}).act};
  return upsilon_inverse(r, module_to_right_pair(r.extension, over_total));
}

std::size_t tuple_hom_dim(const MoritaRing& r, const TupleModule& s, const TupleModule& t) {
  const auto& d = r.data;
  TensorProduct ux1 = tensor_over(d.u, s.x), ux2 = tensor_over(d.u, t.x);
  TensorProduct vy1 = tensor_over(d.v, s.y), vy2 = tensor_over(d.v, t.y);
  return solution_dim(s.x.field(), t.x.dim(), s.x.dim(), t.y.dim(), s.y.dim(),
                      [&](const Matrix& a, const Matrix& b) {
                        std::vector<Matrix> out;
                        for (std::size_t i = 0; i < s.x.act.size(); ++i) out.push_back(a * s.x.act[i] - t.x.act[i] * a);
                        for (std::size_t j = 0; j < s.y.act.size(); ++j) out.push_back(b * s.y.act[j] - t.y.act[j] * b);
                        out.push_back(t.f * tensor_map(ux1, ux2, a) - b * s.f);
                        out.push_back(t.g * tensor_map(vy1, vy2, b) - a * s.g);
                        return out;
                      });
}

std::size_t cotuple_hom_dim(const MoritaRing& r, const CotupleModule& s, const CotupleModule& t) {
  const auto& d = r.data;
  HomModule huy1 = hom_from_bimodule(d.u, s.y), huy2 = hom_from_bimodule(d.u, t.y);
  HomModule hvx1 = hom_from_bimodule(d.v, s.x), hvx2 = hom_from_bimodule(d.v, t.x);
  return solution_dim(s.x.field(), t.x.dim(), s.x.dim(), t.y.dim(), s.y.dim(),
                      [&](const Matrix& a, const Matrix& b) {
                        std::vector<Matrix> out;
                        for (std::size_t i = 0; i < s.x.act.size(); ++i) out.push_back(a * s.x.act[i] - t.x.act[i] * a);
                        for (std::size_t j = 0; j < s.y.act.size(); ++j) out.push_back(b * s.y.act[j] - t.y.act[j] * b);
                        out.push_back(t.f * a - hom_functor_map(huy1, huy2, b) * s.f);
                        out.push_back(t.g * b - hom_functor_map(hvx1, hvx2, a) * s.g);
                        return out;
                      });
}

std::size_t right_tuple_hom_dim(const MoritaRing& r, const RightTupleModule& s, const RightTupleModule& t) {
  Bimodule fu = flip(r.data.u), fv = flip(r.data.v);
  TensorProduct wv1 = tensor_over(fv, as_left_opposite(s.w)), wv2 = tensor_over(fv, as_left_opposite(t.w));
  TensorProduct qu1 = tensor_over(fu, as_left_opposite(s.q)), qu2 = tensor_over(fu, as_left_opposite(t.q));
  return solution_dim(s.w.field(), t.w.dim(), s.w.dim(), t.q.dim(), s.q.dim(),
                      [&](const Matrix& a, const Matrix& b) {
                        std::vector<Matrix> out;
                        for (std::size_t i = 0; i < s.w.act.size(); ++i) out.push_back(a * s.w.act[i] - t.w.act[i] * a);
                        for (std::size_t j = 0; j < s.q.act.size(); ++j) out.push_back(b * s.q.act[j] - t.q.act[j] * b);
                        out.push_back(t.g * tensor_map(wv1, wv2, a) - b * s.g);
                        out.push_back(t.f * tensor_map(qu1, qu2, b) - a * s.f);
                        return out;
                      });
}

std::string MoritaReport::to_string() const {
  std::ostringstream s;
  s << "module: " << lhs.to_string() << "; sequences " << (first_exact ? "exact" : "not exact") << "/"
    << (second_exact ? "exact" : "not exact") << ", components " << first_component.to_string() << " / "
    << second_component.to_string() << "; agree " << (agree ? "yes" : "no") << "; sufficiency "
    << (sufficiency_established ? "established" : "not established") << ", converse "
    << (converse_established ? "established" : "not established") << "; "
    << (consistent ? "consistent" : "INCONSISTENT");
  return s.str();
}

MoritaReport verify_tuple_gp(const MoritaRing& r, const TupleModule& t, std::size_t bound, std::uint64_t seed) {
  const auto& d = r.data;
  MoritaReport m;
  m.lhs = gp_check(tuple_to_module(r, t), bound, seed);
  TensorProduct ux = tensor_over(d.u, t.x), vy = tensor_over(d.v, t.y);
  TensorProduct vux = tensor_over(d.v, ux.space), uvy = tensor_over(d.u, vy.space);
  m.first_exact = is_exact_at(tensor_map(vux, vy, t.f), t.g);
  m.second_exact = is_exact_at(tensor_map(uvy, ux, t.g), t.f);
  m.first_component = gp_check(cokernel_module(ModuleHom{vy.space, t.x, t.g}).module, bound, seed);
  m.second_component = gp_check(cokernel_module(ModuleHom{ux.space, t.y, t.f}).module, bound, seed);
  m.u_report = compatibility_report(d.u, bound, seed);
  m.v_report = compatibility_report(d.v, bound, seed);
  m.sum_report = compatibility_report(r.extension.bimodule, bound, seed);
  m.zr_report = compatibility_report(zr_bimodule(r.extension), bound, seed);
  finish(m);
  PairHypotheses h = pair_hypotheses(r.extension, theta(r, t), bound, seed);
  m.presentation_matches = h.middle_exact == (m.first_exact && m.second_exact) &&
                           h.coker_verdict.positive() ==
                               (m.first_component.positive() && m.second_component.positive());
  return m;
}

MoritaReport verify_cotuple_gi(const MoritaRing& r, const CotupleModule& t, std::size_t bound,
                               std::uint64_t seed) {
  const auto& d = r.data;
  MoritaReport m;
  m.lhs = gi_check(cotuple_to_module(r, t), bound, seed);
  HomModule huy = hom_from_bimodule(d.u, t.y), hvx = hom_from_bimodule(d.v, t.x);
  HomModule hu_hvx = hom_from_bimodule(d.u, hvx.module), hv_huy = hom_from_bimodule(d.v, huy.module);
  m.first_exact = is_exact_at(t.f, hom_functor_map(huy, hu_hvx, t.g));
  m.second_exact = is_exact_at(t.g, hom_functor_map(hvx, hv_huy, t.f));
  m.first_component = gi_check(kernel_module(ModuleHom{t.x, huy.module, t.f}).module, bound, seed);
  m.second_component = gi_check(kernel_module(ModuleHom{t.y, hvx.module, t.g}).module, bound, seed);
  m.u_report = cocompatibility_report(d.u, bound, seed);
  m.v_report = cocompatibility_report(d.v, bound, seed);
  m.sum_report = cocompatibility_report(r.extension.bimodule, bound, seed);
  m.zr_report = cocompatibility_report(zr_bimodule(r.extension), bound, seed);
  finish(m);
  CopairHypotheses h = copair_hypotheses(r.extension, cotheta(r, t), bound, seed);
  m.presentation_matches = h.middle_exact == (m.first_exact && m.second_exact) &&
                           h.kernel_verdict.positive() ==
                               (m.first_component.positive() && m.second_component.positive());
  return m;
}

MoritaReport verify_right_tuple_gf(const MoritaRing& r, const RightTupleModule& t, std::size_t bound,
                                   std::uint64_t seed) {
  const auto& d = r.data;
  MoritaReport m;
  m.lhs = gf_check_right(right_tuple_to_module(r, t), bound, seed);
  Bimodule fu = flip(d.u), fv = flip(d.v);
  Module w = as_left_opposite(t.w), q = as_left_opposite(t.q);
  TensorProduct qu = tensor_over(fu, q), wv = tensor_over(fv, w);
  TensorProduct quv = tensor_over(fv, qu.space), wvu = tensor_over(fu, wv.space);
  m.first_exact = is_exact_at(tensor_map(wvu, qu, t.g), t.f);
  m.second_exact = is_exact_at(tensor_map(quv, wv, t.f), t.g);
  Module cf = cokernel_module(ModuleHom{qu.space, w, t.f}).module;
  Module cg = cokernel_module(ModuleHom{wv.space, q, t.g}).module;
  m.first_component = gf_check_right(RightModule{d.a, cf.act}, bound, seed);
  m.second_component = gf_check_right(RightModule{d.b, cg.act}, bound, seed);
  m.u_report = cocompatibility_report(d.u, bound, seed);
  m.v_report = cocompatibility_report(d.v, bound, seed);
  m.sum_report = cocompatibility_report(r.extension.bimodule, bound, seed);
  m.zr_report = cocompatibility_report(zr_bimodule(r.extension), bound, seed);
  finish(m);
  PairHypotheses h = right_pair_hypotheses(r.extension, upsilon(r, t), bound, seed);
  m.presentation_matches = h.middle_exact == (m.first_exact && m.second_exact) &&
                           h.coker_verdict.positive() ==
                               (m.first_component.positive() && m.second_component.positive());
  return m;
}

}  // namespace tx
