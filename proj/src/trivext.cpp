#include "tx/trivext.hpp"

#include <stdexcept>

#include "tx/structure.hpp"

namespace tx {

namespace {

Matrix unit_column(const Field& f, std::size_t n, std::size_t a) {
  Matrix e(f, n, 1);
  e.at(a, 0) = 1;
  return e;
}

// [I 0] and [0; I] for X (+) Z.
Matrix first_projection(const Field& f, std::size_t dx, std::size_t dz) {
  Matrix p(f, dx, dx + dz);
  p.set_block(0, 0, Matrix::identity(f, dx));
  return p;
}
Matrix second_inclusion(const Field& f, std::size_t dx, std::size_t dz) {
  Matrix i(f, dx + dz, dz);
  i.set_block(dx, 0, Matrix::identity(f, dz));
  return i;
}

bool invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Module base_part(const TrivialExtension& t, const std::vector<Matrix>& act) {
  return Module{t.base, std::vector<Matrix>(act.begin(), act.begin() + static_cast<std::ptrdiff_t>(t.base->dim()))};
}

}  // namespace

TrivialExtension trivial_extension(const AlgebraPtr& r, const Bimodule& m) {
  if (!same_algebra(m.left_ring, r) || !same_algebra(m.right_ring, r))
    throw std::invalid_argument("trivial_extension: bimodule is not over the base algebra on both sides");
  const Field& f = r->field();
  const std::size_t dr = r->dim(), dm = m.dim(), n = dr + dm;
  std::vector<Elem> c(n * n * n, 0);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Elem& { return c[(i * n + j) * n + k]; };
  for (std::size_t i = 0; i < dr; ++i)
    for (std::size_t j = 0; j < dr; ++j)
      for (std::size_t k = 0; k < dr; ++k) at(i, j, k) = r->c(i, j, k);
  for (std::size_t i = 0; i < dr; ++i)
    for (std::size_t a = 0; a < dm; ++a)
      for (std::size_t k = 0; k < dm; ++k) {
        at(i, dr + a, dr + k) = m.left_act[i](k, a);
        at(dr + a, i, dr + k) = m.right_act[i](k, a);
      }
  Vec unit(n, 0);
  for (std::size_t i = 0; i < dr; ++i) unit[i] = r->unit()[i];
  std::string name = r->name().empty() ? std::string() : r->name() + "|xM";
  TrivialExtension t{r, m, make_algebra(f, n, std::move(c), unit, name), Matrix(f, n, dr), Matrix(f, n, dm),
                     Matrix(f, dr, n)};
  for (std::size_t i = 0; i < dr; ++i) {
    t.embed_base.at(i, i) = 1;
    t.project_base.at(i, i) = 1;
  }
  for (std::size_t a = 0; a < dm; ++a) t.embed_bimodule.at(dr + a, a) = 1;
  return t;
}

TrivialExtension opposite_extension(const TrivialExtension& t) {
  return trivial_extension(opposite_algebra(t.base), flip(t.bimodule));
}

Matrix tensor_alpha(const TrivialExtension& t, const PairModule& p) {
  TensorProduct mx = tensor_over(t.bimodule, p.x);
  TensorProduct mmx = tensor_over(t.bimodule, mx.space);
  return tensor_map(mmx, mx, p.alpha);
}

Matrix hom_beta(const TrivialExtension& t, const CopairModule& c) {
  HomModule g = hom_from_bimodule(t.bimodule, c.y);
  HomModule gg = hom_from_bimodule(t.bimodule, g.module);
  return hom_functor_map(g, gg, c.beta);
}

Validation validate_pair(const TrivialExtension& t, const PairModule& p) {
  if (!same_algebra(p.x.ring, t.base)) return Validation::fail("pair: module is not over the base algebra");
  if (auto v = validate_module(p.x); !v) return v;
  TensorProduct mx = tensor_over(t.bimodule, p.x);
  if (p.alpha.rows() != p.x.dim() || p.alpha.cols() != mx.space.dim())
    return Validation::fail("pair: alpha has the wrong shape");
  if (!is_module_map(mx.space, p.x, p.alpha)) return Validation::fail("pair: alpha is not a module map");
  if (!(p.alpha * tensor_alpha(t, p)).is_zero())
    return Validation::fail("pair: alpha composed with M (x) alpha is nonzero");
  return Validation::pass();
}

Validation validate_copair(const TrivialExtension& t, const CopairModule& c) {
  if (!same_algebra(c.y.ring, t.base)) return Validation::fail("copair: module is not over the base algebra");
  if (auto v = validate_module(c.y); !v) return v;
  HomModule g = hom_from_bimodule(t.bimodule, c.y);
  if (c.beta.rows() != g.module.dim() || c.beta.cols() != c.y.dim())
    return Validation::fail("copair: beta has the wrong shape");
  if (!is_module_map(c.y, g.module, c.beta)) return Validation::fail("copair: beta is not a module map");
  if (!(hom_beta(t, c) * c.beta).is_zero())
    return Validation::fail("copair: Hom(M, beta) composed with beta is nonzero");
  return Validation::pass();
}

Validation validate_right_pair(const TrivialExtension& t, const RightPairModule& p) {
  if (!same_algebra(p.x.ring, t.base)) return Validation::fail("right pair: module is not over the base algebra");
  return validate_pair(opposite_extension(t), as_left_pair(t, p));
}

Module pair_to_module(const TrivialExtension& t, const PairModule& p) {
  if (auto v = validate_pair(t, p); !v) throw std::invalid_argument(v.message);
  const Field& f = t.base->field();
  TensorProduct mx = tensor_over(t.bimodule, p.x);
  Module out{t.total, p.x.act};
  Matrix ix = Matrix::identity(f, p.x.dim());
  for (std::size_t a = 0; a < t.bimodule.dim(); ++a)
    out.act.push_back(p.alpha * mx.proj * kron(unit_column(f, t.bimodule.dim(), a), ix));
  return out;
}

PairModule module_to_pair(const TrivialExtension& t, const Module& m) {
  if (!same_algebra(m.ring, t.total)) throw std::invalid_argument("module_to_pair: not a module over the extension");
  const std::size_t dr = t.base->dim(), dm = t.bimodule.dim();
  Module x = base_part(t, m.act);
  TensorProduct mx = tensor_over(t.bimodule, x);
  std::vector<Matrix> blocks(m.act.begin() + static_cast<std::ptrdiff_t>(dr), m.act.end());
  Matrix plain = hstack(blocks, m.field(), m.dim());
  if (dm == 0) plain = Matrix(m.field(), m.dim(), 0);
  return PairModule{x, plain * mx.section};
}

Module copair_to_module(const TrivialExtension& t, const CopairModule& c) {
  if (auto v = validate_copair(t, c); !v) throw std::invalid_argument(v.message);
  const Field& f = t.base->field();
  HomModule g = hom_from_bimodule(t.bimodule, c.y);
  const std::size_t dy = c.y.dim();
  std::vector<Matrix> homs;
  for (std::size_t j = 0; j < g.homs.dim(); ++j) homs.push_back(g.homs.element(j));
  Module out{t.total, c.y.act};
  for (std::size_t a = 0; a < t.bimodule.dim(); ++a) {
    Matrix act(f, dy, dy);
    for (std::size_t b = 0; b < dy; ++b)
      for (std::size_t j = 0; j < homs.size(); ++j) {
        Elem s = c.beta(j, b);
        if (!s) continue;
        for (std::size_t r = 0; r < dy; ++r) act.at(r, b) = f.add(act(r, b), f.mul(s, homs[j](r, a)));
      }
    out.act.push_back(act);
  }
  return out;
}

CopairModule module_to_copair(const TrivialExtension& t, const Module& m) {
  if (!same_algebra(m.ring, t.total)) throw std::invalid_argument("module_to_copair: not a module over the extension");
  const Field& f = m.field();
  const std::size_t dr = t.base->dim(), dm = t.bimodule.dim(), dy = m.dim();
  Module y = base_part(t, m.act);
  HomModule g = hom_from_bimodule(t.bimodule, y);
  Matrix beta(f, g.homs.dim(), dy);
  for (std::size_t b = 0; b < dy; ++b) {
    Matrix fb(f, dy, dm);
    for (std::size_t a = 0; a < dm; ++a)
      for (std::size_t r = 0; r < dy; ++r) fb.at(r, a) = m.act[dr + a](r, b);
    Vec cc = g.homs.coords(fb);
    for (std::size_t j = 0; j < cc.size(); ++j) beta.at(j, b) = cc[j];
  }
  return CopairModule{y, beta};
}

PairModule as_left_pair(const TrivialExtension& t, const RightPairModule& p) {
  if (!same_algebra(p.x.ring, t.base)) throw std::invalid_argument("as_left_pair: ring mismatch");
  return PairModule{as_left_opposite(p.x), p.alpha};
}

RightPairModule as_right_pair(const TrivialExtension& t, const PairModule& p) {
  if (!opposite_algebra(p.x.ring)->same_structure(*t.base))
    throw std::invalid_argument("as_right_pair: pair is not over the opposite base");
  return RightPairModule{RightModule{t.base, p.x.act}, p.alpha};
}

RightModule right_pair_to_module(const TrivialExtension& t, const RightPairModule& p) {
  Module m = pair_to_module(opposite_extension(t), as_left_pair(t, p));
  return RightModule{t.total, m.act};
}

RightPairModule module_to_right_pair(const TrivialExtension& t, const RightModule& m) {
  if (!same_algebra(m.ring, t.total)) throw std::invalid_argument("module_to_right_pair: ring mismatch");
  TrivialExtension o = opposite_extension(t);
  return as_right_pair(t, module_to_pair(o, Module{o.total, m.act}));
}

PairModule functor_T(const TrivialExtension& t, const Module& x) {
  const Field& f = x.field();
  TensorProduct mx = tensor_over(t.bimodule, x);
  const std::size_t dx = x.dim(), dz = mx.space.dim();
  Module sum = direct_sum(x, mx.space);
  TensorProduct msum = tensor_over(t.bimodule, sum);
  Matrix mu = second_inclusion(f, dx, dz) * tensor_map(msum, mx, first_projection(f, dx, dz));
  return PairModule{sum, mu};
}

CopairModule functor_H(const TrivialExtension& t, const Module& y) {
  const Field& f = y.field();
  HomModule g = hom_from_bimodule(t.bimodule, y);
  const std::size_t dg = g.module.dim(), dy = y.dim();
  Module sum = direct_sum(g.module, y);
  HomModule gsum = hom_from_bimodule(t.bimodule, sum);
  Matrix theta = hom_functor_map(g, gsum, second_inclusion(f, dg, dy)) * first_projection(f, dg, dy);
  return CopairModule{sum, theta};
}

PairModule functor_Z_pair(const TrivialExtension& t, const Module& x) {
  return PairModule{x, Matrix(x.field(), x.dim(), tensor_over(t.bimodule, x).space.dim())};
}

CopairModule functor_Z_copair(const TrivialExtension& t, const Module& y) {
  return CopairModule{y, Matrix(y.field(), hom_from_bimodule(t.bimodule, y).module.dim(), y.dim())};
}

Module functor_U(const PairModule& p) { return p.x; }
Module functor_U(const CopairModule& c) { return c.y; }

QuotientModule functor_C(const TrivialExtension& t, const PairModule& p) {
  return cokernel_module(ModuleHom{tensor_over(t.bimodule, p.x).space, p.x, p.alpha});
}

Submodule functor_K(const TrivialExtension& t, const CopairModule& c) {
  return kernel_module(ModuleHom{c.y, hom_from_bimodule(t.bimodule, c.y).module, c.beta});
}

Matrix functor_T_map(const TrivialExtension& t, const Module& x, const Module& x2, const Matrix& f) {
  return direct_sum(f, tensor_map(tensor_over(t.bimodule, x), tensor_over(t.bimodule, x2), f));
}

Matrix functor_H_map(const TrivialExtension& t, const Module& y, const Module& y2, const Matrix& f) {
  return direct_sum(hom_functor_map(hom_from_bimodule(t.bimodule, y), hom_from_bimodule(t.bimodule, y2), f), f);
}

Matrix functor_C_map(const TrivialExtension& t, const PairModule& p, const PairModule& p2, const Matrix& f) {
  QuotientModule c = functor_C(t, p), c2 = functor_C(t, p2);
  return c2.projection * f * c.section;
}

Matrix functor_K_map(const TrivialExtension& t, const CopairModule& c, const CopairModule& c2, const Matrix& f) {
  Submodule k = functor_K(t, c);
  return Subspace::kernel(c2.beta).coords(f * k.inclusion);
}

std::optional<ProjectiveClassification> classify_projective(const TrivialExtension& t, const PairModule& pair,
                                                            std::uint64_t seed) {
  Module m = pair_to_module(t, pair);
  if (!is_projective(m, seed)) return std::nullopt;
  Module p = functor_C(t, pair).module;
  auto iso = find_isomorphism(pair_to_module(t, functor_T(t, p)), m, seed);
  if (!iso) throw std::logic_error("classify_projective: projective pair is not T of its cokernel");
  return ProjectiveClassification{p, *iso};
}

std::optional<InjectiveClassification> classify_injective(const TrivialExtension& t, const CopairModule& c,
                                                          std::uint64_t seed) {
  Module m = copair_to_module(t, c);
  if (!is_injective(m, seed)) return std::nullopt;
  Module e = functor_K(t, c).module;
  auto iso = find_isomorphism(copair_to_module(t, functor_H(t, e)), m, seed);
  if (!iso) throw std::logic_error("classify_injective: injective copair is not H of its kernel");
  return InjectiveClassification{e, *iso};
}

namespace {

bool check_ses(const ShortExactSequence& s) {
  return is_module_map(s.left, s.middle, s.inclusion) && is_module_map(s.middle, s.right, s.projection) &&
         rank(s.inclusion) == s.left.dim() && rank(s.projection) == s.right.dim() &&
         is_exact_at(s.inclusion, s.projection);
}

}  // namespace

ShortExactSequence ses_of_pair(const TrivialExtension& t, const PairModule& p) {
  ModuleHom alpha{tensor_over(t.bimodule, p.x).space, p.x, p.alpha};
  Submodule im = image_module(alpha);
  QuotientModule co = cokernel_module(alpha);
  ShortExactSequence s{pair_to_module(t, functor_Z_pair(t, im.module)), pair_to_module(t, p),
                       pair_to_module(t, functor_Z_pair(t, co.module)), im.inclusion, co.projection};
  s.exact = check_ses(s);
  return s;
}

ShortExactSequence ses_of_copair(const TrivialExtension& t, const CopairModule& c) {
  ModuleHom beta{c.y, hom_from_bimodule(t.bimodule, c.y).module, c.beta};
  Submodule ker = kernel_module(beta);
  Submodule im = image_module(beta);
  ShortExactSequence s{copair_to_module(t, functor_Z_copair(t, ker.module)), copair_to_module(t, c),
                       copair_to_module(t, functor_Z_copair(t, im.module)), ker.inclusion,
                       Subspace::span(c.beta).coords(c.beta)};
  s.exact = check_ses(s);
  return s;
}

ModuleHom induced_delta(const TrivialExtension& t, const PairModule& p) {
  TensorProduct mx = tensor_over(t.bimodule, p.x);
  QuotientModule c = functor_C(t, p);
  TensorProduct mc = tensor_over(t.bimodule, c.module);
  Matrix mrho = tensor_map(mx, mc, c.projection);
  auto d = solve(mrho.transpose(), p.alpha.transpose());
  if (!d) throw std::logic_error("induced_delta: alpha does not factor through M (x) coker");
  return ModuleHom{mc.space, p.x, d->transpose()};
}

ModuleHom induced_gamma(const TrivialExtension& t, const CopairModule& c) {
  Submodule k = functor_K(t, c);
  HomModule gk = hom_from_bimodule(t.bimodule, k.module);
  HomModule gy = hom_from_bimodule(t.bimodule, c.y);
  auto g = solve(hom_functor_map(gk, gy, k.inclusion), c.beta);
  if (!g) throw std::logic_error("induced_gamma: beta does not factor through Hom(M, ker)");
  return ModuleHom{c.y, gk.module, *g};
}

RightModule inflate_right(const TrivialExtension& t, const RightModule& w) {
  if (!same_algebra(w.ring, t.base)) throw std::invalid_argument("inflate_right: ring mismatch");
  RightModule out{t.total, w.act};
  for (std::size_t a = 0; a < t.bimodule.dim(); ++a) out.act.push_back(Matrix(w.field(), w.dim(), w.dim()));
  return out;
}

IsoWitness tensor_iso_with_cokernel(const TrivialExtension& t, const RightModule& w, const PairModule& p) {
  TensorProduct lhs = tensor_over(inflate_right(t, w), pair_to_module(t, p));
  QuotientModule c = functor_C(t, p);
  TensorProduct rhs = tensor_over(w, c.module);
  IsoWitness out{lhs.space.dim(), rhs.space.dim(),
                 rhs.proj * kron(Matrix::identity(w.field(), w.dim()), c.projection) * lhs.section};
  out.invertible = invertible(out.map);
  return out;
}

IsoWitness hom_iso_with_kernel(const TrivialExtension& t, const Module& x, const CopairModule& c) {
  HomSpace lhs = hom_space(pair_to_module(t, functor_Z_pair(t, x)), copair_to_module(t, c));
  Submodule k = functor_K(t, c);
  HomSpace rhs = hom_space(x, k.module);
  IsoWitness out{rhs.dim(), lhs.dim(), Matrix(x.field(), lhs.dim(), rhs.dim())};
  for (std::size_t j = 0; j < rhs.dim(); ++j) {
    Vec cc = lhs.coords(k.inclusion * rhs.element(j));
    for (std::size_t r = 0; r < cc.size(); ++r) out.map.at(r, j) = cc[r];
  }
  out.invertible = invertible(out.map);
  return out;
}

Bimodule zr_bimodule(const TrivialExtension& t) {
  const AlgebraPtr& r = t.base;
  const Field& f = r->field();
  Bimodule b{t.total, t.total, {}, {}};
  for (std::size_t i = 0; i < r->dim(); ++i) {
    b.left_act.push_back(r->left_mult(r->basis_vector(i)));
    b.right_act.push_back(r->right_mult(r->basis_vector(i)));
  }
  for (std::size_t a = 0; a < t.bimodule.dim(); ++a) {
    b.left_act.push_back(Matrix(f, r->dim(), r->dim()));
    b.right_act.push_back(Matrix(f, r->dim(), r->dim()));
  }
  return b;
}

}  // namespace tx
