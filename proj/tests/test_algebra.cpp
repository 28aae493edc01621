#include <gtest/gtest.h>

#include <random>
#include <set>

#include "tx/algebra.hpp"
#include "tx/catalog.hpp"

using namespace tx;

namespace {

Module vertex_simple(const AlgebraPtr& a, std::size_t v, std::size_t vertices) {
  Module m{a, {}};
  for (std::size_t i = 0; i < a->dim(); ++i)
    m.act.push_back(Matrix::from_rows(a->field(), {{(i < vertices && i == v) ? 1 : 0}}));
  return m;
}

Module trivial_module(const AlgebraPtr& local) {
  // Residue field of a local algebra whose basis starts with the unit.
  Module m{local, {}};
  for (std::size_t i = 0; i < local->dim(); ++i)
    m.act.push_back(Matrix::from_rows(local->field(), {{i == 0 ? 1 : 0}}));
  return m;
}

// Enumerates all d x e matrices over GF(2) and counts intertwiners.
std::size_t brute_hom_dim_gf2(const Module& a, const Module& b) {
  const std::size_t cells = a.dim() * b.dim();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (1ull << cells); ++mask) {
    Matrix f(a.field(), b.dim(), a.dim());
    for (std::size_t c = 0; c < cells; ++c) f.at(c / a.dim(), c % a.dim()) = (mask >> c) & 1;
    count += is_module_map(a, b, f);
  }
  std::size_t d = 0;
  while ((1ull << d) < count) ++d;
  return d;
}

std::set<std::uint64_t> image_set_gf2(const Matrix& m) {
  std::set<std::uint64_t> out;
  for (std::uint64_t x = 0; x < (1ull << m.cols()); ++x) {
    Vec v(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) v[j] = (x >> j) & 1;
    Vec w = m.apply(v);
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < w.size(); ++i) key |= std::uint64_t(w[i]) << i;
    out.insert(key);
  }
  return out;
}

std::set<std::uint64_t> kernel_set_gf2(const Matrix& m) {
  std::set<std::uint64_t> out;
  for (std::uint64_t x = 0; x < (1ull << m.cols()); ++x) {
    Vec v(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) v[j] = (x >> j) & 1;
    bool zero = true;
    for (auto e : m.apply(v)) zero = zero && e == 0;
    if (zero) out.insert(x);
  }
  return out;
}

Matrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = static_cast<Elem>(rng() % f.p());
  return m;
}

}  // namespace

TEST(Algebra, ValidateExamples) {
  Field f(2);
  EXPECT_TRUE(validate_algebra(*catalog::field_algebra(f)));
  auto d = catalog::dual_numbers(f);
  EXPECT_TRUE(validate_algebra(*d));
  // 1*1 = 1, 1*y = y, y*1 = y, y*y = 0
  EXPECT_EQ(d->constants(), (std::vector<Elem>{1, 0, 0, 1, 0, 1, 0, 0}));
  Algebra bad(f, 2, {0, 1, 0, 0, 0, 0, 0, 0}, {0, 1});
  Validation v = validate_algebra(bad);
  EXPECT_FALSE(v);
  EXPECT_NE(v.message.find("unit"), std::string::npos);
}

TEST(Algebra, RejectsNonAssociativeTable) {
  Field f(3);
  // b0 unit; b1*b1 = b2, b1*b2 = b1, b2*b1 = 0, b2*b2 = 0.
  std::vector<Elem> c(27, 0);
  auto set = [&](int i, int j, int k) { c[(i * 3 + j) * 3 + k] = 1; };
  for (int i = 0; i < 3; ++i) set(0, i, i), set(i, 0, i);
  set(1, 1, 2);
  set(1, 2, 1);
  Algebra a(f, 3, c, {1, 0, 0});
  Validation v = validate_algebra(a);
  EXPECT_FALSE(v);
  EXPECT_NE(v.message.find("associativity"), std::string::npos);
}

TEST(Algebra, Opposite) {
  Field f(2);
  auto d = catalog::dual_numbers(f);
  EXPECT_TRUE(opposite_algebra(d)->same_structure(*d));
  auto a = catalog::a2(f);
  auto op = opposite_algebra(a);
  EXPECT_FALSE(op->same_structure(*a));
  EXPECT_TRUE(validate_algebra(*op));
  EXPECT_TRUE(opposite_algebra(op)->same_structure(*a));
  // e2 a = a in A2, so a e2 = a in the opposite.
  EXPECT_EQ(op->c(2, 1, 2), 1u);
  EXPECT_EQ(op->c(1, 2, 2), 0u);
  auto k = catalog::field_algebra(f);
  EXPECT_TRUE(opposite_algebra(k)->same_structure(*k));
}

TEST(Algebra, Product) {
  Field f3(3);
  auto p = product_algebra(catalog::field_algebra(f3), catalog::dual_numbers(f3));
  EXPECT_EQ(p.algebra->dim(), 3u);
  EXPECT_TRUE(validate_algebra(*p.algebra));
  const auto& e1 = p.first_idempotent;
  const auto& e2 = p.second_idempotent;
  EXPECT_EQ(p.algebra->multiply(e1, e1), e1);
  EXPECT_EQ(p.algebra->multiply(e1, e2), Vec(3, 0));
  for (std::size_t i = 0; i < 3; ++i) {
    Vec b = p.algebra->basis_vector(i);
    EXPECT_EQ(p.algebra->multiply(e1, b), p.algebra->multiply(b, e1));
  }
  EXPECT_THROW(product_algebra(catalog::field_algebra(Field(2)), catalog::field_algebra(f3)),
               std::invalid_argument);
  EXPECT_THROW(Algebra(f3, 0, {}, {}), std::invalid_argument);
}

TEST(Quiver, Examples) {
  Field f(5);
  EXPECT_TRUE(monomial_quiver_algebra(f, 1, {}, {})->same_structure(*catalog::field_algebra(f)));
  auto a = catalog::a2(f);
  EXPECT_EQ(a->dim(), 3u);
  EXPECT_TRUE(validate_algebra(*a));
  auto d = catalog::dual_numbers(f);
  EXPECT_EQ(d->dim(), 2u);
  EXPECT_EQ(catalog::nakayama2(f)->dim(), 4u);
  EXPECT_TRUE(validate_algebra(*catalog::nakayama2(f)));
  EXPECT_TRUE(validate_algebra(*catalog::local_two_loops(f)));
  EXPECT_THROW(monomial_quiver_algebra(f, 1, {{0, 0}}, {}), std::invalid_argument);
}

TEST(HomSpace, Examples) {
  Field f(2);
  auto k = catalog::field_algebra(f);
  EXPECT_EQ(hom_space(regular_module(k), regular_module(k)).dim(), 1u);
  auto d = catalog::dual_numbers(f);
  EXPECT_EQ(hom_space(regular_module(d), regular_module(d)).dim(), 2u);
  auto a = catalog::a2(f);
  Module s1 = vertex_simple(a, 0, 2), s2 = vertex_simple(a, 1, 2);
  EXPECT_TRUE(validate_module(s1));
  EXPECT_TRUE(validate_module(s2));
  EXPECT_EQ(hom_space(s1, s2).dim(), 0u);
  EXPECT_EQ(brute_hom_dim_gf2(s1, s2), 0u);
  EXPECT_THROW(hom_space(s1, regular_module(d)), std::invalid_argument);
}

TEST(HomSpace, AgreesWithEnumerationOverGF2) {
  Field f(2);
  for (auto a : {catalog::dual_numbers(f), catalog::a2(f), catalog::nakayama2(f), catalog::local_two_loops(f)}) {
    auto mods = catalog::random_modules(a, 6, 3, 21);
    mods.push_back(regular_module(a));
    for (const auto& x : mods)
      for (const auto& y : mods) {
        if (x.dim() * y.dim() > 16) continue;
        EXPECT_EQ(hom_space(x, y).dim(), brute_hom_dim_gf2(x, y));
      }
  }
}

TEST(Tensor, Examples) {
  Field f(3);
  auto a = catalog::a2(f);
  for (const auto& x : catalog::random_modules(a, 5, 3, 3)) {
    TensorProduct t = tensor_over(regular_bimodule(a), x);
    EXPECT_TRUE(validate_module(t.space));
    EXPECT_TRUE(is_isomorphic(t.space, x));
    EXPECT_EQ(tensor_over(zero_bimodule(a, a), x).space.dim(), 0u);
  }
  Field f2(2);
  auto d = catalog::dual_numbers(f2);
  Module kk = trivial_module(d);
  RightModule kr = dual_module(kk);
  EXPECT_EQ(tensor_over(kr, kk).space.dim(), 1u);
  EXPECT_THROW(tensor_over(regular_bimodule(d), vertex_simple(a, 0, 2)), std::invalid_argument);
}

TEST(HomFromBimodule, Examples) {
  Field f(2);
  auto d = catalog::dual_numbers(f);
  Module kk = trivial_module(d);
  HomModule h = hom_from_bimodule(regular_bimodule(d), kk);
  EXPECT_TRUE(validate_module(h.module));
  EXPECT_TRUE(is_isomorphic(h.module, kk));
  EXPECT_EQ(hom_from_bimodule(zero_bimodule(d, d), kk).module.dim(), 0u);
  auto a = catalog::a2(f);
  for (const auto& y : catalog::random_modules(a, 5, 3, 5))
    EXPECT_TRUE(is_isomorphic(hom_from_bimodule(regular_bimodule(a), y).module, y));
}

TEST(Dual, Examples) {
  Field f(2);
  auto d = catalog::dual_numbers(f);
  EXPECT_EQ(dual_module(zero_module(d)).dim(), 0u);
  RightModule dr = dual_module(regular_module(d));
  EXPECT_TRUE(validate_right_module(dr));
  EXPECT_TRUE(is_isomorphic(as_left_opposite(dr), as_left_opposite(regular_right_module(d))));
  auto a = catalog::a2(f);
  Module s1 = vertex_simple(a, 0, 2);
  RightModule ds = dual_module(s1);
  EXPECT_EQ(ds.dim(), 1u);
  EXPECT_TRUE(validate_right_module(ds));
  Module back = dual_module(ds);
  EXPECT_TRUE(is_isomorphic(back, s1));
}

TEST(KernelCokernel, Examples) {
  Field f(2);
  auto d = catalog::dual_numbers(f);
  Module reg = regular_module(d);
  ModuleHom id{reg, reg, Matrix::identity(f, 2)};
  EXPECT_EQ(kernel_module(id).module.dim(), 0u);
  EXPECT_EQ(cokernel_module(id).module.dim(), 0u);
  ModuleHom zero{reg, reg, Matrix(f, 2, 2)};
  EXPECT_EQ(kernel_module(zero).module.dim(), 2u);
  EXPECT_EQ(cokernel_module(zero).module.dim(), 2u);
  ModuleHom y{reg, reg, d->right_mult(d->basis_vector(1))};
  ASSERT_TRUE(validate_hom(y));
  Submodule k = kernel_module(y);
  Submodule im = image_module(y);
  EXPECT_EQ(k.module.dim(), 1u);
  EXPECT_EQ(k.inclusion, im.inclusion);
  EXPECT_TRUE(validate_module(cokernel_module(y).module));
}

TEST(Exactness, Examples) {
  Field f(2);
  auto d = catalog::dual_numbers(f);
  Matrix y = d->right_mult(d->basis_vector(1));
  EXPECT_TRUE(is_exact_at(y, y));
  EXPECT_TRUE(is_exact_at(Matrix(f, 2, 0), Matrix::identity(f, 2)));
  EXPECT_FALSE(is_exact_at(Matrix(f, 2, 2), Matrix(f, 2, 2)));
  EXPECT_THROW(is_exact_at(Matrix(f, 2, 2), Matrix(f, 2, 3)), std::invalid_argument);
}

TEST(Exactness, AgreesWithEnumerationOverGF2) {
  Field f(2);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    std::size_t a = rng() % 5, b = rng() % 5, c = rng() % 5;
    Matrix g = random_matrix(f, c, b, rng);
    Matrix fm = (t % 3 == 0) ? kernel_basis(g).transpose() : random_matrix(f, b, a, rng);
    if (fm.rows() != b) fm = Matrix(f, b, 0);
    bool oracle = image_set_gf2(fm) == kernel_set_gf2(g);
    EXPECT_EQ(is_exact_at(fm, g), oracle);
  }
}

TEST(AlgebraProperty, TensorHomAdjunction) {
  for (Elem p : {2u, 3u}) {
    Field f(p);
    for (auto a : {catalog::dual_numbers(f), catalog::a2(f), catalog::nakayama2(f)}) {
      std::vector<Bimodule> ms{regular_bimodule(a), dual_bimodule(regular_bimodule(a)),
                               direct_sum(regular_bimodule(a), zero_bimodule(a, a))};
      auto mods = catalog::random_modules(a, 5, 4, 31 + p);
      for (const auto& m : ms) {
        ASSERT_TRUE(validate_bimodule(m));
        for (const auto& x : mods)
          for (const auto& y : mods) {
            TensorProduct t = tensor_over(m, x);
            HomModule h = hom_from_bimodule(m, y);
            ASSERT_TRUE(validate_module(t.space));
            ASSERT_TRUE(validate_module(h.module));
            EXPECT_EQ(hom_space(t.space, y).dim(), hom_space(x, h.module).dim());
          }
      }
    }
  }
}

TEST(AlgebraProperty, DualIsExact) {
  std::mt19937_64 rng(41);
  for (Elem p : {2u, 3u}) {
    Field f(p);
    for (auto a : {catalog::a2(f), catalog::nakayama2(f), catalog::dual_numbers(f)}) {
      auto mods = catalog::random_modules(a, 4, 4, 50 + p);
      for (const auto& x : mods)
        for (const auto& y : mods) {
          HomSpace h = hom_space(x, y);
          if (h.dim() == 0) continue;
          Vec c(h.dim());
          for (auto& e : c) e = static_cast<Elem>(rng() % p);
          ModuleHom fx{x, y, h.combine(c)};
          ASSERT_TRUE(validate_hom(fx));
          Module lhs = as_left_opposite(dual_module(cokernel_module(fx).module));
          Module dy = as_left_opposite(dual_module(y)), dx = as_left_opposite(dual_module(x));
          ModuleHom df{dy, dx, fx.matrix.transpose()};
          ASSERT_TRUE(validate_hom(df));
          Module rhs = kernel_module(df).module;
          EXPECT_TRUE(is_isomorphic(lhs, rhs));
        }
    }
  }
}

TEST(AlgebraProperty, RightModulesRoundTrip) {
  Field f(3);
  for (auto a : {catalog::a2(f), catalog::nakayama2(f)}) {
    RightModule r = regular_right_module(a);
    EXPECT_TRUE(validate_right_module(r));
    EXPECT_TRUE(validate_module(as_left_opposite(r)));
    RightModule back = as_right_opposite(as_left_opposite(r));
    EXPECT_TRUE(back.ring->same_structure(*a));
    EXPECT_EQ(back.act.size(), r.act.size());
    Bimodule b = regular_bimodule(a);
    EXPECT_TRUE(validate_bimodule(flip(b)));
    EXPECT_TRUE(validate_bimodule(dual_bimodule(b)));
  }
}
