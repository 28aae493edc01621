#include <gtest/gtest.h>

#include "tx/catalog.hpp"
#include "tx/homology.hpp"

using namespace tx;

namespace {

Module vertex_simple(const AlgebraPtr& a, std::size_t v, std::size_t vertices) {
  Module m{a, {}};
  for (std::size_t i = 0; i < a->dim(); ++i)
    m.act.push_back(Matrix::from_rows(a->field(), {{(i < vertices && i == v) ? 1 : 0}}));
  return m;
}

std::vector<AlgebraPtr> small_algebras(Field f) {
  return {catalog::dual_numbers(f), catalog::a2(f), catalog::nakayama2(f), catalog::split_semisimple(f, 2)};
}

// Ext^1 by dimension count along 0 -> Omega m -> P -> m -> 0.
std::size_t ext1_by_counting(const Module& m, const Module& n) {
  ProjectivePresentation pc = projective_cover(m);
  return hom_space(pc.kernel.module, n).dim() - hom_space(pc.cover, n).dim() + hom_space(m, n).dim();
}

// id by iterating injective envelopes and cokernels.
DimensionVerdict id_by_envelopes(const Module& m, std::size_t bound) {
  Module cur = m;
  if (cur.dim() == 0) return DimensionVerdict::finite(0);
  for (std::size_t d = 0; d <= bound; ++d) {
    InjectiveEnvelope e = injective_envelope(cur);
    cur = cokernel_module(ModuleHom{cur, e.envelope, e.mono}).module;
    if (cur.dim() == 0) return DimensionVerdict::finite(d);
  }
  return DimensionVerdict::exceeds(bound);
}

}  // namespace

TEST(Resolution, Examples) {
  Field f(2);
  auto d = catalog::dual_numbers(f);
  Resolution rp = minimal_projective_resolution(regular_module(d), 3);
  EXPECT_EQ(rp.terms[0].dim(), 2u);
  for (std::size_t i = 1; i < rp.terms.size(); ++i) EXPECT_EQ(rp.terms[i].dim(), 0u);
  Module k = simples(d)[0];
  Resolution rk = minimal_projective_resolution(k, 5);
  ASSERT_EQ(rk.terms.size(), 6u);
  for (const auto& p : rk.terms) EXPECT_TRUE(is_isomorphic(p, regular_module(d)));
  for (std::size_t i = 1; i < rk.syzygies.size(); ++i) EXPECT_TRUE(is_isomorphic(rk.syzygies[i].module, k));
  auto a = catalog::a2(f);
  Module s1 = vertex_simple(a, 0, 2), s2 = vertex_simple(a, 1, 2);
  Resolution rs = minimal_projective_resolution(s1, 3);
  EXPECT_EQ(rs.terms[0].dim(), 2u);
  EXPECT_EQ(rs.terms[1].dim(), 1u);
  EXPECT_EQ(rs.terms[2].dim(), 0u);
  EXPECT_TRUE(is_isomorphic(syzygy(s1, 1), s2));
  EXPECT_EQ(syzygy(s1, 2).dim(), 0u);
  EXPECT_TRUE(is_isomorphic(syzygy(k, 4), k));
  EXPECT_TRUE(is_isomorphic(syzygy(s1, 0), s1));
}

TEST(Resolution, ExactMinimalAndProjective) {
  for (Elem p : {2u, 3u}) {
    Field f(p);
    for (const auto& a : small_algebras(f))
      for (const auto& m : catalog::random_modules(a, 5, 5, 3 + p)) {
        Resolution r = minimal_projective_resolution(m, 4);
        ChainComplex c = resolution_complex(r);
        EXPECT_TRUE(squares_to_zero(c));
        EXPECT_TRUE(is_exact_complex(c).exact);
        EXPECT_EQ(rank(r.maps[0]), m.dim());
        EXPECT_TRUE(is_exact_at(r.maps[1], r.maps[0]));
        for (std::size_t i = 0; i < r.terms.size(); ++i) {
          EXPECT_TRUE(is_projective(r.terms[i]));
          if (i > 0) {
            Subspace rad = Subspace::span(radical_of_module(r.terms[i - 1]).inclusion);
            EXPECT_TRUE(rad.contains(r.maps[i]));
          }
        }
      }
  }
}

TEST(Ext, Examples) {
  Field f(2);
  auto d = catalog::dual_numbers(f);
  Module k = simples(d)[0];
  std::vector<std::size_t> dims = ext_dims(k, k, 6);
  for (std::size_t i = 0; i <= 6; ++i) EXPECT_EQ(dims[i], 1u);
  EXPECT_EQ(ext_dims_by_classes(k, k, 6), dims);
  Module reg = regular_module(d);
  for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(ext(reg, k, i).dim, 0u);
  EXPECT_EQ(ext(reg, k, 0).dim, hom_space(reg, k).dim());
  auto a = catalog::a2(f);
  Module s1 = vertex_simple(a, 0, 2);
  ExtGroup e = ext(s1, regular_module(a), 1);
  EXPECT_EQ(e.dim, 1u);
  ASSERT_EQ(e.representatives.size(), 1u);
}

TEST(Ext, AgreesWithDimensionShifting) {
  for (Elem p : {2u, 3u}) {
    Field f(p);
    for (const auto& a : small_algebras(f)) {
      auto mods = catalog::random_modules(a, 4, 4, 11 + p);
      for (const auto& m : mods)
        for (const auto& n : mods) {
          std::vector<std::size_t> dims = ext_dims(m, n, 3);
          EXPECT_EQ(dims[0], hom_space(m, n).dim());
          EXPECT_EQ(dims[1], ext1_by_counting(m, n));
          for (std::size_t i = 2; i <= 3; ++i) EXPECT_EQ(dims[i], ext1_by_counting(syzygy(m, i - 1), n));
          EXPECT_EQ(ext_dims_by_classes(m, n, 3), dims);
        }
    }
  }
}

TEST(Ext, IndependentOfResolution) {
  for (Elem p : {2u, 3u}) {
    Field f(p);
    for (const auto& a : small_algebras(f)) {
      auto mods = catalog::random_modules(a, 4, 4, 19 + p);
      for (const auto& m : mods) {
        Resolution minimal = minimal_projective_resolution(m, 4);
        Resolution padded = padded_resolution(m, 4, 7 * p);
        EXPECT_TRUE(is_exact_complex(resolution_complex(padded)).exact);
        for (const auto& n : mods)
          for (std::size_t i = 0; i <= 3; ++i) EXPECT_EQ(ext_from(minimal, n, i).dim, ext_from(padded, n, i).dim);
      }
    }
  }
}

TEST(Dimensions, Examples) {
  Field f(2);
  auto d = catalog::dual_numbers(f);
  EXPECT_EQ(pd_bounded(regular_module(d), 10), DimensionVerdict::finite(0));
  EXPECT_EQ(pd_bounded(simples(d)[0], 10), DimensionVerdict::exceeds(10));
  auto a = catalog::a2(f);
  EXPECT_EQ(id_bounded(regular_module(a), 10), DimensionVerdict::finite(1));
  EXPECT_EQ(pd_bounded(vertex_simple(a, 0, 2), 10), DimensionVerdict::finite(1));
  EXPECT_EQ(fd_bounded(vertex_simple(a, 0, 2), 10), DimensionVerdict::finite(1));
  EXPECT_EQ(pd_bounded(zero_module(a), 3), DimensionVerdict::finite(0));
  EXPECT_EQ(default_bound(*a), 10u);
  EXPECT_EQ(default_bound(*catalog::split_semisimple(f, 7)), 14u);
  EXPECT_EQ(DimensionVerdict::exceeds(4).to_string(), "ExceedsBound(4)");
  EXPECT_EQ(pd_bounded(regular_right_module(a), 5), DimensionVerdict::finite(0));
}

TEST(Dimensions, GrowingSyzygiesStayCheap) {
  Field f(2);
  auto l = catalog::local_two_loops(f);
  Module k = simples(l)[0];
  SyzygyClasses sc = syzygy_classes(k, 8);
  ASSERT_EQ(sc.levels.size(), 9u);
  // Omega^i(k) = k^(2^i) over a radical-square-zero local algebra with two loops.
  for (std::size_t i = 0; i < sc.levels.size(); ++i) {
    ASSERT_EQ(sc.levels[i].size(), 1u);
    EXPECT_EQ(sc.levels[i][0].second, 1ull << i);
  }
  EXPECT_EQ(pd_bounded(k, 10), DimensionVerdict::exceeds(10));
  EXPECT_EQ(id_bounded(regular_module(l), 10), DimensionVerdict::exceeds(10));
}

TEST(Dimensions, FinitePdIsSharp) {
  for (Elem p : {2u, 3u}) {
    Field f(p);
    for (const auto& a : small_algebras(f)) {
      const auto& ss = simples(a);
      for (const auto& m : catalog::random_modules(a, 6, 5, 29 + p)) {
        DimensionVerdict v = pd_bounded(m, 6);
        if (!v.is_finite()) continue;
        bool some_nonzero = false;
        for (const auto& s : ss) {
          Module sm{m.ring, s.act};
          std::vector<std::size_t> dims = ext_dims(m, sm, v.value + 1);
          EXPECT_EQ(dims[v.value + 1], 0u);
          some_nonzero = some_nonzero || dims[v.value] != 0;
        }
        EXPECT_TRUE(some_nonzero);
      }
    }
  }
}

TEST(Dimensions, InjectiveDimensionByEnvelopes) {
  for (Elem p : {2u, 3u}) {
    Field f(p);
    for (const auto& a : small_algebras(f)) {
      auto mods = catalog::random_modules(a, 5, 5, 37 + p);
      mods.push_back(regular_module(a));
      for (const auto& m : mods) EXPECT_EQ(id_bounded(m, 5), id_by_envelopes(m, 5));
    }
  }
}

TEST(Complexes, HomAndTensor) {
  Field f(2);
  auto d = catalog::dual_numbers(f);
  Module k = simples(d)[0];
  ChainComplex c = resolution_complex(minimal_projective_resolution(k, 4));
  ChainComplex hz = hom_complex(c, zero_module(d));
  for (const auto& t : hz.terms) EXPECT_EQ(t.dim(), 0u);
  ChainComplex hk = hom_complex(c, k);
  EXPECT_TRUE(squares_to_zero(hk));
  for (const auto& dm : hk.diffs) EXPECT_TRUE(dm.is_zero());
  for (const auto& t : hk.terms) EXPECT_EQ(t.dim(), 1u);
  ChainComplex tc = tensor_complex(regular_bimodule(d), c);
  ASSERT_EQ(tc.terms.size(), c.terms.size());
  for (int i = c.lo; i <= c.hi(); ++i) EXPECT_TRUE(is_isomorphic(tc.at(i), c.at(i)));
  EXPECT_TRUE(squares_to_zero(tc));
  EXPECT_TRUE(is_exact_complex(tc).exact);
  ChainComplex hc = hom_complex(regular_module(d), c);
  EXPECT_TRUE(is_exact_complex(hc).exact);
}

TEST(Complexes, ExactnessExamples) {
  Field f(3);
  auto k = catalog::field_algebra(f);
  Module x = direct_sum(regular_module(k), regular_module(k));
  Module z = zero_module(k);
  ChainComplex iso{0, {z, x, x, z}, {Matrix(f, 2, 0), Matrix::identity(f, 2), Matrix(f, 0, 2)}};
  EXPECT_TRUE(is_exact_complex(iso).exact);
  ChainComplex bad{0, {z, x, z}, {Matrix(f, 2, 0), Matrix(f, 0, 2)}};
  ExactnessReport r = is_exact_complex(bad);
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(r.first_failure, 1);
}
