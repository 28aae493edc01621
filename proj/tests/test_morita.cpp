#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "tx/catalog.hpp"
#include "tx/morita.hpp"

using namespace tx;

namespace {

constexpr std::size_t kBound = 8;

// Searches for a basis permutation carrying the structure constants of a
// onto those of b.
bool permutation_isomorphic(const Algebra& a, const Algebra& b) {
  const std::size_t n = a.dim();
  if (b.dim() != n) return false;
  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = a.unit()[i] == b.unit()[pi[i]];
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t k = 0; k < n && ok; ++k) ok = a.c(i, j, k) == b.c(pi[i], pi[j], pi[k]);
    if (ok) return true;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return false;
}

// A = D, B = k, U = k with the nilpotent of D acting as zero, V = D.
MoritaContextData mixed_context(Field f) {
  auto d = catalog::dual_numbers(f);
  auto k = catalog::field_algebra(f);
  Bimodule u{k, d, {Matrix::identity(f, 1)}, {Matrix::identity(f, 1), Matrix(f, 1, 1)}};
  Bimodule v{d, k, regular_module(d).act, {Matrix::identity(f, 2)}};
  return {d, k, u, v, "mixed"};
}

MoritaContextData dual_numbers_context(Field f) {
  auto d = catalog::dual_numbers(f);
  return {d, d, regular_bimodule(d), regular_bimodule(d), "dd"};
}

std::vector<MoritaContextData> contexts(Field f) {
  return {split_context(f), triangular_context(f), cyclic_context(f), mixed_context(f), dual_numbers_context(f)};
}

std::vector<Module> lambda_modules(const MoritaRing& r, std::size_t count, std::size_t max_dim, std::uint64_t seed) {
  return catalog::random_modules(r.lambda, count, max_dim, seed);
}

// Every lambda-module of dimension <= max_dim up to isomorphism, through the
// extension whose basis starts with the two vertex idempotents.
std::vector<Module> all_lambda_modules(const MoritaRing& r, std::size_t max_dim) {
  std::vector<Module> out;
  for (const auto& m : catalog::enumerate_modules(r.extension.total, 2, max_dim))
    out.push_back(restrict_scalars(m, r.lambda, r.iso));
  return out;
}

}  // namespace

TEST(MoritaRing, CannedContexts) {
  for (Elem p : {2u, 3u}) {
    Field f(p);
    MoritaRing split = morita_ring(split_context(f));
    EXPECT_TRUE(split.iso_valid);
    EXPECT_TRUE(permutation_isomorphic(*split.lambda, *catalog::split_semisimple(f, 2)));
    MoritaRing tri = morita_ring(triangular_context(f));
    EXPECT_TRUE(tri.iso_valid);
    EXPECT_EQ(tri.lambda->dim(), 3u);
    EXPECT_TRUE(permutation_isomorphic(*tri.lambda, *catalog::a2(f)));
    MoritaRing cyc = morita_ring(cyclic_context(f));
    EXPECT_TRUE(cyc.iso_valid);
    auto quiver = monomial_quiver_algebra(f, 2, {{0, 1}, {1, 0}}, {{0, 1}, {1, 0}});
    EXPECT_TRUE(permutation_isomorphic(*cyc.lambda, *quiver));
    EXPECT_EQ(gorenstein_regime(cyc.lambda, kBound).kind, Regime::Kind::SelfInjective);
  }
}

TEST(MoritaRing, LargerContextsAndErrors) {
  Field f(3);
  for (const auto& d : {mixed_context(f), dual_numbers_context(f)}) {
    MoritaRing r = morita_ring(d);
    EXPECT_TRUE(validate_algebra(*r.lambda).ok);
    EXPECT_TRUE(r.iso_valid);
    EXPECT_TRUE((r.iso * r.iso_inverse).is_identity());
  }
  MoritaContextData bad = mixed_context(f);
  std::swap(bad.u, bad.v);
  EXPECT_FALSE(validate_context(bad).ok);
  EXPECT_THROW(morita_ring(bad), std::invalid_argument);
}

TEST(Theta, Examples) {
  Field f(2);
  for (const auto& d : contexts(f)) {
    MoritaRing r = morita_ring(d);
    // f = g = 0 gives Z((X, Y)).
    Module x = regular_module(d.a), y = regular_module(d.b);
    TupleModule z{x, y, Matrix(f, y.dim(), tensor_over(d.u, x).space.dim()),
                  Matrix(f, x.dim(), tensor_over(d.v, y).space.dim())};
    PairModule pz = theta(r, z);
    PairModule expected = functor_Z_pair(r.extension, product_module(r, x, y));
    EXPECT_TRUE(pz.alpha == expected.alpha);
    EXPECT_TRUE(pz.x.act == expected.x.act);
    // The regular lambda-module is T of the regular A x B-module.
    TupleModule reg = module_to_tuple(r, regular_module(r.lambda));
    EXPECT_TRUE(validate_tuple(r, reg).ok);
    EXPECT_TRUE(is_isomorphic(pair_to_module(r.extension, theta(r, reg)),
                              pair_to_module(r.extension, functor_T(r.extension, regular_module(r.product.algebra)))));
    // Mirror for right modules and for cotuples.
    RightTupleModule rreg = module_to_right_tuple(r, regular_right_module(r.lambda));
    EXPECT_TRUE(validate_right_tuple(r, rreg).ok);
    CotupleModule creg = module_to_cotuple(r, regular_module(r.lambda));
    EXPECT_TRUE(validate_cotuple(r, creg).ok);
  }
}

TEST(Theta, RejectsLawViolation) {
  Field f(2);
  MoritaRing r = morita_ring(cyclic_context(f));
  Module k = regular_module(r.data.a);
  // f = g = id on k (x) k = k violates g (V (x) f) = 0.
  TupleModule t{k, k, Matrix::identity(f, 1), Matrix::identity(f, 1)};
  EXPECT_FALSE(validate_tuple(r, t).ok);
  EXPECT_THROW(theta(r, t), std::invalid_argument);
}

TEST(ThetaProperty, RoundTripsAndHomDimensions) {
  std::size_t instances = 0;
  for (Elem p : {2u, 3u}) {
    Field f(p);
    for (const auto& d : contexts(f)) {
      MoritaRing r = morita_ring(d);
      auto mods = lambda_modules(r, 5, 4, 100 + p);
      std::vector<TupleModule> tuples;
      std::vector<CotupleModule> cotuples;
      std::vector<RightTupleModule> rights;
      std::vector<RightModule> right_mods;
      for (const auto& m : mods) {
        ++instances;
        TupleModule t = module_to_tuple(r, m);
        ASSERT_TRUE(validate_tuple(r, t).ok);
        TupleModule back = theta_inverse(r, theta(r, t));
        EXPECT_TRUE(back.x.act == t.x.act && back.y.act == t.y.act && back.f == t.f && back.g == t.g);
        EXPECT_TRUE(is_isomorphic(tuple_to_module(r, t), m));
        EXPECT_EQ(t.x.dim() + t.y.dim(), m.dim());
        tuples.push_back(t);

        CotupleModule c = module_to_cotuple(r, m);
        ASSERT_TRUE(validate_cotuple(r, c).ok);
        CotupleModule cback = cotheta_inverse(r, cotheta(r, c));
        EXPECT_TRUE(cback.x.act == c.x.act && cback.y.act == c.y.act && cback.f == c.f && cback.g == c.g);
        EXPECT_TRUE(is_isomorphic(cotuple_to_module(r, c), m));
        cotuples.push_back(c);

        RightModule rm = dual_module(m);
        RightTupleModule rt = module_to_right_tuple(r, rm);
        ASSERT_TRUE(validate_right_tuple(r, rt).ok);
        RightTupleModule rback = upsilon_inverse(r, upsilon(r, rt));
        EXPECT_TRUE(rback.w.act == rt.w.act && rback.q.act == rt.q.act && rback.f == rt.f && rback.g == rt.g);
        EXPECT_TRUE(is_isomorphic(as_left_opposite(right_tuple_to_module(r, rt)), as_left_opposite(rm)));
        rights.push_back(rt);
        right_mods.push_back(rm);
      }
      for (std::size_t i = 0; i < mods.size(); ++i)
        for (std::size_t j = 0; j < mods.size(); ++j) {
          std::size_t h = hom_space(mods[i], mods[j]).dim();
          EXPECT_EQ(tuple_hom_dim(r, tuples[i], tuples[j]), h);
          EXPECT_EQ(cotuple_hom_dim(r, cotuples[i], cotuples[j]), h);
          EXPECT_EQ(right_tuple_hom_dim(r, rights[i], rights[j]), hom_space(right_mods[i], right_mods[j]).dim());
        }
    }
  }
  EXPECT_GE(instances, 50u);
}

TEST(SumBimodule, CompatibilityPropagates) {
  for (Elem p : {2u, 3u}) {
    Field f(p);
    for (const auto& d : contexts(f)) {
      MoritaRing r = morita_ring(d);
      for (bool co : {false, true}) {
        auto report = [&](const Bimodule& b) {
          return co ? cocompatibility_report(b, kBound) : compatibility_report(b, kBound);
        };
        CompatibilityReport u = report(d.u), v = report(d.v), s = report(r.extension.bimodule);
        if (u.established() && u.via == v.via) {
          EXPECT_TRUE(s.established());
          EXPECT_EQ(s.via, u.via);
        }
        // The sum is finite on a side exactly when both summands are.
        EXPECT_EQ(s.pd_left.is_finite(), u.pd_left.is_finite() && v.pd_left.is_finite());
        EXPECT_EQ(s.fd_right.is_finite(), u.fd_right.is_finite() && v.fd_right.is_finite());
      }
    }
  }
}

TEST(MoritaVerify, ZeroTupleIsVacuous) {
  Field f(2);
  MoritaRing r = morita_ring(triangular_context(f));
  Module zx = zero_module(r.data.a), zy = zero_module(r.data.b);
  TupleModule t{zx, zy, Matrix(f, 0, 0), Matrix(f, 0, 0)};
  MoritaReport m = verify_tuple_gp(r, t, kBound);
  EXPECT_TRUE(m.lhs.certified_yes());
  EXPECT_TRUE(m.rhs);
  EXPECT_TRUE(m.agree);
  EXPECT_TRUE(m.consistent);
}

TEST(MoritaVerify, TriangularFullEquivalence) {
  Field f(2);
  MoritaRing r = morita_ring(triangular_context(f));
  auto mods = all_lambda_modules(r, 4);
  EXPECT_EQ(mods.size(), 21u);
  for (const auto& m : mods) {
    MoritaReport gp = verify_tuple_gp(r, module_to_tuple(r, m), kBound);
    EXPECT_TRUE(gp.sufficiency_established && gp.converse_established);
    EXPECT_TRUE(gp.agree) << gp.to_string();
    EXPECT_TRUE(gp.presentation_matches);
    EXPECT_EQ(gp.lhs.certified_yes(), is_projective(m));
    MoritaReport gi = verify_cotuple_gi(r, module_to_cotuple(r, m), kBound);
    EXPECT_TRUE(gi.sufficiency_established && gi.converse_established);
    EXPECT_TRUE(gi.agree) << gi.to_string();
    EXPECT_TRUE(gi.presentation_matches);
    MoritaReport gf = verify_right_tuple_gf(r, module_to_right_tuple(r, dual_module(m)), kBound);
    EXPECT_TRUE(gf.agree) << gf.to_string();
    EXPECT_TRUE(gf.presentation_matches);
  }
}

TEST(MoritaVerify, CyclicForwardOnly) {
  Field f(2);
  MoritaRing r = morita_ring(cyclic_context(f));
  std::size_t disagreements = 0;
  for (const auto& m : all_lambda_modules(r, 3)) {
    MoritaReport gp = verify_tuple_gp(r, module_to_tuple(r, m), kBound);
    EXPECT_TRUE(gp.sufficiency_established);
    EXPECT_FALSE(gp.converse_established);
    EXPECT_TRUE(gp.lhs.certified_yes());
    EXPECT_TRUE(gp.consistent);
    disagreements += !gp.agree;
  }
  // The simples sit in tuples (k, 0, 0, 0) whose second sequence is not exact.
  EXPECT_GT(disagreements, 0u);
}

TEST(MoritaVerifyProperty, ImplicationsNeverViolated) {
  for (Elem p : {2u, 3u}) {
    Field f(p);
    for (const auto& d : contexts(f)) {
      MoritaRing r = morita_ring(d);
      for (const auto& m : lambda_modules(r, 4, 4, 200 + p)) {
        MoritaReport gp = verify_tuple_gp(r, module_to_tuple(r, m), kBound);
        EXPECT_TRUE(gp.consistent) << gp.to_string();
        EXPECT_TRUE(gp.presentation_matches);
        MoritaReport gi = verify_cotuple_gi(r, module_to_cotuple(r, m), kBound);
        EXPECT_TRUE(gi.consistent) << gi.to_string();
        EXPECT_TRUE(gi.presentation_matches);
        MoritaReport gf = verify_right_tuple_gf(r, module_to_right_tuple(r, dual_module(m)), kBound);
        EXPECT_TRUE(gf.consistent) << gf.to_string();
        EXPECT_TRUE(gf.presentation_matches);
      }
    }
  }
}
