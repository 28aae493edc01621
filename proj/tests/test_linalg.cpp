#include <gtest/gtest.h>

#include <random>

#include "tx/linalg.hpp"

using namespace tx;

namespace {

Matrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = static_cast<Elem>(rng() % f.p());
  return m;
}

// Counts vectors x in GF(p)^n with m x = 0 by enumeration.
std::size_t brute_kernel_size(const Matrix& m) {
  const Elem p = m.field().p();
  std::size_t total = 1;
  for (std::size_t i = 0; i < m.cols(); ++i) total *= p;
  std::size_t count = 0;
  Vec x(m.cols());
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t v = t;
    for (auto& e : x) {
      e = static_cast<Elem>(v % p);
      v /= p;
    }
    bool zero = true;
    for (auto e : m.apply(x)) zero = zero && e == 0;
    count += zero;
  }
  return count;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST(Field, RejectsComposite) {
  EXPECT_THROW(Field(4), std::invalid_argument);
  EXPECT_THROW(Field(1), std::invalid_argument);
  EXPECT_THROW(Field(65537), std::invalid_argument);
  EXPECT_NO_THROW(Field(65521));
}

TEST(Field, InverseAndReduce) {
  Field f(7);
  for (Elem a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.reduce(-1), 6u);
  EXPECT_THROW(f.inv(0), std::domain_error);
  Field big(65521);
  EXPECT_EQ(big.mul(65520, 65520), 1u);
}

TEST(Rref, IdentityIsFixed) {
  Field f(2);
  auto r = rref(Matrix::identity(f, 2));
  EXPECT_EQ(r.reduced, Matrix::identity(f, 2));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, ZeroMatrix) {
  Field f(3);
  Matrix z(f, 3, 4);
  auto r = rref(z);
  EXPECT_EQ(r.reduced, z);
  EXPECT_EQ(r.rank, 0u);
  EXPECT_TRUE(r.pivot_cols.empty());
}

TEST(Rref, AllOnesOverGF2) {
  Field f(2);
  auto r = rref(Matrix::from_rows(f, {{1, 1}, {1, 1}}));
  EXPECT_EQ(r.reduced, Matrix::from_rows(f, {{1, 1}, {0, 0}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0}));
}

TEST(Kernel, Examples) {
  Field f(5);
  EXPECT_EQ(kernel_basis(Matrix::identity(f, 4)).rows(), 0u);
  Matrix k = kernel_basis(Matrix(f, 2, 3));
  EXPECT_EQ(k, Matrix::identity(f, 3));
  Field f2(2);
  EXPECT_EQ(kernel_basis(Matrix::from_rows(f2, {{1, 1}})), Matrix::from_rows(f2, {{1, 1}}));
}

TEST(Solve, Examples) {
  Field f(3);
  Matrix b = Matrix::from_rows(f, {{1, 2}, {0, 1}});
  EXPECT_EQ(*solve(Matrix::identity(f, 2), b), b);
  EXPECT_EQ(*solve(Matrix(f, 2, 2), Matrix(f, 2, 1)), Matrix(f, 2, 1));
  Field f2(2);
  EXPECT_FALSE(solve(Matrix::from_rows(f2, {{1, 1}, {0, 0}}), Matrix::from_rows(f2, {{1}, {1}})).has_value());
  EXPECT_THROW(solve(Matrix(f, 2, 2), Matrix(f, 3, 1)), std::invalid_argument);
}

TEST(Kron, Examples) {
  Field f(2);
  EXPECT_EQ(kron(Matrix::identity(f, 2), Matrix::identity(f, 3)), Matrix::identity(f, 6));
  Matrix a = Matrix::from_rows(f, {{1, 1}});
  EXPECT_TRUE(kron(a, Matrix(f, 2, 2)).is_zero());
  // (a (x) b)(e_j (x) e_l) = a e_j (x) b e_l, expanded on the standard basis.
  Matrix b = Matrix::from_rows(f, {{1}, {1}});
  Matrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 2u);
  ASSERT_EQ(k.cols(), 2u);
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t l = 0; l < b.cols(); ++l)
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t m = 0; m < b.rows(); ++m)
          EXPECT_EQ(k(i * b.rows() + m, j * b.cols() + l), f.mul(a(i, j), b(m, l)));
  EXPECT_EQ(k, Matrix::from_rows(f, {{1, 1}, {1, 1}}));
  EXPECT_THROW(kron(a, Matrix(Field(3), 1, 1)), std::invalid_argument);
}

TEST(DirectSum, Examples) {
  Field f(3);
  EXPECT_EQ(direct_sum(Matrix::identity(f, 1), Matrix::identity(f, 1)), Matrix::identity(f, 2));
  Matrix a = Matrix::from_rows(f, {{1, 2}, {0, 1}});
  EXPECT_EQ(direct_sum(a, Matrix(f, 0, 0)), a);
  EXPECT_EQ(direct_sum(Matrix::from_rows(f, {{1}}), Matrix::from_rows(f, {{2}})),
            Matrix::from_rows(f, {{1, 0}, {0, 2}}));
}

TEST(Linalg, EmptyShapes) {
  Field f(2);
  Matrix z(f, 0, 3);
  EXPECT_EQ(rank(z), 0u);
  EXPECT_EQ(kernel_basis(z).rows(), 3u);
  Matrix w(f, 3, 0);
  EXPECT_EQ(kernel_basis(w).rows(), 0u);
  EXPECT_EQ((z * Matrix(f, 3, 2)).rows(), 0u);
  EXPECT_TRUE((w * z).is_zero());
}

TEST(LinalgProperty, RankNullityAgainstEnumeration) {
  std::mt19937_64 rng(11);
  for (Elem p : {2u, 3u, 5u}) {
    Field f(p);
    for (int t = 0; t < 60; ++t) {
      std::size_t r = rng() % 9, c = rng() % 9;
      Matrix m = random_matrix(f, r, c, rng);
      auto rr = rref(m);
      Matrix k = kernel_basis(m);
      EXPECT_EQ(rr.rank + k.rows(), c);
      EXPECT_EQ(rref(rr.reduced).reduced, rr.reduced);
      if (k.rows()) EXPECT_TRUE((m * k.transpose()).is_zero());
      EXPECT_EQ(rref(k).reduced, k);
      if (ipow(p, c) <= 4096) EXPECT_EQ(brute_kernel_size(m), ipow(p, k.rows()));
    }
  }
}

TEST(LinalgProperty, RrefUniqueUnderRowOperations) {
  std::mt19937_64 rng(12);
  Field f(3);
  for (int t = 0; t < 50; ++t) {
    Matrix m = random_matrix(f, 1 + rng() % 6, 1 + rng() % 6, rng);
    Matrix g = random_matrix(f, m.rows(), m.rows(), rng);
    if (rank(g) != m.rows()) continue;
    EXPECT_EQ(rref(g * m).reduced, rref(m).reduced);
  }
}

TEST(LinalgProperty, SolveSoundness) {
  std::mt19937_64 rng(13);
  for (Elem p : {2u, 3u, 5u}) {
    Field f(p);
    for (int t = 0; t < 80; ++t) {
      std::size_t r = rng() % 7, c = rng() % 7;
      Matrix a = random_matrix(f, r, c, rng);
      Matrix b = (t % 2) ? a * random_matrix(f, c, 2, rng) : random_matrix(f, r, 2, rng);
      auto x = solve(a, b);
      if (t % 2) ASSERT_TRUE(x.has_value());
      if (x) EXPECT_EQ(a * *x, b);
    }
  }
}

TEST(LinalgProperty, KronRankMultiplicative) {
  std::mt19937_64 rng(14);
  for (Elem p : {2u, 3u}) {
    Field f(p);
    for (int t = 0; t < 40; ++t) {
      Matrix a = random_matrix(f, rng() % 5, rng() % 5, rng);
      Matrix b = random_matrix(f, rng() % 5, rng() % 5, rng);
      EXPECT_EQ(rank(kron(a, b)), rank(a) * rank(b));
    }
  }
}

TEST(Subspace, QuotientAndCoordinates) {
  std::mt19937_64 rng(15);
  Field f(3);
  for (int t = 0; t < 30; ++t) {
    Matrix gens = random_matrix(f, 5, rng() % 4, rng);
    Subspace s = Subspace::span(gens);
    EXPECT_EQ(s.dim(), rank(gens));
    EXPECT_TRUE(s.contains(gens));
    Quotient q = quotient(s);
    EXPECT_EQ(q.proj.rows(), 5 - s.dim());
    EXPECT_TRUE((q.proj * q.section).is_identity());
    if (s.dim()) EXPECT_TRUE((q.proj * s.basis).is_zero());
    Subspace s2 = Subspace::span(random_matrix(f, 5, 2, rng));
    Subspace i = intersect(s, s2);
    EXPECT_EQ(i.dim() + sum(s, s2).dim(), s.dim() + s2.dim());
  }
}
