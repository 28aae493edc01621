// Dense exact linear algebra over prime fields GF(p).
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tx {

using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

class Field {
 public:
  // Throws std::invalid_argument unless p is a prime in [2, 65521].
  explicit Field(Elem p);

  Elem p() const { return p_; }
  Elem reduce(std::int64_t v) const;
  Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  // Throws std::domain_error for a == 0.
  Elem inv(Elem a) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }

 private:
  Elem p_;
};

bool is_prime(std::uint64_t n);

class Matrix {
 public:
  Matrix() : f_(2), r_(0), c_(0) {}
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  // Entries are reduced mod p; every row must have the same length.
  static Matrix from_rows(Field f, const std::vector<std::vector<std::int64_t>>& rows,
                          std::size_t cols_if_empty = 0);
  static Matrix column(Field f, const Vec& v);
  static Matrix row(Field f, const Vec& v);

  const Field& field() const { return f_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Elem operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  Elem& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const std::vector<Elem>& data() const { return a_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Elem s) const;
  Matrix transpose() const;
  Vec apply(const Vec& v) const;

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Vec row_vec(std::size_t i) const;
  Vec col_vec(std::size_t j) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;

  std::string to_string() const;

 private:
  Field f_;
  std::size_t r_;
  std::size_t c_;
  std::vector<Elem> a_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& parts, const Field& f, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& parts, const Field& f, std::size_t cols);

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Rows form the canonical (reduced echelon) basis of the right null space.
Matrix kernel_basis(const Matrix& m);

// Solves a*x = b; free variables are set to zero.  Throws on row mismatch.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

// Column subspace of GF(p)^n with canonical basis.  basis has one column per
// basis vector; basis(pivots[k], j) = [k == j], so coordinates are read off
// at the pivot rows.
struct Subspace {
  Matrix basis;
  std::vector<std::size_t> pivots;

  std::size_t ambient() const { return basis.rows(); }
  std::size_t dim() const { return basis.cols(); }
  // Coordinates of the columns of v; valid only when v lies in the subspace.
  Matrix coords(const Matrix& v) const;
  bool contains(const Matrix& v) const;
  bool operator==(const Subspace& o) const { return basis == o.basis; }

  static Subspace span(const Matrix& columns);
  static Subspace kernel(const Matrix& m);
  static Subspace whole(const Field& f, std::size_t n);
  static Subspace zero(const Field& f, std::size_t n);
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// GF(p)^n / s with canonical complement coordinates (the non-pivot rows of s).
struct Quotient {
  Matrix proj;     // q x n
  Matrix section;  // n x q, proj * section = I
};
Quotient quotient(const Subspace& s);

// Incrementally maintained echelon basis for spanning computations.
class EchelonBasis {
 public:
  EchelonBasis(Field f, std::size_t n);
  // Returns true when v was independent of the current span.
  bool add(const Vec& v);
  Vec reduce(Vec v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  Subspace subspace() const;

 private:
  Field f_;
  std::size_t n_;
  std::vector<Vec> rows_;           // each normalized so rows_[k][pivot_[k]] = 1
  std::vector<std::size_t> pivot_;
};

}  // namespace tx
