#include "tx/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace tx {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(Elem p) : p_(p) {
  if (p < 2 || p > 65521 || !is_prime(p))
    throw std::invalid_argument("field modulus must be a prime in [2, 65521], got " +
                                std::to_string(p));
}

Elem Field::reduce(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return reduce(t);
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : f_(f), r_(rows), c_(cols), a_(rows * cols, 0) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<std::int64_t>>& rows,
                         std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows[0].size();
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = f.reduce(rows[i][j]);
  }
  return m;
}

Matrix Matrix::column(Field f, const Vec& v) {
  Matrix m(f, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

Matrix Matrix::row(Field f, const Vec& v) {
  Matrix m(f, 1, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m.at(0, i) = v[i];
  return m;
}

static void check_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw std::invalid_argument("field mismatch");
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_same_field(f_, o.f_);
  if (c_ != o.r_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix out(f_, r_, o.c_);
  const std::uint64_t p = f_.p();
  std::vector<std::uint64_t> acc(o.c_);
  for (std::size_t i = 0; i < r_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < c_; ++k) {
      std::uint64_t a = a_[i * c_ + k];
      if (a == 0) continue;
      const Elem* orow = &o.a_[k * o.c_];
      for (std::size_t j = 0; j < o.c_; ++j) {
        acc[j] += a * orow[j];
        if (acc[j] >= (1ULL << 62)) acc[j] %= p;
      }
    }
    for (std::size_t j = 0; j < o.c_; ++j) out.a_[i * o.c_ + j] = static_cast<Elem>(acc[j] % p);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_field(f_, o.f_);
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix sum dimension mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.add(a_[i], o.a_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_field(f_, o.f_);
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix difference dimension mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.sub(a_[i], o.a_[i]);
  return out;
}

Matrix Matrix::scaled(Elem s) const {
  Matrix out(*this);
  for (auto& x : out.a_) x = f_.mul(x, s);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(f_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) out.a_[j * r_ + i] = a_[i * c_ + j];
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != c_) throw std::invalid_argument("vector length mismatch");
  Vec out(r_, 0);
  for (std::size_t i = 0; i < r_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < c_; ++j) acc = (acc + static_cast<std::uint64_t>(a_[i * c_ + j]) * v[j]) % f_.p();
    out[i] = static_cast<Elem>(acc);
  }
  return out;
}

bool Matrix::is_zero() const {
  for (auto x : a_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (a_[i * c_ + j] != (i == j ? 1u : 0u)) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return f_ == o.f_ && r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > r_ || c0 + nc > c_) throw std::out_of_range("block out of range");
  Matrix out(f_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out.a_[i * nc + j] = a_[(r0 + i) * c_ + c0 + j];
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.r_ > r_ || c0 + b.c_ > c_) throw std::out_of_range("set_block out of range");
  for (std::size_t i = 0; i < b.r_; ++i)
    for (std::size_t j = 0; j < b.c_; ++j) a_[(r0 + i) * c_ + c0 + j] = b.a_[i * b.c_ + j];
}

Vec Matrix::row_vec(std::size_t i) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * c_),
             a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * c_));
}

Vec Matrix::col_vec(std::size_t j) const {
  Vec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = a_[i * c_ + j];
  return v;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix out(f_, idx.size(), c_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < c_; ++j) out.a_[k * c_ + j] = a_[idx[k] * c_ + j];
  return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix out(f_, r_, idx.size());
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) out.a_[i * idx.size() + k] = a_[i * c_ + idx[k]];
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < r_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < c_; ++j) os << (j ? "," : "") << a_[i * c_ + j];
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  check_same_field(a.field(), b.field());
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  check_same_field(a.field(), b.field());
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Matrix hstack(const std::vector<Matrix>& parts, const Field& f, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw std::invalid_argument("hstack row mismatch");
    cols += p.cols();
  }
  Matrix out(f, rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    out.set_block(0, c, p);
    c += p.cols();
  }
  return out;
}

Matrix vstack(const std::vector<Matrix>& parts, const Field& f, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw std::invalid_argument("vstack column mismatch");
    rows += p.rows();
  }
  Matrix out(f, rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.set_block(r, 0, p);
    r += p.rows();
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const Field& f = m.field();
  const std::size_t R = a.rows(), C = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t sel = R;
    for (std::size_t i = row; i < R; ++i)
      if (a(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel == R) continue;
    if (sel != row)
      for (std::size_t j = 0; j < C; ++j) std::swap(a.at(sel, j), a.at(row, j));
    Elem iv = f.inv(a(row, col));
    for (std::size_t j = col; j < C; ++j) a.at(row, j) = f.mul(a(row, j), iv);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == row) continue;
      Elem factor = a(i, col);
      if (factor == 0) continue;
      Elem nf = f.neg(factor);
      for (std::size_t j = col; j < C; ++j) {
        Elem v = a(row, j);
        if (v) a.at(i, j) = f.add(a(i, j), f.mul(nf, v));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {a, pivots.size(), pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  auto rr = rref(m);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto p : rr.pivot_cols) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < C; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix k(f, free_cols.size(), C);
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    std::size_t fc = free_cols[t];
    k.at(t, fc) = 1;
    for (std::size_t r = 0; r < rr.rank; ++r) k.at(t, rr.pivot_cols[r]) = f.neg(rr.reduced(r, fc));
  }
  // Vectors built this way are not yet in reduced echelon form.
  auto kr = rref(k);
  return kr.reduced.block(0, 0, kr.rank, C);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  check_same_field(a.field(), b.field());
  const std::size_t n = a.cols();
  auto rr = rref(hstack(a, b));
  Matrix x(a.field(), n, b.cols());
  for (std::size_t r = 0; r < rr.rank; ++r) {
    std::size_t pc = rr.pivot_cols[r];
    if (pc >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(pc, j) = rr.reduced(r, n + j);
  }
  return x;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  check_same_field(a.field(), b.field());
  const Field& f = a.field();
  Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Elem s = a(i, j);
      if (s == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.at(i * b.rows() + k, j * b.cols() + l) = f.mul(s, b(k, l));
    }
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  check_same_field(a.field(), b.field());
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve(m, Matrix::identity(m.field(), m.rows()));
  if (!x || !(m * *x).is_identity()) return std::nullopt;
  return x;
}

Matrix Subspace::coords(const Matrix& v) const { return v.select_rows(pivots); }

bool Subspace::contains(const Matrix& v) const { return basis * coords(v) == v; }

Subspace Subspace::span(const Matrix& columns) {
  auto rr = rref(columns.transpose());
  Matrix rows = rr.reduced.block(0, 0, rr.rank, columns.rows());
  return {rows.transpose(), rr.pivot_cols};
}

Subspace Subspace::kernel(const Matrix& m) {
  Matrix k = kernel_basis(m);
  auto rr = rref(k);
  return {k.transpose(), rr.pivot_cols};
}

Subspace Subspace::whole(const Field& f, std::size_t n) {
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) piv[i] = i;
  return {Matrix::identity(f, n), piv};
}

Subspace Subspace::zero(const Field& f, std::size_t n) { return {Matrix(f, n, 0), {}}; }

Subspace intersect(const Subspace& a, const Subspace& b) {
  // Solve a*x = b*y.
  Matrix k = kernel_basis(hstack(a.basis, b.basis.scaled(a.basis.field().neg(1))));
  Matrix xs = k.block(0, 0, k.rows(), a.dim()).transpose();
  return Subspace::span(a.basis * xs);
}

Subspace sum(const Subspace& a, const Subspace& b) { return Subspace::span(hstack(a.basis, b.basis)); }

Quotient quotient(const Subspace& s) {
  const Field& f = s.basis.field();
  const std::size_t n = s.ambient();
  std::vector<long> pivot_row(n, -1);
  for (std::size_t k = 0; k < s.pivots.size(); ++k) pivot_row[s.pivots[k]] = static_cast<long>(k);
  std::vector<std::size_t> free_idx;
  for (std::size_t i = 0; i < n; ++i)
    if (pivot_row[i] < 0) free_idx.push_back(i);
  const std::size_t q = free_idx.size();
  Matrix proj(f, q, n), sec(f, n, q);
  for (std::size_t t = 0; t < q; ++t) {
    proj.at(t, free_idx[t]) = 1;
    sec.at(free_idx[t], t) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (pivot_row[c] < 0) continue;
    std::size_t k = static_cast<std::size_t>(pivot_row[c]);
    for (std::size_t t = 0; t < q; ++t) proj.at(t, c) = f.neg(s.basis(free_idx[t], k));
  }
  return {proj, sec};
}

EchelonBasis::EchelonBasis(Field f, std::size_t n) : f_(f), n_(n) {}

Vec EchelonBasis::reduce(Vec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Elem c = v[pivot_[k]];
    if (c == 0) continue;
    Elem nc = f_.neg(c);
    const Vec& r = rows_[k];
    for (std::size_t j = 0; j < n_; ++j)
      if (r[j]) v[j] = f_.add(v[j], f_.mul(nc, r[j]));
  }
  return v;
}

bool EchelonBasis::add(const Vec& v0) {
  Vec v = reduce(v0);
  std::size_t piv = n_;
  for (std::size_t j = 0; j < n_; ++j)
    if (v[j]) {
      piv = j;
      break;
    }
  if (piv == n_) return false;
  Elem iv = f_.inv(v[piv]);
  for (auto& x : v) x = f_.mul(x, iv);
  // Keep existing rows reduced at the new pivot so reduce() stays one pass.
  for (auto& r : rows_) {
    Elem c = r[piv];
    if (c == 0) continue;
    Elem nc = f_.neg(c);
    for (std::size_t j = 0; j < n_; ++j)
      if (v[j]) r[j] = f_.add(r[j], f_.mul(nc, v[j]));
  }
  rows_.push_back(std::move(v));
  pivot_.push_back(piv);
  return true;
}

Subspace EchelonBasis::subspace() const {
  Matrix cols(f_, n_, rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k)
    for (std::size_t j = 0; j < n_; ++j) cols.at(j, k) = rows_[k][j];
  return Subspace::span(cols);
}

}  // namespace tx
