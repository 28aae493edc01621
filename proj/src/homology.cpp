#include "tx/homology.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace tx {

namespace {

Module space_module(const Field& f, std::size_t dim) {
  return Module{ground_algebra(f), {Matrix::identity(f, dim)}};
}

Resolution resolve(const Module& m, std::size_t n, std::uint64_t seed, bool pad) {
  const Field& f = m.field();
  Resolution r{m, {}, {}, {}, {}};
  r.syzygies.push_back(Submodule{m, Matrix::identity(f, m.dim())});
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i <= n; ++i) {
    const Submodule& prev = r.syzygies.back();
    const Module& cur = prev.module;
    if (cur.dim() == 0 && !pad) {
      r.terms.push_back(zero_module(m.ring));
      r.maps.push_back(Matrix(f, prev.inclusion.rows(), 0));
      r.summands.push_back({});
      r.syzygies.push_back(Submodule{zero_module(m.ring), Matrix(f, 0, 0)});
      continue;
    }
    ProjectivePresentation pc = projective_cover(cur, seed);
    Module cover = pc.cover;
    Matrix epi = pc.epi;
    std::vector<std::size_t> summands = pc.summands;
    if (pad) {
      const auto& pims = projective_indecomposables(m.ring, seed);
      std::size_t q = rng() % pims.size();
      Module extra{m.ring, pims[q].projective.act};
      HomSpace h = hom_space(extra, cur);
      Vec c(h.dim());
      for (auto& e : c) e = static_cast<Elem>(rng() % f.p());
      Matrix g = h.dim() ? h.combine(c) : Matrix(f, cur.dim(), extra.dim());
      cover = direct_sum(cover, extra);
      epi = hstack(epi, g);
      summands.push_back(q);
    }
    Submodule ker = kernel_module(ModuleHom{cover, cur, epi});
    r.maps.push_back(prev.inclusion * epi);
    r.terms.push_back(std::move(cover));
    r.summands.push_back(std::move(summands));
    r.syzygies.push_back(std::move(ker));
  }
  return r;
}

}  // namespace

bool squares_to_zero(const ChainComplex& c) {
  for (int i = c.lo; i + 1 < c.hi(); ++i)
    if (!(c.d(i + 1) * c.d(i)).is_zero()) return false;
  return true;
}

ExactnessReport is_exact_complex(const ChainComplex& c) {
  for (int i = c.lo + 1; i < c.hi(); ++i)
    if (!is_exact_at(c.d(i - 1), c.d(i))) return {false, i};
  return {};
}

Resolution minimal_projective_resolution(const Module& m, std::size_t n, std::uint64_t seed) {
  return resolve(m, n, seed, false);
}

Resolution padded_resolution(const Module& m, std::size_t n, std::uint64_t seed) {
  return resolve(m, n, seed, true);
}

Module syzygy(const Module& m, std::size_t i, std::uint64_t seed) {
  Module cur = m;
  for (std::size_t k = 0; k < i && cur.dim() > 0; ++k) cur = projective_cover(cur, seed).kernel.module;
  if (cur.dim() == 0) return zero_module(m.ring);
  return cur;
}

ChainComplex resolution_complex(const Resolution& r) {
  ChainComplex c;
  const std::size_t n = r.terms.size();
  c.lo = -static_cast<int>(n) + 1;
  for (std::size_t t = 0; t < n; ++t) c.terms.push_back(r.terms[n - 1 - t]);
  for (std::size_t t = 0; t + 1 < n; ++t) c.diffs.push_back(r.maps[n - 1 - t]);
  return c;
}

Matrix precompose_matrix(const HomSpace& from, const HomSpace& to, const Matrix& d) {
  Matrix out(d.field(), to.dim(), from.dim());
  for (std::size_t k = 0; k < from.dim(); ++k) {
    Vec c = to.coords(from.element(k) * d);
    for (std::size_t r = 0; r < c.size(); ++r) out.at(r, k) = c[r];
  }
  return out;
}

Matrix postcompose_matrix(const HomSpace& from, const HomSpace& to, const Matrix& d) {
  Matrix out(d.field(), to.dim(), from.dim());
  for (std::size_t k = 0; k < from.dim(); ++k) {
    Vec c = to.coords(d * from.element(k));
    for (std::size_t r = 0; r < c.size(); ++r) out.at(r, k) = c[r];
  }
  return out;
}

ExtGroup ext_from(const Resolution& r, const Module& n, std::size_t i) {
  if (r.terms.size() < i + 2) throw std::invalid_argument("ext_from: resolution too short");
  const Field& f = n.field();
  HomSpace hi = hom_space(r.terms[i], n);
  HomSpace next = hom_space(r.terms[i + 1], n);
  Subspace z = Subspace::kernel(precompose_matrix(hi, next, r.maps[i + 1]));
  Subspace b = Subspace::zero(f, hi.dim());
  if (i > 0) {
    HomSpace prev = hom_space(r.terms[i - 1], n);
    b = Subspace::span(precompose_matrix(prev, hi, r.maps[i]));
  }
  ExtGroup g;
  g.dim = z.dim() - b.dim();
  EchelonBasis eb(f, hi.dim());
  for (std::size_t j = 0; j < b.dim(); ++j) eb.add(b.basis.col_vec(j));
  for (std::size_t j = 0; j < z.dim(); ++j)
    if (eb.add(z.basis.col_vec(j))) g.representatives.push_back(hi.combine(z.basis.col_vec(j)));
  return g;
}

ExtGroup ext(const Module& m, const Module& n, std::size_t i, std::uint64_t seed) {
  return ext_from(minimal_projective_resolution(m, i + 1, seed), n, i);
}

std::vector<std::size_t> ext_dims(const Module& m, const Module& n, std::size_t max_i, std::uint64_t seed) {
  Resolution r = minimal_projective_resolution(m, max_i + 1, seed);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= max_i; ++i) out.push_back(ext_from(r, n, i).dim);
  return out;
}

namespace {

std::size_t class_of(SyzygyClasses& sc, const Module& z, std::uint64_t seed) {
  for (std::size_t i = 0; i < sc.reps.size(); ++i)
    if (sc.reps[i].dim() == z.dim() && is_isomorphic(sc.reps[i], z, seed)) return i;
  sc.reps.push_back(z);
  sc.children.emplace_back();
  return sc.reps.size() - 1;
}

std::vector<std::pair<std::size_t, std::uint64_t>> summand_classes(SyzygyClasses& sc, const Module& m,
                                                                   std::uint64_t seed) {
  std::map<std::size_t, std::uint64_t> counts;
  if (m.dim() > 0)
    for (auto& piece : decompose(m, seed)) ++counts[class_of(sc, Module{m.ring, piece.module.act}, seed)];
  return {counts.begin(), counts.end()};
}

}  // namespace

SyzygyClasses syzygy_classes(const Module& m, std::size_t max_level, std::uint64_t seed) {
  SyzygyClasses sc;
  sc.levels.push_back(summand_classes(sc, m, seed));
  for (std::size_t l = 0; l < max_level; ++l) {
    std::map<std::size_t, std::uint64_t> next;
    for (auto [c, mult] : sc.levels.back()) {
      if (!sc.children[c]) {
        Module omega = projective_cover(sc.reps[c], seed).kernel.module;
        auto kids = summand_classes(sc, omega, seed);
        sc.children[c] = std::move(kids);
      }
      for (auto [k, km] : *sc.children[c]) next[k] += mult * km;
    }
    sc.levels.emplace_back(next.begin(), next.end());
    if (next.empty()) break;
  }
  return sc;
}

std::vector<std::size_t> ext_dims_by_classes(const Module& m, const Module& n, std::size_t max_i,
                                             std::uint64_t seed) {
  std::vector<std::size_t> out{hom_space(m, n).dim()};
  if (max_i == 0) return out;
  SyzygyClasses sc = syzygy_classes(m, max_i - 1, seed);
  std::map<std::size_t, std::size_t> ext1;
  for (std::size_t i = 1; i <= max_i; ++i) {
    std::size_t total = 0;
    if (i - 1 < sc.levels.size())
      for (auto [c, mult] : sc.levels[i - 1]) {
        auto it = ext1.find(c);
        if (it == ext1.end()) it = ext1.emplace(c, ext(sc.reps[c], n, 1, seed).dim).first;
        total += mult * it->second;
      }
    out.push_back(total);
  }
  return out;
}

std::string DimensionVerdict::to_string() const {
  return (is_finite() ? "Finite(" : "ExceedsBound(") + std::to_string(value) + ")";
}

std::size_t default_bound(const Algebra& a) { return std::max<std::size_t>(10, 2 * a.dim()); }

DimensionVerdict pd_bounded(const Module& m, std::size_t bound, std::uint64_t seed) {
  if (m.dim() == 0) return DimensionVerdict::finite(0);
  SyzygyClasses sc = syzygy_classes(m, bound + 1, seed);
  for (std::size_t l = 1; l < sc.levels.size(); ++l)
    if (sc.levels[l].empty()) return DimensionVerdict::finite(l - 1);
  return DimensionVerdict::exceeds(bound);
}

DimensionVerdict id_bounded(const Module& m, std::size_t bound, std::uint64_t seed) {
  return pd_bounded(dual_over_opposite(m), bound, seed);
}

DimensionVerdict fd_bounded(const Module& m, std::size_t bound, std::uint64_t seed) {
  return pd_bounded(m, bound, seed);
}

DimensionVerdict pd_bounded(const RightModule& m, std::size_t bound, std::uint64_t seed) {
  return pd_bounded(as_left_opposite(m), bound, seed);
}

DimensionVerdict id_bounded(const RightModule& m, std::size_t bound, std::uint64_t seed) {
  return pd_bounded(dual_module(m), bound, seed);
}

DimensionVerdict fd_bounded(const RightModule& m, std::size_t bound, std::uint64_t seed) {
  return pd_bounded(m, bound, seed);
}

ChainComplex hom_complex(const ChainComplex& c, const Module& q) {
  const Field& f = q.field();
  ChainComplex out;
  out.lo = -c.hi();
  std::vector<HomSpace> h;
  for (int i = c.hi(); i >= c.lo; --i) h.push_back(hom_space(c.at(i), q));
  for (const auto& s : h) out.terms.push_back(space_module(f, s.dim()));
  for (std::size_t t = 0; t + 1 < h.size(); ++t) {
    int i = c.hi() - static_cast<int>(t);
    out.diffs.push_back(precompose_matrix(h[t], h[t + 1], c.d(i - 1)));
  }
  return out;
}

ChainComplex hom_complex(const Module& q, const ChainComplex& c) {
  const Field& f = q.field();
  ChainComplex out;
  out.lo = c.lo;
  std::vector<HomSpace> h;
  for (int i = c.lo; i <= c.hi(); ++i) h.push_back(hom_space(q, c.at(i)));
  for (const auto& s : h) out.terms.push_back(space_module(f, s.dim()));
  for (std::size_t t = 0; t + 1 < h.size(); ++t)
    out.diffs.push_back(postcompose_matrix(h[t], h[t + 1], c.d(c.lo + static_cast<int>(t))));
  return out;
}

ChainComplex tensor_complex(const Bimodule& b, const ChainComplex& c) {
  ChainComplex out;
  out.lo = c.lo;
  std::vector<TensorProduct> t;
  for (int i = c.lo; i <= c.hi(); ++i) t.push_back(tensor_over(b, c.at(i)));
  for (const auto& s : t) out.terms.push_back(s.space);
  for (std::size_t k = 0; k + 1 < t.size(); ++k)
    out.diffs.push_back(tensor_map(t[k], t[k + 1], c.d(c.lo + static_cast<int>(k))));
  return out;
}

ChainComplex tensor_complex(const RightModule& w, const ChainComplex& c) {
  return tensor_complex(as_bimodule(w), c);
}

}  // namespace tx
