#include "tx/structure.hpp"

#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tx {

namespace {

constexpr std::uint64_t kElementSweep = 4096;
constexpr std::uint64_t kVectorBudget = 1u << 16;
constexpr std::uint64_t kEndoSweep = 1u << 14;
constexpr int kRandomTries = 512;

bool small_power(Elem p, std::size_t e, std::uint64_t budget, std::uint64_t& total) {
  total = 1;
  for (std::size_t i = 0; i < e; ++i) {
    total *= p;
    if (total > budget) return false;
  }
  return true;
}

Vec digits(std::uint64_t x, Elem p, std::size_t n) {
  Vec v(n);
  for (auto& e : v) {
    e = static_cast<Elem>(x % p);
    x /= p;
  }
  return v;
}

std::optional<Subspace> cheap_submodule(const Module& m) {
  const std::size_t d = m.dim();
  const Field& f = m.field();
  for (std::size_t j = 0; j < d; ++j) {
    Vec e(d, 0);
    e[j] = 1;
    Subspace s = spin(Matrix::column(f, e), m.act);
    if (s.dim() < d) return s;
  }
  for (const auto& a : m.act) {
    std::size_t r = rank(a);
    if (r == 0 || r == d) continue;
    Subspace s = spin(a, m.act);
    if (s.dim() < d) return s;
    Matrix k = kernel_basis(a);
    for (std::size_t i = 0; i < k.rows(); ++i) {
      Subspace t = spin(Matrix::column(f, k.row_vec(i)), m.act);
      if (t.dim() < d) return t;
    }
  }
  return std::nullopt;
}

// Element of the algebra acting with the smallest positive nullity found.
Matrix singular_element(const Module& m, std::uint64_t seed) {
  const Algebra& a = *m.ring;
  const std::size_t d = m.dim(), n = a.dim();
  const Field& f = m.field();
  Matrix best(f, d, d);
  std::size_t best_null = d;
  auto consider = [&](const Vec& x) {
    Matrix t = m.action_of(x);
    std::size_t nul = d - rank(t);
    if (nul > 0 && nul < best_null) {
      best_null = nul;
      best = t;
    }
    return best_null == 1;
  };
  for (std::size_t i = 0; i < n; ++i)
    if (consider(a.basis_vector(i))) return best;
  std::uint64_t total = 0;
  if (small_power(f.p(), n, kElementSweep, total)) {
    for (std::uint64_t t = 1; t < total; ++t)
      if (consider(digits(t, f.p(), n))) return best;
    return best;
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < kRandomTries; ++t) {
    Vec x(n);
    for (auto& e : x) e = static_cast<Elem>(rng() % f.p());
    if (consider(x)) return best;
  }
  return best;
}

// Norton's irreducibility test.
std::optional<Subspace> norton(const Module& m, std::uint64_t seed) {
  const std::size_t d = m.dim();
  const Field& f = m.field();
  const Elem p = f.p();
  Matrix theta = singular_element(m, seed);
  Matrix k = kernel_basis(theta);
  const std::size_t kd = k.rows();
  auto try_vec = [&](const Vec& c) -> std::optional<Subspace> {
    Vec v(d, 0);
    for (std::size_t r = 0; r < kd; ++r)
      if (c[r])
        for (std::size_t j = 0; j < d; ++j) v[j] = f.add(v[j], f.mul(c[r], k(r, j)));
    Subspace s = spin(Matrix::column(f, v), m.act);
    if (s.dim() < d) return s;
    return std::nullopt;
  };
  std::uint64_t total = 0;
  if (small_power(p, kd, kVectorBudget, total)) {
    // Vectors normalized so the last nonzero coordinate is 1.
    for (std::uint64_t t = 1; t < total; ++t) {
      Vec c = digits(t, p, kd);
      std::size_t last = kd;
      while (last > 0 && c[last - 1] == 0) --last;
      if (c[last - 1] != 1) continue;
      if (auto s = try_vec(c)) return s;
    }
  } else {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (std::uint64_t t = 0; t < kVectorBudget; ++t) {
      Vec c(kd);
      for (auto& e : c) e = static_cast<Elem>(rng() % p);
      if (auto s = try_vec(c)) return s;
    }
  }
  Matrix kt = kernel_basis(theta.transpose());
  std::vector<Matrix> tacts;
  for (const auto& a : m.act) tacts.push_back(a.transpose());
  Subspace w = spin(Matrix::column(f, kt.row_vec(0)), tacts);
  if (w.dim() < d) return Subspace::kernel(w.basis.transpose());
  return std::nullopt;
}

struct AlgebraData {
  std::vector<Module> simples;
  std::vector<Indecomposable> pims;
  bool has_pims = false;
};

std::mutex g_mutex;
std::map<std::string, AlgebraData> g_cache;

std::optional<Matrix> splitting_endomorphism(const Module& x, std::uint64_t seed) {
  HomSpace h = hom_space(x, x);
  const std::size_t d = x.dim();
  const Field& f = x.field();
  if (h.dim() <= 1) return std::nullopt;
  auto fitting = [&](const Matrix& phi) -> std::optional<Matrix> {
    Matrix q = phi;
    for (std::size_t e = 1; e < d; e *= 2) q = q * q;
    std::size_t r = rank(q);
    if (r > 0 && r < d) return q;
    return std::nullopt;
  };
  for (std::size_t j = 0; j < h.dim(); ++j)
    if (auto q = fitting(h.element(j))) return q;
  std::uint64_t total = 0;
  if (small_power(f.p(), h.dim(), kEndoSweep, total)) {
    for (std::uint64_t t = 1; t < total; ++t)
      if (auto q = fitting(h.combine(digits(t, f.p(), h.dim())))) return q;
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 4 * kRandomTries; ++t) {
    Vec c(h.dim());
    for (auto& e : c) e = static_cast<Elem>(rng() % f.p());
    if (auto q = fitting(h.combine(c))) return q;
  }
  return std::nullopt;
}

void decompose_into(const Module& x, const Matrix& incl, std::uint64_t seed,
                    std::vector<Submodule>& out) {
  if (x.dim() == 0) return;
  auto q = splitting_endomorphism(x, seed);
  if (!q) {
    out.push_back(Submodule{x, incl});
    return;
  }
  Subspace im = Subspace::span(*q), ker = Subspace::kernel(*q);
  Submodule a = submodule(x, im), b = submodule(x, ker);
  decompose_into(a.module, incl * a.inclusion, seed + 1, out);
  decompose_into(b.module, incl * b.inclusion, seed + 2, out);
}

}  // namespace

std::optional<Subspace> proper_submodule(const Module& m, std::uint64_t seed) {
  if (m.dim() <= 1) return std::nullopt;
  if (auto s = cheap_submodule(m)) return s;
  return norton(m, seed);
}

bool is_simple(const Module& m, std::uint64_t seed) { return m.dim() > 0 && !proper_submodule(m, seed); }

CompositionSeries chop(const Module& m, std::uint64_t seed) {
  const Field& f = m.field();
  const std::size_t d = m.dim();
  if (d == 0) return {{}, {Subspace::zero(f, 0)}};
  auto u = proper_submodule(m, seed);
  if (!u) return {{m}, {Subspace::zero(f, d), Subspace::whole(f, d)}};
  Submodule sub = submodule(m, *u);
  QuotientModule quo = quotient_module(m, *u);
  CompositionSeries a = chop(sub.module, seed + 1), b = chop(quo.module, seed + 2);
  CompositionSeries out;
  out.factors = a.factors;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  for (const auto& s : a.filtration) out.filtration.push_back(Subspace::span(sub.inclusion * s.basis));
  for (std::size_t i = 1; i < b.filtration.size(); ++i)
    out.filtration.push_back(Subspace::span(hstack(u->basis, quo.section * b.filtration[i].basis)));
  return out;
}

const std::vector<Module>& simples(const AlgebraPtr& a, std::uint64_t seed) {
  const std::string key = a->content_key() + "#" + std::to_string(seed);
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second.simples;
  }
  std::vector<Module> found;
  for (auto& s : chop(regular_module(a), seed).factors) {
    bool seen = false;
    for (const auto& t : found) seen = seen || is_isomorphic(s, t, seed);
    if (!seen) found.push_back(Module{a, std::move(s.act)});
  }
  std::lock_guard<std::mutex> lock(g_mutex);
  auto& entry = g_cache[key];
  if (entry.simples.empty()) entry.simples = std::move(found);
  return entry.simples;
}

std::size_t simple_index(const Module& s, std::uint64_t seed) {
  const auto& list = simples(s.ring, seed);
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i].dim() == s.dim() && is_isomorphic(Module{s.ring, list[i].act}, s, seed)) return i;
  throw std::invalid_argument("simple_index: module is not simple");
}

std::vector<std::size_t> composition_multiplicities(const Module& m, std::uint64_t seed) {
  std::vector<std::size_t> out(simples(m.ring, seed).size(), 0);
  for (const auto& s : chop(m, seed).factors) ++out[simple_index(s, seed)];
  return out;
}

Submodule radical_of_module(const Module& m, std::uint64_t seed) {
  const Field& f = m.field();
  Matrix stacked(f, 0, m.dim());
  for (const auto& s : simples(m.ring, seed)) {
    HomSpace h = hom_space(m, Module{m.ring, s.act});
    for (std::size_t j = 0; j < h.dim(); ++j) stacked = vstack(stacked, h.element(j));
  }
  return submodule(m, Subspace::kernel(stacked));
}

QuotientModule top_of_module(const Module& m, std::uint64_t seed) {
  return quotient_module(m, Subspace::span(radical_of_module(m, seed).inclusion));
}

Vec lift_idempotent(const Algebra& a, const Vec& e_bar, const Subspace& n) {
  const Field& f = a.field();
  auto in_n = [&](const Vec& v) { return n.contains(Matrix::column(f, v)); };
  auto diff = [&](const Vec& x, const Vec& y) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.sub(x[i], y[i]);
    return r;
  };
  if (!in_n(diff(a.multiply(e_bar, e_bar), e_bar)))
    throw std::invalid_argument("lift_idempotent: not idempotent modulo the ideal");
  Vec e = e_bar;
  for (int it = 0; it < 64; ++it) {
    Vec e2 = a.multiply(e, e);
    if (e2 == e) return e;
    Vec e3 = a.multiply(e2, e);
    Vec next(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      next[i] = f.sub(f.mul(3 % f.p(), e2[i]), f.mul(2 % f.p(), e3[i]));
    e = std::move(next);
  }
  throw std::invalid_argument("lift_idempotent: ideal is not nilpotent");
}

std::vector<Submodule> decompose(const Module& m, std::uint64_t seed) {
  std::vector<Submodule> out;
  decompose_into(m, Matrix::identity(m.field(), m.dim()), seed, out);
  return out;
}

const std::vector<Indecomposable>& projective_indecomposables(const AlgebraPtr& a, std::uint64_t seed) {
  const std::string key = a->content_key() + "#" + std::to_string(seed);
  const auto& simple_list = simples(a, seed);
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto& entry = g_cache[key];
    if (entry.has_pims) return entry.pims;
  }
  std::vector<std::optional<Indecomposable>> slots(simple_list.size());
  for (auto& piece : decompose(regular_module(a), seed)) {
    Module p{a, std::move(piece.module.act)};
    Module top = top_of_module(p, seed).module;
    std::size_t i = simple_index(top, seed);
    if (slots[i])
      ++slots[i]->multiplicity;
    else
      slots[i] = Indecomposable{p, simple_list[i], 1};
  }
  std::vector<Indecomposable> pims;
  for (auto& s : slots) {
    if (!s) throw std::logic_error("projective_indecomposables: simple without projective cover");
    pims.push_back(std::move(*s));
  }
  std::lock_guard<std::mutex> lock(g_mutex);
  auto& entry = g_cache[key];
  if (!entry.has_pims) {
    entry.pims = std::move(pims);
    entry.has_pims = true;
  }
  return entry.pims;
}

Module projective_from_summands(const AlgebraPtr& a, const std::vector<std::size_t>& summands,
                                std::uint64_t seed) {
  const auto& pims = projective_indecomposables(a, seed);
  Module out = zero_module(a);
  for (std::size_t i : summands) out = direct_sum(out, Module{a, pims.at(i).projective.act});
  return out;
}

ProjectivePresentation projective_cover(const Module& m, std::uint64_t seed) {
  const Field& f = m.field();
  const auto& pims = projective_indecomposables(m.ring, seed);
  QuotientModule top = top_of_module(m, seed);
  EchelonBasis eb(f, top.module.dim());
  std::vector<std::size_t> summands;
  std::vector<Matrix> homs;
  for (std::size_t i = 0; i < pims.size() && eb.dim() < top.module.dim(); ++i) {
    Module p{m.ring, pims[i].projective.act};
    HomSpace h = hom_space(p, m);
    for (std::size_t j = 0; j < h.dim() && eb.dim() < top.module.dim(); ++j) {
      Matrix g = h.element(j);
      Matrix img = top.projection * g;
      bool grew = false;
      for (std::size_t c = 0; c < img.cols(); ++c) grew = eb.add(img.col_vec(c)) || grew;
      if (grew) {
        summands.push_back(i);
        homs.push_back(g);
      }
    }
  }
  Module cover = projective_from_summands(m.ring, summands, seed);
  Matrix epi = hstack(homs, f, m.dim());
  Submodule ker = kernel_module(ModuleHom{cover, m, epi});
  return {m, cover, epi, ker, summands};
}

bool is_projective(const Module& m, std::uint64_t seed) {
  return projective_cover(m, seed).cover.dim() == m.dim();
}

Module dual_over_opposite(const Module& m) { return as_left_opposite(dual_module(m)); }

Module dual_from_opposite(const Module& m, const AlgebraPtr& ring) {
  if (!opposite_algebra(m.ring)->same_structure(*ring))
    throw std::invalid_argument("dual_from_opposite: ring is not the opposite");
  Module out{ring, {}};
  for (const auto& a : m.act) out.act.push_back(a.transpose());
  return out;
}

std::vector<Module> injective_indecomposables(const AlgebraPtr& a, std::uint64_t seed) {
  std::vector<Module> out;
  for (const auto& p : projective_indecomposables(opposite_algebra(a), seed))
    out.push_back(dual_from_opposite(p.projective, a));
  return out;
}

bool is_injective(const Module& m, std::uint64_t seed) { return is_projective(dual_over_opposite(m), seed); }

InjectiveEnvelope injective_envelope(const Module& m, std::uint64_t seed) {
  ProjectivePresentation pc = projective_cover(dual_over_opposite(m), seed);
  return {dual_from_opposite(pc.cover, m.ring), pc.epi.transpose()};
}

}  // namespace tx
