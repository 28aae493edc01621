#include "tx/catalog.hpp"

#include <array>
#include <functional>
#include <stdexcept>

namespace tx::catalog {

AlgebraPtr field_algebra(Field f) { return make_algebra(f, 1, {1}, {1}, "k"); }

AlgebraPtr dual_numbers(Field f) { return monomial_quiver_algebra(f, 1, {{0, 0}}, {{0, 0}}, "D"); }

AlgebraPtr a2(Field f) { return monomial_quiver_algebra(f, 2, {{0, 1}}, {}, "A2"); }

AlgebraPtr nakayama2(Field f) {
  return monomial_quiver_algebra(f, 2, {{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}, "N2");
}

AlgebraPtr local_two_loops(Field f) {
  return monomial_quiver_algebra(f, 1, {{0, 0}, {0, 0}}, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}, "L2");
}

AlgebraPtr split_semisimple(Field f, std::size_t n) {
  if (n == 0) throw std::invalid_argument("split_semisimple: n must be positive");
  std::vector<Elem> c(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) c[(i * n + i) * n + i] = 1;
  return make_algebra(f, n, std::move(c), Vec(n, 1), n == 1 ? "k" : "k^" + std::to_string(n));
}

Bimodule corner_bimodule(Field f) {
  AlgebraPtr r = split_semisimple(f, 2);
  auto one = [&](Elem v) { return Matrix::from_rows(f, {{static_cast<std::int64_t>(v)}}); };
  return Bimodule{r, r, {one(0), one(1)}, {one(1), one(0)}};
}

AlgebraPtr by_name(const std::string& name, Field f) {
  if (name == "k") return field_algebra(f);
  if (name == "D") return dual_numbers(f);
  if (name == "A2") return a2(f);
  if (name == "N2") return nakayama2(f);
  if (name == "L2") return local_two_loops(f);
  if (name.rfind("k^", 0) == 0 && name.size() > 2) {
    std::size_t n = std::stoul(name.substr(2));
    return split_semisimple(f, n);
  }
  throw std::invalid_argument("unknown catalog algebra: " + name);
}

std::vector<std::string> names() { return {"k", "D", "A2", "N2", "L2", "k^n"}; }

std::vector<Module> random_modules(const AlgebraPtr& a, std::size_t count, std::size_t max_dim,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Field& f = a->field();
  Module reg = regular_module(a);
  Module reg2 = direct_sum(reg, reg);
  std::vector<Module> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < 64 * count + 64; ++attempt) {
    const Module& amb = (rng() % 2) ? reg2 : reg;
    Matrix v(f, amb.dim(), 1 + rng() % 2);
    for (std::size_t i = 0; i < v.rows(); ++i)
      for (std::size_t j = 0; j < v.cols(); ++j) v.at(i, j) = static_cast<Elem>(rng() % f.p());
    Subspace s = spin(v, amb.act);
    Module m = (rng() % 2) ? submodule(amb, s).module : quotient_module(amb, s).module;
    if (m.dim() == 0 || m.dim() > max_dim) continue;
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

struct PathShape {
  std::vector<std::size_t> source, target;  // per basis element >= vertices
  std::vector<std::size_t> arrows;
  // Non-arrow k = b_i b_j, listed so that i and j are available before k.
  std::vector<std::array<std::size_t, 3>> products;
};

PathShape analyse_paths(const Algebra& a, std::size_t v) {
  const std::size_t n = a.dim();
  auto unit_vec = [&](std::size_t k) { return a.basis_vector(k); };
  Vec sum(n, 0);
  for (std::size_t i = 0; i < v; ++i) sum[i] = 1;
  if (v == 0 || v > n || a.unit() != sum) throw std::invalid_argument("enumerate_modules: vertices do not sum to 1");
  PathShape s;
  s.source.assign(n, 0);
  s.target.assign(n, 0);
  for (std::size_t i = 0; i < v; ++i)
    if (a.multiply(unit_vec(i), unit_vec(i)) != unit_vec(i))
      throw std::invalid_argument("enumerate_modules: vertex is not idempotent");
  for (std::size_t k = v; k < n; ++k) {
    std::size_t hits_s = 0, hits_t = 0;
    for (std::size_t e = 0; e < v; ++e) {
      if (a.multiply(unit_vec(k), unit_vec(e)) == unit_vec(k)) s.source[k] = e, ++hits_s;
      if (a.multiply(unit_vec(e), unit_vec(k)) == unit_vec(k)) s.target[k] = e, ++hits_t;
    }
    if (hits_s != 1 || hits_t != 1) throw std::invalid_argument("enumerate_modules: basis element is not a path");
  }
  std::vector<bool> known(n, false);
  for (std::size_t i = 0; i < v; ++i) known[i] = true;
  std::vector<std::array<std::size_t, 2>> factor(n, {0, 0});
  std::vector<bool> is_product(n, false);
  for (std::size_t k = v; k < n; ++k)
    for (std::size_t i = v; i < n && !is_product[k]; ++i)
      for (std::size_t j = v; j < n && !is_product[k]; ++j)
        if (a.multiply(unit_vec(i), unit_vec(j)) == unit_vec(k)) {
          is_product[k] = true;
          factor[k] = {i, j};
        }
  for (std::size_t k = v; k < n; ++k)
    if (!is_product[k]) {
      s.arrows.push_back(k);
      known[k] = true;
    }
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t k = v; k < n; ++k)
      if (!known[k] && known[factor[k][0]] && known[factor[k][1]]) {
        s.products.push_back({k, factor[k][0], factor[k][1]});
        known[k] = true;
        progress = true;
      }
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!known[k]) throw std::invalid_argument("enumerate_modules: path is not a product of arrows");
  return s;
}

}  // namespace

std::vector<Module> enumerate_modules(const AlgebraPtr& a, std::size_t vertices, std::size_t max_dim,
                                      std::uint64_t budget) {
  const Field& f = a->field();
  const std::size_t n = a->dim(), v = vertices;
  PathShape shape = analyse_paths(*a, v);
  std::vector<Module> out;
  // Dimension vectors in lexicographic order of total dimension, then entries.
  std::vector<std::vector<std::size_t>> vectors;
  for (std::size_t total = 1; total <= max_dim; ++total) {
    std::vector<std::size_t> d(v, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
      if (i + 1 == v) {
        d[i] = left;
        vectors.push_back(d);
        return;
      }
      for (std::size_t x = left + 1; x-- > 0;) {
        d[i] = x;
        rec(i + 1, left - x);
      }
    };
    rec(0, total);
  }
  for (const auto& d : vectors) {
    std::vector<std::size_t> offset(v, 0);
    std::size_t total = 0;
    for (std::size_t i = 0; i < v; ++i) offset[i] = total, total += d[i];
    std::size_t free = 0;
    for (auto k : shape.arrows) free += d[shape.target[k]] * d[shape.source[k]];
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free; ++i) {
      count *= f.p();
      if (count > budget) throw std::invalid_argument("enumerate_modules: search exceeds budget");
    }
    std::vector<Module> reps;
    for (std::uint64_t code = 0; code < count; ++code) {
      Module m{a, std::vector<Matrix>(n, Matrix(f, total, total))};
      for (std::size_t e = 0; e < v; ++e)
        for (std::size_t r = 0; r < d[e]; ++r) m.act[e].at(offset[e] + r, offset[e] + r) = 1;
      std::uint64_t c = code;
      for (auto k : shape.arrows) {
        const std::size_t s = shape.source[k], t = shape.target[k];
        for (std::size_t r = 0; r < d[t]; ++r)
          for (std::size_t q = 0; q < d[s]; ++q) {
            m.act[k].at(offset[t] + r, offset[s] + q) = static_cast<Elem>(c % f.p());
            c /= f.p();
          }
      }
      for (const auto& [k, i, j] : shape.products) m.act[k] = m.act[i] * m.act[j];
      if (!validate_module(m).ok) continue;
      bool seen = false;
      for (const auto& r : reps) seen = seen || is_isomorphic(r, m);
      if (!seen) reps.push_back(std::move(m));
    }
    for (auto& r : reps) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tx::catalog
