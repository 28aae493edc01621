#include "tx/gorenstein.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "tx/structure.hpp"

namespace tx {

std::string to_string(Answer a) {
  switch (a) {
    case Answer::CertifiedYes: return "CertifiedYes";
    case Answer::CertifiedNo: return "CertifiedNo";
    case Answer::ProbableYes: return "ProbableYes";
  }
  return "?";
}

std::string Regime::to_string() const {
  switch (kind) {
    case Kind::SelfInjective: return "SelfInjective";
    case Kind::IwanagaGorenstein:
      return "IwanagaGorenstein(" + std::to_string(d_left) + "," + std::to_string(d_right) + ")";
    case Kind::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

std::mutex g_regime_mutex;
std::map<std::string, Regime> g_regimes;

Matrix negate(const Matrix& m) { return Matrix(m.field(), m.rows(), m.cols()) - m; }

// sigma in span(h) with l * sigma * r = target.
std::optional<Matrix> solve_in_hom(const HomSpace& h, const Matrix& l, const Matrix& r, const Matrix& target) {
  const Field& f = target.field();
  const std::size_t n = target.rows() * target.cols();
  Matrix sys(f, n, h.dim());
  for (std::size_t j = 0; j < h.dim(); ++j) {
    Matrix img = l * h.element(j) * r;
    for (std::size_t k = 0; k < n; ++k) sys.at(k, j) = img.data()[k];
  }
  Matrix rhs(f, n, 1);
  for (std::size_t k = 0; k < n; ++k) rhs.at(k, 0) = target.data()[k];
  auto c = solve(sys, rhs);
  if (!c) return std::nullopt;
  if (h.dim() == 0) return Matrix(f, h.target_dim, h.source_dim);
  return h.combine(c->col_vec(0));
}

Matrix lift_or_throw(const HomSpace& h, const Matrix& l, const Matrix& r, const Matrix& target, const char* what) {
  auto s = solve_in_hom(h, l, r, target);
  if (!s) throw std::domain_error(std::string("lifted resolution: no solution for ") + what);
  return *s;
}


bool any_nonzero_from_one(const std::vector<std::size_t>& v, std::size_t& index) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i]) {
      index = i;
      return true;
    }
  return false;
}

struct Approximation {
  Module target;
  Matrix map;
};

// g -> A^n from generators of Hom(g, A) as a right A-module.
Approximation left_approximation(const Module& g, std::uint64_t seed) {
  const AlgebraPtr& a = g.ring;
  const Field& f = g.field();
  if (g.dim() == 0) return {zero_module(a), Matrix(f, 0, 0)};
  HomIntoBimodule h = hom_into_bimodule(g, regular_bimodule(a));
  Module target = zero_module(a);
  Matrix map(f, 0, g.dim());
  if (h.module.dim() == 0) return {target, map};
  QuotientModule top = top_of_module(as_left_opposite(h.module), seed);
  Module reg = regular_module(a);
  for (std::size_t j = 0; j < top.section.cols(); ++j) {
    target = direct_sum(target, reg);
    map = vstack(map, h.homs.combine(top.section.col_vec(j)));
  }
  return {target, map};
}

bool hom_exact_into(const ChainComplex& c, const Module& q) { return is_exact_complex(hom_complex(c, q)).exact; }
bool hom_exact_from(const Module& q, const ChainComplex& c) { return is_exact_complex(hom_complex(q, c)).exact; }

bool maps_are_module_maps(const ChainComplex& c) {
  for (int i = c.lo; i < c.hi(); ++i)
    if (!is_module_map(c.at(i), c.at(i + 1), c.d(i))) return false;
  return true;
}

}  // namespace

Regime gorenstein_regime(const AlgebraPtr& a, std::size_t bound, std::uint64_t seed) {
  const std::string key = a->content_key() + "#" + std::to_string(bound) + "#" + std::to_string(seed);
  {
    std::lock_guard<std::mutex> lock(g_regime_mutex);
    auto it = g_regimes.find(key);
    if (it != g_regimes.end()) return it->second;
  }
  DimensionVerdict l = id_bounded(regular_module(a), bound, seed);
  DimensionVerdict r = id_bounded(regular_right_module(a), bound, seed);
  Regime out;
  if (l.is_finite() && r.is_finite()) {
    out.d_left = l.value;
    out.d_right = r.value;
    out.kind = (l.value == 0 && r.value == 0) ? Regime::Kind::SelfInjective : Regime::Kind::IwanagaGorenstein;
  }
  std::lock_guard<std::mutex> lock(g_regime_mutex);
  g_regimes.emplace(key, out);
  return out;
}

std::string to_string(GorensteinVerdict::Reason r) {
  using R = GorensteinVerdict::Reason;
  switch (r) {
    case R::Projective: return "projective";
    case R::SelfInjective: return "self-injective algebra";
    case R::IwanagaGorenstein: return "Ext vanishing up to the self-injective dimension";
    case R::Battery: return "bounded total reflexivity test passed";
    case R::ExtNonvanishing: return "Ext(g, A) nonzero";
    case R::DualExtNonvanishing: return "Ext(g*, A) nonzero";
    case R::BidualityDefect: return "biduality map not invertible";
  }
  return "?";
}

std::string GorensteinVerdict::to_string() const {
  std::ostringstream s;
  s << tx::to_string(answer);
  if (answer == Answer::ProbableYes) s << "(" << bound << ")";
  s << " [" << tx::to_string(reason);
  if (reason == Reason::ExtNonvanishing || reason == Reason::DualExtNonvanishing)
    s << ": degree " << ext_index << ", dim " << ext_dim;
  if (reason == Reason::BidualityDefect) s << ": rank " << biduality_rank << " of " << module_dim;
  s << "; regime " << regime.to_string() << "]";
  return s.str();
}

Biduality biduality(const Module& g) {
  const AlgebraPtr& a = g.ring;
  const Field& f = g.field();
  HomIntoBimodule h = hom_into_bimodule(g, regular_bimodule(a));
  Module dual = as_left_opposite(h.module);
  HomIntoBimodule hh = hom_into_bimodule(dual, regular_bimodule(dual.ring));
  Biduality out{dual, Module{a, hh.module.act}, Matrix(f, hh.homs.dim(), g.dim())};
  if (hh.homs.dim() == 0) out.bidual = zero_module(a);
  for (std::size_t b = 0; b < g.dim(); ++b) {
    Matrix ev(f, a->dim(), h.homs.dim());
    for (std::size_t j = 0; j < h.homs.dim(); ++j) {
      Matrix phi = h.homs.element(j);
      for (std::size_t r = 0; r < a->dim(); ++r) ev.at(r, j) = phi(r, b);
    }
    Vec c = hh.homs.coords(ev);
    for (std::size_t r = 0; r < c.size(); ++r) out.eval.at(r, b) = c[r];
  }
  out.invertible = out.eval.rows() == out.eval.cols() && rank(out.eval) == g.dim();
  return out;
}

GorensteinVerdict gp_check(const Module& g, std::size_t bound, std::uint64_t seed) {
  using R = GorensteinVerdict::Reason;
  GorensteinVerdict v;
  v.bound = bound;
  v.module_dim = g.dim();
  v.regime = gorenstein_regime(g.ring, bound, seed);
  if (is_projective(g, seed)) {
    v.answer = Answer::CertifiedYes;
    v.reason = R::Projective;
    return v;
  }
  auto e = ext_dims_by_classes(g, regular_module(g.ring), bound, seed);
  if (any_nonzero_from_one(e, v.ext_index)) {
    v.answer = Answer::CertifiedNo;
    v.reason = R::ExtNonvanishing;
    v.ext_dim = e[v.ext_index];
    return v;
  }
  Biduality b = biduality(g);
  if (!b.invertible) {
    v.answer = Answer::CertifiedNo;
    v.reason = R::BidualityDefect;
    v.biduality_rank = rank(b.eval);
    return v;
  }
  auto e2 = ext_dims_by_classes(b.dual, regular_module(b.dual.ring), bound, seed);
  if (any_nonzero_from_one(e2, v.ext_index)) {
    v.answer = Answer::CertifiedNo;
    v.reason = R::DualExtNonvanishing;
    v.ext_dim = e2[v.ext_index];
    return v;
  }
  switch (v.regime.kind) {
    case Regime::Kind::SelfInjective:
      v.answer = Answer::CertifiedYes;
      v.reason = R::SelfInjective;
      break;
    case Regime::Kind::IwanagaGorenstein:
      v.answer = Answer::CertifiedYes;
      v.reason = R::IwanagaGorenstein;
      break;
    case Regime::Kind::Unknown:
      v.answer = Answer::ProbableYes;
      v.reason = R::Battery;
      break;
  }
  return v;
}

GorensteinVerdict gi_check(const Module& y, std::size_t bound, std::uint64_t seed) {
  return gp_check(dual_over_opposite(y), bound, seed);
}

GorensteinVerdict gf_check_right(const RightModule& x, std::size_t bound, std::uint64_t seed) {
  return gi_check(dual_module(x), bound, seed);
}

std::optional<CompleteResolutionWindow> complete_resolution_window(const Module& g, std::size_t window,
                                                                   std::uint64_t seed) {
  const std::size_t w = std::max<std::size_t>(window, 1);
  Resolution r = minimal_projective_resolution(g, w - 1, seed);
  std::vector<Approximation> approx;
  std::vector<Matrix> proj;
  Module cur = g;
  for (std::size_t i = 0; i <= w; ++i) {
    Approximation ap = left_approximation(cur, seed);
    if (rank(ap.map) != cur.dim()) return std::nullopt;
    QuotientModule q = cokernel_module(ModuleHom{cur, ap.target, ap.map});
    approx.push_back(ap);
    proj.push_back(q.projection);
    cur = q.module;
  }
  CompleteResolutionWindow out;
  ChainComplex& c = out.complex;
  c.lo = -static_cast<int>(w);
  for (std::size_t k = w; k-- > 0;) c.terms.push_back(r.terms[k]);
  for (std::size_t i = 0; i <= w; ++i) c.terms.push_back(approx[i].target);
  for (std::size_t k = w - 1; k >= 1; --k) c.diffs.push_back(r.maps[k]);
  out.inclusion = approx[0].map;
  out.cover = r.maps[0];
  c.diffs.push_back(out.inclusion * out.cover);
  for (std::size_t i = 0; i + 1 <= w; ++i) c.diffs.push_back(approx[i + 1].map * proj[i]);
  out.exact = squares_to_zero(c) && is_exact_complex(c).exact;
  out.hom_exact = true;
  for (const auto& q : projective_indecomposables(g.ring, seed))
    out.hom_exact = out.hom_exact && hom_exact_into(c, q.projective);
  return out;
}

std::string to_string(Sufficiency s) {
  switch (s) {
    case Sufficiency::None: return "None";
    case Sufficiency::FiniteFlatAndProjective: return "FiniteFlatAndProjective";
    case Sufficiency::FiniteFlatAndInjective: return "FiniteFlatAndInjective";
  }
  return "?";
}

namespace {

CompatibilityReport dimension_report(const Bimodule& n, std::size_t bound, std::uint64_t seed, bool co) {
  CompatibilityReport r;
  r.cocompatible = co;
  r.fd_right = fd_bounded(right_part(n), bound, seed);
  r.pd_left = pd_bounded(left_part(n), bound, seed);
  r.id_left = id_bounded(left_part(n), bound, seed);
  if (r.fd_right.is_finite() && r.pd_left.is_finite())
    r.via = Sufficiency::FiniteFlatAndProjective;
  else if (r.fd_right.is_finite() && r.id_left.is_finite())
    r.via = Sufficiency::FiniteFlatAndInjective;
  return r;
}

}  // namespace

std::string CompatibilityReport::to_string() const {
  return std::string(cocompatible ? "cocompatible" : "compatible") + " via " + tx::to_string(via) +
         " (fd right " + fd_right.to_string() + ", pd left " + pd_left.to_string() + ", id left " +
         id_left.to_string() + ")";
}

CompatibilityReport compatibility_report(const Bimodule& n, std::size_t bound, std::uint64_t seed) {
  return dimension_report(n, bound, seed, false);
}

CompatibilityReport cocompatibility_report(const Bimodule& n, std::size_t bound, std::uint64_t seed) {
  return dimension_report(n, bound, seed, true);
}

PairHypotheses pair_hypotheses(const TrivialExtension& t, const PairModule& p, std::size_t bound,
                               std::uint64_t seed) {
  return {is_exact_at(tensor_alpha(t, p), p.alpha), gp_check(functor_C(t, p).module, bound, seed)};
}

CopairHypotheses copair_hypotheses(const TrivialExtension& t, const CopairModule& c, std::size_t bound,
                                   std::uint64_t seed) {
  return {is_exact_at(c.beta, hom_beta(t, c)), gi_check(functor_K(t, c).module, bound, seed)};
}

PairHypotheses right_pair_hypotheses(const TrivialExtension& t, const RightPairModule& p, std::size_t bound,
                                     std::uint64_t seed) {
  TrivialExtension o = opposite_extension(t);
  PairModule lp = as_left_pair(t, p);
  Module coker = functor_C(o, lp).module;
  return {is_exact_at(tensor_alpha(o, lp), lp.alpha), gf_check_right(RightModule{t.base, coker.act}, bound, seed)};
}

LiftedResolution build_pair_complete_resolution(const TrivialExtension& t, const PairModule& p, std::size_t window,
                                                std::size_t bound, std::uint64_t seed) {
  PairHypotheses h = pair_hypotheses(t, p, bound, seed);
  if (!h.hold()) throw std::domain_error("lifted resolution: hypotheses unmet");
  const Field& f = t.base->field();
  const int w = static_cast<int>(std::max<std::size_t>(window, 1));
  QuotientModule c = functor_C(t, p);
  auto win = complete_resolution_window(c.module, static_cast<std::size_t>(w), seed);
  if (!win) throw std::domain_error("lifted resolution: cokernel has no complete resolution window");
  const ChainComplex& xi = win->complex;
  auto P = [&](int i) -> const Module& { return xi.at(i); };
  auto fd = [&](int i) -> const Matrix& { return xi.d(i); };

  std::map<int, TensorProduct> mp;
  for (int i = -w; i <= w; ++i) mp.emplace(i, tensor_over(t.bimodule, P(i)));
  auto mf = [&](int i) { return tensor_map(mp.at(i), mp.at(i + 1), fd(i)); };

  const Matrix& rho = c.projection;
  Matrix delta = induced_delta(t, p).matrix;
  TensorProduct mc = tensor_over(t.bimodule, c.module);
  const Matrix& iota = win->inclusion;
  const Matrix& pi = win->cover;

  Matrix psi = lift_or_throw(hom_space(p.x, mp.at(0).space), Matrix::identity(f, mp.at(0).space.dim()), delta,
                             tensor_map(mc, mp.at(0), iota), "psi");
  Matrix lambda = vstack(iota * rho, psi);
  Matrix eta = lift_or_throw(hom_space(P(-1), p.x), rho, Matrix::identity(f, P(-1).dim()), pi, "eta");
  Matrix dmpi = delta * tensor_map(mp.at(-1), mc, pi);
  Matrix xim = hstack(eta, dmpi);

  std::map<int, Matrix> sigma;
  for (int i = 0; i < w; ++i) {
    HomSpace hs = hom_space(P(i), mp.at(i + 1).space);
    Matrix id = Matrix::identity(f, mp.at(i + 1).space.dim());
    if (i == 0)
      sigma[i] = lift_or_throw(hs, id, iota * rho, negate(mf(0) * psi), "sigma");
    else
      sigma[i] = lift_or_throw(hs, id, fd(i - 1), negate(mf(i) * sigma.at(i - 1)), "sigma");
  }
  for (int i = -2; i >= -w; --i) {
    HomSpace hs = hom_space(P(i), mp.at(i + 1).space);
    Matrix id = Matrix::identity(f, P(i).dim());
    if (i == -2)
      sigma[i] = lift_or_throw(hs, dmpi, id, negate(eta * fd(-2)), "sigma");
    else
      sigma[i] = lift_or_throw(hs, mf(i + 1), id, negate(sigma.at(i + 1) * fd(i)), "sigma");
  }

  LiftedResolution out;
  ChainComplex& lc = out.complex;
  lc.lo = -w;
  for (int i = -w; i <= w; ++i) {
    out.base_terms.push_back(P(i));
    lc.terms.push_back(pair_to_module(t, functor_T(t, P(i))));
  }
  for (int i = -w; i < w; ++i) {
    if (i == -1) {
      lc.diffs.push_back(lambda * xim);
      continue;
    }
    const std::size_t a = P(i).dim(), b = P(i + 1).dim();
    Matrix g(f, b + mp.at(i + 1).space.dim(), a + mp.at(i).space.dim());
    g.set_block(0, 0, fd(i));
    g.set_block(b, 0, sigma.at(i));
    g.set_block(b, a, mf(i));
    lc.diffs.push_back(g);
  }
  out.kernel_witness = lambda;
  out.cover_witness = xim;

  Module x = pair_to_module(t, p);
  out.exact = maps_are_module_maps(lc) && squares_to_zero(lc) && is_exact_complex(lc).exact;
  out.terms_classified = true;
  for (const auto& term : lc.terms)
    out.terms_classified = out.terms_classified && classify_projective(t, module_to_pair(t, term), seed).has_value();
  out.kernel_matches = is_module_map(x, lc.at(0), lambda) && is_module_map(lc.at(-1), x, xim) &&
                       rank(lambda) == x.dim() && rank(xim) == x.dim() && (lc.d(0) * lambda).is_zero() &&
                       rank(lambda) == lc.at(0).dim() - rank(lc.d(0));
  out.hom_exact_T = out.hom_exact_Z = true;
  for (const auto& q : projective_indecomposables(t.base, seed)) {
    out.hom_exact_T = out.hom_exact_T && hom_exact_into(lc, pair_to_module(t, functor_T(t, q.projective)));
    out.hom_exact_Z = out.hom_exact_Z && hom_exact_into(lc, pair_to_module(t, functor_Z_pair(t, q.projective)));
  }
  return out;
}

LiftedResolution build_copair_complete_coresolution(const TrivialExtension& t, const CopairModule& c,
                                                    std::size_t window, std::size_t bound, std::uint64_t seed) {
  CopairHypotheses h = copair_hypotheses(t, c, bound, seed);
  if (!h.hold()) throw std::domain_error("lifted coresolution: hypotheses unmet");
  TrivialExtension o = opposite_extension(t);
  Module y = copair_to_module(t, c);
  Module dual{o.total, {}};
  for (const auto& a : y.act) dual.act.push_back(a.transpose());
  LiftedResolution lr = build_pair_complete_resolution(o, module_to_pair(o, dual), window, bound, seed);

  // Degree j of the result is the dual of degree -1-j of lr.
  LiftedResolution out;
  ChainComplex& cc = out.complex;
  cc.lo = -1 - lr.complex.hi();
  for (int j = cc.lo; j <= -1 - lr.complex.lo; ++j) {
    const Module& src = lr.complex.at(-1 - j);
    Module d{t.total, {}};
    for (const auto& a : src.act) d.act.push_back(a.transpose());
    cc.terms.push_back(d);
    out.base_terms.push_back(lr.base_terms.at(static_cast<std::size_t>(-1 - j - lr.complex.lo)));
  }
  for (int j = cc.lo; j < cc.lo + static_cast<int>(cc.terms.size()) - 1; ++j)
    cc.diffs.push_back(lr.complex.d(-2 - j).transpose());
  out.kernel_witness = lr.cover_witness.transpose();
  out.cover_witness = lr.kernel_witness.transpose();

  out.exact = maps_are_module_maps(cc) && squares_to_zero(cc) && is_exact_complex(cc).exact;
  out.terms_classified = true;
  for (const auto& term : cc.terms)
    out.terms_classified = out.terms_classified && classify_injective(t, module_to_copair(t, term), seed).has_value();
  out.kernel_matches = is_module_map(y, cc.at(0), out.kernel_witness) &&
                       is_module_map(cc.at(-1), y, out.cover_witness) && rank(out.kernel_witness) == y.dim() &&
                       rank(out.cover_witness) == y.dim() && (cc.d(0) * out.kernel_witness).is_zero() &&
                       rank(out.kernel_witness) == cc.at(0).dim() - rank(cc.d(0));
  out.hom_exact_T = out.hom_exact_Z = true;
  for (const auto& q : injective_indecomposables(t.base, seed)) {
    out.hom_exact_T = out.hom_exact_T && hom_exact_from(copair_to_module(t, functor_H(t, q)), cc);
    out.hom_exact_Z = out.hom_exact_Z && hom_exact_from(copair_to_module(t, functor_Z_copair(t, q)), cc);
  }
  return out;
}

namespace {

void finish(EquivalenceReport& r) {
  r.agree = r.lhs.positive() == r.rhs;
  r.hypotheses_established = r.bimodule_report.established() && r.zr_report.established();
  bool forward = !r.bimodule_report.established() || !r.rhs || r.lhs.positive();
  bool backward = !r.zr_report.established() || !r.lhs.positive() || r.rhs;
  r.consistent = forward && backward;
}

}  // namespace

std::string EquivalenceReport::to_string() const {
  std::ostringstream s;
  s << "module: " << lhs.to_string() << "; presentation: middle " << (middle_exact ? "exact" : "not exact")
    << ", component " << component.to_string() << "; agree " << (agree ? "yes" : "no") << "; hypotheses "
    << (hypotheses_established ? "established" : "not established") << "; "
    << (consistent ? "consistent" : "INCONSISTENT");
  return s.str();
}

EquivalenceReport verify_pair_equivalence(const TrivialExtension& t, const PairModule& p, std::size_t bound,
                                          std::uint64_t seed) {
  EquivalenceReport r;
  r.lhs = gp_check(pair_to_module(t, p), bound, seed);
  PairHypotheses h = pair_hypotheses(t, p, bound, seed);
  r.middle_exact = h.middle_exact;
  r.component = h.coker_verdict;
  r.rhs = h.hold();
  r.bimodule_report = compatibility_report(t.bimodule, bound, seed);
  r.zr_report = compatibility_report(zr_bimodule(t), bound, seed);
  finish(r);
  return r;
}

EquivalenceReport verify_copair_equivalence(const TrivialExtension& t, const CopairModule& c, std::size_t bound,
                                            std::uint64_t seed) {
  EquivalenceReport r;
  r.lhs = gi_check(copair_to_module(t, c), bound, seed);
  CopairHypotheses h = copair_hypotheses(t, c, bound, seed);
  r.middle_exact = h.middle_exact;
  r.component = h.kernel_verdict;
  r.rhs = h.hold();
  r.bimodule_report = cocompatibility_report(t.bimodule, bound, seed);
  r.zr_report = cocompatibility_report(zr_bimodule(t), bound, seed);
  finish(r);
  return r;
}

EquivalenceReport verify_right_pair_equivalence(const TrivialExtension& t, const RightPairModule& p,
                                                std::size_t bound, std::uint64_t seed) {
  EquivalenceReport r;
  r.lhs = gf_check_right(right_pair_to_module(t, p), bound, seed);
  PairHypotheses h = right_pair_hypotheses(t, p, bound, seed);
  r.middle_exact = h.middle_exact;
  r.component = h.coker_verdict;
  r.rhs = h.hold();
  r.bimodule_report = cocompatibility_report(t.bimodule, bound, seed);
  r.zr_report = cocompatibility_report(zr_bimodule(t), bound, seed);
  finish(r);
  return r;
}

}  // namespace tx
