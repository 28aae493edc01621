#include <functional>

#include "tx/catalog.hpp"
#include "tx/workspace.hpp"

namespace tx {

using nlohmann::json;

namespace {

json verdict_json(const GorensteinVerdict& v) {
  json j{{"answer", to_string(v.answer)},
         {"reason", to_string(v.reason)},
         {"regime", v.regime.to_string()},
         {"bound", v.bound},
         {"module_dim", v.module_dim}};
  if (v.reason == GorensteinVerdict::Reason::ExtNonvanishing ||
      v.reason == GorensteinVerdict::Reason::DualExtNonvanishing) {
    j["ext_index"] = v.ext_index;
    j["ext_dim"] = v.ext_dim;
  }
  if (v.reason == GorensteinVerdict::Reason::BidualityDefect) j["biduality_rank"] = v.biduality_rank;
  return j;
}

json compat_json(const CompatibilityReport& r) {
  return json{{"notion", r.cocompatible ? "cocompatible" : "compatible"},
              {"via", to_string(r.via)},
              {"established", r.established()},
              {"fd_right", r.fd_right.to_string()},
              {"pd_left", r.pd_left.to_string()},
              {"id_left", r.id_left.to_string()}};
}

json equivalence_json(const EquivalenceReport& r) {
  return json{{"lhs", verdict_json(r.lhs)},
              {"middle_exact", r.middle_exact},
              {"component", verdict_json(r.component)},
              {"rhs", r.rhs},
              {"agree", r.agree},
              {"bimodule_report", compat_json(r.bimodule_report)},
              {"zr_report", compat_json(r.zr_report)},
              {"hypotheses_established", r.hypotheses_established},
              {"consistent", r.consistent}};
}

json morita_json(const MoritaReport& r) {
  return json{{"lhs", verdict_json(r.lhs)},
              {"first_exact", r.first_exact},
              {"second_exact", r.second_exact},
              {"first_component", verdict_json(r.first_component)},
              {"second_component", verdict_json(r.second_component)},
              {"rhs", r.rhs},
              {"agree", r.agree},
              {"u_report", compat_json(r.u_report)},
              {"v_report", compat_json(r.v_report)},
              {"sum_report", compat_json(r.sum_report)},
              {"zr_report", compat_json(r.zr_report)},
              {"sufficiency_established", r.sufficiency_established},
              {"converse_established", r.converse_established},
              {"presentation_matches", r.presentation_matches},
              {"consistent", r.consistent}};
}

bool is_right(InstanceKind k) { return k == InstanceKind::RightPair || k == InstanceKind::RightTuple; }
bool over_context(InstanceKind k) {
  return k == InstanceKind::Tuple || k == InstanceKind::Cotuple || k == InstanceKind::RightTuple;
}

// The module over the total algebra (or the Morita ring) an instance
// describes; right modules are returned with their action matrices.
Module instance_module(const Workspace& w, const Instance& in) {
  if (over_context(in.kind)) {
    const MoritaRing& r = w.contexts.at(in.owner).ring;
    if (const auto* t = std::get_if<TupleModule>(&in.data)) return tuple_to_module(r, *t);
    if (const auto* t = std::get_if<CotupleModule>(&in.data)) return cotuple_to_module(r, *t);
    RightModule m = right_tuple_to_module(r, std::get<RightTupleModule>(in.data));
    return Module{m.ring, m.act};
  }
  const TrivialExtension& t = w.extensions.at(in.owner).extension;
  if (const auto* p = std::get_if<PairModule>(&in.data)) return pair_to_module(t, *p);
  if (const auto* c = std::get_if<CopairModule>(&in.data)) return copair_to_module(t, *c);
  RightModule m = right_pair_to_module(t, std::get<RightPairModule>(in.data));
  return Module{m.ring, m.act};
}

std::size_t bound_for(const CommandOptions& opt, const Algebra& a) { return opt.bound.value_or(default_bound(a)); }

json run_validate(const Workspace& w) {
  json e;
  json& algs = e["algebras"] = json::object();
  for (const auto& [n, a] : w.algebras) algs[n] = {{"dim", a->dim()}, {"field", a->field().p()}};
  json& bims = e["bimodules"] = json::object();
  for (const auto& [n, b] : w.bimodules) bims[n] = {{"dim", b.bimodule.dim()}};
  json& mods = e["modules"] = json::object();
  for (const auto& [n, m] : w.modules)
    mods[n] = {{"algebra", m.algebra}, {"side", m.right ? "right" : "left"}, {"dim", m.module.dim()}};
  json& exts = e["extensions"] = json::object();
  for (const auto& [n, x] : w.extensions) exts[n] = {{"total_dim", x.extension.total->dim()}};
  json& ctxs = e["contexts"] = json::object();
  for (const auto& [n, c] : w.contexts)
    ctxs[n] = {{"ring_dim", c.ring.lambda->dim()}, {"constructions_agree", c.ring.iso_valid}};
  json& ins = e["instances"] = json::object();
  for (const auto& [n, in] : w.instances) {
    json d{{"kind", in.is_sweep() ? "sweep" : to_string(in.kind)}, {"owner", in.owner}};
    if (in.is_sweep()) d["of"] = to_string(in.kind);
    ins[n] = std::move(d);
  }
  return json::array({json{{"valid", true}, {"entity_count", w.entity_count()}, {"entities", std::move(e)}}});
}

json run_check(const Workspace& w, const std::string& sub, const CommandOptions& opt) {
  if (sub != "gp" && sub != "gi" && sub != "gf") throw TargetError("check: unknown test '" + sub + "'");
  const bool right = sub == "gf";
  auto verdict = [&](const Module& m) {
    std::size_t b = bound_for(opt, *m.ring);
    if (sub == "gp") return gp_check(m, b, opt.seed);
    if (sub == "gi") return gi_check(m, b, opt.seed);
    return gf_check_right(RightModule{m.ring, m.act}, b, opt.seed);
  };
  json results = json::array();
  bool found = false;
  for (const auto& [n, m] : w.modules) {
    if (opt.target && *opt.target != n) continue;
    if (m.right != right) {
      if (opt.target) throw TargetError("check " + sub + ": module '" + n + "' has the wrong side");
      continue;
    }
    found = true;
    results.push_back(json{{"target", n}, {"source", "module"}, {"algebra", m.algebra}, {"verdict", verdict_json(verdict(m.module))}});
  }
  for (const auto& [n, in] : w.instances) {
    if (opt.target && *opt.target != n) continue;
    if (in.is_sweep() || is_right(in.kind) != right) {
      if (opt.target) throw TargetError("check " + sub + ": instance '" + n + "' is not a single " +
                                        (right ? "right" : "left") + " module");
      continue;
    }
    found = true;
    results.push_back(json{{"target", n}, {"source", to_string(in.kind)}, {"algebra", in.owner},
                       {"verdict", verdict_json(verdict(instance_module(w, in)))}});
  }
  if (opt.target && !found) throw TargetError("check " + sub + ": unknown target '" + *opt.target + "'");
  return results;
}

InstanceKind verify_kind(const std::string& sub) {
  if (sub == "cor35") return InstanceKind::Pair;
  if (sub == "cor45") return InstanceKind::Copair;
  if (sub == "cor48") return InstanceKind::RightPair;
  if (sub == "thm52") return InstanceKind::Tuple;
  if (sub == "thm53") return InstanceKind::Cotuple;
  if (sub == "thm54") return InstanceKind::RightTuple;
  throw TargetError("verify: unknown statement '" + sub + "'");
}

// Enumerated modules of a sweep, as left modules over the owner algebra or
// (for right kinds) as the action matrices of right modules.
std::vector<Module> sweep_modules(const Workspace& w, const Instance& in) {
  const Sweep& s = std::get<Sweep>(in.data);
  std::vector<Module> out;
  if (over_context(in.kind)) {
    const MoritaRing& r = w.contexts.at(in.owner).ring;
    for (const auto& m : catalog::enumerate_modules(r.extension.total, s.vertices, s.max_dim))
      out.push_back(restrict_scalars(m, r.lambda, r.iso));
  } else {
    out = catalog::enumerate_modules(w.extensions.at(in.owner).extension.total, s.vertices, s.max_dim);
  }
  if (is_right(in.kind))
    for (auto& m : out) m = Module{m.ring, dual_module(m).act};
  return out;
}

json verify_single(const Workspace& w, InstanceKind k, const std::string& owner, const Module& m,
                   const CommandOptions& opt) {
  if (over_context(k)) {
    const MoritaRing& r = w.contexts.at(owner).ring;
    std::size_t b = bound_for(opt, *r.lambda);
    if (k == InstanceKind::Tuple) return morita_json(verify_tuple_gp(r, module_to_tuple(r, m), b, opt.seed));
    if (k == InstanceKind::Cotuple) return morita_json(verify_cotuple_gi(r, module_to_cotuple(r, m), b, opt.seed));
    return morita_json(
        verify_right_tuple_gf(r, module_to_right_tuple(r, RightModule{r.lambda, m.act}), b, opt.seed));
  }
  const TrivialExtension& t = w.extensions.at(owner).extension;
  std::size_t b = bound_for(opt, *t.total);
  if (k == InstanceKind::Pair) return equivalence_json(verify_pair_equivalence(t, module_to_pair(t, m), b, opt.seed));
  if (k == InstanceKind::Copair)
    return equivalence_json(verify_copair_equivalence(t, module_to_copair(t, m), b, opt.seed));
  return equivalence_json(
      verify_right_pair_equivalence(t, module_to_right_pair(t, RightModule{t.total, m.act}), b, opt.seed));
}

json verify_instance(const Workspace& w, const Instance& in, const CommandOptions& opt) {
  if (!in.is_sweep()) {
    if (over_context(in.kind)) {
      const MoritaRing& r = w.contexts.at(in.owner).ring;
      std::size_t b = bound_for(opt, *r.lambda);
      if (const auto* t = std::get_if<TupleModule>(&in.data)) return morita_json(verify_tuple_gp(r, *t, b, opt.seed));
      if (const auto* t = std::get_if<CotupleModule>(&in.data))
        return morita_json(verify_cotuple_gi(r, *t, b, opt.seed));
      return morita_json(verify_right_tuple_gf(r, std::get<RightTupleModule>(in.data), b, opt.seed));
    }
    const TrivialExtension& t = w.extensions.at(in.owner).extension;
    std::size_t b = bound_for(opt, *t.total);
    if (const auto* p = std::get_if<PairModule>(&in.data))
      return equivalence_json(verify_pair_equivalence(t, *p, b, opt.seed));
    if (const auto* c = std::get_if<CopairModule>(&in.data))
      return equivalence_json(verify_copair_equivalence(t, *c, b, opt.seed));
    return equivalence_json(verify_right_pair_equivalence(t, std::get<RightPairModule>(in.data), b, opt.seed));
  }
  json items = json::array();
  std::size_t agree = 0, consistent = 0, established = 0;
  std::size_t index = 0;
  for (const auto& m : sweep_modules(w, in)) {
    json r = verify_single(w, in.kind, in.owner, m, opt);
    agree += r["agree"].get<bool>();
    consistent += r["consistent"].get<bool>();
    bool est = r.contains("hypotheses_established")
                   ? r["hypotheses_established"].get<bool>()
                   : r["sufficiency_established"].get<bool>() && r["converse_established"].get<bool>();
    established += est;
    items.push_back(json{{"index", index++}, {"dim", m.dim()}, {"report", std::move(r)}});
  }
  return json{{"count", items.size()},
              {"summary", {{"agree", agree}, {"consistent", consistent}, {"hypotheses_established", established}}},
              {"instances", std::move(items)}};
}

json run_verify(const Workspace& w, const std::string& sub, const CommandOptions& opt) {
  InstanceKind k = verify_kind(sub);
  json results = json::array();
  for (const auto& [n, in] : w.instances) {
    if (opt.target && *opt.target != n) continue;
    if (in.kind != k) {
      if (opt.target) throw TargetError("verify " + sub + ": instance '" + n + "' is a " + to_string(in.kind));
      continue;
    }
    results.push_back(json{{"target", n}, {"kind", in.is_sweep() ? "sweep" : to_string(in.kind)},
                       {"report", verify_instance(w, in, opt)}});
  }
  if (opt.target && results.empty()) throw TargetError("verify " + sub + ": unknown target '" + *opt.target + "'");
  return results;
}

json run_resolve(const Workspace& w, const std::string& sub, const CommandOptions& opt) {
  if (sub != "pair" && sub != "copair") throw TargetError("resolve: unknown kind '" + sub + "'");
  InstanceKind k = sub == "pair" ? InstanceKind::Pair : InstanceKind::Copair;
  json results = json::array();
  for (const auto& [n, in] : w.instances) {
    if (opt.target && *opt.target != n) continue;
    if (in.kind != k || in.is_sweep()) {
      if (opt.target) throw TargetError("resolve " + sub + ": instance '" + n + "' is not a single " + sub);
      continue;
    }
    const TrivialExtension& t = w.extensions.at(in.owner).extension;
    std::size_t b = bound_for(opt, *t.total);
    std::size_t window = opt.window.value_or(b);
    LiftedResolution l;
    try {
      l = k == InstanceKind::Pair ? build_pair_complete_resolution(t, std::get<PairModule>(in.data), window, b, opt.seed)
                                  : build_copair_complete_coresolution(t, std::get<CopairModule>(in.data), window, b,
                                                                       opt.seed);
    } catch (const std::domain_error& e) {
      if (opt.target) throw HypothesisError("resolve " + sub + " '" + n + "': " + e.what());
      results.push_back(json{{"target", n}, {"qualifies", false}, {"reason", e.what()}});
      continue;
    }
    json dims = json::array(), base = json::array();
    for (const auto& m : l.complex.terms) dims.push_back(m.dim());
    for (const auto& m : l.base_terms) base.push_back(m.dim());
    results.push_back(json{{"target", n},
                       {"qualifies", true},
                       {"window", window},
                       {"lo", l.complex.lo},
                       {"term_dims", std::move(dims)},
                       {"base_term_dims", std::move(base)},
                       {"exact", l.exact},
                       {"terms_classified", l.terms_classified},
                       {"kernel_matches", l.kernel_matches},
                       {"hom_exact_T", l.hom_exact_T},
                       {"hom_exact_Z", l.hom_exact_Z},
                       {"ok", l.ok()}});
  }
  if (opt.target && results.empty()) throw TargetError("resolve " + sub + ": unknown target '" + *opt.target + "'");
  return results;
}

}  // namespace

json run_command(const Workspace& w, const std::string& command, const std::string& sub, const CommandOptions& opt) {
  json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = sub.empty() ? command : command + " " + sub;
  report["seed"] = opt.seed;
  report["bound"] = opt.bound ? json(*opt.bound) : json("default");
  if (command == "resolve") report["window"] = opt.window ? json(*opt.window) : json("bound");
  if (opt.target) report["target"] = *opt.target;
  if (command == "validate") report["results"] = run_validate(w);
  else if (command == "check") report["results"] = run_check(w, sub, opt);
  else if (command == "verify") report["results"] = run_verify(w, sub, opt);
  else if (command == "resolve") report["results"] = run_resolve(w, sub, opt);
  else throw TargetError("unknown command '" + command + "'");
  return report;
}

}  // namespace tx
