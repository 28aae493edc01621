#include "tx/workspace.hpp"

#include <fstream>
#include <set>

#include "tx/catalog.hpp"

namespace tx {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw WorkspaceError(where + ": " + what);
}

std::int64_t integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t count(const json& j, const std::string& where) {
  std::int64_t v = integer(j, where);
  if (v < 0) fail(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing '") + key + "'");
  return j.at(key);
}

std::string text(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a name");
  return j.get<std::string>();
}

Matrix parse_matrix(const json& j, const Field& f, std::optional<std::size_t> rows, std::optional<std::size_t> cols,
                    const std::string& where) {
  if (!j.is_array()) fail(where, "expected a matrix (array of rows)");
  const std::size_t r = j.size();
  std::size_t c = r ? (j[0].is_array() ? j[0].size() : 0) : cols.value_or(0);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c) fail(where, "rows of unequal length");
    for (std::size_t k = 0; k < c; ++k) m.at(i, k) = f.reduce(integer(j[i][k], where));
  }
  if ((rows && *rows != r) || (cols && *cols != c))
    fail(where, "matrix is " + std::to_string(r) + "x" + std::to_string(c) + ", expected " +
                    std::to_string(rows.value_or(r)) + "x" + std::to_string(cols.value_or(c)));
  return m;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrices_json(const std::vector<Matrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(matrix_json(m));
  return out;
}

std::vector<Matrix> parse_action(const json& j, const AlgebraPtr& a, std::optional<std::size_t> dim,
                                 const std::string& where) {
  if (!j.is_array() || j.size() != a->dim())
    fail(where, "expected one action matrix per basis element (" + std::to_string(a->dim()) + ")");
  if (!dim) dim = j[0].size();
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_matrix(j[i], a->field(), dim, dim, where + ": action " + std::to_string(i)));
  return out;
}

class Loader {
 public:
  explicit Loader(const json& j) : j_(j) {}

  Workspace run() {
    if (!j_.is_object()) fail("workspace", "expected an object");
    if (j_.contains("schema_version") && integer(j_["schema_version"], "schema_version") != kSchemaVersion)
      fail("schema_version", "unsupported version");
    w_.field = static_cast<Elem>(count(j_.value("field", json(2)), "field"));
    field(w_.field, "field");
    for (auto& [name, _] : section("algebras").items()) algebra(name);
    for (auto& [name, b] : section("bimodules").items()) bimodule(name, b);
    for (auto& [name, e] : section("extensions").items()) extension(name, e);
    for (auto& [name, c] : section("contexts").items()) context(name, c);
    for (auto& [name, m] : section("modules").items()) module(name, m);
    for (auto& [name, i] : section("instances").items()) instance(name, i);
    std::set<std::string> seen;
    auto unique = [&](const std::string& n) {
      if (!seen.insert(n).second) fail("workspace", "name '" + n + "' is used twice");
    };
    for (const auto& [n, _] : w_.algebras) unique(n);
    for (const auto& [n, _] : w_.extensions) unique(n);
    for (const auto& [n, _] : w_.contexts) unique(n);
    return std::move(w_);
  }

 private:
  const json& section(const char* key) {
    static const json empty = json::object();
    if (!j_.contains(key)) return empty;
    if (!j_[key].is_object()) fail(key, "expected an object of named entries");
    return j_[key];
  }

  Field field(std::size_t p, const std::string& where) {
    try {
      return Field(static_cast<Elem>(p));
    } catch (const std::exception& e) {
      fail(where, e.what());
    }
  }

  AlgebraPtr algebra(const std::string& name) {
    if (auto it = w_.algebras.find(name); it != w_.algebras.end()) return it->second;
    const json& all = section("algebras");
    if (!all.contains(name)) fail("algebra '" + name + "'", "not defined");
    if (!resolving_.insert(name).second) fail("algebra '" + name + "'", "defined in terms of itself");
    const std::string where = "algebra '" + name + "'";
    const json& j = all[name];
    Field f = field(j.contains("field") ? count(j["field"], where) : w_.field, where);
    AlgebraPtr a;
    try {
      if (j.contains("catalog")) {
        a = catalog::by_name(text(j["catalog"], where), f);
      } else if (j.contains("quiver")) {
        const json& q = j["quiver"];
        std::vector<Arrow> arrows;
        for (const auto& ar : member(q, "arrows", where))
          arrows.push_back({count(ar.at(0), where), count(ar.at(1), where)});
        std::vector<std::vector<std::size_t>> rel;
        for (const auto& r : q.value("relations", json::array())) {
          rel.emplace_back();
          for (const auto& x : r) rel.back().push_back(count(x, where));
        }
        a = monomial_quiver_algebra(f, count(member(q, "vertices", where), where), arrows, rel, name);
      } else if (j.contains("product")) {
        a = product_algebra(algebra(text(j["product"].at(0), where)), algebra(text(j["product"].at(1), where))).algebra;
      } else if (j.contains("opposite")) {
        a = opposite_algebra(algebra(text(j["opposite"], where)));
      } else {
        std::size_t n = count(member(j, "dim", where), where);
        const json& c = member(j, "constants", where);
        const json& u = member(j, "unit", where);
        if (!c.is_array() || c.size() != n * n * n) fail(where, "expected dim^3 structure constants");
        if (!u.is_array() || u.size() != n) fail(where, "expected dim unit coordinates");
        std::vector<Elem> cs;
        for (const auto& x : c) cs.push_back(f.reduce(integer(x, where)));
        Vec unit;
        for (const auto& x : u) unit.push_back(f.reduce(integer(x, where)));
        a = make_algebra(f, n, std::move(cs), std::move(unit), name);
      }
    } catch (const WorkspaceError&) {
      throw;
    } catch (const std::exception& e) {
      fail(where, e.what());
    }
    if (auto v = validate_algebra(*a); !v) fail(where, v.message);
    resolving_.erase(name);
    w_.algebras[name] = a;
    return a;
  }

  void bimodule(const std::string& name, const json& j) {
    const std::string where = "bimodule '" + name + "'";
    NamedBimodule b;
    if (j.contains("regular")) {
      b.left = b.right = text(j["regular"], where);
      b.bimodule = regular_bimodule(algebra(b.left));
    } else if (j.contains("zero")) {
      b.left = text(j["zero"].at(0), where);
      b.right = text(j["zero"].at(1), where);
      b.bimodule = zero_bimodule(algebra(b.left), algebra(b.right));
    } else {
      b.left = text(member(j, "left", where), where);
      b.right = text(member(j, "right", where), where);
      AlgebraPtr l = algebra(b.left), r = algebra(b.right);
      auto la = parse_action(member(j, "left_act", where), l, std::nullopt, where + ": left_act");
      std::size_t d = la.empty() ? 0 : la[0].rows();
      auto ra = parse_action(member(j, "right_act", where), r, d, where + ": right_act");
      b.bimodule = Bimodule{l, r, std::move(la), std::move(ra)};
    }
    if (auto v = validate_bimodule(b.bimodule); !v) fail(where, v.message);
    w_.bimodules[name] = std::move(b);
  }

  const NamedBimodule& bimodule_ref(const json& j, const std::string& where) {
    std::string n = text(j, where);
    auto it = w_.bimodules.find(n);
    if (it == w_.bimodules.end()) fail(where, "unknown bimodule '" + n + "'");
    return it->second;
  }

  void extension(const std::string& name, const json& j) {
    const std::string where = "extension '" + name + "'";
    NamedExtension e;
    e.base = text(member(j, "base", where), where);
    e.bimodule = text(member(j, "bimodule", where), where);
    const Bimodule& m = bimodule_ref(j["bimodule"], where).bimodule;
    try {
      e.extension = trivial_extension(algebra(e.base), m);
    } catch (const std::invalid_argument& ex) {
      fail(where, ex.what());
    }
    w_.extensions[name] = std::move(e);
  }

  void context(const std::string& name, const json& j) {
    const std::string where = "context '" + name + "'";
    NamedContext c;
    c.a = text(member(j, "a", where), where);
    c.b = text(member(j, "b", where), where);
    c.u = text(member(j, "u", where), where);
    c.v = text(member(j, "v", where), where);
    MoritaContextData d{algebra(c.a), algebra(c.b), bimodule_ref(j["u"], where).bimodule,
                        bimodule_ref(j["v"], where).bimodule, name};
    if (auto v = validate_context(d); !v) fail(where, v.message);
    c.ring = morita_ring(d);
    if (!c.ring.iso_valid) fail(where, "matrix and extension constructions disagree");
    w_.contexts[name] = std::move(c);
  }

  AlgebraPtr any_algebra(const std::string& n, const std::string& where) {
    try {
      return w_.algebra(n);
    } catch (const WorkspaceError&) {
      if (section("algebras").contains(n)) return algebra(n);
      fail(where, "unknown algebra '" + n + "'");
    }
  }

  // A module given by name, or inline as {"act": ...}, {"regular": true} or
  // {"zero": true}; `expected` is the algebra implied by the slot.
  Module module_value(const json& j, AlgebraPtr expected, bool right, const std::string& where) {
    if (j.is_string()) {
      std::string n = j.get<std::string>();
      auto it = w_.modules.find(n);
      if (it == w_.modules.end()) fail(where, "unknown module '" + n + "'");
      if (it->second.right != right)
        fail(where, "module '" + n + "' is a " + (it->second.right ? "right" : "left") + " module");
      if (expected && !same_algebra(expected, it->second.module.ring))
        fail(where, "module '" + n + "' is over the wrong algebra");
      return it->second.module;
    }
    if (!j.is_object()) fail(where, "expected a module name or object");
    AlgebraPtr a = expected;
    if (j.contains("algebra")) {
      a = any_algebra(text(j["algebra"], where), where);
      if (expected && !same_algebra(expected, a)) fail(where, "module is over the wrong algebra");
    }
    if (!a) fail(where, "module needs an algebra");
    Module m;
    if (j.value("regular", false)) {
      m = right ? Module{a, regular_right_module(a).act} : regular_module(a);
    } else if (j.value("zero", false)) {
      m = zero_module(a);
    } else {
      std::optional<std::size_t> dim;
      if (j.contains("dim")) dim = count(j["dim"], where);
      m = Module{a, parse_action(member(j, "act", where), a, dim, where)};
    }
    Validation v = right ? validate_right_module(RightModule{a, m.act}) : validate_module(m);
    if (!v) fail(where, v.message);
    return m;
  }

  void module(const std::string& name, const json& j) {
    const std::string where = "module '" + name + "'";
    NamedModule m;
    m.algebra = text(member(j, "algebra", where), where);
    m.right = j.value("side", std::string("left")) == "right";
    m.module = module_value(j, nullptr, m.right, where);
    w_.modules[name] = std::move(m);
  }

  const NamedExtension& extension_ref(const json& j, const std::string& where) {
    std::string n = text(member(j, "extension", where), where);
    auto it = w_.extensions.find(n);
    if (it == w_.extensions.end()) fail(where, "unknown extension '" + n + "'");
    return it->second;
  }

  const NamedContext& context_ref(const json& j, const std::string& where) {
    std::string n = text(member(j, "context", where), where);
    auto it = w_.contexts.find(n);
    if (it == w_.contexts.end()) fail(where, "unknown context '" + n + "'");
    return it->second;
  }

  void instance(const std::string& name, const json& j) {
    const std::string where = "instance '" + name + "'";
    std::string kind = text(member(j, "kind", where), where);
    Instance in;
    try {
      if (kind == "sweep") {
        auto of = parse_instance_kind(text(member(j, "of", where), where));
        if (!of) fail(where, "unknown instance kind to sweep");
        Sweep s{*of, count(member(j, "max_dim", where), where), count(j.value("vertices", json(1)), where)};
        bool over_context = *of == InstanceKind::Tuple || *of == InstanceKind::Cotuple || *of == InstanceKind::RightTuple;
        AlgebraPtr total;
        if (over_context) {
          in.owner = text(member(j, "context", where), where);
          total = context_ref(j, where).ring.extension.total;
        } else {
          in.owner = text(member(j, "extension", where), where);
          total = extension_ref(j, where).extension.total;
        }
        // Reject shapes the enumerator cannot handle at load time.
        catalog::enumerate_modules(total, s.vertices, 0);
        in.kind = *of;
        in.data = s;
      } else {
        auto k = parse_instance_kind(kind);
        if (!k) fail(where, "unknown kind '" + kind + "'");
        in.kind = *k;
        switch (*k) {
          case InstanceKind::Pair: in.data = pair(j, in, where); break;
          case InstanceKind::Copair: in.data = copair(j, in, where); break;
          case InstanceKind::RightPair: in.data = right_pair(j, in, where); break;
          case InstanceKind::Tuple: in.data = tuple(j, in, where); break;
          case InstanceKind::Cotuple: in.data = cotuple(j, in, where); break;
          case InstanceKind::RightTuple: in.data = right_tuple(j, in, where); break;
        }
      }
    } catch (const WorkspaceError&) {
      throw;
    } catch (const std::exception& e) {
      fail(where, e.what());
    }
    w_.instances[name] = std::move(in);
  }

  PairModule pair(const json& j, Instance& in, const std::string& where) {
    in.owner = text(member(j, "extension", where), where);
    const TrivialExtension& t = extension_ref(j, where).extension;
    PairModule p;
    if (j.contains("module")) {
      p = module_to_pair(t, module_value(j["module"], t.total, false, where));
    } else if (j.contains("functor")) {
      std::string fn = text(j["functor"], where);
      Module x = module_value(member(j, "x", where), t.base, false, where);
      if (fn == "T") p = functor_T(t, x);
      else if (fn == "Z") p = functor_Z_pair(t, x);
      else fail(where, "pair functor must be T or Z");
    } else {
      p.x = module_value(member(j, "x", where), t.base, false, where);
      p.alpha = parse_matrix(member(j, "alpha", where), p.x.field(), p.x.dim(),
                             tensor_over(t.bimodule, p.x).space.dim(), where + ": alpha");
    }
    if (auto v = validate_pair(t, p); !v) fail(where, v.message);
    return p;
  }

  CopairModule copair(const json& j, Instance& in, const std::string& where) {
    in.owner = text(member(j, "extension", where), where);
    const TrivialExtension& t = extension_ref(j, where).extension;
    CopairModule c;
    if (j.contains("module")) {
      c = module_to_copair(t, module_value(j["module"], t.total, false, where));
    } else if (j.contains("functor")) {
      std::string fn = text(j["functor"], where);
      Module y = module_value(member(j, "y", where), t.base, false, where);
      if (fn == "H") c = functor_H(t, y);
      else if (fn == "Z") c = functor_Z_copair(t, y);
      else fail(where, "copair functor must be H or Z");
    } else {
      c.y = module_value(member(j, "y", where), t.base, false, where);
      c.beta = parse_matrix(member(j, "beta", where), c.y.field(), hom_from_bimodule(t.bimodule, c.y).module.dim(),
                            c.y.dim(), where + ": beta");
    }
    if (auto v = validate_copair(t, c); !v) fail(where, v.message);
    return c;
  }

  RightPairModule right_pair(const json& j, Instance& in, const std::string& where) {
    in.owner = text(member(j, "extension", where), where);
    const TrivialExtension& t = extension_ref(j, where).extension;
    RightPairModule p;
    if (j.contains("module")) {
      Module m = module_value(j["module"], t.total, true, where);
      p = module_to_right_pair(t, RightModule{t.total, m.act});
    } else {
      Module x = module_value(member(j, "x", where), t.base, true, where);
      p.x = RightModule{t.base, x.act};
      p.alpha = parse_matrix(member(j, "alpha", where), x.field(), x.dim(),
                             tensor_over(flip(t.bimodule), as_left_opposite(p.x)).space.dim(), where + ": alpha");
    }
    if (auto v = validate_right_pair(t, p); !v) fail(where, v.message);
    return p;
  }

  TupleModule tuple(const json& j, Instance& in, const std::string& where) {
    in.owner = text(member(j, "context", where), where);
    const MoritaRing& r = context_ref(j, where).ring;
    if (j.contains("module")) return module_to_tuple(r, module_value(j["module"], r.lambda, false, where));
    TupleModule t;
    t.x = module_value(member(j, "x", where), r.data.a, false, where + ": x");
    t.y = module_value(member(j, "y", where), r.data.b, false, where + ": y");
    const Field& f = t.x.field();
    t.f = parse_matrix(member(j, "f", where), f, t.y.dim(), tensor_over(r.data.u, t.x).space.dim(), where + ": f");
    t.g = parse_matrix(member(j, "g", where), f, t.x.dim(), tensor_over(r.data.v, t.y).space.dim(), where + ": g");
    if (auto v = validate_tuple(r, t); !v) fail(where, v.message);
    return t;
  }

  CotupleModule cotuple(const json& j, Instance& in, const std::string& where) {
    in.owner = text(member(j, "context", where), where);
    const MoritaRing& r = context_ref(j, where).ring;
    if (j.contains("module")) return module_to_cotuple(r, module_value(j["module"], r.lambda, false, where));
    CotupleModule t;
    t.x = module_value(member(j, "x", where), r.data.a, false, where + ": x");
    t.y = module_value(member(j, "y", where), r.data.b, false, where + ": y");
    const Field& f = t.x.field();
    t.f = parse_matrix(member(j, "f", where), f, hom_from_bimodule(r.data.u, t.y).module.dim(), t.x.dim(),
                       where + ": f");
    t.g = parse_matrix(member(j, "g", where), f, hom_from_bimodule(r.data.v, t.x).module.dim(), t.y.dim(),
                       where + ": g");
    if (auto v = validate_cotuple(r, t); !v) fail(where, v.message);
    return t;
  }

  RightTupleModule right_tuple(const json& j, Instance& in, const std::string& where) {
    in.owner = text(member(j, "context", where), where);
    const MoritaRing& r = context_ref(j, where).ring;
    if (j.contains("module")) {
      Module m = module_value(j["module"], r.lambda, true, where);
      return module_to_right_tuple(r, RightModule{r.lambda, m.act});
    }
    RightTupleModule t;
    t.w = RightModule{r.data.a, module_value(member(j, "w", where), r.data.a, true, where + ": w").act};
    t.q = RightModule{r.data.b, module_value(member(j, "q", where), r.data.b, true, where + ": q").act};
    const Field& f = t.w.field();
    t.f = parse_matrix(member(j, "f", where), f, t.w.dim(),
                       tensor_over(flip(r.data.u), as_left_opposite(t.q)).space.dim(), where + ": f");
    t.g = parse_matrix(member(j, "g", where), f, t.q.dim(),
                       tensor_over(flip(r.data.v), as_left_opposite(t.w)).space.dim(), where + ": g");
    if (auto v = validate_right_tuple(r, t); !v) fail(where, v.message);
    return t;
  }

  const json& j_;
  Workspace w_;
  std::set<std::string> resolving_;
};

json module_json(const std::vector<Matrix>& act) {
  std::size_t dim = act.empty() ? 0 : act[0].rows();
  return json{{"dim", dim}, {"act", matrices_json(act)}};
}

}  // namespace

std::string to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::Pair: return "pair";
    case InstanceKind::Copair: return "copair";
    case InstanceKind::RightPair: return "right_pair";
    case InstanceKind::Tuple: return "tuple";
    case InstanceKind::Cotuple: return "cotuple";
    case InstanceKind::RightTuple: return "right_tuple";
  }
  return "?";
}

std::optional<InstanceKind> parse_instance_kind(const std::string& s) {
  for (auto k : {InstanceKind::Pair, InstanceKind::Copair, InstanceKind::RightPair, InstanceKind::Tuple,
                 InstanceKind::Cotuple, InstanceKind::RightTuple})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

std::size_t Workspace::entity_count() const {
  return algebras.size() + bimodules.size() + modules.size() + extensions.size() + contexts.size() +
         instances.size();
}

AlgebraPtr Workspace::algebra(const std::string& name) const {
  if (auto it = algebras.find(name); it != algebras.end()) return it->second;
  if (auto it = extensions.find(name); it != extensions.end()) return it->second.extension.total;
  if (auto it = contexts.find(name); it != contexts.end()) return it->second.ring.lambda;
  throw WorkspaceError("unknown algebra '" + name + "'");
}

Workspace load_workspace(const json& j) { return Loader(j).run(); }

Workspace load_workspace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw WorkspaceError(path + ": cannot open");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw WorkspaceError(path + ": parse error: " + e.what());
  }
  return load_workspace(j);
}

json save_workspace(const Workspace& w) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["field"] = w.field;
  json& algs = out["algebras"] = json::object();
  for (const auto& [n, a] : w.algebras) {
    json e{{"dim", a->dim()}, {"constants", a->constants()}, {"unit", a->unit()}};
    if (a->field().p() != w.field) e["field"] = a->field().p();
    algs[n] = std::move(e);
  }
  json& bims = out["bimodules"] = json::object();
  for (const auto& [n, b] : w.bimodules)
    bims[n] = json{{"left", b.left},
                   {"right", b.right},
                   {"left_act", matrices_json(b.bimodule.left_act)},
                   {"right_act", matrices_json(b.bimodule.right_act)}};
  json& mods = out["modules"] = json::object();
  for (const auto& [n, m] : w.modules) {
    json e = module_json(m.module.act);
    e["algebra"] = m.algebra;
    if (m.right) e["side"] = "right";
    mods[n] = std::move(e);
  }
  json& exts = out["extensions"] = json::object();
  for (const auto& [n, e] : w.extensions) exts[n] = json{{"base", e.base}, {"bimodule", e.bimodule}};
  json& ctxs = out["contexts"] = json::object();
  for (const auto& [n, c] : w.contexts) ctxs[n] = json{{"a", c.a}, {"b", c.b}, {"u", c.u}, {"v", c.v}};
  json& ins = out["instances"] = json::object();
  for (const auto& [n, in] : w.instances) {
    json e;
    bool over_context = w.contexts.count(in.owner) > 0;
    e[over_context ? "context" : "extension"] = in.owner;
    if (const auto* s = std::get_if<Sweep>(&in.data)) {
      e["kind"] = "sweep";
      e["of"] = to_string(s->of);
      e["max_dim"] = s->max_dim;
      e["vertices"] = s->vertices;
    } else {
      e["kind"] = to_string(in.kind);
      if (const auto* p = std::get_if<PairModule>(&in.data)) {
        e["x"] = module_json(p->x.act);
        e["alpha"] = matrix_json(p->alpha);
      } else if (const auto* c = std::get_if<CopairModule>(&in.data)) {
        e["y"] = module_json(c->y.act);
        e["beta"] = matrix_json(c->beta);
      } else if (const auto* rp = std::get_if<RightPairModule>(&in.data)) {
        e["x"] = module_json(rp->x.act);
        e["alpha"] = matrix_json(rp->alpha);
      } else if (const auto* t = std::get_if<TupleModule>(&in.data)) {
        e["x"] = module_json(t->x.act);
        e["y"] = module_json(t->y.act);
        e["f"] = matrix_json(t->f);
        e["g"] = matrix_json(t->g);
      } else if (const auto* ct = std::get_if<CotupleModule>(&in.data)) {
        e["x"] = module_json(ct->x.act);
        e["y"] = module_json(ct->y.act);
        e["f"] = matrix_json(ct->f);
        e["g"] = matrix_json(ct->g);
      } else if (const auto* rt = std::get_if<RightTupleModule>(&in.data)) {
        e["w"] = module_json(rt->w.act);
        e["q"] = module_json(rt->q.act);
        e["f"] = matrix_json(rt->f);
        e["g"] = matrix_json(rt->g);
      }
    }
    ins[n] = std::move(e);
  }
  return out;
}

json builtin_examples() {
  auto sweep = [](const char* of, const char* owner_key, const char* owner, int max_dim, int vertices) {
    return json{{"kind", "sweep"}, {"of", of}, {owner_key, owner}, {"max_dim", max_dim}, {"vertices", vertices}};
  };
  json j;
  j["schema_version"] = kSchemaVersion;
  j["field"] = 2;
  j["algebras"] = {
      {"k", {{"catalog", "k"}}},
      {"k2", {{"catalog", "k^2"}}},
      {"D", {{"catalog", "D"}}},
      {"A2", {{"catalog", "A2"}}},
      {"k_gf3", {{"catalog", "k"}, {"field", 3}}},
      {"D_gf3", {{"catalog", "D"}, {"field", 3}}},
  };
  j["bimodules"] = {
      {"k_regular", {{"regular", "k"}}},
      {"k_zero", {{"zero", {"k", "k"}}}},
      {"corner", {{"left", "k2"}, {"right", "k2"}, {"left_act", {{{0}}, {{1}}}}, {"right_act", {{{1}}, {{0}}}}}},
      {"k_gf3_regular", {{"regular", "k_gf3"}}},
  };
  j["extensions"] = {
      {"dual", {{"base", "k"}, {"bimodule", "k_regular"}}},
      {"triangular", {{"base", "k2"}, {"bimodule", "corner"}}},
      {"dual_gf3", {{"base", "k_gf3"}, {"bimodule", "k_gf3_regular"}}},
  };
  j["contexts"] = {
      {"nakayama4", {{"a", "k"}, {"b", "k"}, {"u", "k_regular"}, {"v", "k_regular"}}},
      {"a2_context", {{"a", "k"}, {"b", "k"}, {"u", "k_regular"}, {"v", "k_zero"}}},
  };
  j["modules"] = {
      {"k_simple", {{"algebra", "k"}, {"act", {{{1}}}}}},
      {"D_simple", {{"algebra", "D"}, {"act", {{{1}}, {{0}}}}}},
      {"A2_S1", {{"algebra", "A2"}, {"act", {{{1}}, {{0}}, {{0}}}}}},
      {"A2_regular_right", {{"algebra", "A2"}, {"side", "right"}, {"regular", true}}},
  };
  j["instances"] = {
      {"dual_regular_pair", {{"kind", "pair"}, {"extension", "dual"}, {"module", {{"regular", true}}}}},
      {"dual_regular_copair", {{"kind", "copair"}, {"extension", "dual"}, {"module", {{"regular", true}}}}},
      {"dual_gf3_regular_pair", {{"kind", "pair"}, {"extension", "dual_gf3"}, {"module", {{"regular", true}}}}},
      {"Zk_pair_over_dual", {{"kind", "pair"}, {"extension", "dual"}, {"functor", "Z"}, {"x", "k_simple"}}},
      {"Zk_copair_over_dual", {{"kind", "copair"}, {"extension", "dual"}, {"functor", "Z"}, {"y", "k_simple"}}},
      {"Hk_over_dual", {{"kind", "copair"}, {"extension", "dual"}, {"functor", "H"}, {"y", "k_simple"}}},
      {"triangular_pairs", sweep("pair", "extension", "triangular", 4, 2)},
      {"triangular_copairs", sweep("copair", "extension", "triangular", 4, 2)},
      {"triangular_right_pairs", sweep("right_pair", "extension", "triangular", 4, 2)},
      {"a2_tuples", sweep("tuple", "context", "a2_context", 4, 2)},
      {"a2_cotuples", sweep("cotuple", "context", "a2_context", 4, 2)},
      {"a2_right_tuples", sweep("right_tuple", "context", "a2_context", 4, 2)},
      {"nakayama4_tuples", sweep("tuple", "context", "nakayama4", 3, 2)},
      {"nakayama4_regular_tuple", {{"kind", "tuple"}, {"context", "nakayama4"}, {"module", {{"regular", true}}}}},
  };
  return j;
}

}  // namespace tx
