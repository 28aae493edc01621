// Workspace files: named algebras, bimodules, modules, trivial extensions,
// Morita contexts and instances (pairs, copairs, tuples and sweeps), stored
// as JSON with integer entries only.  Commands run against a loaded
// workspace and produce JSON reports.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tx/morita.hpp"

namespace tx {

inline constexpr int kSchemaVersion = 1;

// Parse and validation failures; the message names the entity.
class WorkspaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InstanceKind { Pair, Copair, RightPair, Tuple, Cotuple, RightTuple };
std::string to_string(InstanceKind k);
std::optional<InstanceKind> parse_instance_kind(const std::string& s);

// Every module of total dimension <= max_dim over the extension (or the
// Morita ring) up to isomorphism, presented as `of`.
struct Sweep {
  InstanceKind of = InstanceKind::Pair;
  std::size_t max_dim = 0;
  std::size_t vertices = 1;
};

struct Instance {
  InstanceKind kind = InstanceKind::Pair;  // `of` for sweeps
  std::string owner;                       // extension or context name
  std::variant<PairModule, CopairModule, RightPairModule, TupleModule, CotupleModule, RightTupleModule, Sweep> data;
  bool is_sweep() const { return std::holds_alternative<Sweep>(data); }
};

struct NamedBimodule {
  std::string left, right;
  Bimodule bimodule;
};
struct NamedModule {
  std::string algebra;
  bool right = false;
  Module module;  // for right modules, the action matrices over the named algebra
};
struct NamedExtension {
  std::string base, bimodule;
  TrivialExtension extension;
};
struct NamedContext {
  std::string a, b, u, v;
  MoritaRing ring;
};

struct Workspace {
  Elem field = 2;
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, NamedBimodule> bimodules;
  std::map<std::string, NamedModule> modules;
  std::map<std::string, NamedExtension> extensions;
  std::map<std::string, NamedContext> contexts;
  std::map<std::string, Instance> instances;

  std::size_t entity_count() const;
  // Algebras, extension totals and Morita rings by name.
  AlgebraPtr algebra(const std::string& name) const;
};

Workspace load_workspace(const nlohmann::json& j);
Workspace load_workspace_file(const std::string& path);
// Everything written explicitly; reloading yields equal data.
nlohmann::json save_workspace(const Workspace& w);

// The built-in corpus over GF(2) and GF(3).
nlohmann::json builtin_examples();

struct CommandOptions {
  std::optional<std::size_t> bound;   // default: max(10, 2 dim) of the relevant algebra
  std::uint64_t seed = 0;
  std::optional<std::size_t> window;  // default: the bound
  std::optional<std::string> target;  // default: every matching entity, by name
};

// Raised for a target that does not exist or has the wrong kind.
class TargetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
// Raised when a construction needs hypotheses the instance does not satisfy.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// command is one of: validate, check gp|gi|gf, verify cor35|cor45|cor48|
// thm52|thm53|thm54, resolve pair|copair.  The report has no timing field;
// callers add it.
nlohmann::json run_command(const Workspace& w, const std::string& command, const std::string& sub,
                           const CommandOptions& opt);

}  // namespace tx
