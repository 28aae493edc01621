#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "tx/workspace.hpp"

using namespace tx;
using nlohmann::json;

namespace {

json base_workspace() {
  return json{{"schema_version", 1},
              {"field", 2},
              {"algebras", {{"k", {{"catalog", "k"}}}, {"D", {{"catalog", "D"}}}}},
              {"bimodules", {{"k_regular", {{"regular", "k"}}}}},
              {"extensions", {{"dual", {{"base", "k"}, {"bimodule", "k_regular"}}}}}};
}

std::string message_of(const json& j) {
  try {
    load_workspace(j);
  } catch (const WorkspaceError& e) {
    return e.what();
  }
  return "";
}

// A 3-dim unital table with (e1 e1) e1 = e1 and e1 (e1 e1) = 0.
json non_associative_table() {
  std::vector<int> c(27, 0);
  auto set = [&](int i, int j, int k) { c[(i * 3 + j) * 3 + k] = 1; };
  for (int i = 0; i < 3; ++i) set(0, i, i), set(i, 0, i);
  set(1, 1, 2);
  set(2, 1, 1);
  return json{{"dim", 3}, {"constants", c}, {"unit", {1, 0, 0}}};
}

std::string payload(json report) {
  report.erase("timing");
  return report.dump();
}

}  // namespace

TEST(Workspace, BuiltinCorpus) {
  Workspace w = load_workspace(builtin_examples());
  EXPECT_GE(w.instances.size(), 5u);
  EXPECT_EQ(w.extensions.at("triangular").extension.total->dim(), 3u);
  EXPECT_EQ(w.contexts.at("nakayama4").ring.lambda->dim(), 4u);
  EXPECT_TRUE(w.contexts.at("nakayama4").ring.iso_valid);
  EXPECT_EQ(w.algebra("k_gf3")->field().p(), 3);
  EXPECT_EQ(w.algebra("D")->field().p(), 2);
  EXPECT_EQ(w.algebra("dual")->dim(), 2u);
  EXPECT_EQ(w.algebra("a2_context")->dim(), 3u);
  EXPECT_TRUE(w.instances.at("triangular_pairs").is_sweep());
  EXPECT_FALSE(w.instances.at("dual_regular_pair").is_sweep());
}

TEST(Workspace, EmptyLoads) {
  Workspace w = load_workspace(json{{"schema_version", 1}});
  EXPECT_EQ(w.entity_count(), 0u);
  EXPECT_EQ(load_workspace(json::object()).entity_count(), 0u);
}

TEST(Workspace, AlgebraForms) {
  json j = base_workspace();
  j["algebras"]["cyc"] = {{"quiver", {{"vertices", 2}, {"arrows", {{0, 1}, {1, 0}}}, {"relations", {{0, 1}, {1, 0}}}}}};
  j["algebras"]["kk"] = {{"product", {"k", "k"}}};
  j["algebras"]["Dop"] = {{"opposite", "D"}};
  j["algebras"]["D3"] = {{"catalog", "D"}, {"field", 3}};
  Workspace w = load_workspace(j);
  EXPECT_EQ(w.algebra("cyc")->dim(), 4u);
  EXPECT_EQ(w.algebra("kk")->dim(), 2u);
  EXPECT_EQ(w.algebra("Dop")->dim(), 2u);
  EXPECT_EQ(w.algebra("D3")->field().p(), 3);
}

TEST(Workspace, ExplicitComponents) {
  json j = base_workspace();
  j["modules"]["k_simple"] = {{"algebra", "k"}, {"act", {{{1}}}}};
  j["bimodules"]["k_zero"] = {{"zero", {"k", "k"}}};
  j["contexts"]["tri"] = {{"a", "k"}, {"b", "k"}, {"u", "k_regular"}, {"v", "k_zero"}};
  j["instances"]["p"] = {{"kind", "pair"}, {"extension", "dual"}, {"x", "k_simple"}, {"alpha", {{0}}}};
  j["instances"]["c"] = {{"kind", "copair"}, {"extension", "dual"}, {"y", {{"act", {{{1}}}}}}, {"beta", {{0}}}};
  j["instances"]["t"] = {{"kind", "tuple"}, {"context", "tri"}, {"x", "k_simple"}, {"y", "k_simple"},
                         {"f", {{1}}}, {"g", json::array({json::array()})}};
  Workspace w = load_workspace(j);
  EXPECT_EQ(w.instances.size(), 3u);
  const auto& t = std::get<TupleModule>(w.instances.at("t").data);
  EXPECT_EQ(t.f, Matrix::identity(Field(2), 1));
}

TEST(Workspace, ErrorsNameTheEntity) {
  json j = base_workspace();
  j["algebras"]["bad"] = non_associative_table();
  std::string m = message_of(j);
  EXPECT_NE(m.find("'bad'"), std::string::npos) << m;
  EXPECT_NE(m.find("(1,1,1)"), std::string::npos) << m;

  j = base_workspace();
  j["instances"]["p"] = {{"kind", "pair"}, {"extension", "dual"}, {"x", {{"act", {{{1}}}}}}, {"alpha", {{1}}}};
  m = message_of(j);
  EXPECT_NE(m.find("'p'"), std::string::npos) << m;

  j = base_workspace();
  j["extensions"]["e"] = {{"base", "nope"}, {"bimodule", "k_regular"}};
  EXPECT_NE(message_of(j).find("nope"), std::string::npos);

  j = base_workspace();
  j["algebras"]["loop"] = {{"opposite", "loop"}};
  EXPECT_NE(message_of(j).find("loop"), std::string::npos);

  j = base_workspace();
  j["schema_version"] = 2;
  EXPECT_FALSE(message_of(j).empty());

  j = base_workspace();
  j["modules"]["m"] = {{"algebra", "D"}, {"act", {{{1}}}}};
  EXPECT_NE(message_of(j).find("'m'"), std::string::npos);
}

TEST(Workspace, RoundTrip) {
  Workspace w = load_workspace(builtin_examples());
  json saved = save_workspace(w);
  Workspace w2 = load_workspace(saved);
  EXPECT_EQ(save_workspace(w2), saved);
  ASSERT_EQ(w2.algebras.size(), w.algebras.size());
  for (const auto& [n, a] : w.algebras) {
    EXPECT_EQ(w2.algebras.at(n)->constants(), a->constants()) << n;
    EXPECT_EQ(w2.algebras.at(n)->field(), a->field()) << n;
  }
  for (const auto& [n, m] : w.modules) EXPECT_EQ(w2.modules.at(n).module.act, m.module.act) << n;
  for (const auto& [n, x] : w.extensions)
    EXPECT_EQ(w2.extensions.at(n).extension.total->constants(), x.extension.total->constants()) << n;
  for (const auto& [n, in] : w.instances) {
    const Instance& in2 = w2.instances.at(n);
    EXPECT_EQ(in2.kind, in.kind) << n;
    EXPECT_EQ(in2.owner, in.owner) << n;
    EXPECT_EQ(in2.data.index(), in.data.index()) << n;
    if (const auto* p = std::get_if<PairModule>(&in.data)) {
      EXPECT_EQ(std::get<PairModule>(in2.data).alpha, p->alpha) << n;
      EXPECT_EQ(std::get<PairModule>(in2.data).x.act, p->x.act) << n;
    }
    if (const auto* c = std::get_if<CopairModule>(&in.data))
      EXPECT_EQ(std::get<CopairModule>(in2.data).beta, c->beta) << n;
    if (const auto* t = std::get_if<TupleModule>(&in.data)) {
      EXPECT_EQ(std::get<TupleModule>(in2.data).f, t->f) << n;
      EXPECT_EQ(std::get<TupleModule>(in2.data).g, t->g) << n;
    }
  }
}

TEST(Commands, CheckGpOnRegularPair) {
  Workspace w = load_workspace(builtin_examples());
  CommandOptions opt;
  opt.target = "dual_regular_pair";
  json r = run_command(w, "check", "gp", opt);
  ASSERT_EQ(r["results"].size(), 1u);
  EXPECT_EQ(r["results"][0]["verdict"]["answer"], "CertifiedYes");
  EXPECT_EQ(r["schema_version"], kSchemaVersion);
  EXPECT_EQ(r["command"], "check gp");

  opt.target = "A2_S1";
  r = run_command(w, "check", "gp", opt);
  EXPECT_EQ(r["results"][0]["verdict"]["answer"], "CertifiedNo");
  EXPECT_EQ(r["results"][0]["verdict"]["ext_index"], 1);
}

TEST(Commands, TargetErrors) {
  Workspace w = load_workspace(builtin_examples());
  CommandOptions opt;
  opt.target = "nope";
  EXPECT_THROW(run_command(w, "check", "gp", opt), TargetError);
  EXPECT_THROW(run_command(w, "verify", "cor35", opt), TargetError);
  opt.target = "dual_regular_pair";
  EXPECT_THROW(run_command(w, "verify", "cor45", opt), TargetError);
  EXPECT_THROW(run_command(w, "check", "gf", opt), TargetError);
  EXPECT_THROW(run_command(w, "check", "gx", {}), TargetError);
  EXPECT_THROW(run_command(w, "frobnicate", "", {}), TargetError);
  opt.target = "Zk_pair_over_dual";
  EXPECT_THROW(run_command(w, "resolve", "pair", opt), HypothesisError);
}

TEST(Commands, VerifySweepTable) {
  Workspace w = load_workspace(builtin_examples());
  CommandOptions opt;
  opt.target = "triangular_pairs";
  json r = run_command(w, "verify", "cor35", opt);
  const json& rep = r["results"][0]["report"];
  EXPECT_EQ(rep["count"], 21);
  EXPECT_EQ(rep["summary"]["agree"], 21);
  EXPECT_EQ(rep["summary"]["consistent"], 21);

  opt.target = "Zk_pair_over_dual";
  r = run_command(w, "verify", "cor35", opt);
  const json& z = r["results"][0]["report"];
  EXPECT_EQ(z["lhs"]["answer"], "CertifiedYes");
  EXPECT_FALSE(z["middle_exact"].get<bool>());
  EXPECT_FALSE(z["agree"].get<bool>());
  EXPECT_TRUE(z["consistent"].get<bool>());
  EXPECT_EQ(z["zr_report"]["via"], "None");
}

TEST(Commands, Deterministic) {
  json corpus = builtin_examples();
  for (auto [cmd, sub] : std::vector<std::pair<std::string, std::string>>{
           {"validate", ""}, {"check", "gp"}, {"check", "gi"}, {"check", "gf"}, {"verify", "cor35"},
           {"verify", "cor45"}, {"verify", "thm52"}, {"resolve", "pair"}, {"resolve", "copair"}}) {
    CommandOptions opt;
    opt.seed = 7;
    std::string a = payload(run_command(load_workspace(corpus), cmd, sub, opt));
    std::string b = payload(run_command(load_workspace(corpus), cmd, sub, opt));
    EXPECT_EQ(a, b) << cmd << " " << sub;
  }
}

TEST(Cli, ExitCodes) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "txw_cli_test";
  fs::create_directories(dir);
  std::string txw = TXW_PATH;
  std::string corpus = (dir / "corpus.json").string();
  std::string out = (dir / "out.json").string();
  auto run = [](const std::string& c) {
    int s = std::system((c + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  ASSERT_EQ(run(txw + " examples emit --out " + corpus), 0);
  EXPECT_EQ(run(txw + " validate " + corpus), 0);
  EXPECT_EQ(run(txw + " check gp " + corpus + " --target dual_regular_pair --out " + out), 0);
  json r = json::parse(std::ifstream(out));
  EXPECT_EQ(r["results"][0]["verdict"]["answer"], "CertifiedYes");
  EXPECT_TRUE(r.contains("timing"));
  EXPECT_EQ(run(txw + " check gp " + corpus + " --target nope"), 2);
  EXPECT_EQ(run(txw + " resolve pair " + corpus + " --target Zk_pair_over_dual"), 3);

  json bad = base_workspace();
  bad["algebras"]["bad"] = non_associative_table();
  std::string bad_path = (dir / "bad.json").string();
  std::ofstream(bad_path) << bad.dump();
  EXPECT_EQ(run(txw + " validate " + bad_path), 1);
  std::ofstream(bad_path) << "{ not json";
  EXPECT_EQ(run(txw + " validate " + bad_path), 1);
  fs::remove_all(dir);
}
