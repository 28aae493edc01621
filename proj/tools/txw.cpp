// Command-line front end: load a workspace, run a check, verification or
// construction, print a JSON report.
#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "tx/workspace.hpp"

namespace {

int emit(const nlohmann::json& j, const std::string& out) {
  std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out);
  if (!f) {
    std::cerr << "txw: cannot write " << out << "\n";
    return 1;
  }
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trivial extension workbench"};
  app.require_subcommand(1);

  std::string path, out, target;
  std::size_t bound = 0, window = 0;
  std::uint64_t seed = 0;
  auto common = [&](CLI::App* c, bool with_window) {
    c->add_option("workspace", path, "workspace file")->required()->check(CLI::ExistingFile);
    c->add_option("--target", target, "entity name (default: every matching entity)");
    c->add_option("--bound", bound, "Ext / dimension bound (default max(10, 2 dim))");
    c->add_option("--seed", seed, "seed for randomized steps");
    if (with_window) c->add_option("--window", window, "resolution window (default: the bound)");
    c->add_option("--out", out, "write the report here instead of standard output");
  };

  auto* validate = app.add_subcommand("validate", "load and validate a workspace");
  common(validate, false);

  std::string check_kind;
  auto* check = app.add_subcommand("check", "Gorenstein projective / injective / flat test");
  check->add_option("test", check_kind, "gp, gi or gf")->required()->check(CLI::IsMember({"gp", "gi", "gf"}));
  common(check, false);

  std::string statement;
  auto* verify = app.add_subcommand("verify", "compare both sides of a characterization");
  verify->add_option("statement", statement, "cor35, cor45, cor48, thm52, thm53 or thm54")
      ->required()
      ->check(CLI::IsMember({"cor35", "cor45", "cor48", "thm52", "thm53", "thm54"}));
  common(verify, false);

  std::string resolve_kind;
  auto* resolve = app.add_subcommand("resolve", "build the lifted complete (co)resolution");
  resolve->add_option("kind", resolve_kind, "pair or copair")->required()->check(CLI::IsMember({"pair", "copair"}));
  common(resolve, true);

  std::string emit_what;
  auto* examples = app.add_subcommand("examples", "built-in example corpus");
  examples->add_option("action", emit_what, "emit")->required()->check(CLI::IsMember({"emit"}));
  examples->add_option("--out", out, "write the corpus here instead of standard output");

  CLI11_PARSE(app, argc, argv);

  if (examples->parsed()) return emit(tx::builtin_examples(), out);

  tx::CommandOptions opt;
  opt.seed = seed;
  if (bound) opt.bound = bound;
  if (window) opt.window = window;
  if (!target.empty()) opt.target = target;

  std::string command, sub;
  if (validate->parsed()) command = "validate";
  if (check->parsed()) command = "check", sub = check_kind;
  if (verify->parsed()) command = "verify", sub = statement;
  if (resolve->parsed()) command = "resolve", sub = resolve_kind;

  try {
    auto start = std::chrono::steady_clock::now();
    tx::Workspace w = tx::load_workspace_file(path);
    nlohmann::json report = tx::run_command(w, command, sub, opt);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report["timing"] = {{"seconds", elapsed.count()}};
    return emit(report, out);
  } catch (const tx::WorkspaceError& e) {
    std::cerr << "txw: invalid workspace: " << e.what() << "\n";
    return 1;
  } catch (const tx::TargetError& e) {
    std::cerr << "txw: " << e.what() << "\n";
    return 2;
  } catch (const tx::HypothesisError& e) {
    std::cerr << "txw: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "txw: internal error: " << e.what() << "\n";
    return 4;
  }
}
