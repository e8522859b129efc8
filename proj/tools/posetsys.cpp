#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "posetsys/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Analysis of poset-causal linear systems in exact arithmetic"};
  app.require_subcommand(1);

  std::string path;
  auto* validate = app.add_subcommand("validate", "Parse and check the block zero pattern");
  validate->add_option("system", path, "System file or corpus:<name>")->required();

  bool json = false, text = false, skip_duality = false;
  auto* analyze = app.add_subcommand("analyze", "Reachability, observability, duality, reduction");
  analyze->add_option("system", path, "System file or corpus:<name>")->required();
  auto* json_flag = analyze->add_flag("--json", json, "Machine-readable report (default)");
  analyze->add_flag("--text", text, "Human-readable report")->excludes(json_flag);
  analyze->add_flag("--skip-duality", skip_duality, "Omit the duality identities");

  std::string out_path;
  auto* dual = app.add_subcommand("dual", "Write the dual system");
  dual->add_option("system", path, "System file or corpus:<name>")->required();
  dual->add_option("-o,--out", out_path, "Output file (default stdout)");

  std::string variant = "primal";
  auto* reduce = app.add_subcommand("reduce", "Structured Kalman-type reduction");
  reduce->add_option("system", path, "System file or corpus:<name>")->required();
  reduce->add_option("--variant", variant, "primal, dual-tilde or dual-circ")
      ->check(CLI::IsMember({"primal", "dual-tilde", "dual-circ", "dual_tilde", "dual_circ"}));
  reduce->add_option("-o,--out", out_path, "Output file (default stdout)");

  posetsys::SimulateOptions sim;
  double h = 0.0;
  posetsys::Index steps = 0;
  auto* simulate = app.add_subcommand("simulate", "Sample-and-hold simulation");
  simulate->set_help_flag("--help", "Print this help message and exit");
  simulate->add_option("system", path, "System file or corpus:<name>")->required();
  simulate->add_option("signal", sim.signal_path, "Input table: t u_1 ... u_m per row");
  auto* h_opt = simulate->add_option("--h", h, "Step size (default from the signal times)");
  auto* steps_opt = simulate->add_option("--steps", steps, "Number of steps")
                        ->check(CLI::NonNegativeNumber);
  simulate->add_flag("--check-lemma", sim.check_lemma,
                     "Check the trajectory decomposition into derived systems");
  simulate->add_option("--tol", sim.tolerance, "Tolerance for --check-lemma");
  simulate->add_option("-o,--out", sim.out_path, "Trajectory file (default stdout)");

  std::string name;
  auto* demo = app.add_subcommand("demo", "Recompute the published quantities of the corpus");
  demo->add_option("name", name, "Corpus entry (default all)");

  auto* corpus = app.add_subcommand("corpus", "List the embedded corpus or print one file");
  corpus->add_option("name", name, "Corpus entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : posetsys::kInputError;
  }

  std::ostream& out = std::cout;
  std::ostream& err = std::cerr;
  if (*validate) return posetsys::cmd_validate(path, out, err);
  if (*analyze) return posetsys::cmd_analyze(path, !text, skip_duality, out, err);
  if (*dual) return posetsys::cmd_dual(path, out_path, out, err);
  if (*reduce) return posetsys::cmd_reduce(path, variant, out_path, out, err);
  if (*simulate) {
    if (*h_opt) sim.h = h;
    if (*steps_opt) sim.steps = steps;
    return posetsys::cmd_simulate(path, sim, out, err);
  }
  if (*demo) return posetsys::cmd_demo(name, out, err);
  return posetsys::cmd_corpus(name, out, err);
}
