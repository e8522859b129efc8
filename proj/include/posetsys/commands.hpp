#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "posetsys/system.hpp"

// Command implementations behind the posetsys executable. Each returns the
// process exit code: 0 success, 1 validation or analysis mismatch, 2 I/O or
// parse error. A path of the form "corpus:<name>" reads the embedded copy of
// a corpus file.
namespace posetsys {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInputError = 2 };

PosetCausalSystem load_system_or_corpus(const std::string& path);

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);

int cmd_analyze(const std::string& path, bool json, bool skip_duality, std::ostream& out,
                std::ostream& err);

// An empty out_path writes the system file to `out`.
int cmd_dual(const std::string& path, const std::string& out_path, std::ostream& out,
             std::ostream& err);

int cmd_reduce(const std::string& path, const std::string& variant,
               const std::string& out_path, std::ostream& out, std::ostream& err);

struct SimulateOptions {
  std::string signal_path;  // empty: zero input, needs h and steps
  std::optional<double> h;
  std::optional<Index> steps;
  bool check_lemma = false;
  double tolerance = 1e-8;
  std::string out_path;  // empty: trajectory to `out`
};
int cmd_simulate(const std::string& path, const SimulateOptions& options, std::ostream& out,
                 std::ostream& err);

// An empty name or "all" runs every corpus entry.
int cmd_demo(const std::string& name, std::ostream& out, std::ostream& err);

// Lists the corpus, or prints one embedded file.
int cmd_corpus(const std::string& name, std::ostream& out, std::ostream& err);

}  // namespace posetsys
