#include "posetsys/commands.hpp"

#include <functional>

#include "posetsys/corpus.hpp"
#include "posetsys/demo.hpp"
#include "posetsys/errors.hpp"
#include "posetsys/io.hpp"
#include "posetsys/reduction.hpp"
#include "posetsys/report.hpp"
#include "posetsys/sim.hpp"

namespace posetsys {
namespace {

constexpr std::string_view kCorpusPrefix = "corpus:";

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kInputError;
  } catch (const ShapeMismatch& e) {
    err << "shape error: " << e.what() << "\n";
    return kInputError;
  } catch (const CycleError& e) {
    err << "poset error: " << e.what() << "\n";
    return kInputError;
  } catch (const DimensionMismatch& e) {
    err << "dimension error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  }
}

std::string describe(const BlockViolation& v) {
  return v.matrix + " block (" + std::to_string(v.i) + "," + std::to_string(v.j) +
         ") is nonzero but " + std::to_string(v.j) + " ⋡ " + std::to_string(v.i);
}

// Prints block-level diagnostics; true when the system is valid.
bool report_validation(const PosetCausalSystem& sys, std::ostream& err) {
  const ValidationReport report = validate(sys);
  for (const BlockViolation& v : report.violations) err << describe(v) << "\n";
  return report.ok;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
}

}  // namespace

PosetCausalSystem load_system_or_corpus(const std::string& path) {
  if (path.starts_with(kCorpusPrefix)) {
    return parse_system(corpus_entry(path.substr(kCorpusPrefix.size())).json);
  }
  return load_system(path);
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PosetCausalSystem sys = load_system_or_corpus(path);
    if (!report_validation(sys, err)) return static_cast<int>(kMismatch);
    out << "valid: p = " << sys.p() << ", states " << sys.n().total() << ", inputs "
        << sys.m().total() << ", outputs " << sys.r().total() << "\n";
    return static_cast<int>(kOk);
  });
}

int cmd_analyze(const std::string& path, bool json, bool skip_duality, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const PosetCausalSystem sys = load_system_or_corpus(path);
    if (!report_validation(sys, err)) return static_cast<int>(kMismatch);
    const AnalysisReport report = analyze(sys, !skip_duality);
    out << (json ? render_json(report) : render_text(report));
    if (!consistent(report)) {
      err << "internal cross-checks failed\n";
      return static_cast<int>(kMismatch);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_dual(const std::string& path, const std::string& out_path, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    const PosetCausalSystem sys = load_system_or_corpus(path);
    if (!report_validation(sys, err)) return static_cast<int>(kMismatch);
    emit(write_system(dual_system(sys)), out_path, out);
    return static_cast<int>(kOk);
  });
}

int cmd_reduce(const std::string& path, const std::string& variant,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::optional<ReductionVariant> v = parse_variant(variant);
    if (!v) {
      err << "unknown variant \"" << variant << "\"; use primal, dual-tilde or dual-circ\n";
      return static_cast<int>(kInputError);
    }
    const PosetCausalSystem sys = load_system_or_corpus(path);
    if (!report_validation(sys, err)) return static_cast<int>(kMismatch);
    const ReducedSystem red = poset_reduce(sys, *v);
    emit(write_system(red.reduced), out_path, out);
    std::ostream& log = out_path.empty() ? err : out;
    log << to_string(red.variant) << " reduction: dim " << red.subspace.dim() << " of "
        << sys.n().total() << ", blocks (";
    for (int j = 1; j <= sys.p(); ++j) log << (j > 1 ? ", " : "") << red.blocks[j - 1].dim();
    log << "), moments up to k = " << red.horizon
        << (red.moments_preserved ? " preserved\n" : " NOT preserved\n");
    return static_cast<int>(red.moments_preserved ? kOk : kMismatch);
  });
}

int cmd_simulate(const std::string& path, const SimulateOptions& options, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const PosetCausalSystem sys = load_system_or_corpus(path);
    if (!report_validation(sys, err)) return static_cast<int>(kMismatch);
    InputSignal u;
    if (options.signal_path.empty()) {
      if (!options.h || !options.steps) {
        throw ParseError("without a signal file both --h and --steps are required");
      }
      if (!(*options.h > 0)) throw ParseError("step h must be positive");
      u.h = *options.h;
      u.values.assign(*options.steps, Eigen::VectorXd::Zero(sys.m().total()));
    } else {
      u = make_input(parse_signal_table(read_file(options.signal_path)), sys.m().total(),
                     options.h, options.steps);
    }
    const Eigen::VectorXd x0 =
        sys.x0 ? to_double(*sys.x0) : Eigen::VectorXd::Zero(sys.n().total());
    emit(write_trajectory(simulate(sys, x0, u)), options.out_path, out);
    if (!options.check_lemma) return static_cast<int>(kOk);
    const TrajectoryReport report =
        verify_trajectory_decomposition(sys, x0, u, options.tolerance);
    std::ostream& log = options.out_path.empty() ? err : out;
    for (const IdentityDeviation& d : report.checks) {
      log << (d.passed ? "ok    " : "FAIL  ") << d.name << "  max deviation "
          << d.max_deviation << "\n";
    }
    return static_cast<int>(report.passed ? kOk : kMismatch);
  });
}

int cmd_demo(const std::string& name, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    bool all_passed = true;
    std::size_t ran = 0;
    for (const CorpusEntry& entry : corpus()) {
      if (!name.empty() && name != "all" && entry.name != name) continue;
      const DemoResult result = run_demo(entry);
      out << render_demo(result) << "\n";
      all_passed = all_passed && result.passed();
      ++ran;
    }
    if (ran == 0) throw IoError("no corpus entry named \"" + name + "\"");
    return static_cast<int>(all_passed ? kOk : kMismatch);
  });
}

int cmd_corpus(const std::string& name, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (name.empty()) {
      for (const CorpusEntry& e : corpus()) out << e.name << "  " << e.description << "\n";
    } else {
      out << corpus_entry(name).json;
    }
    return static_cast<int>(kOk);
  });
}

}  // namespace posetsys
