#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetsys/sim.hpp"
#include "posetsys/system.hpp"

// System file (JSON):
//   {"poset": {"p": 2, "edges": [[1, 2]]},
//    "partitions": {"n": [1, 1], "m": [1, 1], "r": [1, 1]},
//    "A": [[0, 0], [1, 0]], "B": ..., "C": ..., "D": ..., "x0": [1, "-1/2"]}
// [j, i] in edges means j ⪰ i. Entries are JSON integers or strings holding
// an integer, a decimal ("0.25", "1e-3") or a fraction ("a/b"). Missing
// partitions are all zero, missing matrices are zero, x0 is optional.
namespace posetsys {

std::string read_file(const std::string& path);  // IoError
void write_file(const std::string& path, const std::string& text);

// ParseError for malformed documents or entries, ShapeMismatch when
// matrices do not fit the partitions.
PosetCausalSystem parse_system(const std::string& json_text);
PosetCausalSystem load_system(const std::string& path);

// Canonical form: fixed key order, one matrix row per line, integers as
// JSON numbers and other rationals as "a/b" strings.
std::string write_system(const PosetCausalSystem& sys);

// Signal file: one row per step, "t u_1 ... u_m" separated by whitespace or
// commas; blank lines and lines starting with '#' are skipped. The step
// h is t_1 - t_0 unless given explicitly.
struct SignalTable {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> values;
};
SignalTable parse_signal_table(const std::string& text);

// Builds an input of `steps` steps (default: one per row) holding the last
// row when steps exceed the table. Throws DimensionMismatch if rows do not
// have `inputs` components and ParseError if h cannot be determined.
InputSignal make_input(const SignalTable& table, Index inputs, std::optional<double> h,
                       std::optional<Index> steps);

// Rows "t x_1 ... x_n y_1 ... y_r" for k = 0..T. The input is undefined at
// t = Th, so the outputs of the last row are written as nan.
std::string write_trajectory(const Trajectory& tr);

std::string json_entry(const Rational& q);

}  // namespace posetsys
