#include <cmath>
#include <filesystem>
#include <random>
#include <string>

#include "doctest.h"
#include "posetsys/corpus.hpp"
#include "posetsys/errors.hpp"
#include "posetsys/io.hpp"
#include "support.hpp"

namespace posetsys {
namespace {

const char* kSmall = R"({
  "poset": {"p": 2, "edges": [[1, 2]]},
  "partitions": {"n": [1, 1], "m": [1, 1], "r": [1, 1]},
  "A": [[0, 0], [1, 0]],
  "B": [["1/2", 0], [0, "0.25"]],
  "C": [[1, 0], ["-3", 1]],
  "x0": [1, "-1/2"]
})";

std::string with_replaced(std::string text, const std::string& from, const std::string& to) {
  text.replace(text.find(from), from.size(), to);
  return text;
}

TEST_CASE("parse a small system") {
  const PosetCausalSystem sys = parse_system(kSmall);
  CHECK(sys.p() == 2);
  CHECK(sys.poset.geq(1, 2));
  CHECK_FALSE(sys.poset.geq(2, 1));
  CHECK(sys.B.entries()(0, 0) == Rational(1, 2));
  CHECK(sys.B.entries()(1, 1) == Rational(1, 4));
  CHECK(sys.C.entries()(1, 0) == Rational(-3));
  CHECK(sys.D.entries().isZero());
  REQUIRE(sys.x0.has_value());
  CHECK((*sys.x0)(1) == Rational(-1, 2));
  CHECK(parse_system(write_system(sys)) == sys);
  CHECK(write_system(parse_system(write_system(sys))) == write_system(sys));
}

TEST_CASE("missing partitions and matrices default to empty and zero") {
  const PosetCausalSystem sys = parse_system(R"({"poset": {"p": 3}})");
  CHECK(sys.p() == 3);
  CHECK(sys.n().total() == 0);
  CHECK(sys.m().total() == 0);
  CHECK(validate(sys).ok);
  const PosetCausalSystem zeros =
      parse_system(R"({"poset": {"p": 1}, "partitions": {"n": [2], "m": [1], "r": [0]}})");
  CHECK(zeros.A.entries().isZero());
  CHECK(zeros.B.rows() == 2);
  CHECK(zeros.C.rows() == 0);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_system("{"), ParseError);
  CHECK_THROWS_AS(parse_system("[1, 2]"), ParseError);
  CHECK_THROWS_AS(parse_system(R"({"partitions": {}})"), ParseError);
  CHECK_THROWS_AS(parse_system(with_replaced(kSmall, "\"1/2\"", "\"1/0\"")), ParseError);
  CHECK_THROWS_AS(parse_system(with_replaced(kSmall, "\"1/2\"", "0.5")), ParseError);
  CHECK_THROWS_AS(parse_system(with_replaced(kSmall, "\"1/2\"", "\"abc\"")), ParseError);
  CHECK_THROWS_AS(parse_system(with_replaced(kSmall, "\"x0\"", "\"y0\"")), ParseError);
  CHECK_THROWS_AS(parse_system(with_replaced(kSmall, "[[1, 2]]", "[[1, 3]]")), ParseError);
  CHECK_THROWS_AS(parse_system(with_replaced(kSmall, "[[1, 2]]", "[[1, 2], [2, 1]]")),
                  CycleError);
  CHECK_THROWS_AS(parse_system(with_replaced(kSmall, "[[0, 0], [1, 0]]", "[[0, 0]]")),
                  ShapeMismatch);
  CHECK_THROWS_AS(parse_system(with_replaced(kSmall, "[[0, 0], [1, 0]]", "[[0, 0], [1]]")),
                  ShapeMismatch);
  CHECK_THROWS_AS(parse_system(with_replaced(kSmall, "\"n\": [1, 1]", "\"n\": [1]")),
                  ShapeMismatch);
  CHECK_THROWS_AS(parse_system(with_replaced(kSmall, "[1, \"-1/2\"]", "[1]")), ShapeMismatch);
  CHECK_THROWS_AS(read_file("/nonexistent/dir/file.json"), IoError);
}

TEST_CASE("structure violations parse but do not validate") {
  const PosetCausalSystem sys = parse_system(with_replaced(kSmall, "[[0, 0], [1, 0]]",
                                                           "[[0, 7], [1, 0]]"));
  const ValidationReport report = validate(sys);
  CHECK_FALSE(report.ok);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].matrix == "A");
  CHECK(report.violations[0].i == 1);
  CHECK(report.violations[0].j == 2);
}

TEST_CASE("file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "posetsys_io_round_trip.json";
  const PosetCausalSystem sys = testing::large_example();
  write_file(path.string(), write_system(sys));
  CHECK(load_system(path.string()) == sys);
  std::filesystem::remove(path);
}

TEST_CASE("random systems round trip through the canonical form") {
  std::mt19937_64 rng(111);
  for (int t = 0; t < 50; ++t) {
    const Poset P = testing::random_poset(1 + t % 5, 0.5, rng);
    PosetCausalSystem sys = testing::random_system(P, {}, rng);
    sys.A = QBlockMatrix(QMatrix(sys.A.entries() / Rational(3)), sys.n(), sys.n());
    const std::string text = write_system(sys);
    CHECK(parse_system(text) == sys);
    CHECK(write_system(parse_system(text)) == text);
  }
}

TEST_CASE("corpus files are canonical and match the embedded copies") {
  const std::filesystem::path dir(POSETSYS_CORPUS_DIR);
  REQUIRE(corpus().size() == 13);
  for (const CorpusEntry& entry : corpus()) {
    INFO(entry.name);
    const std::string on_disk = read_file((dir / (entry.name + ".json")).string());
    CHECK(on_disk == entry.json);
    const PosetCausalSystem sys = parse_system(on_disk);
    CHECK(write_system(sys) == on_disk);
    CHECK(validate(sys).ok);
    CHECK_FALSE(entry.description.empty());
  }
  CHECK_THROWS_AS(corpus_entry("noSuchEntry"), IoError);
}

TEST_CASE("corpus systems equal the hand-entered examples") {
  auto load = [](const char* name) { return parse_system(corpus_entry(name).json); };
  CHECK(load("exLargeEx") == testing::large_example());
  CHECK(load("exObsEx") == testing::obs_example());
  CHECK(load("twoNodeHat") == testing::two_node_hat());
  CHECK(load("chainPlacement") == testing::chain_placement());
  CHECK(load("exNonOpt") == testing::non_optimal());
  CHECK(load("fourNodePoset").poset == testing::four_node_poset());
  for (int k = 1; k <= 6; ++k) {
    CHECK(load(("posetP" + std::to_string(k)).c_str()).poset == testing::poset_p(k));
  }
}

TEST_CASE("signal tables") {
  const SignalTable table = parse_signal_table("# t u1 u2\n0, 1, 2\n\n0.5\t3 4\n1.0;5;6\n");
  REQUIRE(table.times.size() == 3);
  CHECK(table.times[1] == 0.5);
  CHECK(table.values[2](1) == 6.0);

  const InputSignal u = make_input(table, 2, std::nullopt, std::nullopt);
  CHECK(u.h == 0.5);
  CHECK(u.steps() == 3);
  const InputSignal held = make_input(table, 2, 0.1, 5);
  CHECK(held.h == 0.1);
  REQUIRE(held.steps() == 5);
  CHECK(held.values[4] == held.values[2]);

  CHECK_THROWS_AS(make_input(table, 3, std::nullopt, std::nullopt), DimensionMismatch);
  CHECK_THROWS_AS(make_input(parse_signal_table("0 1\n"), 1, std::nullopt, std::nullopt),
                  ParseError);
  CHECK(make_input(parse_signal_table("0 1\n"), 1, 0.2, std::nullopt).steps() == 1);
  CHECK_THROWS_AS(make_input(table, 2, -1.0, std::nullopt), ParseError);
  CHECK_THROWS_AS(make_input(SignalTable{}, 2, 0.1, 3), ParseError);
  CHECK_THROWS_AS(parse_signal_table("0 1 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_signal_table("0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_signal_table("0 nan\n"), ParseError);
}

TEST_CASE("trajectory output") {
  Trajectory tr;
  tr.h = 0.5;
  tr.states = {Eigen::Vector2d(1, 2), Eigen::Vector2d(3, 4)};
  tr.outputs = {Eigen::VectorXd::Constant(1, 7.0)};
  CHECK(write_trajectory(tr) == "0 1 2 7\n0.5 3 4 nan\n");
}

TEST_CASE("JSON entries") {
  CHECK(json_entry(Rational(3)) == "3");
  CHECK(json_entry(Rational(-2)) == "-2");
  CHECK(json_entry(Rational(1, 2)) == "\"1/2\"");
  CHECK(json_entry(Rational(-5, 3)) == "\"-5/3\"");
}

}  // namespace
}  // namespace posetsys
