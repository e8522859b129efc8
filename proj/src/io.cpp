#include "posetsys/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "posetsys/errors.hpp"

namespace posetsys {
namespace {

using nlohmann::json;

Rational parse_entry(const json& e, const std::string& where) {
  if (e.is_number_integer()) {
    return e.is_number_unsigned() ? Rational(e.get<std::uint64_t>())
                                  : Rational(e.get<std::int64_t>());
  }
  if (e.is_string()) {
    try {
      return parse_rational(e.get<std::string>());
    } catch (const ParseError& err) {
      throw ParseError(where + ": " + err.what());
    }
  }
  if (e.is_number_float()) {
    throw ParseError(where + ": non-integer JSON number; write it as a string such as "
                             "\"0.5\" or \"1/2\"");
  }
  throw ParseError(where + ": expected an integer or a rational string");
}

const json* member(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::vector<Index> parse_sizes(const json* arr, int p, const char* name) {
  if (arr == nullptr) return std::vector<Index>(p, 0);
  if (!arr->is_array()) throw ParseError(std::string("partitions.") + name + " must be an array");
  std::vector<Index> out;
  for (const json& e : *arr) {
    if (!e.is_number_integer() || e.get<std::int64_t>() < 0) {
      throw ParseError(std::string("partitions.") + name +
                       " must hold non-negative integers");
    }
    out.push_back(e.get<Index>());
  }
  return out;
}

QMatrix parse_matrix(const json* m, Index rows, Index cols, const char* name) {
  if (m == nullptr) return QMatrix::Zero(rows, cols);
  if (!m->is_array()) throw ParseError(std::string(name) + " must be an array of rows");
  if (static_cast<Index>(m->size()) != rows) {
    throw ShapeMismatch(std::string(name) + " has " + std::to_string(m->size()) +
                        " rows, expected " + std::to_string(rows));
  }
  QMatrix out(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& row = (*m)[i];
    if (!row.is_array()) throw ParseError(std::string(name) + " row is not an array");
    if (static_cast<Index>(row.size()) != cols) {
      throw ShapeMismatch(std::string(name) + " row " + std::to_string(i + 1) + " has " +
                          std::to_string(row.size()) + " entries, expected " +
                          std::to_string(cols));
    }
    for (Index j = 0; j < cols; ++j) {
      out(i, j) = parse_entry(row[j], std::string(name) + "[" + std::to_string(i + 1) +
                                          "][" + std::to_string(j + 1) + "]");
    }
  }
  return out;
}

std::string join_sizes(const Partition& part) {
  std::string out = "[";
  for (std::size_t k = 0; k < part.sizes().size(); ++k) {
    out += (k ? ", " : "") + std::to_string(part.sizes()[k]);
  }
  return out + "]";
}

std::string write_matrix(const QMatrix& m) {
  if (m.rows() == 0) return "[]";
  std::string out = "[\n";
  for (Index i = 0; i < m.rows(); ++i) {
    out += "    [";
    for (Index j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + json_entry(m(i, j));
    out += i + 1 < m.rows() ? "],\n" : "]\n";
  }
  return out + "  ]";
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

std::string json_entry(const Rational& q) {
  if (denominator(q) == 1 && abs(numerator(q)) <= std::numeric_limits<std::int64_t>::max()) {
    return numerator(q).str();
  }
  return "\"" + to_string(q) + "\"";
}

PosetCausalSystem parse_system(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("system file must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    static const char* known[] = {"poset", "partitions", "A", "B", "C", "D", "x0"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw ParseError("unknown field \"" + key + "\"");
    }
  }
  const json* poset = member(doc, "poset");
  if (poset == nullptr || !poset->is_object()) throw ParseError("missing object \"poset\"");
  const json* pj = member(*poset, "p");
  if (pj == nullptr || !pj->is_number_integer() || pj->get<std::int64_t>() < 0) {
    throw ParseError("poset.p must be a non-negative integer");
  }
  const int p = pj->get<int>();
  std::vector<Edge> edges;
  if (const json* ej = member(*poset, "edges")) {
    if (!ej->is_array()) throw ParseError("poset.edges must be an array");
    for (const json& e : *ej) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw ParseError("each edge must be a pair [j, i] of integers");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  Poset P;
  try {
    P = build_poset(p, edges);
  } catch (const IndexOutOfRange& e) {
    throw ParseError(e.what());
  }

  const json* parts = member(doc, "partitions");
  if (parts != nullptr && !parts->is_object()) throw ParseError("partitions must be an object");
  const json empty = json::object();
  const json& pr = parts ? *parts : empty;
  const Partition n(parse_sizes(member(pr, "n"), p, "n"));
  const Partition m(parse_sizes(member(pr, "m"), p, "m"));
  const Partition r(parse_sizes(member(pr, "r"), p, "r"));
  for (const auto* part : {&n, &m, &r}) {
    if (part->parts() != p) {
      throw ShapeMismatch("partitions must have " + std::to_string(p) + " entries");
    }
  }
  QMatrix A = parse_matrix(member(doc, "A"), n.total(), n.total(), "A");
  QMatrix B = parse_matrix(member(doc, "B"), n.total(), m.total(), "B");
  QMatrix C = parse_matrix(member(doc, "C"), r.total(), n.total(), "C");
  QMatrix D = parse_matrix(member(doc, "D"), r.total(), m.total(), "D");
  std::optional<QVector> x0;
  if (const json* xj = member(doc, "x0")) {
    if (!xj->is_array()) throw ParseError("x0 must be an array");
    if (static_cast<Index>(xj->size()) != n.total()) {
      throw ShapeMismatch("x0 has " + std::to_string(xj->size()) + " entries, expected " +
                          std::to_string(n.total()));
    }
    QVector v(n.total());
    for (Index k = 0; k < n.total(); ++k) {
      v(k) = parse_entry((*xj)[k], "x0[" + std::to_string(k + 1) + "]");
    }
    x0 = std::move(v);
  }
  return make_system(std::move(P), n, m, r, std::move(A), std::move(B), std::move(C),
                     std::move(D), std::move(x0));
}

PosetCausalSystem load_system(const std::string& path) { return parse_system(read_file(path)); }

std::string write_system(const PosetCausalSystem& sys) {
  std::string edges = "[";
  const std::vector<Edge> hasse = hasse_edges(sys.poset);
  for (std::size_t k = 0; k < hasse.size(); ++k) {
    edges += (k ? ", [" : "[") + std::to_string(hasse[k].first) + ", " +
             std::to_string(hasse[k].second) + "]";
  }
  edges += "]";
  std::string out = "{\n";
  out += "  \"poset\": {\"p\": " + std::to_string(sys.p()) + ", \"edges\": " + edges + "},\n";
  out += "  \"partitions\": {\"n\": " + join_sizes(sys.n()) + ", \"m\": " +
         join_sizes(sys.m()) + ", \"r\": " + join_sizes(sys.r()) + "},\n";
  out += "  \"A\": " + write_matrix(sys.A.entries()) + ",\n";
  out += "  \"B\": " + write_matrix(sys.B.entries()) + ",\n";
  out += "  \"C\": " + write_matrix(sys.C.entries()) + ",\n";
  out += "  \"D\": " + write_matrix(sys.D.entries());
  if (sys.x0) {
    out += ",\n  \"x0\": [";
    for (Index k = 0; k < sys.x0->size(); ++k) out += (k ? ", " : "") + json_entry((*sys.x0)(k));
    out += "]";
  }
  return out + "\n}\n";
}

SignalTable parse_signal_table(const std::string& text) {
  SignalTable table;
  std::istringstream lines(text);
  std::string line;
  std::size_t width = 0;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    for (char& c : line) {
      if (c == ',' || c == ';' || c == '\t') c = ' ';
    }
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first[0] == '#') continue;
    std::vector<double> row;
    for (std::string f = first;;) {
      std::size_t used = 0;
      double v;
      try {
        v = std::stod(f, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != f.size() || !std::isfinite(v)) {
        throw ParseError("signal line " + std::to_string(lineno) + ": bad number \"" + f + "\"");
      }
      row.push_back(v);
      if (!(fields >> f)) break;
    }
    if (width == 0) width = row.size();
    if (row.size() != width) {
      throw ParseError("signal line " + std::to_string(lineno) + " has " +
                       std::to_string(row.size()) + " columns, expected " +
                       std::to_string(width));
    }
    table.times.push_back(row[0]);
    table.values.push_back(Eigen::Map<Eigen::VectorXd>(row.data() + 1,
                                                       static_cast<Index>(row.size() - 1)));
  }
  return table;
}

InputSignal make_input(const SignalTable& table, Index inputs, std::optional<double> h,
                       std::optional<Index> steps) {
  for (const Eigen::VectorXd& v : table.values) {
    if (v.size() != inputs) {
      throw DimensionMismatch("signal rows have " + std::to_string(v.size()) +
                              " components, the system has " + std::to_string(inputs) +
                              " inputs");
    }
  }
  InputSignal u;
  if (h) {
    u.h = *h;
  } else if (table.times.size() >= 2) {
    u.h = table.times[1] - table.times[0];
  } else {
    throw ParseError("cannot infer the step h from fewer than two rows; pass --h");
  }
  if (!(u.h > 0) || !std::isfinite(u.h)) throw ParseError("step h must be positive");
  const Index count = steps.value_or(static_cast<Index>(table.values.size()));
  if (count > 0 && table.values.empty()) throw ParseError("signal file has no rows");
  for (Index k = 0; k < count; ++k) {
    const std::size_t row = std::min<std::size_t>(k, table.values.size() - 1);
    u.values.push_back(table.values[row]);
  }
  return u;
}

std::string write_trajectory(const Trajectory& tr) {
  std::string out;
  char buf[64];
  auto put = [&](double v) {
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
  };
  for (std::size_t k = 0; k < tr.states.size(); ++k) {
    put(static_cast<double>(k) * tr.h);
    for (Index i = 0; i < tr.states[k].size(); ++i) {
      out += ' ';
      put(tr.states[k](i));
    }
    if (k < tr.outputs.size()) {
      for (Index i = 0; i < tr.outputs[k].size(); ++i) {
        out += ' ';
        put(tr.outputs[k](i));
      }
    } else if (!tr.outputs.empty()) {
      for (Index i = 0; i < tr.outputs.front().size(); ++i) out += " nan";
    }
    out += '\n';
  }
  return out;
}

}  // namespace posetsys
