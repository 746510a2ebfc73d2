#include "lce/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>

#include "lce/error.hpp"

namespace lce::io {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next non-blank, non-comment line split on whitespace.
  bool next(std::vector<std::string>& tokens) {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      tokens.clear();
      std::istringstream split(text);
      for (std::string token; split >> token;) tokens.push_back(std::move(token));
      if (tokens.empty() || tokens.front()[0] == 'c') continue;
      return true;
    }
    return false;
  }

  std::size_t line() const noexcept { return line_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

  std::int64_t integer(const std::string& token, const char* what) const {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      fail(std::string("expected ") + what + ", got '" + token + "'");
    }
    return value;
  }

  std::size_t count(const std::string& token, const char* what) const {
    std::int64_t value = integer(token, what);
    if (value < 0) fail(std::string(what) + " must be nonnegative");
    return static_cast<std::size_t>(value);
  }

  /// 1-based id in 1..limit, returned 0-based.
  std::uint32_t id(const std::string& token, std::size_t limit, const char* what) const {
    std::int64_t value = integer(token, what);
    if (value < 1 || static_cast<std::size_t>(value) > limit) {
      fail(std::string(what) + " " + token + " outside 1.." + std::to_string(limit));
    }
    return static_cast<std::uint32_t>(value - 1);
  }

  void arity(const std::vector<std::string>& tokens, std::size_t expected) const {
    if (tokens.size() != expected) {
      fail("expected " + std::to_string(expected) + " fields, got " +
           std::to_string(tokens.size()));
    }
  }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::vector<std::string> read_header(LineReader& reader, const char* kind, std::size_t fields) {
  std::vector<std::string> tokens;
  if (!reader.next(tokens)) reader.fail(std::string("missing 'p ") + kind + "' header");
  if (tokens[0] != "p" || tokens.size() < 2 || tokens[1] != kind) {
    reader.fail(std::string("expected 'p ") + kind + "' header");
  }
  reader.arity(tokens, fields);
  return tokens;
}

void expect_count(const LineReader& reader, const char* what, std::size_t declared,
                  std::size_t found) {
  if (declared != found) {
    reader.fail(std::string("header declares ") + std::to_string(declared) + " " + what +
                ", found " + std::to_string(found));
  }
}

void write_ids(std::ostream& out, const std::vector<std::uint32_t>& ids) {
  for (auto id : ids) out << ' ' << id + 1;
}

}  // namespace

const char* to_string(InstanceKind kind) noexcept {
  switch (kind) {
    case InstanceKind::signed_graph: return "sg";
    case InstanceKind::cnf: return "cnf";
    case InstanceKind::set_system: return "ss";
    case InstanceKind::digraph: return "dg";
  }
  return "unknown";
}

InstanceKind detect_kind(std::string_view text) {
  std::istringstream in{std::string(text)};
  LineReader reader(in);
  std::vector<std::string> tokens;
  if (!reader.next(tokens) || tokens[0] != "p" || tokens.size() < 2) {
    reader.fail("missing 'p' header");
  }
  if (tokens[1] == "sg") return InstanceKind::signed_graph;
  if (tokens[1] == "cnf") return InstanceKind::cnf;
  if (tokens[1] == "ss") return InstanceKind::set_system;
  if (tokens[1] == "dg") return InstanceKind::digraph;
  reader.fail("unknown instance kind '" + tokens[1] + "'");
}

SignedGraph parse_signed_graph(std::istream& in) {
  LineReader reader(in);
  auto header = read_header(reader, "sg", 5);
  const std::size_t n = reader.count(header[2], "vertex count");
  const std::size_t declared_pos = reader.count(header[3], "positive edge count");
  const std::size_t declared_neg = reader.count(header[4], "negative edge count");
  std::vector<VertexPair> pos;
  std::vector<VertexPair> neg;
  std::vector<std::string> tokens;
  while (reader.next(tokens)) {
    if (tokens[0] != "e") reader.fail("expected an 'e' record");
    reader.arity(tokens, 4);
    VertexPair edge{reader.id(tokens[2], n, "vertex"), reader.id(tokens[3], n, "vertex")};
    if (tokens[1] == "+") {
      pos.push_back(edge);
    } else if (tokens[1] == "-") {
      neg.push_back(edge);
    } else {
      reader.fail("edge sign must be '+' or '-'");
    }
  }
  expect_count(reader, "positive edges", declared_pos, pos.size());
  expect_count(reader, "negative edges", declared_neg, neg.size());
  return SignedGraph(n, pos, neg);
}

void write_signed_graph(std::ostream& out, const SignedGraph& g) {
  out << "p sg " << g.size() << ' ' << g.positive_edges().size() << ' '
      << g.negative_edges().size() << '\n';
  for (auto [u, v] : g.positive_edges()) out << "e + " << u + 1 << ' ' << v + 1 << '\n';
  for (auto [u, v] : g.negative_edges()) out << "e - " << u + 1 << ' ' << v + 1 << '\n';
}

CnfFormula parse_cnf(std::istream& in) {
  LineReader reader(in);
  auto header = read_header(reader, "cnf", 4);
  CnfFormula formula;
  formula.num_vars = reader.count(header[2], "variable count");
  const std::size_t declared = reader.count(header[3], "clause count");
  std::vector<Literal> clause;
  std::vector<std::string> tokens;
  while (reader.next(tokens)) {
    for (const auto& token : tokens) {
      const std::int64_t lit = reader.integer(token, "literal");
      if (lit == 0) {
        if (clause.empty()) reader.fail("empty clause");
        formula.clauses.push_back(std::move(clause));
        clause.clear();
        continue;
      }
      const std::int64_t var = lit < 0 ? -lit : lit;
      if (static_cast<std::size_t>(var) > formula.num_vars) {
        reader.fail("literal " + token + " outside 1.." + std::to_string(formula.num_vars));
      }
      clause.push_back(static_cast<Literal>(lit));
    }
  }
  if (!clause.empty()) reader.fail("last clause is not terminated by 0");
  expect_count(reader, "clauses", declared, formula.clauses.size());
  validate_cnf(formula);
  return formula;
}

void write_cnf(std::ostream& out, const CnfFormula& formula) {
  out << "p cnf " << formula.num_vars << ' ' << formula.clauses.size() << '\n';
  for (const auto& clause : formula.clauses) {
    for (Literal lit : clause) out << lit << ' ';
    out << "0\n";
  }
}

SetSystem parse_set_system(std::istream& in) {
  LineReader reader(in);
  auto header = read_header(reader, "ss", 4);
  SetSystem system;
  system.universe_size = reader.count(header[2], "universe size");
  const std::size_t declared = reader.count(header[3], "set count");
  std::vector<std::string> tokens;
  while (reader.next(tokens)) {
    if (tokens[0] == "s") {
      if (tokens.size() < 2) reader.fail("set record needs a size");
      const std::size_t k = reader.count(tokens[1], "set size");
      reader.arity(tokens, k + 2);
      std::vector<Element> set;
      for (std::size_t i = 0; i < k; ++i) {
        set.push_back(reader.id(tokens[i + 2], system.universe_size, "element"));
      }
      system.sets.push_back(std::move(set));
    } else if (tokens[0] == "x") {
      reader.arity(tokens, 3);
      if (tokens[1] != "special") reader.fail("expected 'x special <e>'");
      if (system.special) reader.fail("special element given twice");
      system.special = reader.id(tokens[2], system.universe_size, "element");
    } else {
      reader.fail("expected an 's' or 'x' record");
    }
  }
  expect_count(reader, "sets", declared, system.sets.size());
  validate_set_system(system);
  return system;
}

void write_set_system(std::ostream& out, const SetSystem& system) {
  out << "p ss " << system.universe_size << ' ' << system.sets.size() << '\n';
  for (const auto& set : system.sets) {
    out << "s " << set.size();
    write_ids(out, set);
    out << '\n';
  }
  if (system.special) out << "x special " << *system.special + 1 << '\n';
}

Digraph parse_digraph(std::istream& in) {
  LineReader reader(in);
  auto header = read_header(reader, "dg", 4);
  Digraph digraph;
  digraph.n = reader.count(header[2], "vertex count");
  const std::size_t declared = reader.count(header[3], "arc count");
  std::vector<std::string> tokens;
  while (reader.next(tokens)) {
    if (tokens[0] != "a") reader.fail("expected an 'a' record");
    reader.arity(tokens, 3);
    digraph.arcs.emplace_back(reader.id(tokens[1], digraph.n, "vertex"),
                              reader.id(tokens[2], digraph.n, "vertex"));
  }
  expect_count(reader, "arcs", declared, digraph.arcs.size());
  validate_digraph(digraph);
  return digraph;
}

void write_digraph(std::ostream& out, const Digraph& digraph) {
  out << "p dg " << digraph.n << ' ' << digraph.arcs.size() << '\n';
  for (auto [v, w] : digraph.arcs) out << "a " << v + 1 << ' ' << w + 1 << '\n';
}

std::optional<Ordering> parse_ordering(std::istream& in, std::size_t n) {
  LineReader reader(in);
  std::vector<std::string> tokens;
  if (!reader.next(tokens)) reader.fail("missing 'o' line");
  if (tokens[0] != "o") reader.fail("expected an 'o' line");
  std::optional<Ordering> result;
  if (tokens.size() == 2 && tokens[1] == "INFEASIBLE") {
    result = std::nullopt;
  } else {
    if (tokens.size() != n + 1) {
      reader.fail("ordering lists " + std::to_string(tokens.size() - 1) + " vertices, expected " +
                  std::to_string(n));
    }
    std::vector<Vertex> sequence;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      sequence.push_back(reader.id(tokens[i], n, "vertex"));
    }
    try {
      result = Ordering::from_sequence(std::move(sequence));
    } catch (const Error& e) {
      reader.fail(e.what());
    }
  }
  if (reader.next(tokens)) reader.fail("unexpected content after the ordering");
  return result;
}

void write_ordering(std::ostream& out, const std::optional<Ordering>& ord) {
  if (!ord) {
    out << "o INFEASIBLE\n";
    return;
  }
  out << 'o';
  for (Vertex v : ord->sequence()) out << ' ' << v + 1;
  out << '\n';
}

IntervalModel parse_interval_model(std::istream& in, std::size_t n) {
  LineReader reader(in);
  IntervalModel model;
  model.intervals.resize(n);
  std::vector<char> seen(n, 0);
  auto fraction = [&](const std::string& token) {
    auto slash = token.find('/');
    if (slash == std::string::npos) reader.fail("expected a fraction, got '" + token + "'");
    std::int64_t num = reader.integer(token.substr(0, slash), "numerator");
    std::int64_t den = reader.integer(token.substr(slash + 1), "denominator");
    if (den <= 0) reader.fail("denominator must be positive");
    return Fraction(num, den);
  };
  std::vector<std::string> tokens;
  std::size_t records = 0;
  while (reader.next(tokens)) {
    if (tokens[0] != "i") reader.fail("expected an 'i' record");
    reader.arity(tokens, 4);
    const Vertex v = reader.id(tokens[1], n, "vertex");
    if (seen[v]) reader.fail("vertex " + tokens[1] + " has two intervals");
    seen[v] = 1;
    model.intervals[v] = {fraction(tokens[2]), fraction(tokens[3])};
    ++records;
  }
  expect_count(reader, "intervals", n, records);
  return model;
}

void write_interval_model(std::ostream& out, const IntervalModel& model) {
  for (std::size_t v = 0; v < model.size(); ++v) {
    const auto& iv = model.intervals[v];
    out << "i " << v + 1 << ' ' << iv.left.str() << ' ' << iv.right.str() << '\n';
  }
}

std::optional<Partition> parse_partition(std::istream& in, std::size_t n) {
  LineReader reader(in);
  std::vector<std::string> tokens;
  std::optional<std::vector<Vertex>> parts[2];
  bool infeasible = false;
  while (reader.next(tokens)) {
    if (tokens[0] != "part" || tokens.size() < 2) reader.fail("expected a 'part' line");
    if (tokens.size() == 2 && tokens[1] == "INFEASIBLE") {
      infeasible = true;
      continue;
    }
    const std::int64_t label = reader.integer(tokens[1], "part number");
    if (label != 1 && label != 2) reader.fail("part number must be 1 or 2");
    auto& slot = parts[label - 1];
    if (slot) reader.fail("part " + tokens[1] + " given twice");
    slot.emplace();
    for (std::size_t i = 2; i < tokens.size(); ++i) slot->push_back(reader.id(tokens[i], n, "vertex"));
  }
  if (infeasible) {
    if (parts[0] || parts[1]) reader.fail("INFEASIBLE partition lists parts");
    return std::nullopt;
  }
  Partition partition{parts[0].value_or(std::vector<Vertex>{}),
                      parts[1].value_or(std::vector<Vertex>{})};
  if (partition.part1.size() + partition.part2.size() != n) {
    reader.fail("partition lists " + std::to_string(partition.part1.size() + partition.part2.size()) +
                " vertices, expected " + std::to_string(n));
  }
  return partition;
}

void write_partition(std::ostream& out, const std::optional<Partition>& partition) {
  if (!partition) {
    out << "part INFEASIBLE\n";
    return;
  }
  out << "part 1";
  write_ids(out, partition->part1);
  out << "\npart 2";
  write_ids(out, partition->part2);
  out << '\n';
}

std::optional<SplitterSolution> parse_splitter(std::istream& in, std::size_t universe) {
  LineReader reader(in);
  std::vector<std::string> tokens;
  if (!reader.next(tokens)) reader.fail("missing 'x' line");
  if (tokens[0] != "x") reader.fail("expected an 'x' line");
  std::optional<SplitterSolution> result;
  if (tokens.size() == 2 && tokens[1] == "INFEASIBLE") {
    result = std::nullopt;
  } else {
    SplitterSolution x;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      x.chosen.push_back(reader.id(tokens[i], universe, "element"));
    }
    std::sort(x.chosen.begin(), x.chosen.end());
    if (std::adjacent_find(x.chosen.begin(), x.chosen.end()) != x.chosen.end()) {
      reader.fail("element listed twice");
    }
    result = std::move(x);
  }
  if (reader.next(tokens)) reader.fail("unexpected content after the splitter");
  return result;
}

void write_splitter(std::ostream& out, const std::optional<SplitterSolution>& x) {
  if (!x) {
    out << "x INFEASIBLE\n";
    return;
  }
  out << 'x';
  write_ids(out, x->chosen);
  out << '\n';
}

std::optional<Assignment> parse_assignment(std::istream& in, std::size_t num_vars) {
  LineReader reader(in);
  std::vector<std::string> tokens;
  std::vector<int> value(num_vars, -1);
  bool terminated = false;
  bool unsat = false;
  while (reader.next(tokens)) {
    if (tokens[0] == "s") {
      reader.arity(tokens, 2);
      if (tokens[1] == "UNSATISFIABLE") {
        unsat = true;
      } else if (tokens[1] != "SATISFIABLE") {
        reader.fail("unknown status '" + tokens[1] + "'");
      }
      continue;
    }
    if (tokens[0] != "v") reader.fail("expected a 'v' line");
    if (terminated) reader.fail("values after the terminating 0");
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const std::int64_t lit = reader.integer(tokens[i], "literal");
      if (lit == 0) {
        terminated = true;
        if (i + 1 != tokens.size()) reader.fail("values after the terminating 0");
        break;
      }
      const std::int64_t var = lit < 0 ? -lit : lit;
      if (static_cast<std::size_t>(var) > num_vars) {
        reader.fail("variable " + std::to_string(var) + " outside 1.." + std::to_string(num_vars));
      }
      if (value[var - 1] != -1) reader.fail("variable " + std::to_string(var) + " assigned twice");
      value[var - 1] = lit > 0 ? 1 : 0;
    }
  }
  if (unsat) {
    if (terminated) reader.fail("UNSATISFIABLE status with values");
    return std::nullopt;
  }
  if (!terminated) reader.fail("assignment is not terminated by 0");
  Assignment assignment;
  for (std::size_t i = 0; i < num_vars; ++i) {
    if (value[i] == -1) reader.fail("variable " + std::to_string(i + 1) + " is unassigned");
    assignment.value.push_back(value[i] == 1);
  }
  return assignment;
}

void write_assignment(std::ostream& out, const std::optional<Assignment>& assignment) {
  if (!assignment) {
    out << "s UNSATISFIABLE\n";
    return;
  }
  out << 'v';
  for (std::size_t i = 0; i < assignment->value.size(); ++i) {
    const auto var = static_cast<std::int64_t>(i + 1);
    out << ' ' << (assignment->value[i] ? var : -var);
  }
  out << " 0\n";
}

namespace {

std::optional<ReductionStage> stage_from(const std::string& name) {
  for (auto stage : {ReductionStage::sat_to_setsplitting, ReductionStage::setsplitting_to_adp,
                     ReductionStage::adp_to_lce}) {
    if (name == to_string(stage)) return stage;
  }
  return std::nullopt;
}

std::optional<GadgetKind> kind_from(const std::string& name) {
  for (auto kind : {GadgetKind::literal, GadgetKind::special, GadgetKind::variable_set,
                    GadgetKind::clause_set, GadgetKind::element_vertex,
                    GadgetKind::membership_vertex, GadgetKind::checker, GadgetKind::alignment}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

std::size_t ref_count(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::special: return 0;
    case GadgetKind::membership_vertex: return 2;
    default: return 1;
  }
}

}  // namespace

std::vector<ReductionMapping> parse_mappings(std::istream& in) {
  LineReader reader(in);
  std::vector<ReductionMapping> sections;
  std::vector<std::size_t> declared;
  std::vector<std::string> tokens;
  while (reader.next(tokens)) {
    if (tokens[0] == "p") {
      if (tokens.size() < 2 || tokens[1] != "map") reader.fail("expected a 'p map' header");
      reader.arity(tokens, 6);
      auto stage = stage_from(tokens[2]);
      if (!stage) reader.fail("unknown stage '" + tokens[2] + "'");
      if (!sections.empty()) {
        expect_count(reader, "mapping entries", declared.back(), sections.back().entries.size());
      }
      ReductionMapping mapping;
      mapping.stage = *stage;
      mapping.source_size = reader.count(tokens[3], "source size");
      mapping.target_size = reader.count(tokens[4], "target size");
      declared.push_back(reader.count(tokens[5], "entry count"));
      sections.push_back(std::move(mapping));
      continue;
    }
    if (tokens[0] != "map") reader.fail("expected a 'map' record");
    if (sections.empty()) reader.fail("'map' record before the 'p map' header");
    if (tokens.size() < 3) reader.fail("'map' record needs an id and a kind");
    auto kind = kind_from(tokens[2]);
    if (!kind) reader.fail("unknown gadget kind '" + tokens[2] + "'");
    reader.arity(tokens, 3 + ref_count(*kind));
    GadgetRef ref;
    ref.kind = *kind;
    ref.id = static_cast<std::uint32_t>(reader.id(tokens[1], UINT32_MAX, "gadget id"));
    switch (*kind) {
      case GadgetKind::literal:
      case GadgetKind::variable_set:
        ref.a = reader.integer(tokens[3], "literal");
        break;
      case GadgetKind::special:
        break;
      case GadgetKind::membership_vertex:
        ref.a = reader.integer(tokens[3], "set") - 1;
        ref.b = reader.integer(tokens[4], "element") - 1;
        break;
      default:
        ref.a = reader.integer(tokens[3], "source id") - 1;
        break;
    }
    sections.back().entries.push_back(ref);
  }
  if (sections.empty()) reader.fail("missing 'p map' header");
  expect_count(reader, "mapping entries", declared.back(), sections.back().entries.size());
  return sections;
}

void write_mapping(std::ostream& out, const ReductionMapping& mapping) {
  out << "p map " << to_string(mapping.stage) << ' ' << mapping.source_size << ' '
      << mapping.target_size << ' ' << mapping.entries.size() << '\n';
  for (const auto& ref : mapping.entries) {
    out << "map " << ref.id + 1 << ' ' << to_string(ref.kind);
    switch (ref.kind) {
      case GadgetKind::literal:
      case GadgetKind::variable_set:
        out << ' ' << ref.a;
        break;
      case GadgetKind::special:
        break;
      case GadgetKind::membership_vertex:
        out << ' ' << ref.a + 1 << ' ' << ref.b + 1;
        break;
      default:
        out << ' ' << ref.a + 1;
        break;
    }
    out << '\n';
  }
}

std::string signed_graph_text(const SignedGraph& g) {
  std::ostringstream out;
  write_signed_graph(out, g);
  return out.str();
}

SignedGraph signed_graph_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_signed_graph(in);
}

}  // namespace lce::io
