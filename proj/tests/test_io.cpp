#include <doctest.h>

#include <random>
#include <sstream>

#include "lce/error.hpp"
#include "lce/io.hpp"
#include "oracles.hpp"

using namespace lce;

namespace {

template <class F>
std::string render(F write) {
  std::ostringstream out;
  write(out);
  return out.str();
}

template <class T, class Parse>
T parse_text(const std::string& text, Parse parse) {
  std::istringstream in(text);
  return parse(in);
}

std::size_t parse_error_line(const std::function<void()>& run) {
  try {
    run();
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("no parse error raised");
  return 0;
}

const char* kP3 = "p sg 3 2 1\ne + 1 2\ne + 2 3\ne - 1 3\n";

}  // namespace

TEST_CASE("signed graph round trip") {
  const auto g = io::signed_graph_from_text(kP3);
  CHECK(g.size() == 3);
  const auto text = io::signed_graph_text(g);
  CHECK(text == kP3);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
  CHECK(io::signed_graph_from_text(text) == g);
}

TEST_CASE("whitespace and comments are canonicalized") {
  const auto g = io::signed_graph_from_text(
      "c a comment\n\n  p   sg 3 2 1\ne + 2   1\nc another\ne +\t2 3\n\ne - 3 1\n");
  CHECK(io::signed_graph_text(g) == kP3);
}

TEST_CASE("signed graph errors") {
  try {
    io::signed_graph_from_text("p sg 2 1 1\ne + 1 2\ne - 1 2\n");
    FAIL("expected overlap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::overlap);
  }
  CHECK(parse_error_line([] { io::signed_graph_from_text("p sg 3 1\n"); }) == 1);
  CHECK(parse_error_line([] { io::signed_graph_from_text("p sx 3 1 0\n"); }) == 1);
  CHECK(parse_error_line([] { io::signed_graph_from_text("p sg 3 1 0\ne + 1 4\n"); }) == 2);
  CHECK(parse_error_line([] { io::signed_graph_from_text("p sg 3 1 0\ne * 1 2\n"); }) == 2);
  CHECK(parse_error_line([] { io::signed_graph_from_text("p sg 3 2 0\nc x\ne + 1 2\n"); }) == 3);
  CHECK(parse_error_line([] { io::signed_graph_from_text("p sg x 0 0\n"); }) == 1);
  CHECK(parse_error_line([] { io::signed_graph_from_text(""); }) == 0);
}

TEST_CASE("cnf round trip and errors") {
  const std::string text = "p cnf 3 2\n1 -2 3 0\n-1 0\n";
  const auto f = parse_text<CnfFormula>(text, io::parse_cnf);
  CHECK(f.clauses.size() == 2);
  CHECK(render([&](std::ostream& o) { io::write_cnf(o, f); }) == text);
  const auto split = parse_text<CnfFormula>("p cnf 3 2\n1 -2\n3 0 -1\n0\n", io::parse_cnf);
  CHECK(split == f);
  CHECK_THROWS_AS(parse_text<CnfFormula>("p cnf 2 1\n1 -1 0\n", io::parse_cnf), Error);
  CHECK(parse_error_line([] { parse_text<CnfFormula>("p cnf 2 1\n1 3 0\n", io::parse_cnf); }) ==
        2);
  CHECK(parse_error_line([] { parse_text<CnfFormula>("p cnf 2 2\n1 0\n", io::parse_cnf); }) == 2);
  CHECK(parse_error_line([] { parse_text<CnfFormula>("p cnf 2 1\n1 2\n", io::parse_cnf); }) == 2);
}

TEST_CASE("set system and digraph round trips") {
  const std::string ss = "p ss 3 2\ns 2 1 2\ns 3 1 2 3\nx special 3\n";
  const auto system = parse_text<SetSystem>(ss, io::parse_set_system);
  CHECK(system.special == Element{2});
  CHECK(render([&](std::ostream& o) { io::write_set_system(o, system); }) == ss);
  CHECK_THROWS_AS(parse_text<SetSystem>("p ss 2 1\ns 0\n", io::parse_set_system), Error);
  CHECK_THROWS_AS(parse_text<SetSystem>("p ss 2 1\ns 2 1\n", io::parse_set_system), ParseError);

  const std::string dg = "p dg 3 3\na 1 2\na 2 3\na 3 3\n";
  const auto d = parse_text<Digraph>(dg, io::parse_digraph);
  CHECK(d.arcs.size() == 3);
  CHECK(render([&](std::ostream& o) { io::write_digraph(o, d); }) == dg);
  CHECK_THROWS_AS(parse_text<Digraph>("p dg 2 2\na 1 2\na 1 2\n", io::parse_digraph), Error);
}

TEST_CASE("certificates round trip") {
  const auto ord = Ordering::from_sequence({2, 0, 1});
  const auto text = render([&](std::ostream& o) { io::write_ordering(o, ord); });
  CHECK(text == "o 3 1 2\n");
  std::istringstream in(text);
  CHECK(io::parse_ordering(in, 3) == ord);
  std::istringstream infeasible("o INFEASIBLE\n");
  CHECK_FALSE(io::parse_ordering(infeasible, 3).has_value());
  std::istringstream short_line("o 1 2\n");
  CHECK_THROWS_AS(io::parse_ordering(short_line, 3), ParseError);
  std::istringstream repeated("o 1 1 2\n");
  CHECK_THROWS_AS(io::parse_ordering(repeated, 3), ParseError);

  const Partition p{{0, 2}, {1}};
  const auto ptext = render([&](std::ostream& o) { io::write_partition(o, p); });
  CHECK(ptext == "part 1 1 3\npart 2 2\n");
  std::istringstream pin(ptext);
  CHECK(io::parse_partition(pin, 3) == p);
  std::istringstream pmissing("part 1 1\npart 2 2\n");
  CHECK_THROWS_AS(io::parse_partition(pmissing, 3), ParseError);

  const SplitterSolution x{{0, 3}};
  const auto xtext = render([&](std::ostream& o) { io::write_splitter(o, x); });
  CHECK(xtext == "x 1 4\n");
  std::istringstream xin(xtext);
  CHECK(io::parse_splitter(xin, 4) == x);

  const Assignment a{{true, false, true}};
  const auto atext = render([&](std::ostream& o) { io::write_assignment(o, a); });
  CHECK(atext == "v 1 -2 3 0\n");
  std::istringstream ain(atext);
  CHECK(io::parse_assignment(ain, 3) == a);
  std::istringstream unsat("s UNSATISFIABLE\n");
  CHECK_FALSE(io::parse_assignment(unsat, 3).has_value());
  std::istringstream partial("v 1 0\n");
  CHECK_THROWS_AS(io::parse_assignment(partial, 3), ParseError);
}

TEST_CASE("interval model round trip") {
  IntervalModel m{{{Fraction(1, 1), Fraction(9, 4)},
                   {Fraction(2, 1), Fraction(7, 2)},
                   {Fraction(3, 1), Fraction(15, 4)}}};
  const auto text = render([&](std::ostream& o) { io::write_interval_model(o, m); });
  CHECK(text == "i 1 1/1 9/4\ni 2 2/1 7/2\ni 3 3/1 15/4\n");
  std::istringstream in(text);
  CHECK(io::parse_interval_model(in, 3) == m);
}

TEST_CASE("mapping round trip and golden chain header") {
  const auto chain = sat_to_lce(CnfFormula{3, {{1, 2, 3}}});
  const auto graph_text = io::signed_graph_text(chain.graph);
  CHECK(graph_text.substr(0, graph_text.find('\n')) == "p sg 48 60 47");
  CHECK(io::signed_graph_from_text(graph_text) == chain.graph);

  const auto text = render([&](std::ostream& o) {
    io::write_mapping(o, chain.sat_to_sets);
    io::write_mapping(o, chain.sets_to_digraph);
    io::write_mapping(o, chain.digraph_to_graph);
  });
  std::istringstream in(text);
  const auto parsed = io::parse_mappings(in);
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[0] == chain.sat_to_sets);
  CHECK(parsed[1] == chain.sets_to_digraph);
  CHECK(parsed[2] == chain.digraph_to_graph);
  CHECK(text.rfind("p map sat2ss 3 7 ", 0) == 0);
}

TEST_CASE("instance kind detection") {
  CHECK(io::detect_kind(kP3) == io::InstanceKind::signed_graph);
  CHECK(io::detect_kind("c hi\np cnf 1 0\n") == io::InstanceKind::cnf);
  CHECK(io::detect_kind("p ss 1 0\n") == io::InstanceKind::set_system);
  CHECK(io::detect_kind("p dg 1 0\n") == io::InstanceKind::digraph);
  CHECK_THROWS_AS(io::detect_kind("p zz 1\n"), ParseError);
  CHECK_THROWS_AS(io::detect_kind("e + 1 2\n"), ParseError);
}

TEST_CASE("random graphs round trip") {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 200; ++t) {
    const auto g = oracle::random_graph(rng, t % 12, 0.3, 0.3);
    const auto text = io::signed_graph_text(g);
    CHECK(io::signed_graph_from_text(text) == g);
    CHECK(io::signed_graph_text(io::signed_graph_from_text(text)) == text);
  }
}
