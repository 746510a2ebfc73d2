#include "lce/reductions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "lce/error.hpp"

namespace lce {

namespace {

void check_size(bool holds, const char* formula) {
  if (!holds) throw std::logic_error(std::string("size formula violated: ") + formula);
}

void require_stage(const ReductionMapping& mapping, ReductionStage stage) {
  if (mapping.stage != stage) {
    throw Error(ErrorKind::invalid_instance, std::string("mapping is for stage ") +
                                                 to_string(mapping.stage) + ", expected " +
                                                 to_string(stage));
  }
}

std::size_t total_membership(const SetSystem& system) {
  std::size_t total = 0;
  for (const auto& set : system.sets) total += set.size();
  return total;
}

/// side[v] = 1 or 2; throws if the partition does not cover 0..n-1 exactly once.
std::vector<int> sides_of(const Partition& partition, std::size_t n) {
  std::vector<int> side(n, 0);
  auto place = [&](const std::vector<Vertex>& part, int label) {
    for (Vertex v : part) {
      if (v >= n) {
        throw Error(ErrorKind::invalid_certificate,
                    "partition vertex " + std::to_string(v) + " out of range");
      }
      if (side[v] != 0) {
        throw Error(ErrorKind::invalid_certificate,
                    "vertex " + std::to_string(v) + " is listed twice");
      }
      side[v] = label;
    }
  };
  place(partition.part1, 1);
  place(partition.part2, 2);
  for (std::size_t v = 0; v < n; ++v) {
    if (side[v] == 0) {
      throw Error(ErrorKind::invalid_certificate,
                  "vertex " + std::to_string(v) + " is in neither part");
    }
  }
  return side;
}

/// Smallest-id-first topological order of the arcs inside one side; empty optional
/// when that side has a cycle.
std::optional<std::vector<Vertex>> topological_order(const Digraph& digraph,
                                                     const std::vector<int>& side, int label) {
  std::vector<std::vector<Vertex>> out(digraph.n);
  std::vector<std::size_t> indegree(digraph.n, 0);
  for (auto [v, w] : digraph.arcs) {
    if (side[v] != label || side[w] != label) continue;
    out[v].push_back(w);
    ++indegree[w];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  std::size_t members = 0;
  for (Vertex v = 0; v < digraph.n; ++v) {
    if (side[v] != label) continue;
    ++members;
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  order.reserve(members);
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex w : out[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (order.size() != members) return std::nullopt;
  return order;
}

std::vector<Vertex> sorted_members(const std::vector<int>& side, int label) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < side.size(); ++v) {
    if (side[v] == label) out.push_back(v);
  }
  return out;
}

}  // namespace

const char* to_string(ReductionStage stage) noexcept {
  switch (stage) {
    case ReductionStage::sat_to_setsplitting: return "sat2ss";
    case ReductionStage::setsplitting_to_adp: return "ss2adp";
    case ReductionStage::adp_to_lce: return "adp2lce";
  }
  return "unknown";
}

const char* to_string(GadgetKind kind) noexcept {
  switch (kind) {
    case GadgetKind::literal: return "literal";
    case GadgetKind::special: return "special";
    case GadgetKind::variable_set: return "varset";
    case GadgetKind::clause_set: return "clauseset";
    case GadgetKind::element_vertex: return "element";
    case GadgetKind::membership_vertex: return "member";
    case GadgetKind::checker: return "checker";
    case GadgetKind::alignment: return "align";
  }
  return "unknown";
}

void validate_cnf(const CnfFormula& formula) {
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    const auto& clause = formula.clauses[c];
    const std::string where = "clause " + std::to_string(c + 1);
    if (clause.empty() || clause.size() > 3) {
      throw Error(ErrorKind::invalid_instance, where + " must hold 1 to 3 literals");
    }
    for (std::size_t i = 0; i < clause.size(); ++i) {
      const Literal lit = clause[i];
      if (lit == 0 || static_cast<std::size_t>(lit < 0 ? -static_cast<std::int64_t>(lit) : lit) >
                          formula.num_vars) {
        throw Error(ErrorKind::invalid_instance,
                    where + " has literal " + std::to_string(lit) + " outside the variables");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (clause[j] == lit) {
          throw Error(ErrorKind::invalid_instance, where + " repeats literal " + std::to_string(lit));
        }
        if (clause[j] == -lit) {
          throw Error(ErrorKind::invalid_instance,
                      where + " holds both polarities of variable " +
                          std::to_string(lit < 0 ? -lit : lit));
        }
      }
    }
  }
}

void validate_set_system(const SetSystem& system) {
  for (std::size_t f = 0; f < system.sets.size(); ++f) {
    const auto& set = system.sets[f];
    const std::string where = "set " + std::to_string(f + 1);
    if (set.empty()) throw Error(ErrorKind::invalid_instance, where + " is empty");
    std::vector<Element> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.back() >= system.universe_size) {
      throw Error(ErrorKind::invalid_instance, where + " has an element outside the universe");
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::invalid_instance, where + " repeats an element");
    }
  }
  if (system.special && *system.special >= system.universe_size) {
    throw Error(ErrorKind::invalid_instance, "special element outside the universe");
  }
}

void validate_digraph(const Digraph& digraph) {
  std::vector<VertexPair> sorted = digraph.arcs;
  for (auto [v, w] : sorted) {
    if (v >= digraph.n || w >= digraph.n) {
      throw Error(ErrorKind::range, "arc (" + std::to_string(v) + "," + std::to_string(w) +
                                        ") has an endpoint out of range");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
    throw Error(ErrorKind::duplicate, "arc (" + std::to_string(it->first) + "," +
                                          std::to_string(it->second) + ") appears twice");
  }
}

std::pair<SetSystem, ReductionMapping> sat_to_setsplitting(const CnfFormula& formula) {
  validate_cnf(formula);
  const std::size_t n = formula.num_vars;
  auto element_of = [](Literal lit) -> Element {
    const auto var = static_cast<Element>(lit < 0 ? -lit : lit);
    return 2 * (var - 1) + (lit < 0 ? 1 : 0);
  };
  const auto special = static_cast<Element>(2 * n);

  SetSystem system;
  system.universe_size = 2 * n + 1;
  system.special = special;
  ReductionMapping mapping{ReductionStage::sat_to_setsplitting, n, system.universe_size, {}};

  for (std::size_t i = 1; i <= n; ++i) {
    const auto lit = static_cast<Literal>(i);
    mapping.entries.push_back({GadgetKind::literal, element_of(lit), lit, 0});
    mapping.entries.push_back({GadgetKind::literal, element_of(-lit), -lit, 0});
  }
  mapping.entries.push_back({GadgetKind::special, special, 0, 0});

  std::size_t expected_total = 2 * n;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto lit = static_cast<Literal>(i);
    mapping.entries.push_back(
        {GadgetKind::variable_set, static_cast<std::uint32_t>(system.sets.size()), lit, 0});
    system.sets.push_back({element_of(lit), element_of(-lit)});
  }
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    std::vector<Element> set;
    for (Literal lit : formula.clauses[c]) set.push_back(element_of(lit));
    std::sort(set.begin(), set.end());
    set.push_back(special);
    expected_total += set.size();
    mapping.entries.push_back({GadgetKind::clause_set, static_cast<std::uint32_t>(system.sets.size()),
                               static_cast<std::int64_t>(c), 0});
    system.sets.push_back(std::move(set));
  }

  check_size(system.universe_size == 2 * n + 1, "|U| = 2n + 1");
  check_size(total_membership(system) == expected_total, "sum |F| = 2n + sum (|C| + 1)");
  bool exact_three = std::all_of(formula.clauses.begin(), formula.clauses.end(),
                                 [](const auto& clause) { return clause.size() == 3; });
  if (exact_three) {
    check_size(total_membership(system) == 2 * n + 4 * formula.clauses.size(),
               "sum |F| = 2n + 4m");
  }
  return {std::move(system), std::move(mapping)};
}

std::pair<Digraph, ReductionMapping> setsplitting_to_adp(const SetSystem& system) {
  validate_set_system(system);
  const std::size_t universe = system.universe_size;
  const std::size_t memberships = total_membership(system);

  Digraph digraph;
  digraph.n = universe + memberships;
  ReductionMapping mapping{ReductionStage::setsplitting_to_adp, universe, digraph.n, {}};
  for (Element u = 0; u < universe; ++u) {
    mapping.entries.push_back({GadgetKind::element_vertex, u, u, 0});
  }

  struct Member {
    Vertex vertex;
    Element element;
  };
  std::vector<Member> members;
  members.reserve(memberships);
  auto next = static_cast<Vertex>(universe);
  for (std::size_t f = 0; f < system.sets.size(); ++f) {
    std::vector<Element> set = system.sets[f];
    std::sort(set.begin(), set.end());
    const std::size_t first = members.size();
    for (Element u : set) {
      mapping.entries.push_back(
          {GadgetKind::membership_vertex, next, static_cast<std::int64_t>(f), u});
      members.push_back({next++, u});
    }
    for (std::size_t i = first; i < members.size(); ++i) {
      const std::size_t j = (i + 1 < members.size()) ? i + 1 : first;
      digraph.arcs.emplace_back(members[i].vertex, members[j].vertex);
    }
  }
  for (const auto& m : members) {
    digraph.arcs.emplace_back(m.element, m.vertex);
    digraph.arcs.emplace_back(m.vertex, m.element);
  }

  check_size(digraph.n == universe + memberships, "|V| = |U| + sum |F|");
  check_size(digraph.arcs.size() == 3 * memberships, "|A| = 3 sum |F|");
  return {std::move(digraph), std::move(mapping)};
}

std::pair<SignedGraph, ReductionMapping> adp_to_lce(const Digraph& digraph) {
  validate_digraph(digraph);
  const std::size_t n = digraph.n;
  const std::size_t m = digraph.arcs.size();
  for (auto [v, w] : digraph.arcs) {
    if (v == w) {
      throw Error(ErrorKind::self_loop,
                  "arc (" + std::to_string(v) + "," + std::to_string(v) +
                      ") is a self-loop; its checker would need both signs towards one "
                      "alignment vertex");
    }
  }
  const Vertex special = 0;
  auto checker = [](std::size_t e) { return static_cast<Vertex>(1 + e); };
  auto alignment = [m](Vertex v) { return static_cast<Vertex>(1 + m + v); };

  ReductionMapping mapping{ReductionStage::adp_to_lce, n, n + m + 1, {}};
  mapping.entries.push_back({GadgetKind::special, special, 0, 0});
  for (std::size_t e = 0; e < m; ++e) {
    mapping.entries.push_back({GadgetKind::checker, checker(e), static_cast<std::int64_t>(e), 0});
  }
  for (Vertex v = 0; v < n; ++v) {
    mapping.entries.push_back({GadgetKind::alignment, alignment(v), v, 0});
  }

  std::vector<VertexPair> positive;
  std::vector<VertexPair> negative;
  for (std::size_t e = 0; e < m; ++e) positive.emplace_back(special, checker(e));
  for (Vertex v = 0; v < n; ++v) negative.emplace_back(special, alignment(v));
  for (std::size_t e = 0; e < m; ++e) {
    auto [v, w] = digraph.arcs[e];
    positive.emplace_back(checker(e), alignment(v));
    negative.emplace_back(checker(e), alignment(w));
  }
  SignedGraph graph(n + m + 1, positive, negative);

  check_size(graph.size() == n + m + 1, "|V'| = |V| + |A| + 1");
  check_size(graph.positive().edge_count() == 2 * m, "|E+| = 2|A|");
  check_size(graph.negative().edge_count() == m + n, "|E-| = |A| + |V|");
  return {std::move(graph), std::move(mapping)};
}

bool eval_cnf(const CnfFormula& formula, const Assignment& assignment) {
  if (assignment.value.size() != formula.num_vars) {
    throw Error(ErrorKind::invalid_certificate,
                "assignment has " + std::to_string(assignment.value.size()) +
                    " variables, formula has " + std::to_string(formula.num_vars));
  }
  for (const auto& clause : formula.clauses) {
    bool satisfied = false;
    for (Literal lit : clause) {
      const bool value = assignment.value[static_cast<std::size_t>(lit < 0 ? -lit : lit) - 1];
      if (value == (lit > 0)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

bool verify_setsplitting(const SetSystem& system, const SplitterSolution& x) {
  std::vector<char> in(system.universe_size, 0);
  for (Element e : x.chosen) {
    if (e >= system.universe_size) {
      throw Error(ErrorKind::invalid_certificate,
                  "splitter element " + std::to_string(e) + " outside the universe");
    }
    in[e] = 1;
  }
  for (const auto& set : system.sets) {
    bool inside = false;
    bool outside = false;
    for (Element e : set) (in[e] ? inside : outside) = true;
    if (!inside || !outside) return false;
  }
  return true;
}

bool verify_adp(const Digraph& digraph, const Partition& partition) {
  const auto side = sides_of(partition, digraph.n);
  return topological_order(digraph, side, 1).has_value() &&
         topological_order(digraph, side, 2).has_value();
}

std::optional<SplitterSolution> solve_setsplitting_bruteforce(const SetSystem& system,
                                                              const ExhaustiveOptions& options) {
  validate_set_system(system);
  if (system.universe_size > options.max_size || system.universe_size >= 32) {
    throw Error(ErrorKind::cap_exceeded, "set splitting search is capped at " +
                                             std::to_string(options.max_size) + " elements");
  }
  std::vector<std::uint32_t> masks;
  for (const auto& set : system.sets) {
    std::uint32_t mask = 0;
    for (Element e : set) mask |= std::uint32_t{1} << e;
    masks.push_back(mask);
  }
  const std::uint64_t limit = std::uint64_t{1} << system.universe_size;
  for (std::uint64_t x = 0; x < limit; ++x) {
    const auto chosen = static_cast<std::uint32_t>(x);
    bool splits = std::all_of(masks.begin(), masks.end(), [&](std::uint32_t set) {
      return (set & chosen) != 0 && (set & ~chosen) != 0;
    });
    if (!splits) continue;
    SplitterSolution solution;
    for (Element e = 0; e < system.universe_size; ++e) {
      if ((chosen >> e) & 1) solution.chosen.push_back(e);
    }
    return solution;
  }
  return std::nullopt;
}

std::optional<Partition> solve_adp_bruteforce(const Digraph& digraph,
                                              const ExhaustiveOptions& options) {
  validate_digraph(digraph);
  const std::size_t n = digraph.n;
  if (n > options.max_size) {
    throw Error(ErrorKind::cap_exceeded, "partition search is capped at " +
                                             std::to_string(options.max_size) + " vertices");
  }
  std::vector<std::vector<Vertex>> out(n);
  for (auto [v, w] : digraph.arcs) out[v].push_back(w);
  std::vector<int> side(n, 0);
  std::vector<std::size_t> seen(n, 0);
  std::size_t stamp = 0;
  std::vector<Vertex> stack;

  // A new cycle in v's part must pass through v.
  auto closes_cycle = [&](Vertex v) {
    ++stamp;
    stack.assign(1, v);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : out[x]) {
        if (side[y] != side[v]) continue;
        if (y == v) return true;
        if (seen[y] == stamp) continue;
        seen[y] = stamp;
        stack.push_back(y);
      }
    }
    return false;
  };

  std::function<bool(Vertex)> assign = [&](Vertex v) -> bool {
    if (v == n) return true;
    for (int label : {1, 2}) {
      side[v] = label;
      if (!closes_cycle(v) && assign(v + 1)) return true;
    }
    side[v] = 0;
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return Partition{sorted_members(side, 1), sorted_members(side, 2)};
}

Partition lift_lce_to_adp(const Ordering& ord, const ReductionMapping& mapping) {
  require_stage(mapping, ReductionStage::adp_to_lce);
  if (ord.size() != mapping.target_size) {
    throw Error(ErrorKind::invalid_certificate, "ordering size does not match the gadget graph");
  }
  std::optional<Vertex> special;
  for (const auto& entry : mapping.entries) {
    if (entry.kind == GadgetKind::special) special = entry.id;
  }
  if (!special) throw Error(ErrorKind::invalid_instance, "mapping has no special vertex");
  std::vector<int> side(mapping.source_size, 0);
  for (const auto& entry : mapping.entries) {
    if (entry.kind != GadgetKind::alignment) continue;
    side[static_cast<std::size_t>(entry.a)] = ord.before(entry.id, *special) ? 1 : 2;
  }
  return Partition{sorted_members(side, 1), sorted_members(side, 2)};
}

Ordering adp_solution_to_lce_ordering(const Partition& partition, const Digraph& digraph,
                                      const ReductionMapping& mapping) {
  require_stage(mapping, ReductionStage::adp_to_lce);
  const auto side = sides_of(partition, digraph.n);
  auto order1 = topological_order(digraph, side, 1);
  auto order2 = topological_order(digraph, side, 2);
  if (!order1 || !order2) {
    throw Error(ErrorKind::invalid_certificate, "partition leaves a cycle inside a part");
  }
  std::vector<std::size_t> rank(digraph.n, 0);
  for (std::size_t i = 0; i < order1->size(); ++i) rank[(*order1)[i]] = i;
  for (std::size_t i = 0; i < order2->size(); ++i) rank[(*order2)[i]] = i;

  Vertex special = 0;
  std::vector<Vertex> checker(digraph.arcs.size(), 0);
  std::vector<Vertex> alignment(digraph.n, 0);
  for (const auto& entry : mapping.entries) {
    const auto source = static_cast<std::size_t>(entry.a);
    if (entry.kind == GadgetKind::special) special = entry.id;
    if (entry.kind == GadgetKind::checker) checker.at(source) = entry.id;
    if (entry.kind == GadgetKind::alignment) alignment.at(source) = entry.id;
  }

  std::vector<std::size_t> cross12;
  std::vector<std::size_t> inside1;
  std::vector<std::size_t> inside2;
  std::vector<std::size_t> cross21;
  for (std::size_t e = 0; e < digraph.arcs.size(); ++e) {
    auto [v, w] = digraph.arcs[e];
    if (side[v] == 1 && side[w] == 2) cross12.push_back(e);
    if (side[v] == 1 && side[w] == 1) inside1.push_back(e);
    if (side[v] == 2 && side[w] == 2) inside2.push_back(e);
    if (side[v] == 2 && side[w] == 1) cross21.push_back(e);
  }
  auto lexicographic = [&](std::size_t a, std::size_t b) {
    auto [va, wa] = digraph.arcs[a];
    auto [vb, wb] = digraph.arcs[b];
    return std::pair(rank[va], rank[wa]) < std::pair(rank[vb], rank[wb]);
  };
  std::sort(inside1.begin(), inside1.end(), [&](auto a, auto b) { return lexicographic(b, a); });
  std::sort(inside2.begin(), inside2.end(), lexicographic);

  std::vector<Vertex> sequence;
  sequence.reserve(mapping.target_size);
  for (auto it = order1->rbegin(); it != order1->rend(); ++it) sequence.push_back(alignment[*it]);
  for (auto e : cross12) sequence.push_back(checker[e]);
  for (auto e : inside1) sequence.push_back(checker[e]);
  sequence.push_back(special);
  for (auto e : inside2) sequence.push_back(checker[e]);
  for (auto e : cross21) sequence.push_back(checker[e]);
  for (Vertex v : *order2) sequence.push_back(alignment[v]);

  auto ord = Ordering::from_sequence(std::move(sequence));
  const auto graph = adp_to_lce(digraph).first;
  if (!verify_embedding(graph, ord).valid()) {
    throw std::logic_error("constructed ordering is not a feasible embedding");
  }
  return ord;
}

Partition setsplitting_solution_to_adp(const SplitterSolution& x, const SetSystem& system,
                                       const ReductionMapping& mapping) {
  require_stage(mapping, ReductionStage::setsplitting_to_adp);
  if (!verify_setsplitting(system, x)) {
    throw Error(ErrorKind::invalid_certificate, "subset does not split every set");
  }
  std::vector<char> in(system.universe_size, 0);
  for (Element e : x.chosen) in[e] = 1;
  std::vector<int> side(mapping.target_size, 0);
  for (const auto& entry : mapping.entries) {
    if (entry.kind == GadgetKind::element_vertex) {
      side[entry.id] = in[static_cast<std::size_t>(entry.a)] ? 1 : 2;
    } else if (entry.kind == GadgetKind::membership_vertex) {
      side[entry.id] = in[static_cast<std::size_t>(entry.b)] ? 2 : 1;
    }
  }
  Partition partition{sorted_members(side, 1), sorted_members(side, 2)};
  if (!verify_adp(setsplitting_to_adp(system).first, partition)) {
    throw std::logic_error("mapped partition is not acyclic");
  }
  return partition;
}

SplitterSolution lift_adp_to_setsplitting(const Partition& partition,
                                          const ReductionMapping& mapping) {
  require_stage(mapping, ReductionStage::setsplitting_to_adp);
  const auto side = sides_of(partition, mapping.target_size);
  SplitterSolution x;
  for (const auto& entry : mapping.entries) {
    if (entry.kind == GadgetKind::element_vertex && side[entry.id] == 1) {
      x.chosen.push_back(static_cast<Element>(entry.a));
    }
  }
  std::sort(x.chosen.begin(), x.chosen.end());
  return x;
}

SplitterSolution sat_solution_to_setsplitting(const Assignment& assignment,
                                              const ReductionMapping& mapping) {
  require_stage(mapping, ReductionStage::sat_to_setsplitting);
  if (assignment.value.size() != mapping.source_size) {
    throw Error(ErrorKind::invalid_certificate, "assignment size does not match the formula");
  }
  SplitterSolution x;
  for (const auto& entry : mapping.entries) {
    if (entry.kind != GadgetKind::literal) continue;
    const auto lit = entry.a;
    const bool value = assignment.value[static_cast<std::size_t>(lit < 0 ? -lit : lit) - 1];
    if (value == (lit > 0)) x.chosen.push_back(entry.id);
  }
  std::sort(x.chosen.begin(), x.chosen.end());
  return x;
}

Assignment lift_setsplitting_to_sat(const SplitterSolution& x, const ReductionMapping& mapping) {
  require_stage(mapping, ReductionStage::sat_to_setsplitting);
  std::vector<char> in(mapping.target_size, 0);
  for (Element e : x.chosen) {
    if (e >= mapping.target_size) {
      throw Error(ErrorKind::invalid_certificate, "splitter element outside the universe");
    }
    in[e] = 1;
  }
  for (const auto& entry : mapping.entries) {
    if (entry.kind == GadgetKind::special && in[entry.id]) {
      for (auto& flag : in) flag = !flag;
      break;
    }
  }
  Assignment assignment;
  assignment.value.assign(mapping.source_size, false);
  for (const auto& entry : mapping.entries) {
    if (entry.kind == GadgetKind::literal && entry.a > 0 && in[entry.id]) {
      assignment.value[static_cast<std::size_t>(entry.a) - 1] = true;
    }
  }
  return assignment;
}

SatToLceChain sat_to_lce(const CnfFormula& formula) {
  SatToLceChain chain;
  chain.formula = formula;
  std::tie(chain.sets, chain.sat_to_sets) = sat_to_setsplitting(formula);
  std::tie(chain.digraph, chain.sets_to_digraph) = setsplitting_to_adp(chain.sets);
  std::tie(chain.graph, chain.digraph_to_graph) = adp_to_lce(chain.digraph);
  return chain;
}

Assignment lift_lce_to_sat(const Ordering& ord, const SatToLceChain& chain) {
  if (!verify_embedding(chain.graph, ord).valid()) {
    throw Error(ErrorKind::invalid_certificate, "ordering is not a feasible embedding");
  }
  const auto partition = lift_lce_to_adp(ord, chain.digraph_to_graph);
  if (!verify_adp(chain.digraph, partition)) throw std::logic_error("lifted partition has a cycle");
  const auto x = lift_adp_to_setsplitting(partition, chain.sets_to_digraph);
  if (!verify_setsplitting(chain.sets, x)) throw std::logic_error("lifted subset is not a splitter");
  auto assignment = lift_setsplitting_to_sat(x, chain.sat_to_sets);
  if (!eval_cnf(chain.formula, assignment)) {
    throw std::logic_error("lifted assignment does not satisfy the formula");
  }
  return assignment;
}

Ordering sat_solution_to_lce_ordering(const Assignment& assignment, const SatToLceChain& chain) {
  if (!eval_cnf(chain.formula, assignment)) {
    throw Error(ErrorKind::invalid_certificate, "assignment does not satisfy the formula");
  }
  const auto x = sat_solution_to_setsplitting(assignment, chain.sat_to_sets);
  const auto partition = setsplitting_solution_to_adp(x, chain.sets, chain.sets_to_digraph);
  return adp_solution_to_lce_ordering(partition, chain.digraph, chain.digraph_to_graph);
}

}  // namespace lce
