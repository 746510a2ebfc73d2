#pragma once

// Instance translators for 3-CNF-SAT -> Set Splitting -> Acyclic Digraph
// Partition -> Line Cluster Embedding, with solution maps in both directions.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lce/signed_graph.hpp"

namespace lce {

/// DIMACS literal: +i or -i for variable i (1-based).
using Literal = std::int32_t;

struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<std::vector<Literal>> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Clauses hold 1..3 distinct, non-complementary literals over 1..num_vars.
void validate_cnf(const CnfFormula& formula);

using Element = std::uint32_t;

struct SetSystem {
  std::size_t universe_size = 0;
  std::vector<std::vector<Element>> sets;
  std::optional<Element> special;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;
};

/// Sets are nonempty, duplicate-free and inside the universe.
void validate_set_system(const SetSystem& system);

struct Digraph {
  std::size_t n = 0;
  std::vector<VertexPair> arcs;

  friend bool operator==(const Digraph&, const Digraph&) = default;
};

/// Endpoints in range and no repeated arc. Self-loops are allowed.
void validate_digraph(const Digraph& digraph);

struct Partition {
  std::vector<Vertex> part1;
  std::vector<Vertex> part2;

  friend bool operator==(const Partition&, const Partition&) = default;
};

struct SplitterSolution {
  std::vector<Element> chosen;

  friend bool operator==(const SplitterSolution&, const SplitterSolution&) = default;
};

struct Assignment {
  std::vector<bool> value;  // value[i] is variable i + 1

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

enum class ReductionStage { sat_to_setsplitting, setsplitting_to_adp, adp_to_lce };

enum class GadgetKind {
  literal,            // element; a = DIMACS literal
  special,            // element or vertex s
  variable_set,       // set F_x; a = variable
  clause_set,         // set F_C; a = clause index
  element_vertex,     // d_u; a = element u
  membership_vertex,  // c_u^F; a = set index, b = element u
  checker,            // c_e; a = arc index
  alignment,          // a_v; a = source vertex v
};

/// One gadget object of the target instance and the source object it stands for.
/// All ids are 0-based.
struct GadgetRef {
  GadgetKind kind = GadgetKind::special;
  std::uint32_t id = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const GadgetRef&, const GadgetRef&) = default;
};

struct ReductionMapping {
  ReductionStage stage = ReductionStage::sat_to_setsplitting;
  std::size_t source_size = 0;  // variables, elements or digraph vertices
  std::size_t target_size = 0;  // elements, digraph vertices or signed-graph vertices
  std::vector<GadgetRef> entries;

  friend bool operator==(const ReductionMapping&, const ReductionMapping&) = default;
};

const char* to_string(ReductionStage stage) noexcept;
const char* to_string(GadgetKind kind) noexcept;

// Literal x_i is element 2(i-1), its negation 2(i-1)+1, s is element 2n. One set
// {x, -x} per variable, then {s} plus the literals of each clause.
std::pair<SetSystem, ReductionMapping> sat_to_setsplitting(const CnfFormula& formula);

// d_u is vertex u; c_u^F follow in (set, element) order. Each set's c-vertices form
// a directed cycle in ascending element order (a singleton gives a self-loop), then
// every membership adds (d_u, c_u^F) and (c_u^F, d_u).
std::pair<Digraph, ReductionMapping> setsplitting_to_adp(const SetSystem& system);

// s is vertex 0, checker c_e is 1 + e in arc order, alignment a_v comes last.
// Positive: s c_e and c_(v,w) a_v. Negative: s a_v and c_(v,w) a_w.
// Throws ErrorKind::self_loop, since c_(v,v) would need both signs towards a_v.
std::pair<SignedGraph, ReductionMapping> adp_to_lce(const Digraph& digraph);

bool eval_cnf(const CnfFormula& formula, const Assignment& assignment);
bool verify_setsplitting(const SetSystem& system, const SplitterSolution& x);
/// Both induced subdigraphs are acyclic; a self-loop is a cycle.
bool verify_adp(const Digraph& digraph, const Partition& partition);

struct ExhaustiveOptions {
  std::size_t max_size = 20;
};

/// First splitter in increasing bitmask order over the universe.
std::optional<SplitterSolution> solve_setsplitting_bruteforce(const SetSystem& system,
                                                              const ExhaustiveOptions& options = {});
/// Exhaustive over 2^n side assignments (vertex 0 decided first, part 1 tried first),
/// abandoning a branch once a part holds a cycle.
std::optional<Partition> solve_adp_bruteforce(const Digraph& digraph,
                                              const ExhaustiveOptions& options = {});

/// part 1 holds v with a_v left of s.
Partition lift_lce_to_adp(const Ordering& ord, const ReductionMapping& mapping);

/// Seven blocks: a_v (V1, reverse topological), checkers V1->V2, checkers inside V1
/// (reverse lexicographic), s, checkers inside V2 (lexicographic), checkers V2->V1,
/// a_v (V2, topological). The result is verified against the gadget graph.
Ordering adp_solution_to_lce_ordering(const Partition& partition, const Digraph& digraph,
                                      const ReductionMapping& mapping);

/// V1 = {d_u : u in X} + {c_u^F : u not in X}.
Partition setsplitting_solution_to_adp(const SplitterSolution& x, const SetSystem& system,
                                       const ReductionMapping& mapping);
/// X = {u : d_u in part 1}.
SplitterSolution lift_adp_to_setsplitting(const Partition& partition,
                                          const ReductionMapping& mapping);

/// X = the literals made true.
SplitterSolution sat_solution_to_setsplitting(const Assignment& assignment,
                                              const ReductionMapping& mapping);
/// Complements X when it holds s, then makes every literal in X true.
Assignment lift_setsplitting_to_sat(const SplitterSolution& x, const ReductionMapping& mapping);

/// All three stages with their intermediate instances.
struct SatToLceChain {
  CnfFormula formula;
  SetSystem sets;
  Digraph digraph;
  SignedGraph graph;
  ReductionMapping sat_to_sets;
  ReductionMapping sets_to_digraph;
  ReductionMapping digraph_to_graph;
};

SatToLceChain sat_to_lce(const CnfFormula& formula);
/// Lifts a feasible ordering back to a satisfying assignment, checking every stage.
Assignment lift_lce_to_sat(const Ordering& ord, const SatToLceChain& chain);
/// Maps a satisfying assignment forward to a feasible ordering of the final graph.
Ordering sat_solution_to_lce_ordering(const Assignment& assignment, const SatToLceChain& chain);

}  // namespace lce
