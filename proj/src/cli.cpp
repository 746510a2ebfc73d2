#include "lce/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "lce/bench.hpp"
#include "lce/error.hpp"
#include "lce/generators.hpp"
#include "lce/io.hpp"
#include "lce/proper_interval.hpp"
#include "lce/reductions.hpp"
#include "lce/solvers.hpp"

namespace lce::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Certificate that parsed but failed its verifier.
class Rejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  decided (either verdict), or certificate valid\n"
    "  1  certificate invalid (verify, lift)\n"
    "  2  usage error\n"
    "  3  parse error or inconsistent input file\n"
    "  4  instance exceeds the algorithm's vertex cap\n"
    "  5  instance outside the operation's domain\n"
    "  6  internal error\n";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void emit(const std::string& path, std::ostream& out,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  write(file);
}

template <class T, class Parse>
T parse_file(const std::string& path, Parse parse) {
  std::istringstream in(read_file(path));
  return parse(in);
}

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

std::string violation_text(const Violation& v) {
  std::ostringstream text;
  text << "violation " << v.u1 + 1 << ' ' << v.u2 + 1 << ' ' << v.u + 1 << ' '
       << (v.side == Side::left ? "left" : "right");
  return text.str();
}

/// 1-based part holding a directed cycle, or 0.
int cyclic_part(const Digraph& digraph, const Partition& partition) {
  std::vector<int> side(digraph.n, 0);
  for (Vertex v : partition.part1) side[v] = 1;
  for (Vertex v : partition.part2) side[v] = 2;
  for (int part = 1; part <= 2; ++part) {
    std::vector<std::size_t> indegree(digraph.n, 0);
    std::vector<std::vector<Vertex>> out(digraph.n);
    std::size_t members = 0;
    for (auto [u, v] : digraph.arcs) {
      if (side[u] == part && side[v] == part) {
        out[u].push_back(v);
        ++indegree[v];
      }
    }
    std::vector<Vertex> ready;
    for (Vertex v = 0; v < digraph.n; ++v) {
      if (side[v] != part) continue;
      ++members;
      if (indegree[v] == 0) ready.push_back(v);
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
      Vertex u = ready.back();
      ready.pop_back();
      ++removed;
      for (Vertex v : out[u]) {
        if (--indegree[v] == 0) ready.push_back(v);
      }
    }
    if (removed != members) return part;
  }
  return 0;
}

struct SolveArgs {
  std::string input;
  std::string algo = "auto";
  std::optional<std::size_t> cap;
  std::string isa;
  std::string out;
};

std::optional<kernels::Isa> isa_option(const std::string& name) {
  if (name.empty()) return std::nullopt;
  auto isa = kernels::parse_isa(name);
  if (!isa) throw UsageError("unknown instruction set '" + name + "'");
  if (!kernels::isa_available(*isa)) {
    throw UsageError(std::string("instruction set '") + name + "' is not supported here");
  }
  return isa;
}

int do_solve(const SolveArgs& a, std::ostream& out) {
  const auto isa = isa_option(a.isa);
  const auto g = parse_file<SignedGraph>(a.input, io::parse_signed_graph);
  std::optional<Ordering> result;
  if (a.algo == "complete" || (a.algo == "auto" && is_complete(g))) {
    result = solve_complete(g);
  } else if (a.algo == "brute") {
    BruteForceOptions options;
    if (a.cap) options.max_vertices = *a.cap;
    result = solve_bruteforce(g, options);
  } else {
    DpOptions options;
    if (a.cap) options.max_vertices = *a.cap;
    options.isa = isa;
    result = solve_subset_dp(g, options);
  }
  if (result) check(verify_embedding(g, *result).valid(), "solver returned an invalid ordering");
  emit(a.out, out, [&](std::ostream& o) { io::write_ordering(o, result); });
  return exit_code::ok;
}

int do_verify(const std::string& input, const std::string& certificate, std::ostream& out) {
  const std::string text = read_file(input);
  std::istringstream in(text);
  std::istringstream cert(read_file(certificate));
  switch (io::detect_kind(text)) {
    case io::InstanceKind::signed_graph: {
      const auto g = io::parse_signed_graph(in);
      const auto ord = io::parse_ordering(cert, g.size());
      if (!ord) {
        out << "INVALID no ordering to check\n";
        return exit_code::invalid;
      }
      const auto result = verify_embedding(g, *ord);
      if (result.valid()) break;
      out << "INVALID " << violation_text(*result.violation) << '\n';
      return exit_code::invalid;
    }
    case io::InstanceKind::cnf: {
      const auto formula = io::parse_cnf(in);
      const auto assignment = io::parse_assignment(cert, formula.num_vars);
      if (!assignment) {
        out << "INVALID no assignment to check\n";
        return exit_code::invalid;
      }
      for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
        CnfFormula single{formula.num_vars, {formula.clauses[c]}};
        if (!eval_cnf(single, *assignment)) {
          out << "INVALID clause " << c + 1 << " unsatisfied\n";
          return exit_code::invalid;
        }
      }
      break;
    }
    case io::InstanceKind::set_system: {
      const auto system = io::parse_set_system(in);
      const auto x = io::parse_splitter(cert, system.universe_size);
      if (!x) {
        out << "INVALID no splitter to check\n";
        return exit_code::invalid;
      }
      for (std::size_t s = 0; s < system.sets.size(); ++s) {
        SetSystem single{system.universe_size, {system.sets[s]}, std::nullopt};
        if (!verify_setsplitting(single, *x)) {
          out << "INVALID set " << s + 1 << " not split\n";
          return exit_code::invalid;
        }
      }
      break;
    }
    case io::InstanceKind::digraph: {
      const auto digraph = io::parse_digraph(in);
      const auto partition = io::parse_partition(cert, digraph.n);
      if (!partition) {
        out << "INVALID no partition to check\n";
        return exit_code::invalid;
      }
      if (!verify_adp(digraph, *partition)) {
        out << "INVALID part " << cyclic_part(digraph, *partition) << " contains a cycle\n";
        return exit_code::invalid;
      }
      break;
    }
  }
  out << "VALID\n";
  return exit_code::ok;
}

int do_model(const std::string& input, const std::string& ordering, const std::string& path,
             std::ostream& out) {
  const auto g = parse_file<SignedGraph>(input, io::parse_signed_graph);
  std::istringstream cert(read_file(ordering));
  const auto ord = io::parse_ordering(cert, g.size());
  if (!ord) throw Error(ErrorKind::infeasible_ordering, "no ordering given");
  const auto model = ordering_to_model(g, *ord);
  emit(path, out, [&](std::ostream& o) { io::write_interval_model(o, model); });
  return exit_code::ok;
}

ReductionStage parse_stage(const std::string& name) {
  if (name == "sat2ss") return ReductionStage::sat_to_setsplitting;
  if (name == "ss2adp") return ReductionStage::setsplitting_to_adp;
  if (name == "adp2lce") return ReductionStage::adp_to_lce;
  throw UsageError("unknown stage '" + name + "'");
}

int do_reduce(const std::string& stage, const std::string& input, const std::string& out_path,
              const std::string& map_path, std::ostream& out) {
  std::vector<ReductionMapping> mappings;
  std::function<void(std::ostream&)> write_instance;
  if (stage == "sat2lce") {
    auto chain = sat_to_lce(parse_file<CnfFormula>(input, io::parse_cnf));
    mappings = {chain.sat_to_sets, chain.sets_to_digraph, chain.digraph_to_graph};
    write_instance = [g = chain.graph](std::ostream& o) { io::write_signed_graph(o, g); };
  } else {
    switch (parse_stage(stage)) {
      case ReductionStage::sat_to_setsplitting: {
        auto [system, mapping] = sat_to_setsplitting(parse_file<CnfFormula>(input, io::parse_cnf));
        mappings = {mapping};
        write_instance = [system](std::ostream& o) { io::write_set_system(o, system); };
        break;
      }
      case ReductionStage::setsplitting_to_adp: {
        auto [digraph, mapping] =
            setsplitting_to_adp(parse_file<SetSystem>(input, io::parse_set_system));
        mappings = {mapping};
        write_instance = [digraph](std::ostream& o) { io::write_digraph(o, digraph); };
        break;
      }
      case ReductionStage::adp_to_lce: {
        auto [graph, mapping] = adp_to_lce(parse_file<Digraph>(input, io::parse_digraph));
        mappings = {mapping};
        write_instance = [graph](std::ostream& o) { io::write_signed_graph(o, graph); };
        break;
      }
    }
  }
  emit(out_path, out, write_instance);
  if (!map_path.empty()) {
    emit(map_path, out, [&](std::ostream& o) {
      for (const auto& m : mappings) io::write_mapping(o, m);
    });
  }
  return exit_code::ok;
}

void require_mappings(const std::string& path, const std::vector<ReductionMapping>& expected) {
  std::istringstream in(read_file(path));
  if (io::parse_mappings(in) != expected) {
    throw Error(ErrorKind::invalid_instance, "mapping does not belong to the source instance");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Rejected(what);
}

int do_lift(const std::string& stage, const std::string& source, const std::string& map_path,
            const std::string& certificate, bool forward, const std::string& out_path,
            std::ostream& out) {
  std::istringstream cert(read_file(certificate));
  std::function<void(std::ostream&)> write;

  if (stage == "sat2lce") {
    const auto chain = sat_to_lce(parse_file<CnfFormula>(source, io::parse_cnf));
    require_mappings(map_path, {chain.sat_to_sets, chain.sets_to_digraph, chain.digraph_to_graph});
    if (forward) {
      auto assignment = io::parse_assignment(cert, chain.formula.num_vars);
      std::optional<Ordering> ord;
      if (assignment) {
        require(eval_cnf(chain.formula, *assignment), "assignment does not satisfy the formula");
        ord = sat_solution_to_lce_ordering(*assignment, chain);
        check(verify_embedding(chain.graph, *ord).valid(), "forward map produced a bad ordering");
      }
      write = [ord](std::ostream& o) { io::write_ordering(o, ord); };
    } else {
      auto ord = io::parse_ordering(cert, chain.graph.size());
      std::optional<Assignment> assignment;
      if (ord) {
        require(verify_embedding(chain.graph, *ord).valid(), "ordering is not an embedding");
        assignment = lift_lce_to_sat(*ord, chain);
        check(eval_cnf(chain.formula, *assignment), "lift produced a bad assignment");
      }
      write = [assignment](std::ostream& o) { io::write_assignment(o, assignment); };
    }
    emit(out_path, out, write);
    return exit_code::ok;
  }

  switch (parse_stage(stage)) {
    case ReductionStage::sat_to_setsplitting: {
      const auto formula = parse_file<CnfFormula>(source, io::parse_cnf);
      const auto [system, mapping] = sat_to_setsplitting(formula);
      require_mappings(map_path, {mapping});
      if (forward) {
        auto assignment = io::parse_assignment(cert, formula.num_vars);
        std::optional<SplitterSolution> x;
        if (assignment) {
          require(eval_cnf(formula, *assignment), "assignment does not satisfy the formula");
          x = sat_solution_to_setsplitting(*assignment, mapping);
          check(verify_setsplitting(system, *x), "forward map produced a bad splitter");
        }
        write = [x](std::ostream& o) { io::write_splitter(o, x); };
      } else {
        auto x = io::parse_splitter(cert, system.universe_size);
        std::optional<Assignment> assignment;
        if (x) {
          require(verify_setsplitting(system, *x), "splitter does not split every set");
          assignment = lift_setsplitting_to_sat(*x, mapping);
          check(eval_cnf(formula, *assignment), "lift produced a bad assignment");
        }
        write = [assignment](std::ostream& o) { io::write_assignment(o, assignment); };
      }
      break;
    }
    case ReductionStage::setsplitting_to_adp: {
      const auto system = parse_file<SetSystem>(source, io::parse_set_system);
      const auto [digraph, mapping] = setsplitting_to_adp(system);
      require_mappings(map_path, {mapping});
      if (forward) {
        auto x = io::parse_splitter(cert, system.universe_size);
        std::optional<Partition> partition;
        if (x) {
          require(verify_setsplitting(system, *x), "splitter does not split every set");
          partition = setsplitting_solution_to_adp(*x, system, mapping);
          check(verify_adp(digraph, *partition), "forward map produced a bad partition");
        }
        write = [partition](std::ostream& o) { io::write_partition(o, partition); };
      } else {
        auto partition = io::parse_partition(cert, digraph.n);
        std::optional<SplitterSolution> x;
        if (partition) {
          require(verify_adp(digraph, *partition), "a part contains a cycle");
          x = lift_adp_to_setsplitting(*partition, mapping);
          check(verify_setsplitting(system, *x), "lift produced a bad splitter");
        }
        write = [x](std::ostream& o) { io::write_splitter(o, x); };
      }
      break;
    }
    case ReductionStage::adp_to_lce: {
      const auto digraph = parse_file<Digraph>(source, io::parse_digraph);
      const auto [graph, mapping] = adp_to_lce(digraph);
      require_mappings(map_path, {mapping});
      if (forward) {
        auto partition = io::parse_partition(cert, digraph.n);
        std::optional<Ordering> ord;
        if (partition) {
          require(verify_adp(digraph, *partition), "a part contains a cycle");
          ord = adp_solution_to_lce_ordering(*partition, digraph, mapping);
          check(verify_embedding(graph, *ord).valid(), "forward map produced a bad ordering");
        }
        write = [ord](std::ostream& o) { io::write_ordering(o, ord); };
      } else {
        auto ord = io::parse_ordering(cert, graph.size());
        std::optional<Partition> partition;
        if (ord) {
          require(verify_embedding(graph, *ord).valid(), "ordering is not an embedding");
          partition = lift_lce_to_adp(*ord, mapping);
          check(verify_adp(digraph, *partition), "lift produced a bad partition");
        }
        write = [partition](std::ostream& o) { io::write_partition(o, partition); };
      }
      break;
    }
  }
  emit(out_path, out, write);
  return exit_code::ok;
}

struct GenArgs {
  std::string kind;
  std::size_t n = 10;
  double p_pos = 0.25;
  double p_neg = 0.25;
  std::optional<double> span;
  std::size_t vars = 4;
  std::size_t clauses = 4;
  std::uint64_t seed = 1;
  std::string out;
};

int do_gen(const GenArgs& a, std::ostream& out) {
  if (a.kind == "random-cnf") {
    const auto formula = gen::random_cnf(a.vars, a.clauses, a.seed);
    emit(a.out, out, [&](std::ostream& o) { io::write_cnf(o, formula); });
    return exit_code::ok;
  }
  const auto g = a.kind == "random-sg"
                     ? gen::random_signed_graph(a.n, a.p_pos, a.p_neg, a.seed)
                     : gen::planted_complete(a.n, a.span.value_or(gen::default_span(a.n)), a.seed);
  emit(a.out, out, [&](std::ostream& o) { io::write_signed_graph(o, g); });
  return exit_code::ok;
}

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::overlap:
    case ErrorKind::range:
    case ErrorKind::loop:
    case ErrorKind::duplicate:
    case ErrorKind::bijection:
    case ErrorKind::parse:
    case ErrorKind::invalid_instance:
    case ErrorKind::invalid_certificate:
      return exit_code::parse;
    case ErrorKind::cap_exceeded:
      return exit_code::cap;
    case ErrorKind::incomplete:
    case ErrorKind::infeasible_ordering:
    case ErrorKind::invalid_model:
    case ErrorKind::self_loop:
    case ErrorKind::membership:
      return exit_code::rejected;
  }
  return exit_code::internal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Line cluster embedding of signed graphs: solvers, reductions and tools", "lce"};
  app.footer(kExitCodes);
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Find a feasible ordering or report INFEASIBLE");
  solve->add_option("input", solve_args.input, "Signed graph file")->required();
  solve->add_option("--algo", solve_args.algo, "auto, dp, brute or complete")
      ->check(CLI::IsMember({"auto", "dp", "brute", "complete"}));
  solve->add_option("--cap", solve_args.cap, "Vertex cap for dp (default 30) or brute (default 10)");
  solve->add_option("--isa", solve_args.isa, "Kernel instruction set for dp: scalar or avx2");
  solve->add_option("-o,--out", solve_args.out, "Output file");

  std::string verify_input;
  std::string verify_cert;
  auto* verify = app.add_subcommand("verify", "Check a certificate; exit 0 if valid, 1 if not");
  verify->add_option("input", verify_input, "Instance file (sg, cnf, ss or dg)")->required();
  verify->add_option("certificate", verify_cert, "Ordering, assignment, splitter or partition")
      ->required();

  std::string model_input;
  std::string model_ord;
  std::string model_out;
  auto* model = app.add_subcommand("model", "Interval model of a feasible complete instance");
  model->add_option("input", model_input, "Complete signed graph file")->required();
  model->add_option("ordering", model_ord, "Feasible ordering file")->required();
  model->add_option("-o,--out", model_out, "Output file");

  std::string reduce_stage;
  std::string reduce_input;
  std::string reduce_out;
  std::string reduce_map;
  auto* reduce = app.add_subcommand("reduce", "Translate an instance along the reduction chain");
  reduce->add_option("stage", reduce_stage, "sat2ss, ss2adp, adp2lce or sat2lce")
      ->required()
      ->check(CLI::IsMember({"sat2ss", "ss2adp", "adp2lce", "sat2lce"}));
  reduce->add_option("input", reduce_input, "Source instance file")->required();
  reduce->add_option("-o,--out", reduce_out, "Target instance file");
  reduce->add_option("-m,--map", reduce_map, "Mapping file");

  std::string lift_stage;
  std::string lift_source;
  std::string lift_map;
  std::string lift_cert;
  std::string lift_out;
  bool lift_forward = false;
  auto* lift = app.add_subcommand("lift", "Map a target certificate back to the source instance");
  lift->add_option("stage", lift_stage, "sat2ss, ss2adp, adp2lce or sat2lce")
      ->required()
      ->check(CLI::IsMember({"sat2ss", "ss2adp", "adp2lce", "sat2lce"}));
  lift->add_option("source", lift_source, "Source instance file")->required();
  lift->add_option("mapping", lift_map, "Mapping file written by reduce")->required();
  lift->add_option("certificate", lift_cert, "Certificate to translate")->required();
  lift->add_flag("--forward", lift_forward,
                 "Map a source certificate to the target instance instead");
  lift->add_option("-o,--out", lift_out, "Output file");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("kind", gen_args.kind, "random-sg, planted-complete or random-cnf")
      ->required()
      ->check(CLI::IsMember({"random-sg", "planted-complete", "random-cnf"}));
  gen_cmd->add_option("-n,--vertices", gen_args.n, "Vertex count")->capture_default_str();
  gen_cmd->add_option("--p-pos", gen_args.p_pos, "Positive pair probability")->capture_default_str();
  gen_cmd->add_option("--p-neg", gen_args.p_neg, "Negative pair probability")->capture_default_str();
  gen_cmd->add_option("--span", gen_args.span, "Range of left endpoints (default n/8, at least 1)");
  gen_cmd->add_option("--vars", gen_args.vars, "CNF variable count")->capture_default_str();
  gen_cmd->add_option("--clauses", gen_args.clauses, "CNF clause count")->capture_default_str();
  gen_cmd->add_option("--seed", gen_args.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("-o,--out", gen_args.out, "Output file");

  bench::BenchOptions bench_args;
  std::string bench_isa;
  auto* bench_cmd = app.add_subcommand("bench", "Time the subset dynamic program on random graphs");
  bench_cmd->add_option("--n-min", bench_args.n_min, "Smallest vertex count")
      ->capture_default_str();
  bench_cmd->add_option("--n-max", bench_args.n_max, "Largest vertex count")
      ->capture_default_str();
  bench_cmd->add_option("--instances", bench_args.instances, "Instances per vertex count")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench_args.seed, "Random seed")->capture_default_str();
  bench_cmd->add_option("--p-pos", bench_args.p_pos, "Positive pair probability")
      ->capture_default_str();
  bench_cmd->add_option("--p-neg", bench_args.p_neg, "Negative pair probability")
      ->capture_default_str();
  bench_cmd->add_option("--rounds", bench_args.rounds,
                        "Passes over all instances; the fastest run of each is kept")
      ->capture_default_str();
  bench_cmd->add_option("--isa", bench_isa, "Kernel instruction set: scalar or avx2");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::usage;
  }

  try {
    if (*solve) return do_solve(solve_args, out);
    if (*verify) return do_verify(verify_input, verify_cert, out);
    if (*model) return do_model(model_input, model_ord, model_out, out);
    if (*reduce) return do_reduce(reduce_stage, reduce_input, reduce_out, reduce_map, out);
    if (*lift) {
      return do_lift(lift_stage, lift_source, lift_map, lift_cert, lift_forward, lift_out, out);
    }
    if (*gen_cmd) return do_gen(gen_args, out);
    if (*bench_cmd) {
      bench_args.isa = isa_option(bench_isa);
      bench::write_report(out, bench::run_bench(bench_args));
      return exit_code::ok;
    }
  } catch (const UsageError& e) {
    err << "lce: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::invalid_argument& e) {
    err << "lce: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const Rejected& e) {
    err << "lce: certificate rejected: " << e.what() << '\n';
    return exit_code::invalid;
  } catch (const ParseError& e) {
    err << "lce: parse error: " << e.what() << '\n';
    return exit_code::parse;
  } catch (const Error& e) {
    err << "lce: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    err << "lce: internal error: " << e.what() << '\n';
    return exit_code::internal;
  }
  return exit_code::usage;
}

}  // namespace lce::cli
