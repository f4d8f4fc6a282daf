// cantor-rank: rank/degree analysis of closed families of infinite bit
// words, given as path automata or as family expressions.

#include "crank/corpus.hpp"
#include "crank/dsl.hpp"
#include "crank/errors.hpp"
#include "crank/naive.hpp"
#include "crank/suite.hpp"
#include "crank/trace_algebra.hpp"

#include <filesystem>
#include <optional>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitSuiteFailure = 3;

const char* kUsage = R"(usage: cantor-rank <command> [arguments]

commands:
  eval "<expr>"                     rank/degree/top/espec of a family expression
  rank <file> [--dump-steps DIR]    derivative analysis of an automaton file
  compile "<expr>" <out-file>       write the closure automaton of an expression
  decompose <file>                  split into minimal parts of full rank
  invariants <file>                 Cantor-Bendixson invariants of the trace algebra
  iso <file-a> <file-b>             compare trace algebras by their invariants
  lgs <file>                        least generating set decision
  kernel <file> [--out FILE]        perfect kernel of the family
  acc <file> "<word>"               accumulation point test
  pointrank <file> "<word>"         Cantor-Bendixson rank of a point
  export-dot <file> [out.dot]       Graphviz export
  check-suite [--seed N]            run the full acceptance battery

expressions:  empty | full | point(u(v)^w) | union(p:e, ...) | omega(e)
              | diag(ordinal) | canon(ordinal, n)
ordinals:     0, 5, w, w*3, w^2+w*3+2, w^(w+1)
words:        110(0)^w, (10)^w
)";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw crank::ParseError("cannot open '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out)
    throw crank::ParseError("cannot write '" + path + "'", 0);
  out << content;
}

crank::PathAutomaton load_automaton(const std::string& path) {
  try {
    return prune(crank::parse_automaton(read_file(path)));
  } catch (crank::ParseError& err) {
    throw crank::ParseError(path + ":" + std::to_string(err.position) + ": " + err.what(),
                            err.position, err.is_line);
  }
}

std::string espec_text(const crank::CardinalityClass& c) {
  switch (c.kind) {
  case crank::CardinalityKind::Finite: return std::to_string(c.count);
  case crank::CardinalityKind::Aleph0: return "aleph0";
  case crank::CardinalityKind::Continuum: return "continuum";
  }
  return "?";
}

void print_degree_and_top(const std::optional<int>& degree,
                          const std::optional<std::vector<crank::UPWord>>& top) {
  if (degree)
    std::cout << "degree: " << *degree << "\n";
  else
    std::cout << "degree: -\n";
  if (top) {
    std::cout << "top:";
    for (const auto& w : *top)
      std::cout << " " << to_string(w);
    std::cout << "\n";
  } else {
    std::cout << "top: -\n";
  }
}

int cmd_eval(const std::vector<std::string>& args) {
  if (args.size() != 1) {
    std::cerr << "eval expects one expression\n";
    return kExitUsage;
  }
  const crank::Profile p = crank::evaluate(crank::parse_family(args[0]));
  std::cout << "rank: " << to_string(p.rank) << "\n";
  print_degree_and_top(p.degree, p.top_points);
  std::cout << "espec: " << espec_text(p.espec) << "\n";
  return kExitOk;
}

int cmd_rank(const std::vector<std::string>& args) {
  std::string path, dump_dir;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--dump-steps" && i + 1 < args.size())
      dump_dir = args[++i];
    else if (path.empty())
      path = args[i];
    else {
      std::cerr << "rank expects one file\n";
      return kExitUsage;
    }
  }
  if (path.empty()) {
    std::cerr << "rank expects one file\n";
    return kExitUsage;
  }
  const crank::PathAutomaton a = load_automaton(path);
  const crank::DerivativeReport r = crank::rank_degree(a);
  std::cout << "rank: " << to_string(r.rank) << "\n";
  print_degree_and_top(r.degree, r.top_points);
  if (r.rank.is_infinity()) {
    const int n = r.chain.back().num_states();
    std::cout << "kernel: " << n << (n == 1 ? " state" : " states") << "\n";
  }
  if (!dump_dir.empty()) {
    std::filesystem::create_directories(dump_dir);
    for (std::size_t i = 0; i < r.chain.size(); ++i)
      write_file(dump_dir + "/step" + std::to_string(i) + ".dot", to_dot(r.chain[i]));
    std::cout << "steps: " << r.chain.size() << " dot files in " << dump_dir << "\n";
  }
  return kExitOk;
}

int cmd_compile(const std::vector<std::string>& args) {
  if (args.size() != 2) {
    std::cerr << "compile expects an expression and an output file\n";
    return kExitUsage;
  }
  const crank::PathAutomaton a = crank::compile(crank::parse_family(args[0]));
  write_file(args[1], to_string(a));
  std::cout << "states: " << a.num_states() << "\n";
  return kExitOk;
}

int cmd_decompose(const std::vector<std::string>& args) {
  if (args.size() != 1) {
    std::cerr << "decompose expects one file\n";
    return kExitUsage;
  }
  const crank::PathAutomaton a = load_automaton(args[0]);
  const std::vector<crank::Clopen> parts = crank::decompose_alpha_minimal(a);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const crank::DerivativeReport r = crank::rank_degree(restrict_to(a, parts[i]));
    std::cout << "part " << i + 1 << ": " << to_string(parts[i]) << " rank: " << to_string(r.rank)
              << " degree: " << *r.degree << "\n";
  }
  return kExitOk;
}

int cmd_invariants(const std::vector<std::string>& args) {
  if (args.size() != 1) {
    std::cerr << "invariants expects one file\n";
    return kExitUsage;
  }
  const crank::TraceAlgebra algebra(load_automaton(args[0]));
  const auto [rank, degree] = algebra.cb_invariants();
  std::cout << "rank: " << to_string(rank) << "\n";
  std::cout << "degree: " << degree << "\n";
  return kExitOk;
}

int cmd_iso(const std::vector<std::string>& args) {
  if (args.size() != 2) {
    std::cerr << "iso expects two files\n";
    return kExitUsage;
  }
  const crank::TraceAlgebra a(load_automaton(args[0]));
  const crank::TraceAlgebra b(load_automaton(args[1]));
  std::cout << "isomorphic: " << (iso_equivalent(a, b) ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_lgs(const std::vector<std::string>& args) {
  if (args.size() != 1) {
    std::cerr << "lgs expects one file\n";
    return kExitUsage;
  }
  const crank::PathAutomaton a = load_automaton(args[0]);
  const crank::GeneratingSetInfo info = crank::least_generating_set_info(a);
  if (info.exists) {
    std::cout << "least generating set: isolated points (dense)\n";
    for (const auto& fam : info.families)
      std::cout << "generator: " << to_string(fam.point) << " [state " << a.name(fam.state)
                << ", access " << (fam.access.empty() ? "-" : fam.access) << "]\n";
  } else if (crank::deterministic_suffix_states(a).empty()) {
    std::cout << "least generating set: none (no isolated points)\n";
  } else {
    std::cout << "least generating set: none\n";
    std::cout << "witness: " << to_string(*info.counterexample) << "\n";
  }
  return kExitOk;
}

int cmd_kernel(const std::vector<std::string>& args) {
  std::string path, out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--out" && i + 1 < args.size())
      out = args[++i];
    else if (path.empty())
      path = args[i];
    else {
      std::cerr << "kernel expects one file\n";
      return kExitUsage;
    }
  }
  if (path.empty()) {
    std::cerr << "kernel expects one file\n";
    return kExitUsage;
  }
  const crank::PathAutomaton k = crank::kernel(load_automaton(path));
  if (k.is_empty())
    std::cout << "kernel: empty\n";
  else
    std::cout << "kernel: " << k.num_states() << (k.num_states() == 1 ? " state" : " states")
              << "\n";
  if (!out.empty())
    write_file(out, to_string(k));
  return kExitOk;
}

int cmd_acc(const std::vector<std::string>& args) {
  if (args.size() != 2) {
    std::cerr << "acc expects a file and a word\n";
    return kExitUsage;
  }
  const crank::PathAutomaton a = load_automaton(args[0]);
  const crank::UPWord w = crank::parse_upword(args[1]);
  std::cout << "accumulation point: " << (is_accumulation_point(a, w) ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_pointrank(const std::vector<std::string>& args) {
  if (args.size() != 2) {
    std::cerr << "pointrank expects a file and a word\n";
    return kExitUsage;
  }
  const crank::PathAutomaton a = load_automaton(args[0]);
  const crank::UPWord w = crank::parse_upword(args[1]);
  std::cout << to_string(point_rank(a, w)) << "\n";
  return kExitOk;
}

int cmd_export_dot(const std::vector<std::string>& args) {
  if (args.empty() || args.size() > 2) {
    std::cerr << "export-dot expects a file and an optional output path\n";
    return kExitUsage;
  }
  const crank::PathAutomaton a = crank::parse_automaton(read_file(args[0]));
  if (args.size() == 2)
    write_file(args[1], to_dot(a));
  else
    std::cout << to_dot(a);
  return kExitOk;
}

int cmd_check_suite(const std::vector<std::string>& args) {
  std::uint64_t seed = crank::suite::kDefaultSeed;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--seed" && i + 1 < args.size()) {
      try {
        seed = std::stoull(args[++i]);
      } catch (const std::exception&) {
        std::cerr << "invalid seed '" << args[i] << "'\n";
        return kExitUsage;
      }
    } else {
      std::cerr << "check-suite takes only --seed N\n";
      return kExitUsage;
    }
  }
  const crank::suite::SuiteResult result = crank::suite::run_check_suite(seed);
  std::cout << crank::suite::format_report(result);
  return result.pass ? kExitOk : kExitSuiteFailure;
}

} // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    std::cout << kUsage;
    return args.empty() ? kExitUsage : kExitOk;
  }
  const std::string command = args[0];
  args.erase(args.begin());
  try {
    if (command == "eval")
      return cmd_eval(args);
    if (command == "rank")
      return cmd_rank(args);
    if (command == "compile")
      return cmd_compile(args);
    if (command == "decompose")
      return cmd_decompose(args);
    if (command == "invariants")
      return cmd_invariants(args);
    if (command == "iso")
      return cmd_iso(args);
    if (command == "lgs")
      return cmd_lgs(args);
    if (command == "kernel")
      return cmd_kernel(args);
    if (command == "acc")
      return cmd_acc(args);
    if (command == "pointrank")
      return cmd_pointrank(args);
    if (command == "export-dot")
      return cmd_export_dot(args);
    if (command == "check-suite")
      return cmd_check_suite(args);
    std::cerr << "unknown command '" << command << "'\n" << kUsage;
    return kExitUsage;
  } catch (const crank::ParseError& err) {
    std::cerr << "parse error at " << (err.is_line ? "line " : "position ") << err.position << ": "
              << err.what() << "\n";
    return kExitUsage;
  } catch (const crank::PreconditionError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitPrecondition;
  }
}
