#include "crank/naive.hpp"

#include "crank/errors.hpp"

#include <algorithm>

namespace crank {
namespace naive {

namespace {

// Exhaustive reachability from q, no shared bookkeeping with the main
// engine's reverse-BFS.
bool residual_is_single_path(const PathAutomaton& a, int start) {
  std::vector<bool> visited(static_cast<std::size_t>(a.num_states()), false);
  std::vector<int> todo{start};
  visited[static_cast<std::size_t>(start)] = true;
  while (!todo.empty()) {
    const int q = todo.back();
    todo.pop_back();
    if (a.out_degree(q) != 1)
      return false;
    for (int b = 0; b < 2; ++b) {
      const int t = a.step(q, b);
      if (t != PathAutomaton::kNone && !visited[static_cast<std::size_t>(t)]) {
        visited[static_cast<std::size_t>(t)] = true;
        todo.push_back(t);
      }
    }
  }
  return true;
}

} // namespace

PathAutomaton derivative(const PathAutomaton& a) {
  if (a.is_empty())
    return a;
  PathAutomaton out;
  std::vector<int> renum(static_cast<std::size_t>(a.num_states()), PathAutomaton::kNone);
  for (int q = 0; q < a.num_states(); ++q)
    if (!residual_is_single_path(a, q))
      renum[static_cast<std::size_t>(q)] = out.add_state(a.name(q));
  if (renum[static_cast<std::size_t>(a.root())] == PathAutomaton::kNone)
    return PathAutomaton::empty();
  out.set_root(renum[static_cast<std::size_t>(a.root())]);
  for (int q = 0; q < a.num_states(); ++q) {
    if (renum[static_cast<std::size_t>(q)] == PathAutomaton::kNone)
      continue;
    for (int b = 0; b < 2; ++b) {
      const int t = a.step(q, b);
      if (t != PathAutomaton::kNone && renum[static_cast<std::size_t>(t)] != PathAutomaton::kNone)
        out.add_edge(renum[static_cast<std::size_t>(q)], b, renum[static_cast<std::size_t>(t)]);
    }
  }
  return prune(out);
}

DerivativeReport rank_degree(const PathAutomaton& input) {
  DerivativeReport report;
  report.chain.push_back(prune(input));
  if (report.chain.front().is_empty()) {
    report.rank = RankValue::minus_one();
    return report;
  }
  for (;;) {
    PathAutomaton next = naive::derivative(report.chain.back());
    if (next.is_empty()) {
      report.chain.push_back(std::move(next));
      const std::size_t steps = report.chain.size() - 2;
      report.rank = RankValue::of(static_cast<std::uint64_t>(steps));
      std::vector<UPWord> points = enumerate_finite_paths(report.chain[steps]);
      report.degree = static_cast<int>(points.size());
      report.top_points = std::move(points);
      return report;
    }
    if (set_eq(next, report.chain.back())) {
      report.rank = RankValue::infinity();
      return report;
    }
    report.chain.push_back(std::move(next));
  }
}

CoherenceReport sample_coherence(const FamilyExpr& e, std::size_t n) {
  if (!is_compilable(e))
    throw PreconditionError("sample_coherence: expression is not compilable: " + to_string(e));
  return sample_coherence_against(e, compile(e), n);
}

CoherenceReport sample_coherence_against(const FamilyExpr& e, const PathAutomaton& a,
                                         std::size_t n) {
  CoherenceReport report;

  for (const UPWord& g : enumerate_generators(e, n)) {
    if (!membership(a, g)) {
      report.pass = false;
      report.failure = "generator " + to_string(g) + " is not a member of the closure";
      return report;
    }
  }

  // Representative isolated points must eventually be enumerated.
  if (!a.is_empty()) {
    const GeneratingSetInfo info = least_generating_set_info(a);
    const std::size_t bound = std::max<std::size_t>(n, 200);
    const std::vector<UPWord> generators = enumerate_generators(e, bound);
    for (const auto& fam : info.families) {
      if (std::find(generators.begin(), generators.end(), fam.point) == generators.end()) {
        report.pass = false;
        report.failure = "isolated point " + to_string(fam.point) + " missing from the first " +
                         std::to_string(bound) + " generators";
        return report;
      }
    }
  }
  return report;
}

Isolation isolation_bruteforce(const PathAutomaton& a, const UPWord& w, std::size_t k_max) {
  if (!membership(a, w))
    throw PreconditionError("isolation_bruteforce: " + to_string(w) + " is not a member");
  const PathAutomaton only_w = PathAutomaton::singleton(w);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const Clopen cylinder = Clopen::cylinder(w.unfold(k));
    if (set_eq(restrict_to(a, cylinder), only_w))
      return Isolation::Isolated;
  }
  return Isolation::Unknown;
}

PathAutomaton random_automaton(std::mt19937_64& rng, int max_states) {
  for (;;) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_states));
    PathAutomaton a;
    for (int q = 0; q < n; ++q)
      a.add_state();
    a.set_root(0);
    for (int q = 0; q < n; ++q) {
      const bool both = rng() % 2 == 0;
      if (both) {
        a.add_edge(q, 0, static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
        a.add_edge(q, 1, static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
      } else {
        const int bit = static_cast<int>(rng() % 2);
        a.add_edge(q, bit, static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
      }
    }
    PathAutomaton pruned = prune(a);
    if (!pruned.is_empty())
      return pruned;
  }
}

} // namespace naive
} // namespace crank
