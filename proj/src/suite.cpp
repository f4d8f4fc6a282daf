#include "crank/suite.hpp"

#include "crank/corpus.hpp"
#include "crank/dsl.hpp"
#include "crank/naive.hpp"
#include "crank/trace_algebra.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace crank {
namespace suite {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) {
      pass = false;
      detail = why;
    }
  }
  void require(bool ok, const std::string& why) {
    if (!ok)
      fail(why);
  }
};

bool same_points(const std::optional<std::vector<UPWord>>& a,
                 const std::optional<std::vector<UPWord>>& b) {
  if (a.has_value() != b.has_value())
    return false;
  if (!a)
    return true;
  std::vector<UPWord> x = *a, y = *b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

Check criterion_e_minimal() {
  Check c;
  int count = 0;
  for (const auto& [name, a] : corpus::converging_sequences()) {
    ++count;
    const DerivativeReport r = rank_degree(a);
    c.require(r.rank == RankValue::of(1u) && r.degree == 1,
              name + ": expected rank (1,1), got " + to_string(r.rank));
    const std::vector<UPWord> limits = enumerate_finite_paths(derivative(prune(a)));
    c.require(limits.size() == 1, name + ": expected exactly one accumulation point");
  }
  if (c.pass)
    c.detail = std::to_string(count) + " converging sequences, all rank (1,1)";
  return c;
}

Check criterion_canon21() {
  Check c;
  const FamilyExpr e = parse_family("canon(2,1)");
  const Profile p = evaluate(e);
  c.require(p.rank == RankValue::of(2u) && p.degree == 1, "evaluate(canon(2,1)) != (2,1)");
  const PathAutomaton a = compile(e);
  const DerivativeReport r = rank_degree(a);
  c.require(r.rank == RankValue::of(2u) && r.degree == 1, "compiled canon(2,1) != (2,1)");
  c.require(same_points(p.top_points, r.top_points), "top points disagree");
  const UPWord ones("", "1");
  c.require(point_rank(a, ones) == RankValue::of(2u), "point_rank((1)^w) != 2");
  c.require(is_accumulation_point(a, ones), "(1)^w must accumulate in the whole family");
  for (int n = 0; n < 10; ++n) {
    const Clopen block = Clopen::cylinder(std::string(static_cast<std::size_t>(n), '1') + "0");
    c.require(!is_accumulation_point(restrict_to(a, block), ones),
              "(1)^w must not accumulate in block " + std::to_string(n));
  }
  if (c.pass)
    c.detail = "rank 2, degree 1, limit point outside every block";
  return c;
}

Check criterion_espec_rank1() {
  Check c;
  for (int n = 1; n <= 10; ++n) {
    const Profile p = evaluate(FamilyExpr::canon(Ordinal::nat(1), n));
    c.require(p.espec == CardinalityClass{CardinalityKind::Finite, n},
              "canon(1," + std::to_string(n) + "): espec != " + std::to_string(n));
    c.require(p.degree == n, "canon(1," + std::to_string(n) + "): degree != espec");
  }
  if (c.pass)
    c.detail = "espec(canon(1,n)) = n = degree for n = 1..10";
  return c;
}

Check criterion_espec_rank2() {
  Check c;
  const Profile p = evaluate(parse_family("canon(2,1)"));
  c.require(p.espec == CardinalityClass{CardinalityKind::Aleph0, 0}, "espec(canon(2,1)) != aleph0");
  if (c.pass)
    c.detail = "espec(canon(2,1)) = aleph0";
  return c;
}

Check criterion_closure_invariance() {
  Check c;
  int count = 0;
  for (const std::string& text : corpus::dsl_expressions()) {
    const FamilyExpr e = parse_family(text);
    if (!is_compilable(e))
      continue;
    ++count;
    const Profile p = evaluate(e);
    const DerivativeReport r = rank_degree(compile(e));
    c.require(p.rank == r.rank, text + ": rank mismatch (" + to_string(p.rank) + " vs " +
                                    to_string(r.rank) + ")");
    c.require(p.degree == r.degree, text + ": degree mismatch");
    c.require(same_points(p.top_points, r.top_points), text + ": top point mismatch");
  }
  c.require(count >= 50, "corpus has fewer than 50 compilable expressions");
  if (c.pass)
    c.detail = std::to_string(count) + " expressions, evaluate == automaton analysis";
  return c;
}

Check criterion_trichotomy(std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 200; ++i) {
    const PathAutomaton a = naive::random_automaton(rng, 12);
    const bool kernel_nonempty = !kernel(a).is_empty();
    const bool rank_infinite = rank_degree(a).rank.is_infinity();
    const bool continuum = cardinality_class(a).kind == CardinalityKind::Continuum;
    c.require(kernel_nonempty == rank_infinite && rank_infinite == continuum,
              "automaton #" + std::to_string(i) + ": trichotomy violated");
  }
  if (c.pass)
    c.detail = "200 random automata (seed " + std::to_string(seed) +
               "): kernel <=> rank infty <=> continuum";
  return c;
}

Check criterion_canon_exact() {
  Check c;
  const std::vector<std::string> alphas = {"0", "1", "2",   "3",  "w",
                                           "w+1", "w*2", "w^2", "w^2+w*3+2"};
  for (const std::string& alpha_text : alphas) {
    const Ordinal alpha = parse_ordinal(alpha_text);
    for (int n = 1; n <= 3; ++n) {
      const Profile p = evaluate(FamilyExpr::canon(alpha, n));
      c.require(p.rank == RankValue::of(alpha) && p.degree == n,
                "canon(" + alpha_text + "," + std::to_string(n) + ") != (" + alpha_text + "," +
                    std::to_string(n) + ")");
    }
  }
  if (c.pass)
    c.detail = "canon(alpha,n) exact for 9 ordinals x degrees 1..3";
  return c;
}

Check criterion_derivative_union(std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed + 1);
  for (int i = 0; i < 100; ++i) {
    const PathAutomaton a = naive::random_automaton(rng, 10);
    const PathAutomaton b = naive::random_automaton(rng, 10);
    const PathAutomaton lhs = derivative(prune(set_union(a, b)));
    const PathAutomaton rhs = set_union(derivative(prune(a)), derivative(prune(b)));
    c.require(set_eq(lhs, rhs), "pair #" + std::to_string(i) + ": derivative-union law violated");
  }
  if (c.pass)
    c.detail = "derivative(A u B) == derivative(A) u derivative(B) on 100 random pairs";
  return c;
}

// Independent density check: every access neighbourhood has an isolated
// point iff the least generating set exists.
Check criterion_least_generating() {
  Check c;
  for (const auto& [name, raw] : corpus::automata()) {
    const PathAutomaton a = prune(raw);
    if (a.is_empty())
      continue;
    const GeneratingSetInfo info = least_generating_set_info(a);

    bool dense = true;
    for (int q = 0; q < a.num_states() && dense; ++q) {
      // The q-neighbourhood trace has an isolated point iff its
      // derivative drops something.
      std::string access;
      {
        std::vector<int> prev(static_cast<std::size_t>(a.num_states()), -2);
        std::vector<int> via(static_cast<std::size_t>(a.num_states()), 0);
        std::vector<int> queue{a.root()};
        prev[static_cast<std::size_t>(a.root())] = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          const int s = queue[head];
          for (int bit = 0; bit < 2; ++bit) {
            const int t = a.step(s, bit);
            if (t == PathAutomaton::kNone || prev[static_cast<std::size_t>(t)] != -2)
              continue;
            prev[static_cast<std::size_t>(t)] = s;
            via[static_cast<std::size_t>(t)] = bit;
            queue.push_back(t);
          }
        }
        for (int s = q; prev[static_cast<std::size_t>(s)] != -1;
             s = prev[static_cast<std::size_t>(s)])
          access.insert(access.begin(), static_cast<char>('0' + via[static_cast<std::size_t>(s)]));
      }
      const PathAutomaton trace = restrict_to(a, Clopen::cylinder(access));
      if (set_eq(derivative(trace), trace))
        dense = false;
    }
    c.require(info.exists == dense, name + ": existence disagrees with density check");

    if (info.exists) {
      for (const auto& fam : info.families) {
        const std::size_t bound = 2 * static_cast<std::size_t>(a.num_states()) + 2;
        c.require(naive::isolation_bruteforce(a, fam.point, bound) == naive::Isolation::Isolated,
                  name + ": reported generator " + to_string(fam.point) + " is not isolated");
      }
    } else {
      const PathAutomaton witness = restrict_to(a, *info.counterexample);
      c.require(!witness.is_empty() && set_eq(derivative(witness), witness),
                name + ": counterexample neighbourhood is not isolation-free");
    }
  }
  if (c.pass)
    c.detail = "existence <=> dense isolated points; all reported generators isolated";
  return c;
}

Check criterion_superatomic_iso() {
  Check c;
  for (const auto& [name, raw] : corpus::automata()) {
    const PathAutomaton a = prune(raw);
    if (a.is_empty())
      continue;
    c.require(TraceAlgebra(a).is_superatomic() == !rank_degree(a).rank.is_infinity(),
              name + ": superatomic <=> ordinal rank violated");
  }

  // Ten pairs with equal invariants but different path sets.
  const std::vector<std::pair<int, int>> shapes = {{0, 1}, {0, 2}, {1, 1}, {1, 2}, {1, 3},
                                                   {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
  auto tower = [](int rank, const std::string& point) {
    std::string out = "point(" + point + ")";
    for (int i = 0; i < rank; ++i)
      out = "omega(" + out + ")";
    return out;
  };
  auto comb = [](int n, const std::vector<std::string>& parts) {
    if (n == 1)
      return parts[0];
    std::string out = "union(";
    for (int i = 0; i < n; ++i) {
      if (i > 0)
        out += ", ";
      std::string prefix(static_cast<std::size_t>(i), '1');
      if (i < n - 1)
        prefix += '0';
      out += prefix + ":" + parts[static_cast<std::size_t>(i)];
    }
    return out + ")";
  };
  int checked = 0;
  for (const auto& [rank, degree] : shapes) {
    const PathAutomaton a = compile(FamilyExpr::canon(Ordinal::nat(static_cast<std::uint64_t>(rank)),
                                                      degree));
    std::vector<std::string> parts;
    for (int i = 0; i < degree; ++i)
      parts.push_back(tower(rank, i % 2 == 0 ? "(01)^w" : "(10)^w"));
    const PathAutomaton b = compile(parse_family(comb(degree, parts)));
    c.require(!set_eq(a, b), "iso pair " + std::to_string(checked) + " is not structurally different");
    c.require(iso_equivalent(TraceAlgebra(a), TraceAlgebra(b)),
              "equal invariants must be isomorphic (pair " + std::to_string(checked) + ")");
    ++checked;
  }

  // Ten pairs with unequal invariants.
  for (std::size_t i = 0; i + 1 < shapes.size(); ++i) {
    const auto [r1, d1] = shapes[i];
    const auto [r2, d2] = shapes[i + 1];
    const TraceAlgebra a(compile(FamilyExpr::canon(Ordinal::nat(static_cast<std::uint64_t>(r1)), d1)));
    const TraceAlgebra b(compile(FamilyExpr::canon(Ordinal::nat(static_cast<std::uint64_t>(r2)), d2)));
    c.require(!iso_equivalent(a, b), "unequal invariants must not be isomorphic");
    ++checked;
  }
  {
    const TraceAlgebra a(compile(FamilyExpr::canon(Ordinal::nat(3), 2)));
    const TraceAlgebra b(compile(FamilyExpr::canon(Ordinal::nat(0), 1)));
    c.require(!iso_equivalent(a, b), "unequal invariants must not be isomorphic");
    ++checked;
  }
  if (c.pass)
    c.detail = "superatomic <=> ordinal rank; " + std::to_string(checked) + " iso pairs decided";
  return c;
}

Check criterion_oracle(std::uint64_t seed) {
  Check c;
  auto agree = [&](const std::string& name, const PathAutomaton& a) {
    const DerivativeReport fast = rank_degree(a);
    const DerivativeReport slow = naive::rank_degree(a);
    c.require(fast.rank == slow.rank, name + ": oracle rank mismatch");
    c.require(fast.degree == slow.degree, name + ": oracle degree mismatch");
    c.require(same_points(fast.top_points, slow.top_points), name + ": oracle top points mismatch");
  };
  for (const auto& [name, a] : corpus::automata())
    agree(name, prune(a));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 200; ++i)
    agree("random #" + std::to_string(i), naive::random_automaton(rng, 12));
  if (c.pass)
    c.detail = "definition-direct recomputation agrees on corpus + 200 random automata";
  return c;
}

} // namespace

SuiteResult run_check_suite(std::uint64_t seed) {
  SuiteResult result;
  const auto t0 = Clock::now();

  auto timed = [&](int id, const std::string& name, auto&& fn, double budget) {
    const auto start = Clock::now();
    Check check = fn();
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (budget > 0 && secs >= budget)
      check.fail("exceeded time budget of " + std::to_string(budget) + " s");
    result.criteria.push_back({id, name, check.pass, check.detail, secs});
    result.pass = result.pass && check.pass;
  };

  timed(1, "e-minimal converging sequences", criterion_e_minimal, 1.0);
  timed(2, "canon(2,1) block analysis", criterion_canon21, 0);
  timed(3, "espec of rank-1 families", criterion_espec_rank1, 0);
  timed(4, "espec of canon(2,1)", criterion_espec_rank2, 0);
  timed(5, "closure invariance of rank/degree", criterion_closure_invariance, 30.0);
  timed(6, "cardinality trichotomy", [&] { return criterion_trichotomy(seed); }, 0);
  timed(7, "canon(alpha,n) exactness", criterion_canon_exact, 0);
  timed(8, "derivative-union law", [&] { return criterion_derivative_union(seed); }, 0);
  timed(9, "least generating sets", criterion_least_generating, 0);
  timed(10, "superatomic algebras and isomorphism", criterion_superatomic_iso, 0);
  timed(11, "oracle equivalence", [&] { return criterion_oracle(seed); }, 0);

  result.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  {
    Check overall;
    overall.require(result.seconds < 60.0, "suite exceeded 60 s");
    if (overall.pass)
      overall.detail = "whole suite in " + std::to_string(result.seconds) + " s";
    result.criteria.push_back({12, "suite runtime", overall.pass, overall.detail, 0.0});
    result.pass = result.pass && overall.pass;
  }
  return result;
}

std::string format_report(const SuiteResult& result) {
  std::ostringstream out;
  for (const auto& c : result.criteria) {
    out << (c.pass ? "[ok]  " : "[FAIL] ") << c.id << " " << c.name;
    if (!c.detail.empty())
      out << ": " << c.detail;
    out << "\n";
  }
  out << (result.pass ? "check-suite: pass" : "check-suite: FAIL") << " ("
      << result.seconds << " s)\n";
  return out.str();
}

} // namespace suite
} // namespace crank
