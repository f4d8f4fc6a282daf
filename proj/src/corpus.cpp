#include "crank/corpus.hpp"

#include "crank/dsl.hpp"

namespace crank {
namespace corpus {

const std::vector<std::string>& dsl_expressions() {
  static const std::vector<std::string> expressions = {
      // Degenerate and finite families.
      "empty",
      "point((0)^w)",
      "point((1)^w)",
      "point((01)^w)",
      "point((10)^w)",
      "point(1(0)^w)",
      "point(00(1)^w)",
      "point(0(110)^w)",
      "union(0:point((0)^w), 1:point((1)^w))",
      "union(00:point((0)^w), 01:point((1)^w), 1:point((01)^w))",
      "union(0:empty, 1:point((1)^w))",
      "union(0:empty, 1:empty)",
      // Converging sequences and finite stacks of them.
      "omega(point((0)^w))",
      "omega(point((1)^w))",
      "omega(point((01)^w))",
      "omega(point(0(10)^w))",
      "omega(union(0:point((0)^w), 1:point((1)^w)))",
      "omega(union(0:point((01)^w), 1:point((10)^w)))",
      "omega(empty)",
      "omega(omega(point((0)^w)))",
      "omega(omega(point((10)^w)))",
      "omega(omega(omega(point((0)^w))))",
      "omega(omega(union(0:point((0)^w), 1:point((1)^w))))",
      "union(0:omega(point((0)^w)), 1:omega(point((0)^w)))",
      "union(0:omega(point((0)^w)), 1:omega(point((1)^w)))",
      "union(0:omega(point((0)^w)), 10:omega(point((0)^w)), 11:omega(point((0)^w)))",
      "union(0:omega(point((0)^w)), 10:point((0)^w), 11:omega(omega(point((0)^w))))",
      "union(0:point((0)^w), 1:omega(point((0)^w)))",
      "union(0:empty, 1:omega(point((0)^w)))",
      "union(0:omega(omega(point((0)^w))), 1:omega(point((1)^w)))",
      "union(00:omega(point((0)^w)), 01:omega(point((0)^w)), 10:omega(point((0)^w)), "
      "11:omega(point((0)^w)))",
      // Canonical families of finite rank.
      "canon(0, 1)",
      "canon(0, 2)",
      "canon(0, 3)",
      "canon(1, 1)",
      "canon(1, 2)",
      "canon(1, 3)",
      "canon(2, 1)",
      "canon(2, 2)",
      "canon(2, 3)",
      "canon(3, 1)",
      "canon(3, 2)",
      "canon(4, 1)",
      "omega(canon(1, 2))",
      "omega(canon(2, 1))",
      "omega(canon(1, 3))",
      "union(0:canon(1, 1), 1:canon(1, 2))",
      "union(0:canon(2, 1), 1:canon(1, 1))",
      "union(0:canon(2, 2), 1:canon(2, 1))",
      "union(0:canon(3, 1), 1:canon(2, 3))",
      "union(0:canon(0, 2), 1:canon(1, 1))",
      // Families with a perfect kernel.
      "full",
      "omega(full)",
      "union(0:full, 1:point((1)^w))",
      "union(0:full, 1:omega(point((0)^w)))",
      "union(0:full, 1:canon(2, 1))",
      "union(0:full, 10:full, 11:canon(1, 2))",
      "omega(union(0:full, 1:point((1)^w)))",
  };
  return expressions;
}

namespace {

PathAutomaton two_cycle() {
  PathAutomaton a;
  const int q = a.add_state("q");
  const int r = a.add_state("r");
  const int s = a.add_state("s");
  a.set_root(q);
  a.add_edge(q, 0, r);
  a.add_edge(r, 1, q);
  a.add_edge(q, 1, s);
  a.add_edge(s, 0, q);
  return a;
}

// Three isolated points hanging off a descending chain: rank 0, degree 3.
PathAutomaton staircase() {
  PathAutomaton a;
  const int s2 = a.add_state("s2");
  const int s1 = a.add_state("s1");
  const int s0 = a.add_state("s0");
  const int l2 = a.add_state("l2");
  const int l1 = a.add_state("l1");
  const int l0 = a.add_state("l0");
  a.set_root(s2);
  a.add_edge(s2, 1, s1);
  a.add_edge(s1, 1, s0);
  a.add_edge(s2, 0, l2);
  a.add_edge(s1, 0, l1);
  a.add_edge(s0, 0, l0);
  a.add_edge(l2, 0, l2);
  a.add_edge(l1, 1, l1);
  a.add_edge(l0, 0, l0);
  return a;
}

// A converging sequence written out by hand: lassos with period `period`
// hanging off a 1-ladder.
PathAutomaton lasso_ladder(const std::string& period) {
  PathAutomaton a;
  const int root = a.add_state();
  a.set_root(root);
  a.add_edge(root, 1, root);
  // the lasso grafted under 0
  int prev = PathAutomaton::kNone;
  int first = PathAutomaton::kNone;
  for (std::size_t i = 0; i < period.size(); ++i) {
    const int q = a.add_state();
    if (i == 0)
      first = q;
    else
      a.add_edge(prev, period[i - 1] - '0', q);
    prev = q;
  }
  a.add_edge(prev, period.back() - '0', first);
  a.add_edge(root, 0, first);
  return a;
}

// Kernel on one side, ordinal rank on the other.
PathAutomaton mixed_kernel() {
  PathAutomaton a;
  const int root = a.add_state("root");
  const int full = a.add_state("full");
  const int conv = a.add_state("conv");
  const int tail = a.add_state("tail");
  a.set_root(root);
  a.add_edge(root, 0, full);
  a.add_edge(full, 0, full);
  a.add_edge(full, 1, full);
  a.add_edge(root, 1, conv);
  a.add_edge(conv, 1, conv);
  a.add_edge(conv, 0, tail);
  a.add_edge(tail, 0, tail);
  return a;
}

// Rank 2, degree 1, with two rank-1 points per block (hand-built
// analogue of marking one extra converging sequence per block).
PathAutomaton marked_rank2() {
  PathAutomaton a;
  const int root = a.add_state("root");
  const int split = a.add_state("split");
  const int c0 = a.add_state("c0");
  const int z0 = a.add_state("z0");
  const int c1 = a.add_state("c1");
  const int z1 = a.add_state("z1");
  a.set_root(root);
  a.add_edge(root, 1, root);
  a.add_edge(root, 0, split);
  a.add_edge(split, 0, c0);
  a.add_edge(c0, 1, c0);
  a.add_edge(c0, 0, z0);
  a.add_edge(z0, 0, z0);
  a.add_edge(split, 1, c1);
  a.add_edge(c1, 0, c1);
  a.add_edge(c1, 1, z1);
  a.add_edge(z1, 1, z1);
  return a;
}

} // namespace

const std::vector<NamedAutomaton>& automata() {
  static const std::vector<NamedAutomaton> all = [] {
    std::vector<NamedAutomaton> list;
    for (const std::string& text : dsl_expressions())
      list.push_back({text, compile(parse_family(text))});
    list.push_back({"two-cycle", two_cycle()});
    list.push_back({"staircase", staircase()});
    list.push_back({"mixed-kernel", mixed_kernel()});
    list.push_back({"marked-rank2", marked_rank2()});
    list.push_back({"lasso-ladder-01", lasso_ladder("01")});
    list.push_back({"lasso-ladder-001", lasso_ladder("001")});
    return list;
  }();
  return all;
}

const std::vector<NamedAutomaton>& converging_sequences() {
  static const std::vector<NamedAutomaton> all = [] {
    std::vector<NamedAutomaton> list;
    const std::vector<std::string> points = {"(0)^w",   "(1)^w",  "(01)^w", "(10)^w", "(011)^w",
                                             "(001)^w", "0(1)^w", "1(0)^w", "(0011)^w",
                                             "00(10)^w"};
    for (const std::string& p : points) {
      const std::string text = "omega(point(" + p + "))";
      list.push_back({text, compile(parse_family(text))});
    }
    const std::vector<std::string> periods = {"0",    "1",    "01",    "10",    "001",
                                              "110",  "0101", "0110",  "100",   "11"};
    for (const std::string& v : periods)
      list.push_back({"ladder-" + v, lasso_ladder(v)});
    return list;
  }();
  return all;
}

const std::vector<Ordinal>& ordinals() {
  static const std::vector<Ordinal> all = [] {
    const std::vector<std::string> texts = {
        "0",      "1",     "2",      "3",           "5",       "7",     "w",
        "w+1",    "w+5",   "w*2",    "w*2+1",       "w*3+4",   "w^2",   "w^2+1",
        "w^2+w",  "w^2+w*3+2", "w^2*2", "w^3",      "w^3+w^2*2+w*4+1", "w^w",
        "w^w+w^2", "w^(w+1)", "w^(w^2)"};
    std::vector<Ordinal> list;
    for (const std::string& t : texts)
      list.push_back(parse_ordinal(t));
    return list;
  }();
  return all;
}

} // namespace corpus
} // namespace crank
