#include "crank/automaton.hpp"

#include "crank/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <sstream>

namespace crank {

PathAutomaton PathAutomaton::full_space() {
  PathAutomaton a;
  const int q = a.add_state();
  a.set_root(q);
  a.add_edge(q, 0, q);
  a.add_edge(q, 1, q);
  return a;
}

PathAutomaton PathAutomaton::singleton(const UPWord& w) {
  PathAutomaton a;
  const std::size_t n = w.prefix().size() + w.period().size();
  for (std::size_t i = 0; i < n; ++i)
    a.add_state();
  a.set_root(0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t to = (i + 1 < n) ? i + 1 : w.prefix().size();
    a.add_edge(static_cast<int>(i), w.bit(i) - '0', static_cast<int>(to));
  }
  return a;
}

int PathAutomaton::add_state(std::string name) {
  next_.push_back({kNone, kNone});
  if (name.empty())
    name = "q" + std::to_string(states_);
  names_.push_back(std::move(name));
  return states_++;
}

void PathAutomaton::add_edge(int from, int bit, int to) {
  assert(from >= 0 && from < states_ && to >= 0 && to < states_);
  assert(bit == 0 || bit == 1);
  next_[static_cast<std::size_t>(from)][static_cast<std::size_t>(bit)] = to;
}

int PathAutomaton::out_degree(int q) const {
  return (step(q, 0) != kNone ? 1 : 0) + (step(q, 1) != kNone ? 1 : 0);
}

namespace {

// Retain exactly the states in `keep` that are reachable from the root
// and lie on an infinite path; state names survive.
PathAutomaton restrict_states(const PathAutomaton& a, std::vector<bool> keep) {
  if (a.is_empty() || a.root() == PathAutomaton::kNone ||
      !keep[static_cast<std::size_t>(a.root())])
    return PathAutomaton::empty();

  // Greatest fixpoint: a state stays only while it has a kept successor.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int q = 0; q < a.num_states(); ++q) {
      if (!keep[static_cast<std::size_t>(q)])
        continue;
      bool has_succ = false;
      for (int b = 0; b < 2; ++b) {
        const int t = a.step(q, b);
        if (t != PathAutomaton::kNone && keep[static_cast<std::size_t>(t)])
          has_succ = true;
      }
      if (!has_succ) {
        keep[static_cast<std::size_t>(q)] = false;
        changed = true;
      }
    }
  }
  if (!keep[static_cast<std::size_t>(a.root())])
    return PathAutomaton::empty();

  // BFS numbering for a deterministic result.
  std::vector<int> renum(static_cast<std::size_t>(a.num_states()), PathAutomaton::kNone);
  std::vector<int> order;
  std::queue<int> queue;
  queue.push(a.root());
  renum[static_cast<std::size_t>(a.root())] = 0;
  order.push_back(a.root());
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop();
    for (int b = 0; b < 2; ++b) {
      const int t = a.step(q, b);
      if (t == PathAutomaton::kNone || !keep[static_cast<std::size_t>(t)] ||
          renum[static_cast<std::size_t>(t)] != PathAutomaton::kNone)
        continue;
      renum[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
      order.push_back(t);
      queue.push(t);
    }
  }

  PathAutomaton r;
  for (const int q : order)
    r.add_state(a.name(q));
  r.set_root(0);
  for (const int q : order) {
    for (int b = 0; b < 2; ++b) {
      const int t = a.step(q, b);
      if (t != PathAutomaton::kNone && keep[static_cast<std::size_t>(t)] &&
          renum[static_cast<std::size_t>(t)] != PathAutomaton::kNone)
        r.add_edge(renum[static_cast<std::size_t>(q)], b, renum[static_cast<std::size_t>(t)]);
    }
  }
  return r;
}

// Merge states with equal residual path sets (Moore partition
// refinement on the pruned automaton).
PathAutomaton merge_equivalent(const PathAutomaton& a) {
  if (a.is_empty())
    return a;
  const std::size_t n = static_cast<std::size_t>(a.num_states());
  std::vector<int> block(n, 0);
  for (;;) {
    std::map<std::array<int, 3>, int> sig_block;
    std::vector<int> next_block(n);
    for (std::size_t q = 0; q < n; ++q) {
      std::array<int, 3> sig;
      sig[0] = block[q];
      for (int b = 0; b < 2; ++b) {
        const int t = a.step(static_cast<int>(q), b);
        sig[static_cast<std::size_t>(b) + 1] = t == PathAutomaton::kNone
                                                   ? -1
                                                   : block[static_cast<std::size_t>(t)];
      }
      auto [it, fresh] = sig_block.try_emplace(sig, static_cast<int>(sig_block.size()));
      next_block[q] = it->second;
    }
    if (next_block == block)
      break;
    block = std::move(next_block);
  }

  const int num_blocks = *std::max_element(block.begin(), block.end()) + 1;
  std::vector<int> representative(static_cast<std::size_t>(num_blocks), PathAutomaton::kNone);
  for (std::size_t q = n; q-- > 0;)
    representative[static_cast<std::size_t>(block[q])] = static_cast<int>(q);

  PathAutomaton r;
  for (int blk = 0; blk < num_blocks; ++blk)
    r.add_state(a.name(representative[static_cast<std::size_t>(blk)]));
  r.set_root(block[static_cast<std::size_t>(a.root())]);
  for (int blk = 0; blk < num_blocks; ++blk) {
    const int q = representative[static_cast<std::size_t>(blk)];
    for (int b = 0; b < 2; ++b) {
      const int t = a.step(q, b);
      if (t != PathAutomaton::kNone)
        r.add_edge(blk, b, block[static_cast<std::size_t>(t)]);
    }
  }
  return restrict_states(r, std::vector<bool>(static_cast<std::size_t>(num_blocks), true));
}

PathAutomaton reduce(const PathAutomaton& a) {
  return merge_equivalent(prune(a));
}

} // namespace

PathAutomaton prune(const PathAutomaton& a) {
  return restrict_states(a, std::vector<bool>(static_cast<std::size_t>(a.num_states()), true));
}

bool membership(const PathAutomaton& a, const UPWord& w) {
  if (a.is_empty())
    return false;
  int q = a.root();
  for (const char c : w.prefix()) {
    q = a.step(q, c - '0');
    if (q == PathAutomaton::kNone)
      return false;
  }
  // Iterate the period until a state repeats at phase 0.
  std::vector<bool> seen(static_cast<std::size_t>(a.num_states()), false);
  for (;;) {
    if (seen[static_cast<std::size_t>(q)])
      return true;
    seen[static_cast<std::size_t>(q)] = true;
    for (const char c : w.period()) {
      q = a.step(q, c - '0');
      if (q == PathAutomaton::kNone)
        return false;
    }
  }
}

namespace {

constexpr int kDead = -2;

int pair_step(const PathAutomaton& a, int q, int bit) {
  if (q == kDead)
    return kDead;
  const int t = a.step(q, bit);
  return t == PathAutomaton::kNone ? kDead : t;
}

// Pair product; `keep` decides which (p, q) combinations stay alive.
PathAutomaton pair_product(const PathAutomaton& a, const PathAutomaton& b,
                           bool union_semantics) {
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> order;
  PathAutomaton r;
  auto intern = [&](std::pair<int, int> pq) {
    auto [it, fresh] = index.try_emplace(pq, static_cast<int>(order.size()));
    if (fresh) {
      order.push_back(pq);
      r.add_state();
    }
    return it->second;
  };

  const int start = intern({a.root(), b.root()});
  r.set_root(start);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto [p, q] = order[i];
    for (int bit = 0; bit < 2; ++bit) {
      const int pn = pair_step(a, p, bit);
      const int qn = pair_step(b, q, bit);
      const bool alive = union_semantics ? (pn != kDead || qn != kDead)
                                         : (pn != kDead && qn != kDead);
      if (alive)
        r.add_edge(static_cast<int>(i), bit, intern({pn, qn}));
    }
  }
  return reduce(r);
}

} // namespace

PathAutomaton set_union(const PathAutomaton& a, const PathAutomaton& b) {
  if (a.is_empty())
    return reduce(b);
  if (b.is_empty())
    return reduce(a);
  return pair_product(a, b, true);
}

PathAutomaton set_intersection(const PathAutomaton& a, const PathAutomaton& b) {
  if (a.is_empty() || b.is_empty())
    return PathAutomaton::empty();
  return pair_product(a, b, false);
}

namespace {

// Automaton of all words whose depth-k prefix lies in the clopen's cells.
PathAutomaton clopen_automaton(const Clopen& c) {
  if (c.is_empty())
    return PathAutomaton::empty();
  if (c.depth() == 0)
    return PathAutomaton::full_space();

  PathAutomaton r;
  std::map<std::string, int> nodes;
  auto intern = [&](const std::string& s) {
    auto [it, fresh] = nodes.try_emplace(s, 0);
    if (fresh)
      it->second = r.add_state();
    return it->second;
  };
  auto viable = [&](const std::string& s) {
    for (const auto& cell : c.cells())
      if (cell.compare(0, s.size(), s) == 0)
        return true;
    return false;
  };

  const int sink = r.add_state("sink");
  r.add_edge(sink, 0, sink);
  r.add_edge(sink, 1, sink);

  std::vector<std::string> frontier = {""};
  r.set_root(intern(""));
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const auto& s : frontier) {
      for (const char bit : {'0', '1'}) {
        const std::string t = s + bit;
        if (!viable(t))
          continue;
        if (t.size() == c.depth()) {
          r.add_edge(intern(s), bit - '0', sink);
        } else {
          r.add_edge(intern(s), bit - '0', intern(t));
          next.push_back(t);
        }
      }
    }
    frontier = std::move(next);
  }
  return reduce(r);
}

} // namespace

PathAutomaton restrict_to(const PathAutomaton& a, const Clopen& c) {
  return set_intersection(a, clopen_automaton(c));
}

bool is_path_subset(const PathAutomaton& a, const PathAutomaton& b) {
  if (a.is_empty())
    return true;
  if (b.is_empty())
    return false;
  // Reaching a pair whose b-component died exhibits a separating word.
  std::map<std::pair<int, int>, bool> seen;
  std::queue<std::pair<int, int>> queue;
  queue.push({a.root(), b.root()});
  seen[{a.root(), b.root()}] = true;
  while (!queue.empty()) {
    const auto [p, q] = queue.front();
    queue.pop();
    for (int bit = 0; bit < 2; ++bit) {
      const int pn = a.step(p, bit);
      if (pn == PathAutomaton::kNone)
        continue;
      const int qn = pair_step(b, q, bit);
      if (qn == kDead)
        return false;
      if (!seen[{pn, qn}]) {
        seen[{pn, qn}] = true;
        queue.push({pn, qn});
      }
    }
  }
  return true;
}

bool set_eq(const PathAutomaton& a, const PathAutomaton& b) {
  return is_path_subset(a, b) && is_path_subset(b, a);
}

std::vector<int> deterministic_suffix_states(const PathAutomaton& a) {
  const std::size_t n = static_cast<std::size_t>(a.num_states());
  std::vector<std::vector<int>> reverse(n);
  std::vector<bool> reaches_branch(n, false);
  std::queue<int> queue;
  for (int q = 0; q < a.num_states(); ++q) {
    for (int b = 0; b < 2; ++b)
      if (a.step(q, b) != PathAutomaton::kNone)
        reverse[static_cast<std::size_t>(a.step(q, b))].push_back(q);
    if (a.out_degree(q) >= 2) {
      reaches_branch[static_cast<std::size_t>(q)] = true;
      queue.push(q);
    }
  }
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop();
    for (const int p : reverse[static_cast<std::size_t>(q)]) {
      if (!reaches_branch[static_cast<std::size_t>(p)]) {
        reaches_branch[static_cast<std::size_t>(p)] = true;
        queue.push(p);
      }
    }
  }
  std::vector<int> d;
  for (int q = 0; q < a.num_states(); ++q)
    if (!reaches_branch[static_cast<std::size_t>(q)])
      d.push_back(q);
  return d;
}

PathAutomaton derivative(const PathAutomaton& a) {
  if (a.is_empty())
    return a;
  const std::vector<int> d = deterministic_suffix_states(a);
  if (d.empty())
    return a;
  std::vector<bool> keep(static_cast<std::size_t>(a.num_states()), true);
  for (const int q : d)
    keep[static_cast<std::size_t>(q)] = false;
  return restrict_states(a, std::move(keep));
}

DerivativeReport rank_degree(const PathAutomaton& input) {
  DerivativeReport report;
  report.chain.push_back(prune(input));
  if (report.chain.front().is_empty()) {
    report.rank = RankValue::minus_one();
    return report;
  }
  for (;;) {
    const PathAutomaton& current = report.chain.back();
    if (deterministic_suffix_states(current).empty()) {
      report.rank = RankValue::infinity();
      return report;
    }
    PathAutomaton next = derivative(current);
    report.chain.push_back(std::move(next));
    if (report.chain.back().is_empty()) {
      const std::size_t steps = report.chain.size() - 2;
      report.rank = RankValue::of(static_cast<std::uint64_t>(steps));
      std::vector<UPWord> points = enumerate_finite_paths(report.chain[steps]);
      report.degree = static_cast<int>(points.size());
      report.top_points = std::move(points);
      return report;
    }
  }
}

PathAutomaton kernel(const PathAutomaton& a) {
  PathAutomaton current = prune(a);
  while (!current.is_empty()) {
    if (deterministic_suffix_states(current).empty())
      return current;
    current = derivative(current);
  }
  return current;
}

namespace {

struct SccInfo {
  std::vector<int> component;    // state -> scc id
  std::vector<bool> nontrivial;  // scc id -> has a cycle
  int count = 0;
};

SccInfo tarjan_scc(const PathAutomaton& a) {
  const std::size_t n = static_cast<std::size_t>(a.num_states());
  SccInfo info;
  info.component.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0;

  struct Frame {
    int q;
    int edge;
  };
  for (int start = 0; start < a.num_states(); ++start) {
    if (index[static_cast<std::size_t>(start)] != -1)
      continue;
    std::vector<Frame> frames{{start, 0}};
    index[static_cast<std::size_t>(start)] = low[static_cast<std::size_t>(start)] = next_index++;
    stack.push_back(start);
    on_stack[static_cast<std::size_t>(start)] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < 2) {
        const int t = a.step(f.q, f.edge++);
        if (t == PathAutomaton::kNone)
          continue;
        if (index[static_cast<std::size_t>(t)] == -1) {
          index[static_cast<std::size_t>(t)] = low[static_cast<std::size_t>(t)] = next_index++;
          stack.push_back(t);
          on_stack[static_cast<std::size_t>(t)] = true;
          frames.push_back({t, 0});
        } else if (on_stack[static_cast<std::size_t>(t)]) {
          low[static_cast<std::size_t>(f.q)] =
              std::min(low[static_cast<std::size_t>(f.q)], index[static_cast<std::size_t>(t)]);
        }
        continue;
      }
      const int q = f.q;
      frames.pop_back();
      if (!frames.empty())
        low[static_cast<std::size_t>(frames.back().q)] =
            std::min(low[static_cast<std::size_t>(frames.back().q)], low[static_cast<std::size_t>(q)]);
      if (low[static_cast<std::size_t>(q)] == index[static_cast<std::size_t>(q)]) {
        const int id = info.count++;
        int member;
        int size = 0;
        bool self_loop = false;
        do {
          member = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(member)] = false;
          info.component[static_cast<std::size_t>(member)] = id;
          ++size;
          for (int b = 0; b < 2; ++b)
            if (a.step(member, b) == member)
              self_loop = true;
        } while (member != q);
        info.nontrivial.push_back(size >= 2 || self_loop);
      }
    }
  }
  return info;
}

} // namespace

CardinalityClass cardinality_class(const PathAutomaton& input) {
  const PathAutomaton a = prune(input);
  if (a.is_empty())
    return {CardinalityKind::Finite, 0};

  const SccInfo scc = tarjan_scc(a);
  bool cycle_with_exit = false;
  for (int q = 0; q < a.num_states(); ++q) {
    const int comp = scc.component[static_cast<std::size_t>(q)];
    if (!scc.nontrivial[static_cast<std::size_t>(comp)])
      continue;
    int inside = 0, outside = 0;
    for (int b = 0; b < 2; ++b) {
      const int t = a.step(q, b);
      if (t == PathAutomaton::kNone)
        continue;
      (scc.component[static_cast<std::size_t>(t)] == comp ? inside : outside)++;
    }
    if (inside >= 2)
      return {CardinalityKind::Continuum, 0};
    if (outside >= 1)
      cycle_with_exit = true;
  }
  if (cycle_with_exit)
    return {CardinalityKind::Aleph0, 0};
  return {CardinalityKind::Finite, static_cast<int>(enumerate_finite_paths(a).size())};
}

std::string to_string(const CardinalityClass& c) {
  switch (c.kind) {
  case CardinalityKind::Finite: return "finite(" + std::to_string(c.count) + ")";
  case CardinalityKind::Aleph0: return "aleph0";
  case CardinalityKind::Continuum: return "continuum";
  }
  return "?";
}

namespace {

void enumerate_paths_rec(const PathAutomaton& a, int q, std::string& bits,
                         std::vector<int>& position, std::vector<UPWord>& out) {
  if (position[static_cast<std::size_t>(q)] >= 0) {
    const std::size_t j = static_cast<std::size_t>(position[static_cast<std::size_t>(q)]);
    out.emplace_back(bits.substr(0, j), bits.substr(j));
    return;
  }
  position[static_cast<std::size_t>(q)] = static_cast<int>(bits.size());
  for (int b = 0; b < 2; ++b) {
    const int t = a.step(q, b);
    if (t == PathAutomaton::kNone)
      continue;
    bits.push_back(static_cast<char>('0' + b));
    enumerate_paths_rec(a, t, bits, position, out);
    bits.pop_back();
  }
  position[static_cast<std::size_t>(q)] = -1;
}

} // namespace

std::vector<UPWord> enumerate_finite_paths(const PathAutomaton& a) {
  std::vector<UPWord> out;
  if (a.is_empty())
    return out;
  std::string bits;
  std::vector<int> position(static_cast<std::size_t>(a.num_states()), -1);
  enumerate_paths_rec(a, a.root(), bits, position, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_accumulation_point(const PathAutomaton& a, const UPWord& w) {
  return membership(derivative(a), w);
}

RankValue point_rank(const PathAutomaton& a, const UPWord& w) {
  if (!membership(a, w))
    throw PreconditionError("point_rank: " + to_string(w) + " is not in the family");
  const DerivativeReport report = rank_degree(a);
  if (report.rank.is_infinity() && membership(report.chain.back(), w))
    return RankValue::infinity();
  std::size_t level = 0;
  for (std::size_t i = 1; i < report.chain.size(); ++i)
    if (membership(report.chain[i], w))
      level = i;
  return RankValue::of(static_cast<std::uint64_t>(level));
}

UPWord find_accumulation_point(const PathAutomaton& a) {
  const PathAutomaton d = derivative(prune(a));
  if (d.is_empty())
    throw PreconditionError("find_accumulation_point: family is finite");
  std::vector<int> position(static_cast<std::size_t>(d.num_states()), -1);
  std::string bits;
  int q = d.root();
  while (position[static_cast<std::size_t>(q)] < 0) {
    position[static_cast<std::size_t>(q)] = static_cast<int>(bits.size());
    const int bit = d.step(q, 0) != PathAutomaton::kNone ? 0 : 1;
    bits.push_back(static_cast<char>('0' + bit));
    q = d.step(q, bit);
  }
  const std::size_t j = static_cast<std::size_t>(position[static_cast<std::size_t>(q)]);
  return UPWord(bits.substr(0, j), bits.substr(j));
}

namespace {

// Shortest (then lexicographically least) words from the root.
std::vector<std::string> access_words(const PathAutomaton& a) {
  std::vector<std::string> access(static_cast<std::size_t>(a.num_states()));
  std::vector<bool> seen(static_cast<std::size_t>(a.num_states()), false);
  std::queue<int> queue;
  seen[static_cast<std::size_t>(a.root())] = true;
  queue.push(a.root());
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop();
    for (int b = 0; b < 2; ++b) {
      const int t = a.step(q, b);
      if (t == PathAutomaton::kNone || seen[static_cast<std::size_t>(t)])
        continue;
      seen[static_cast<std::size_t>(t)] = true;
      access[static_cast<std::size_t>(t)] =
          access[static_cast<std::size_t>(q)] + static_cast<char>('0' + b);
      queue.push(t);
    }
  }
  return access;
}

// The unique infinite run from a deterministic-suffix state.
UPWord forced_tail(const PathAutomaton& a, int q) {
  std::vector<int> position(static_cast<std::size_t>(a.num_states()), -1);
  std::string bits;
  while (position[static_cast<std::size_t>(q)] < 0) {
    position[static_cast<std::size_t>(q)] = static_cast<int>(bits.size());
    const int bit = a.step(q, 0) != PathAutomaton::kNone ? 0 : 1;
    bits.push_back(static_cast<char>('0' + bit));
    q = a.step(q, bit);
  }
  const std::size_t j = static_cast<std::size_t>(position[static_cast<std::size_t>(q)]);
  return UPWord(bits.substr(0, j), bits.substr(j));
}

} // namespace

GeneratingSetInfo least_generating_set_info(const PathAutomaton& a) {
  if (a.is_empty())
    throw PreconditionError("least_generating_set_info: empty family");

  const std::vector<int> d = deterministic_suffix_states(a);
  std::vector<bool> reaches_d(static_cast<std::size_t>(a.num_states()), false);
  {
    std::vector<std::vector<int>> reverse(static_cast<std::size_t>(a.num_states()));
    for (int q = 0; q < a.num_states(); ++q)
      for (int b = 0; b < 2; ++b)
        if (a.step(q, b) != PathAutomaton::kNone)
          reverse[static_cast<std::size_t>(a.step(q, b))].push_back(q);
    std::queue<int> queue;
    for (const int q : d) {
      reaches_d[static_cast<std::size_t>(q)] = true;
      queue.push(q);
    }
    while (!queue.empty()) {
      const int q = queue.front();
      queue.pop();
      for (const int p : reverse[static_cast<std::size_t>(q)])
        if (!reaches_d[static_cast<std::size_t>(p)]) {
          reaches_d[static_cast<std::size_t>(p)] = true;
          queue.push(p);
        }
    }
  }

  GeneratingSetInfo info;
  info.exists = std::find(reaches_d.begin(), reaches_d.end(), false) == reaches_d.end();
  const std::vector<std::string> access = access_words(a);
  if (info.exists) {
    for (const int q : d)
      info.families.push_back({q, access[static_cast<std::size_t>(q)],
                               prepend(access[static_cast<std::size_t>(q)], forced_tail(a, q))});
  } else {
    for (int q = 0; q < a.num_states(); ++q) {
      if (!reaches_d[static_cast<std::size_t>(q)]) {
        info.counterexample = Clopen::cylinder(access[static_cast<std::size_t>(q)]);
        break;
      }
    }
  }
  return info;
}

namespace {

// A word within the given component from `from` to `to` (empty if equal).
std::string in_component_word(const PathAutomaton& a, const SccInfo& scc, int from, int to) {
  if (from == to)
    return "";
  const int comp = scc.component[static_cast<std::size_t>(from)];
  std::vector<std::string> word(static_cast<std::size_t>(a.num_states()));
  std::vector<bool> seen(static_cast<std::size_t>(a.num_states()), false);
  std::queue<int> queue;
  seen[static_cast<std::size_t>(from)] = true;
  queue.push(from);
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop();
    for (int b = 0; b < 2; ++b) {
      const int t = a.step(q, b);
      if (t == PathAutomaton::kNone || scc.component[static_cast<std::size_t>(t)] != comp ||
          seen[static_cast<std::size_t>(t)])
        continue;
      seen[static_cast<std::size_t>(t)] = true;
      word[static_cast<std::size_t>(t)] = word[static_cast<std::size_t>(q)] + static_cast<char>('0' + b);
      if (t == to)
        return word[static_cast<std::size_t>(t)];
      queue.push(t);
    }
  }
  throw PreconditionError("in_component_word: no path inside the component");
}

} // namespace

std::optional<TwoTreeWitness> two_tree_witness(const PathAutomaton& a) {
  const PathAutomaton k = kernel(a);
  if (k.is_empty())
    return std::nullopt;
  const SccInfo scc = tarjan_scc(k);
  const std::vector<std::string> access = access_words(k);
  for (int q = 0; q < k.num_states(); ++q) {
    const int comp = scc.component[static_cast<std::size_t>(q)];
    const int t0 = k.step(q, 0), t1 = k.step(q, 1);
    if (t0 == PathAutomaton::kNone || t1 == PathAutomaton::kNone)
      continue;
    if (scc.component[static_cast<std::size_t>(t0)] != comp ||
        scc.component[static_cast<std::size_t>(t1)] != comp)
      continue;
    TwoTreeWitness w;
    w.state = q;
    w.access = access[static_cast<std::size_t>(q)];
    w.word0 = "0" + in_component_word(k, scc, t0, q);
    w.word1 = "1" + in_component_word(k, scc, t1, q);
    return w;
  }
  // a nonempty kernel is perfect, so some component carries two cycles
  throw std::logic_error("two_tree_witness: kernel has no branching component");
}

std::vector<Clopen> decompose_alpha_minimal(const PathAutomaton& a) {
  const DerivativeReport report = rank_degree(a);
  if (!report.rank.is_ordinal() || report.rank.ordinal().is_zero())
    throw PreconditionError("decompose_alpha_minimal: rank must be an ordinal >= 1, got " +
                            to_string(report.rank));
  const std::vector<UPWord>& points = *report.top_points;
  const int n = *report.degree;
  if (n == 1)
    return {Clopen::whole_space()};

  std::size_t depth = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::size_t pos = 0;
      first_difference(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)], pos);
      depth = std::max(depth, pos + 1);
    }

  std::vector<Clopen> parts;
  Clopen rest = Clopen::whole_space();
  for (int i = 1; i < n; ++i) {
    const Clopen cell = Clopen::cylinder(points[static_cast<std::size_t>(i)].unfold(depth));
    parts.push_back(cell);
    rest = set_intersection(rest, complement(cell));
  }
  parts.insert(parts.begin(), rest);

  for (const Clopen& part : parts) {
    const DerivativeReport check = rank_degree(restrict_to(a, part));
    if (check.rank != report.rank || *check.degree != 1)
      throw PreconditionError("decompose_alpha_minimal: produced a non-minimal part");
  }
  return parts;
}

PathAutomaton parse_automaton(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;

  struct Decl {
    std::size_t line;
    std::vector<std::string> tokens;
  };
  std::vector<Decl> decls;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok)
      tokens.push_back(tok);
    if (!tokens.empty())
      decls.push_back({line_no, std::move(tokens)});
  }

  PathAutomaton a;
  std::map<std::string, int> by_name;
  for (const auto& d : decls) {
    if (d.tokens[0] != "state")
      continue;
    if (d.tokens.size() != 2)
      throw ParseError("automaton: expected 'state NAME'", d.line, true);
    if (by_name.contains(d.tokens[1]))
      throw ParseError("automaton: duplicate state '" + d.tokens[1] + "'", d.line, true);
    by_name[d.tokens[1]] = a.add_state(d.tokens[1]);
  }
  auto lookup = [&](const std::string& name, std::size_t ln) {
    const auto it = by_name.find(name);
    if (it == by_name.end())
      throw ParseError("automaton: undeclared state '" + name + "'", ln, true);
    return it->second;
  };

  bool have_root = false;
  for (const auto& d : decls) {
    if (d.tokens[0] == "state")
      continue;
    if (d.tokens[0] == "root") {
      if (d.tokens.size() != 2)
        throw ParseError("automaton: expected 'root NAME'", d.line, true);
      if (have_root)
        throw ParseError("automaton: duplicate root", d.line, true);
      a.set_root(lookup(d.tokens[1], d.line));
      have_root = true;
    } else if (d.tokens[0] == "edge") {
      if (d.tokens.size() != 4 || (d.tokens[2] != "0" && d.tokens[2] != "1"))
        throw ParseError("automaton: expected 'edge FROM BIT TO'", d.line, true);
      const int from = lookup(d.tokens[1], d.line);
      const int bit = d.tokens[2][0] - '0';
      if (a.step(from, bit) != PathAutomaton::kNone)
        throw ParseError("automaton: duplicate edge from '" + d.tokens[1] + "' on " + d.tokens[2],
                         d.line, true);
      a.add_edge(from, bit, lookup(d.tokens[3], d.line));
    } else {
      throw ParseError("automaton: unknown directive '" + d.tokens[0] + "'", d.line, true);
    }
  }
  if (a.num_states() > 0 && !have_root)
    throw ParseError("automaton: missing root", line_no, true);
  return a;
}

std::string to_string(const PathAutomaton& a) {
  std::string out;
  for (int q = 0; q < a.num_states(); ++q)
    out += "state " + a.name(q) + "\n";
  if (a.root() != PathAutomaton::kNone)
    out += "root " + a.name(a.root()) + "\n";
  for (int q = 0; q < a.num_states(); ++q)
    for (int b = 0; b < 2; ++b)
      if (a.step(q, b) != PathAutomaton::kNone)
        out += "edge " + a.name(q) + " " + std::to_string(b) + " " + a.name(a.step(q, b)) + "\n";
  return out;
}

std::string to_dot(const PathAutomaton& a) {
  std::string out = "digraph family {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (int q = 0; q < a.num_states(); ++q) {
    out += "  \"" + a.name(q) + "\"";
    if (q == a.root())
      out += " [shape=doublecircle]";
    out += ";\n";
  }
  for (int q = 0; q < a.num_states(); ++q)
    for (int b = 0; b < 2; ++b)
      if (a.step(q, b) != PathAutomaton::kNone)
        out += "  \"" + a.name(q) + "\" -> \"" + a.name(a.step(q, b)) + "\" [label=\"" +
               std::to_string(b) + "\"];\n";
  out += "}\n";
  return out;
}

} // namespace crank
