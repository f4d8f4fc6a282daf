#pragma once

#include "crank/clopen.hpp"
#include "crank/ordinal.hpp"
#include "crank/word.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace crank {

/// Finite pointed edge-labeled graph. Its path set [A] is the set of
/// infinite bit words labeling paths from the root; [A] is a closed
/// subset of Cantor space.
///
/// Invariants after prune(): deterministic (by construction), every
/// state reachable from the root, every state has an outgoing edge.
/// The empty automaton (no states) denotes the empty family.
class PathAutomaton {
public:
  static constexpr int kNone = -1;

  PathAutomaton() = default;

  static PathAutomaton empty() { return PathAutomaton(); }
  // Single state with both loops: the whole space.
  static PathAutomaton full_space();
  // Chain + cycle accepting exactly {w}.
  static PathAutomaton singleton(const UPWord& w);

  int add_state(std::string name = "");
  void set_root(int q) { root_ = q; }
  void add_edge(int from, int bit, int to);

  bool is_empty() const { return states_ == 0; }
  int num_states() const { return states_; }
  int root() const { return root_; }
  int step(int q, int bit) const { return next_[static_cast<std::size_t>(q)][static_cast<std::size_t>(bit)]; }
  int out_degree(int q) const;
  const std::string& name(int q) const { return names_[static_cast<std::size_t>(q)]; }

  bool operator==(const PathAutomaton&) const = default;

private:
  int states_ = 0;
  int root_ = kNone;
  std::vector<std::array<int, 2>> next_;
  std::vector<std::string> names_;
};

/// Result of the derivative analysis of a path automaton.
/// The chain holds the successive derivatives, starting from the input,
/// strictly shrinking until empty or until a nonempty fixpoint (the
/// perfect kernel). On ordinal rank a, chain[a] is the last nonempty
/// derivative, finite with `degree` points, listed in top_points.
struct DerivativeReport {
  std::vector<PathAutomaton> chain;
  RankValue rank = RankValue::minus_one();
  std::optional<int> degree;
  std::optional<std::vector<UPWord>> top_points;
};

enum class CardinalityKind { Finite, Aleph0, Continuum };

struct CardinalityClass {
  CardinalityKind kind;
  int count = 0; // valid for Finite

  bool operator==(const CardinalityClass&) const = default;
};

std::string to_string(const CardinalityClass& c);

// Drop states that are unreachable or carry no infinite path; the path
// set is unchanged. Also merges states with equal residual path sets,
// so repeated products stay small.
PathAutomaton prune(const PathAutomaton& a);

// Decides w in [A] by running the prefix and cycling the period until a
// (state, phase) pair repeats.
bool membership(const PathAutomaton& a, const UPWord& w);

// [union] = [A] u [B], [intersect] = [A] n [B], [restrict] = [A] n c.
// Pair construction with a dead component allowed for unions; results
// are pruned and deterministic.
PathAutomaton set_union(const PathAutomaton& a, const PathAutomaton& b);
PathAutomaton set_intersection(const PathAutomaton& a, const PathAutomaton& b);
PathAutomaton restrict_to(const PathAutomaton& a, const Clopen& c);

// [A] subset of / equal to [B], via reachability in the pair product.
bool is_path_subset(const PathAutomaton& a, const PathAutomaton& b);
bool set_eq(const PathAutomaton& a, const PathAutomaton& b);

// States q such that every state reachable from q has exactly one
// outgoing edge. A point of [A] is isolated iff its run visits one.
std::vector<int> deterministic_suffix_states(const PathAutomaton& a);

// [A] minus its isolated points: delete the deterministic-suffix states
// and prune.
PathAutomaton derivative(const PathAutomaton& a);

// Iterate the derivative to a fixpoint or the empty set; see
// DerivativeReport. The chain has at most num_states()+1 entries.
DerivativeReport rank_degree(const PathAutomaton& a);

// The derivative fixpoint (possibly empty).
PathAutomaton kernel(const PathAutomaton& a);

// Computed structurally from the cycle structure (independently of the
// derivative chain): continuum iff some reachable component carries two
// distinct cycles, finite iff no cycle state has an exit.
CardinalityClass cardinality_class(const PathAutomaton& a);

// All points of a finite path set (derivative must be empty).
std::vector<UPWord> enumerate_finite_paths(const PathAutomaton& a);

bool is_accumulation_point(const PathAutomaton& a, const UPWord& w);

// Largest a with w in the a-th derivative; infinity iff w is in the
// kernel. Throws PreconditionError if w is not in [A].
RankValue point_rank(const PathAutomaton& a, const UPWord& w);

// An ultimately periodic accumulation point, built by walking the
// derivative automaton greedily until a state repeats.
// Throws PreconditionError if [A] is finite.
UPWord find_accumulation_point(const PathAutomaton& a);

/// Least-generating-set decision. The least generating set exists iff
/// the isolated points are dense in [A], i.e. every state reaches a
/// deterministic-suffix state. When it exists, the isolated points are
/// described per deterministic-suffix state: a shortest access word and
/// the forced tail from that state (`point` = access . tail is a
/// representative isolated point). When it does not, `counterexample`
/// is a clopen neighbourhood containing no isolated point.
struct GeneratingSetInfo {
  struct IsolatedFamily {
    int state;
    std::string access;
    UPWord point;
  };

  bool exists;
  std::vector<IsolatedFamily> families;
  std::optional<Clopen> counterexample;
};

GeneratingSetInfo least_generating_set_info(const PathAutomaton& a);

/// Seed of a 2-tree inside the perfect kernel: a kernel state with two
/// distinct cycle words through it, both continuations staying in the
/// kernel. Present iff the kernel is nonempty.
struct TwoTreeWitness {
  int state;
  std::string access;
  std::string word0;
  std::string word1;
};

std::optional<TwoTreeWitness> two_tree_witness(const PathAutomaton& a);

// For rank a >= 1 with degree n: n pairwise disjoint clopens covering the
// whole space whose restrictions each have rank a and degree 1. Leftover
// cells are merged into the first part. Throws PreconditionError
// on rank -1, 0 or infinity.
std::vector<Clopen> decompose_alpha_minimal(const PathAutomaton& a);

// Line-based text format (order-insensitive):
//   state q0
//   root q0
//   edge q0 1 q0
// `#` starts a comment. Parse errors carry the line number.
PathAutomaton parse_automaton(const std::string& text);
std::string to_string(const PathAutomaton& a);

// Graphviz export; the root is double-circled.
std::string to_dot(const PathAutomaton& a);

} // namespace crank
