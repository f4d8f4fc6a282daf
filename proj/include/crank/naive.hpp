#pragma once

#include "crank/automaton.hpp"
#include "crank/dsl.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace crank {
namespace naive {

// Definition-direct derivative: a state is dropped iff an exhaustive
// per-state reachability sweep shows its residual path set is a single
// path. Same contract as derivative(), independent code path.
PathAutomaton derivative(const PathAutomaton& a);

// Iterates the naive derivative; same report contract as rank_degree().
DerivativeReport rank_degree(const PathAutomaton& a);

struct CoherenceReport {
  bool pass = true;
  std::string failure; // first counterexample, empty when pass
};

// Checks that (1) the first `n` enumerated generators of e are members
// of compile(e) and (2) each representative isolated point of
// compile(e) shows up among the generators. Throws PreconditionError
// for non-compilable expressions.
CoherenceReport sample_coherence(const FamilyExpr& e, std::size_t n);

// Same checks against an arbitrary closure candidate; lets the test
// harness verify that a corrupted compilation is caught.
CoherenceReport sample_coherence_against(const FamilyExpr& e, const PathAutomaton& closure,
                                         std::size_t n);

enum class Isolation { Isolated, Unknown };

// Searches depths k <= k_max for a cylinder around w whose trace on [A]
// is {w}. Never claims non-isolation. Throws PreconditionError when w
// is not a member.
Isolation isolation_bruteforce(const PathAutomaton& a, const UPWord& w, std::size_t k_max);

// Uniform random edge maps over up to max_states states (both edges
// present with probability 1/2, otherwise one random edge), pruned;
// empties are discarded and redrawn. Deterministic for a fixed seed.
PathAutomaton random_automaton(std::mt19937_64& rng, int max_states);

} // namespace naive
} // namespace crank
