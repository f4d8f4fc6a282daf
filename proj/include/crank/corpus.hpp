#pragma once

#include "crank/automaton.hpp"
#include "crank/ordinal.hpp"

#include <string>
#include <vector>

namespace crank {
namespace corpus {

struct NamedAutomaton {
  std::string name;
  PathAutomaton automaton;
};

// Compilable DSL expressions (nesting depth <= 4) covering the
// combinator space; >= 50 entries, all parseable.
const std::vector<std::string>& dsl_expressions();

// The standard automaton corpus: every compiled DSL expression plus the
// hand-built families (full space, lassos, the two-cycle automaton, a
// kernel/ordinal mix, marked rank-2 variants, ...).
const std::vector<NamedAutomaton>& automata();

// Twenty distinct converging-sequence automata (one accumulation point
// each): half compiled omega sums, half hand-built lasso ladders.
const std::vector<NamedAutomaton>& converging_sequences();

// Ordinals exercised by the ordinal and canon tests.
const std::vector<Ordinal>& ordinals();

} // namespace corpus
} // namespace crank
