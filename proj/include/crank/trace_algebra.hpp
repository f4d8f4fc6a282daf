#pragma once

#include "crank/automaton.hpp"
#include "crank/clopen.hpp"
#include "crank/ordinal.hpp"

namespace crank {

/// The Boolean algebra of clopen traces on a family's closure: elements
/// are clopens considered modulo equal trace on the carrier. Never
/// materialized; every query reduces to automaton computations.
class TraceAlgebra {
public:
  explicit TraceAlgebra(PathAutomaton carrier) : carrier_(prune(carrier)) {}

  const PathAutomaton& carrier() const { return carrier_; }

  // [carrier] n c1 == [carrier] n c2.
  bool trace_eq(const Clopen& c1, const Clopen& c2) const;

  // The trace of c is a single point.
  bool is_atom(const Clopen& c) const;

  // Empty perfect kernel, i.e. the rank is an ordinal.
  bool is_superatomic() const;

  // (rank, degree) of the carrier. Requires a superatomic, nonempty
  // algebra (PreconditionError otherwise).
  std::pair<Ordinal, int> cb_invariants() const;

private:
  PathAutomaton carrier_;
};

// Countable superatomic algebras are isomorphic iff their invariants
// coincide. Throws PreconditionError when either side is not
// superatomic or empty.
bool iso_equivalent(const TraceAlgebra& a, const TraceAlgebra& b);

} // namespace crank
