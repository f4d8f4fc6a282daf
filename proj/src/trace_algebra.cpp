#include "crank/trace_algebra.hpp"

#include "crank/errors.hpp"

namespace crank {

bool TraceAlgebra::trace_eq(const Clopen& c1, const Clopen& c2) const {
  return set_eq(restrict_to(carrier_, c1), restrict_to(carrier_, c2));
}

bool TraceAlgebra::is_atom(const Clopen& c) const {
  const DerivativeReport r = rank_degree(restrict_to(carrier_, c));
  return r.rank.is_ordinal() && r.rank.ordinal().is_zero() && *r.degree == 1;
}

bool TraceAlgebra::is_superatomic() const {
  return kernel(carrier_).is_empty();
}

std::pair<Ordinal, int> TraceAlgebra::cb_invariants() const {
  if (carrier_.is_empty())
    throw PreconditionError("cb_invariants: empty carrier");
  if (!is_superatomic())
    throw PreconditionError("cb_invariants: algebra is not superatomic");
  const DerivativeReport r = rank_degree(carrier_);
  return {r.rank.ordinal(), *r.degree};
}

bool iso_equivalent(const TraceAlgebra& a, const TraceAlgebra& b) {
  return a.cb_invariants() == b.cb_invariants();
}

} // namespace crank
