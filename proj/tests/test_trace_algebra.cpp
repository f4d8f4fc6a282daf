#include "crank/corpus.hpp"
#include "crank/dsl.hpp"
#include "crank/errors.hpp"
#include "crank/trace_algebra.hpp"

#include <doctest.h>

using namespace crank;

namespace {

PathAutomaton canon(const std::string& alpha, int n) {
  return compile(FamilyExpr::canon(parse_ordinal(alpha), n));
}

} // namespace

TEST_CASE("trace equality") {
  const TraceAlgebra h(canon("1", 1));
  // the only members under 0 start 00...
  CHECK(h.trace_eq(parse_clopen("[0*]"), parse_clopen("[00*]")));
  CHECK(h.trace_eq(parse_clopen("[01*]"), parse_clopen("[]")));
  CHECK(h.trace_eq(parse_clopen("[*]"), parse_clopen("[*]")));
  CHECK(!h.trace_eq(parse_clopen("[0*]"), parse_clopen("[*]")));

  const TraceAlgebra full(PathAutomaton::full_space());
  CHECK(!full.trace_eq(parse_clopen("[0*]"), parse_clopen("[1*]")));
  CHECK(full.trace_eq(parse_clopen("[0*, 1*]"), parse_clopen("[*]")));
}

TEST_CASE("atoms") {
  const TraceAlgebra h(canon("1", 1));
  CHECK(h.is_atom(parse_clopen("[10*]")));
  CHECK(h.is_atom(parse_clopen("[0*]")));
  CHECK(!h.is_atom(parse_clopen("[*]")));
  CHECK(!h.is_atom(parse_clopen("[]")));

  const TraceAlgebra full(PathAutomaton::full_space());
  CHECK(!full.is_atom(parse_clopen("[0*]")));
  CHECK(!full.is_atom(parse_clopen("[0110*]")));
}

TEST_CASE("atoms are exactly the isolated-point traces") {
  for (const auto& [name, raw] : corpus::automata()) {
    const PathAutomaton a = prune(raw);
    if (a.is_empty())
      continue;
    const TraceAlgebra h(a);
    const GeneratingSetInfo info = least_generating_set_info(a);
    for (const auto& fam : info.families) {
      // isolate the representative point by a deep enough cylinder
      const std::size_t depth = fam.access.size() + 2 * static_cast<std::size_t>(a.num_states());
      CHECK_MESSAGE(h.is_atom(Clopen::cylinder(fam.point.unfold(depth))), name);
    }
    if (!info.exists && info.counterexample)
      CHECK_MESSAGE(!h.is_atom(*info.counterexample), name);
  }
}

TEST_CASE("superatomicity") {
  CHECK(TraceAlgebra(canon("3", 1)).is_superatomic());
  CHECK(!TraceAlgebra(PathAutomaton::full_space()).is_superatomic());
  CHECK(!TraceAlgebra(compile(parse_family("union(0:full, 1:canon(1,1))"))).is_superatomic());

  for (const auto& [name, a] : corpus::automata())
    CHECK_MESSAGE(TraceAlgebra(a).is_superatomic() == !rank_degree(prune(a)).rank.is_infinity(),
                  name);
}

TEST_CASE("cb_invariants") {
  CHECK(TraceAlgebra(canon("2", 1)).cb_invariants() == std::pair{parse_ordinal("2"), 1});
  CHECK(TraceAlgebra(canon("1", 3)).cb_invariants() == std::pair{parse_ordinal("1"), 3});
  CHECK(TraceAlgebra(PathAutomaton::singleton(UPWord("01", "0"))).cb_invariants() ==
        std::pair{Ordinal(), 1});

  CHECK_THROWS_AS(TraceAlgebra(PathAutomaton::full_space()).cb_invariants(), PreconditionError);
  CHECK_THROWS_AS(TraceAlgebra(PathAutomaton::empty()).cb_invariants(), PreconditionError);
}

TEST_CASE("invariants are stable under state splitting and padding") {
  const PathAutomaton base = canon("2", 1);
  // split the root into a two-step relay and add a dead appendix
  const PathAutomaton padded = parse_automaton(R"(
state r
state r2
state a
state z
state dead
root r
edge r 1 r2
edge r2 1 r
edge r 0 a
edge r2 0 a
edge a 1 a
edge a 0 z
edge z 0 z
edge dead 0 z
)");
  CHECK(set_eq(prune(padded), base));
  CHECK(TraceAlgebra(prune(padded)).cb_invariants() == TraceAlgebra(base).cb_invariants());
}

TEST_CASE("isomorphism by invariants") {
  // structurally different rank-2 degree-1 carriers
  const PathAutomaton marked = [&] {
    for (const auto& [name, a] : corpus::automata())
      if (name == "marked-rank2")
        return a;
    return PathAutomaton::empty();
  }();
  REQUIRE(!marked.is_empty());
  CHECK(!set_eq(marked, canon("2", 1)));
  CHECK(iso_equivalent(TraceAlgebra(canon("2", 1)), TraceAlgebra(marked)));

  CHECK(!iso_equivalent(TraceAlgebra(canon("1", 1)), TraceAlgebra(canon("1", 2))));
  CHECK(!iso_equivalent(TraceAlgebra(canon("1", 1)), TraceAlgebra(canon("2", 1))));

  CHECK_THROWS_AS(iso_equivalent(TraceAlgebra(canon("1", 1)),
                                 TraceAlgebra(PathAutomaton::full_space())),
                  PreconditionError);

  // equivalence relation on superatomic corpus carriers
  std::vector<TraceAlgebra> algebras;
  for (const auto& [name, a] : corpus::automata()) {
    if (!prune(a).is_empty() && TraceAlgebra(a).is_superatomic())
      algebras.emplace_back(a);
  }
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    CHECK(iso_equivalent(algebras[i], algebras[i]));
    for (std::size_t j = i + 1; j < algebras.size(); ++j)
      CHECK(iso_equivalent(algebras[i], algebras[j]) == iso_equivalent(algebras[j], algebras[i]));
  }
}
