#include "crank/automaton.hpp"
#include "crank/corpus.hpp"
#include "crank/dsl.hpp"
#include "crank/errors.hpp"
#include "crank/naive.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace crank;

namespace {

PathAutomaton aut(const std::string& text) { return prune(parse_automaton(text)); }

const char* kCanon1 = R"(
state r
state z
root r
edge r 1 r
edge r 0 z
edge z 0 z
)";

const char* kCanon2 = R"(
state r
state a
state z
root r
edge r 1 r
edge r 0 a
edge a 1 a
edge a 0 z
edge z 0 z
)";

const char* kCanon3 = R"(
state r
state a
state b
state z
root r
edge r 1 r
edge r 0 a
edge a 1 a
edge a 0 b
edge b 1 b
edge b 0 z
edge z 0 z
)";

const char* kTwoCycle = R"(
state q
state r
state s
root q
edge q 0 r
edge r 1 q
edge q 1 s
edge s 0 q
)";

// Full binary tree under 0, a converging sequence under 1.
const char* kMixed = R"(
state root
state full
state conv
state tail
root root
edge root 0 full
edge full 0 full
edge full 1 full
edge root 1 conv
edge conv 1 conv
edge conv 0 tail
edge tail 0 tail
)";

} // namespace

TEST_CASE("text format round-trip") {
  const PathAutomaton a = aut(kCanon2);
  const PathAutomaton b = parse_automaton(to_string(a));
  CHECK(set_eq(a, b));
  CHECK(a.num_states() == b.num_states());

  CHECK(parse_automaton("").is_empty());
  CHECK(aut("state q\nroot q\n").is_empty()); // no outgoing edge -> pruned away
}

TEST_CASE("text format errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_automaton(text);
      return std::size_t{0};
    } catch (const ParseError& err) {
      CHECK(err.is_line);
      return err.position;
    }
  };
  CHECK(line_of("state q\nroot q\nedge q 2 q\n") == 3);
  CHECK(line_of("state q\nstate q\n") == 2);
  CHECK(line_of("state q\nroot q\nedge q 1 q\nedge q 1 q\n") == 4);
  CHECK(line_of("state q\nedge q 0 q\n") > 0);      // missing root
  CHECK(line_of("state q\nroot p\n") == 2);          // undeclared state
  CHECK(line_of("state q\nroot q\nfoo\n") == 3);     // unknown directive
  CHECK(line_of("# comment only\n") == 0);           // fine: empty automaton
}

TEST_CASE("prune") {
  // lasso plus a dangling two-state dead chain
  const PathAutomaton a = aut(R"(
state loop
state d1
state d2
root loop
edge loop 1 loop
edge loop 0 d1
edge d1 0 d2
)");
  CHECK(a.num_states() == 1);
  CHECK(membership(a, UPWord("", "1")));
  CHECK(!membership(a, UPWord("10", "0")));

  // already pruned: identical
  const PathAutomaton b = aut(kCanon2);
  CHECK(prune(b) == b);

  // cascading prune: removals propagate backwards through three levels
  const PathAutomaton c = parse_automaton(R"(
state loop
state c1
state c2
state c3
root loop
edge loop 1 loop
edge loop 0 c1
edge c1 0 c2
edge c2 0 c3
)");
  const PathAutomaton pruned = prune(c);
  CHECK(pruned.num_states() == 1);
  CHECK(set_eq(pruned, PathAutomaton::singleton(UPWord("", "1"))));

  // unreachable state with edges
  const PathAutomaton d = aut(R"(
state a
state b
root a
edge a 0 a
edge b 1 b
)");
  CHECK(d.num_states() == 1);
}

TEST_CASE("membership") {
  const PathAutomaton one_loop = aut("state q\nroot q\nedge q 1 q\n");
  CHECK(membership(one_loop, UPWord("", "1")));
  CHECK(!membership(one_loop, UPWord("", "0")));
  CHECK(!membership(one_loop, UPWord("0", "1")));

  const PathAutomaton omega_sum = compile(parse_family("omega(point((0)^w))"));
  CHECK(membership(omega_sum, UPWord("1110", "0")));
  CHECK(membership(omega_sum, UPWord("", "1")));
  CHECK(!membership(omega_sum, UPWord("1101", "0")));
  CHECK(membership(aut(kCanon2), UPWord("110", "0")));
}

TEST_CASE("union, intersection, restriction") {
  const PathAutomaton zeros = PathAutomaton::singleton(UPWord("", "0"));
  const PathAutomaton ones = PathAutomaton::singleton(UPWord("", "1"));
  const PathAutomaton both = set_union(zeros, ones);
  const DerivativeReport r = rank_degree(both);
  CHECK(r.rank == RankValue::of(0u));
  CHECK(*r.degree == 2);

  const PathAutomaton full = PathAutomaton::full_space();
  const PathAutomaton under1 = set_intersection(full, restrict_to(full, Clopen::cylinder("1")));
  CHECK(set_eq(under1, restrict_to(full, Clopen::cylinder("1"))));
  CHECK(membership(under1, UPWord("1", "0")));
  CHECK(!membership(under1, UPWord("0", "1")));
  CHECK(set_eq(set_union(under1, restrict_to(full, Clopen::cylinder("0"))), full));

  const PathAutomaton canon2 = aut(kCanon2);
  const PathAutomaton block0 = restrict_to(canon2, Clopen::cylinder("0"));
  const DerivativeReport rb = rank_degree(block0);
  CHECK(rb.rank == RankValue::of(1u));
  CHECK(*rb.degree == 1);
  CHECK((*rb.top_points)[0] == UPWord("0", "1"));

  CHECK(restrict_to(canon2, Clopen::empty_set()).is_empty());
  CHECK(set_eq(restrict_to(canon2, Clopen::whole_space()), canon2));
}

TEST_CASE("set_eq") {
  // two structurally different automata for {(1)^w}
  const PathAutomaton direct = aut("state q\nroot q\nedge q 1 q\n");
  const PathAutomaton padded = aut(R"(
state a
state b
root a
edge a 1 b
edge b 1 a
)");
  CHECK(set_eq(direct, padded));

  const PathAutomaton canon1 = aut(kCanon1);
  const PathAutomaton canon2 = aut(kCanon2);
  CHECK(!set_eq(canon1, canon2));
  CHECK(is_path_subset(canon1, canon2));
  // separating word: the block limit 0(1)^w
  CHECK(membership(canon2, UPWord("0", "1")));
  CHECK(!membership(canon1, UPWord("0", "1")));

  CHECK(set_eq(PathAutomaton::empty(), PathAutomaton::empty()));
  CHECK(!set_eq(PathAutomaton::empty(), direct));
}

TEST_CASE("deterministic suffix states") {
  CHECK(deterministic_suffix_states(PathAutomaton::full_space()).empty());

  const PathAutomaton chain_lasso = PathAutomaton::singleton(UPWord("101", "10"));
  CHECK(deterministic_suffix_states(chain_lasso).size() == chain_lasso.num_states());

  const PathAutomaton canon1 = aut(kCanon1);
  const std::vector<int> d = deterministic_suffix_states(canon1);
  REQUIRE(d.size() == 1);
  CHECK(canon1.name(d[0]) == "z");
}

TEST_CASE("derivative") {
  const PathAutomaton canon1 = aut(kCanon1);
  CHECK(set_eq(derivative(canon1), PathAutomaton::singleton(UPWord("", "1"))));

  CHECK(derivative(PathAutomaton::singleton(UPWord("01", "10"))).is_empty());

  const PathAutomaton full = PathAutomaton::full_space();
  CHECK(set_eq(derivative(full), full));
  CHECK(derivative(full) == full);
}

TEST_CASE("rank_degree") {
  const DerivativeReport empty = rank_degree(PathAutomaton::empty());
  CHECK(empty.rank.is_minus_one());
  CHECK(!empty.degree);
  CHECK(!empty.top_points);

  const DerivativeReport c1 = rank_degree(aut(kCanon1));
  CHECK(c1.rank == RankValue::of(1u));
  CHECK(*c1.degree == 1);
  CHECK(*c1.top_points == std::vector<UPWord>{UPWord("", "1")});

  CHECK(rank_degree(PathAutomaton::full_space()).rank.is_infinity());

  const DerivativeReport c2 = rank_degree(aut(kCanon2));
  CHECK(c2.rank == RankValue::of(2u));
  CHECK(*c2.degree == 1);
  CHECK(*c2.top_points == std::vector<UPWord>{UPWord("", "1")});

  const DerivativeReport c3 = rank_degree(aut(kCanon3));
  CHECK(c3.rank == RankValue::of(3u));
  CHECK(*c3.degree == 1);
}

TEST_CASE("kernel") {
  const PathAutomaton full = PathAutomaton::full_space();
  CHECK(set_eq(kernel(full), full));

  CHECK(kernel(aut(kCanon3)).is_empty());
  {
    const DerivativeReport r = rank_degree(aut(kCanon3));
    CHECK(r.chain.size() == 5); // canon(3), three derivatives, then empty
  }

  const PathAutomaton mixed = aut(kMixed);
  const PathAutomaton expected = aut(R"(
state root
state full
root root
edge root 0 full
edge full 0 full
edge full 1 full
)");
  CHECK(set_eq(kernel(mixed), expected));
  CHECK(set_eq(kernel(kernel(mixed)), kernel(mixed)));
}

TEST_CASE("cardinality") {
  CHECK(cardinality_class(PathAutomaton::full_space()) ==
        CardinalityClass{CardinalityKind::Continuum, 0});
  CHECK(cardinality_class(aut(kCanon1)) == CardinalityClass{CardinalityKind::Aleph0, 0});
  CHECK(cardinality_class(PathAutomaton::singleton(UPWord("01", "1"))) ==
        CardinalityClass{CardinalityKind::Finite, 1});
  CHECK(cardinality_class(PathAutomaton::empty()) == CardinalityClass{CardinalityKind::Finite, 0});
  CHECK(cardinality_class(aut(kTwoCycle)) == CardinalityClass{CardinalityKind::Continuum, 0});
  CHECK(to_string(cardinality_class(aut(kMixed))) == "continuum");

  // three isolated points: a staircase of lassos
  const PathAutomaton staircase = aut(R"(
state s2
state s1
state s0
state l2
state l1
state l0
root s2
edge s2 1 s1
edge s1 1 s0
edge s2 0 l2
edge s1 0 l1
edge s0 0 l0
edge l2 0 l2
edge l1 1 l1
edge l0 0 l0
)");
  CHECK(cardinality_class(staircase) == CardinalityClass{CardinalityKind::Finite, 3});
  CHECK(derivative(staircase).is_empty()); // finite sets have empty derivative
  const DerivativeReport rs = rank_degree(staircase);
  CHECK(rs.rank == RankValue::of(0u));
  CHECK(*rs.degree == 3);
  const auto points = enumerate_finite_paths(staircase);
  REQUIRE(points.size() == 3);
  CHECK(std::find(points.begin(), points.end(), UPWord("10", "1")) != points.end());
}

TEST_CASE("accumulation points") {
  const PathAutomaton canon1 = aut(kCanon1);
  CHECK(is_accumulation_point(canon1, UPWord("", "1")));
  CHECK(!is_accumulation_point(canon1, UPWord("10", "0")));

  const PathAutomaton full = PathAutomaton::full_space();
  CHECK(is_accumulation_point(full, UPWord("", "0")));
  CHECK(is_accumulation_point(full, UPWord("0110", "10")));
}

TEST_CASE("point_rank") {
  const PathAutomaton canon2 = aut(kCanon2);
  CHECK(point_rank(canon2, UPWord("", "1")) == RankValue::of(2u));
  CHECK(point_rank(canon2, UPWord("0", "1")) == RankValue::of(1u));
  CHECK(point_rank(canon2, UPWord("110", "1")) == RankValue::of(1u));
  CHECK(point_rank(canon2, UPWord("", "0")) == RankValue::of(0u));
  CHECK(point_rank(canon2, UPWord("1100", "0")) == RankValue::of(0u));
  CHECK_THROWS_AS(point_rank(canon2, UPWord("", "01")), PreconditionError);

  const PathAutomaton mixed = aut(kMixed);
  CHECK(point_rank(mixed, UPWord("0", "1")) == RankValue::infinity());
  CHECK(point_rank(mixed, UPWord("10", "0")) == RankValue::of(0u));
  CHECK(point_rank(mixed, UPWord("", "1")) == RankValue::of(1u));
}

TEST_CASE("find_accumulation_point") {
  const PathAutomaton canon1 = aut(kCanon1);
  CHECK(find_accumulation_point(canon1) == UPWord("", "1"));

  const PathAutomaton canon2 = aut(kCanon2);
  const UPWord w = find_accumulation_point(canon2);
  CHECK(is_accumulation_point(canon2, w));

  const UPWord f = find_accumulation_point(PathAutomaton::full_space());
  CHECK(membership(PathAutomaton::full_space(), f));

  CHECK_THROWS_AS(find_accumulation_point(PathAutomaton::singleton(UPWord("", "0"))),
                  PreconditionError);
}

TEST_CASE("least generating set") {
  for (const char* text : {kCanon1, kCanon2, kCanon3}) {
    const GeneratingSetInfo info = least_generating_set_info(aut(text));
    CHECK(info.exists);
    REQUIRE(!info.families.empty());
    for (const auto& fam : info.families)
      CHECK(point_rank(aut(text), fam.point) == RankValue::of(0u));
  }

  const GeneratingSetInfo full_info = least_generating_set_info(PathAutomaton::full_space());
  CHECK(!full_info.exists);
  CHECK(*full_info.counterexample == Clopen::whole_space());

  const GeneratingSetInfo mixed_info = least_generating_set_info(aut(kMixed));
  CHECK(!mixed_info.exists);
  CHECK(*mixed_info.counterexample == Clopen::cylinder("0"));

  CHECK_THROWS_AS(least_generating_set_info(PathAutomaton::empty()), PreconditionError);
}

TEST_CASE("two_tree_witness") {
  const auto full = two_tree_witness(PathAutomaton::full_space());
  REQUIRE(full.has_value());
  CHECK(full->word0 == "0");
  CHECK(full->word1 == "1");

  CHECK(!two_tree_witness(aut(kCanon2)).has_value());

  const auto two = two_tree_witness(aut(kTwoCycle));
  REQUIRE(two.has_value());
  CHECK(two->word0 == "01");
  CHECK(two->word1 == "10");
  // both cycle iterates stay inside the kernel and differ
  const PathAutomaton k = kernel(aut(kTwoCycle));
  CHECK(membership(k, UPWord(two->access, two->word0)));
  CHECK(membership(k, UPWord(two->access, two->word1)));
  CHECK(UPWord(two->access, two->word0) != UPWord(two->access, two->word1));
}

TEST_CASE("decompose_alpha_minimal") {
  // canon(1,2): two parts, each of rank 1 degree 1
  const PathAutomaton c12 = compile(parse_family("canon(1,2)"));
  const std::vector<Clopen> parts = decompose_alpha_minimal(c12);
  REQUIRE(parts.size() == 2);
  Clopen cover = Clopen::empty_set();
  for (const Clopen& p : parts) {
    const DerivativeReport r = rank_degree(restrict_to(c12, p));
    CHECK(r.rank == RankValue::of(1u));
    CHECK(*r.degree == 1);
    CHECK(set_intersection(cover, p).is_empty());
    cover = set_union(cover, p);
  }
  CHECK(cover == Clopen::whole_space());

  // canon(2,1): a single part, the whole space
  const std::vector<Clopen> single = decompose_alpha_minimal(aut(kCanon2));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == Clopen::whole_space());

  // hand-built rank-1 degree-3 family
  const PathAutomaton three =
      compile(parse_family("union(0:omega(point((0)^w)), 10:omega(point((0)^w)), "
                           "11:omega(point((1)^w)))"));
  const std::vector<Clopen> thirds = decompose_alpha_minimal(three);
  REQUIRE(thirds.size() == 3);
  for (const Clopen& p : thirds) {
    const DerivativeReport r = rank_degree(restrict_to(three, p));
    CHECK(r.rank == RankValue::of(1u));
    CHECK(*r.degree == 1);
  }

  CHECK_THROWS_AS(decompose_alpha_minimal(PathAutomaton::full_space()), PreconditionError);
  CHECK_THROWS_AS(decompose_alpha_minimal(PathAutomaton::singleton(UPWord("", "0"))),
                  PreconditionError);
  CHECK_THROWS_AS(decompose_alpha_minimal(PathAutomaton::empty()), PreconditionError);
}

TEST_CASE("derivative and rank invariants on corpus and random automata") {
  std::mt19937_64 rng(123);
  std::vector<PathAutomaton> pool;
  for (const auto& [name, a] : corpus::automata())
    pool.push_back(prune(a));
  for (int i = 0; i < 40; ++i)
    pool.push_back(naive::random_automaton(rng, 10));

  for (const PathAutomaton& a : pool) {
    const PathAutomaton d = derivative(a);
    CHECK(is_path_subset(d, a));
    CHECK(prune(d) == d);

    const DerivativeReport r = rank_degree(a);
    CHECK(r.chain.size() <= static_cast<std::size_t>(a.num_states()) + 2);
    if (r.rank.is_ordinal()) {
      const std::size_t steps = r.chain.size() - 2;
      for (const UPWord& w : *r.top_points)
        CHECK(point_rank(a, w) == RankValue::of(static_cast<std::uint64_t>(steps)));
      CHECK(static_cast<int>(r.top_points->size()) == *r.degree);
      CHECK(kernel(a).is_empty());
    } else if (r.rank.is_infinity()) {
      CHECK(!kernel(a).is_empty());
      CHECK(set_eq(kernel(kernel(a)), kernel(a)));
      CHECK(two_tree_witness(a).has_value());
    }
  }

  // rank of a union is the max; degree bounds; subset monotonicity
  for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
    const PathAutomaton& a = pool[i];
    const PathAutomaton& b = pool[i + 1];
    const PathAutomaton u = set_union(a, b);
    const DerivativeReport ra = rank_degree(a);
    const DerivativeReport rb = rank_degree(b);
    const DerivativeReport ru = rank_degree(u);
    CHECK(ru.rank == std::max(ra.rank, rb.rank, [](const RankValue& x, const RankValue& y) {
      return x < y;
    }));
    CHECK(is_path_subset(a, u));
    CHECK(ra.rank <= ru.rank);
    if (ra.rank == ru.rank && ra.rank.is_ordinal())
      CHECK(*ra.degree <= *ru.degree);

    CHECK(set_eq(derivative(u), set_union(derivative(a), derivative(b))));
  }
}
