#include "crank/clopen.hpp"
#include "crank/errors.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace crank;

namespace {

// All sixteen clopens of depth <= 2.
std::vector<Clopen> depth2_pool() {
  const std::vector<std::string> cells = {"00", "01", "10", "11"};
  std::vector<Clopen> pool;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::set<std::string> chosen;
    for (unsigned i = 0; i < 4; ++i)
      if (mask & (1u << i))
        chosen.insert(cells[i]);
    pool.push_back(Clopen::from_cells(2, std::move(chosen)));
  }
  return pool;
}

} // namespace

TEST_CASE("canonical minimal depth") {
  CHECK(Clopen::from_cells(2, {"00", "01", "10", "11"}) == Clopen::whole_space());
  CHECK(Clopen::from_cells(2, {"00", "01"}) == Clopen::cylinder("0"));
  CHECK(Clopen::from_cells(3, {}) == Clopen::empty_set());
  CHECK(Clopen::from_cells(2, {"00", "01", "10"}).depth() == 2);
  CHECK(Clopen::cylinder("").is_whole_space());
  CHECK_THROWS_AS(Clopen::from_cells(1, {"00"}), PreconditionError);
}

TEST_CASE("spec examples") {
  CHECK(complement(Clopen::from_cells(1, {"0"})) == Clopen::from_cells(1, {"1"}));
  CHECK(set_intersection(Clopen::from_cells(1, {"1"}), Clopen::from_cells(2, {"10", "11"})) ==
        Clopen::from_cells(1, {"1"}));
  CHECK(Clopen::from_cells(2, {"10"}).contains(UPWord("", "10")));
  CHECK(!Clopen::from_cells(2, {"10"}).contains(UPWord("", "01")));
}

TEST_CASE("boolean algebra laws at depth 2, exhaustively") {
  const std::vector<Clopen> pool = depth2_pool();
  const Clopen top = Clopen::whole_space();
  const Clopen bottom = Clopen::empty_set();
  for (const Clopen& a : pool) {
    CHECK(complement(complement(a)) == a);
    CHECK(set_union(a, complement(a)) == top);
    CHECK(set_intersection(a, complement(a)) == bottom);
    CHECK(set_union(a, bottom) == a);
    CHECK(set_intersection(a, top) == a);
    for (const Clopen& b : pool) {
      CHECK(set_union(a, b) == set_union(b, a));
      CHECK(set_intersection(a, b) == set_intersection(b, a));
      CHECK(complement(set_union(a, b)) == set_intersection(complement(a), complement(b)));
      CHECK(is_subset(a, b) == (set_union(a, b) == b));
      for (const Clopen& c : pool) {
        CHECK(set_union(a, set_union(b, c)) == set_union(set_union(a, b), c));
        CHECK(set_intersection(a, set_union(b, c)) ==
              set_union(set_intersection(a, b), set_intersection(a, c)));
      }
    }
  }
}

TEST_CASE("laws on sampled depth-4 clopens") {
  std::mt19937_64 rng(3);
  std::vector<Clopen> pool;
  for (int i = 0; i < 24; ++i) {
    std::set<std::string> cells;
    for (unsigned code = 0; code < 16; ++code) {
      if (rng() % 2)
        continue;
      std::string cell;
      for (int b = 3; b >= 0; --b)
        cell += ((code >> b) & 1) ? '1' : '0';
      cells.insert(cell);
    }
    pool.push_back(Clopen::from_cells(4, std::move(cells)));
  }
  for (const Clopen& a : pool) {
    CHECK(complement(complement(a)) == a);
    CHECK(set_union(a, complement(a)) == Clopen::whole_space());
    for (const Clopen& b : pool) {
      CHECK(complement(set_intersection(a, b)) == set_union(complement(a), complement(b)));
      CHECK(is_subset(set_intersection(a, b), a));
      CHECK(is_subset(a, set_union(a, b)));
    }
  }
}

TEST_CASE("membership against pointwise complement") {
  const std::vector<UPWord> samples = {UPWord("", "0"),  UPWord("", "1"),   UPWord("", "01"),
                                       UPWord("", "10"), UPWord("0", "1"),  UPWord("1", "0"),
                                       UPWord("00", "10"), UPWord("11", "01"), UPWord("", "0011")};
  for (const Clopen& c : depth2_pool())
    for (const UPWord& w : samples)
      CHECK(complement(c).contains(w) == !c.contains(w));
}

TEST_CASE("depth padding keeps the denoted set") {
  const Clopen a = Clopen::cylinder("0");
  const Clopen b = Clopen::from_cells(3, {"000", "001", "010", "011"});
  CHECK(a == b);
  CHECK(is_subset(Clopen::from_cells(3, {"010"}), a));
  CHECK(!is_subset(a, Clopen::from_cells(3, {"010"})));
}

TEST_CASE("text syntax") {
  CHECK(to_string(Clopen::empty_set()) == "[]");
  CHECK(to_string(Clopen::whole_space()) == "[*]");
  CHECK(to_string(Clopen::cylinder("10")) == "[10*]");
  CHECK(to_string(Clopen::from_cells(2, {"00", "01", "10"})) == "[0*, 10*]");

  CHECK(parse_clopen("[0*, 10*]") == Clopen::from_cells(2, {"00", "01", "10"}));
  CHECK(parse_clopen("[]") == Clopen::empty_set());
  CHECK(parse_clopen("[*]") == Clopen::whole_space());
  CHECK(parse_clopen("[0*, 1*]") == Clopen::whole_space());

  for (const Clopen& c : depth2_pool())
    CHECK(parse_clopen(to_string(c)) == c);

  CHECK_THROWS_AS(parse_clopen("0*"), ParseError);
  CHECK_THROWS_AS(parse_clopen("[0]"), ParseError);
  CHECK_THROWS_AS(parse_clopen("[0*"), ParseError);
  CHECK_THROWS_AS(parse_clopen("[0*, ]"), ParseError);
}
