#include "crank/errors.hpp"
#include "crank/word.hpp"

#include <doctest.h>

#include <random>

using namespace crank;

TEST_CASE("canonicalization") {
  CHECK(UPWord("", "11") == UPWord("", "1"));
  CHECK(UPWord("01", "01") == UPWord("", "01"));

  const UPWord w("10", "1");
  CHECK(w.prefix() == "10");
  CHECK(w.period() == "1");

  CHECK(UPWord("0", "10") == UPWord("", "01"));
  CHECK(UPWord("1", "1") == UPWord("", "1"));
  CHECK(UPWord("110", "100100") == UPWord("11", "010"));

  CHECK_THROWS_AS(UPWord("0", ""), PreconditionError);
  CHECK_THROWS_AS(UPWord("2", "1"), ParseError);
}

TEST_CASE("canonicalization preserves the denoted word") {
  // Oracle: unfolding. Any representation and its canonical form agree
  // on a long prefix, and the canonical form is a fixpoint.
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    std::string u, v;
    const std::size_t ulen = rng() % 4;
    const std::size_t vlen = 1 + rng() % 4;
    for (std::size_t k = 0; k < ulen; ++k)
      u += (rng() % 2) ? '1' : '0';
    for (std::size_t k = 0; k < vlen; ++k)
      v += (rng() % 2) ? '1' : '0';

    const UPWord canon(u, v);
    // unfold the raw pair by hand
    std::string expected;
    for (std::size_t k = 0; expected.size() < 48; ++k)
      expected += k < u.size() ? u[k] : v[(k - u.size()) % v.size()];
    CHECK(canon.unfold(48) == expected);

    const UPWord again(canon.prefix(), canon.period());
    CHECK(again == canon);
  }
}

TEST_CASE("equality by denotation") {
  CHECK(UPWord("", "1") == UPWord("1", "1"));
  CHECK(UPWord("0", "10") == UPWord("", "01"));
  CHECK(UPWord("", "0") != UPWord("", "1"));
  CHECK(UPWord("", "01") != UPWord("", "10"));

  // Cross-check equality against unfolding on random pairs.
  std::mt19937_64 rng(11);
  for (int i = 0; i < 400; ++i) {
    auto draw = [&] {
      std::string u, v;
      const std::size_t ulen = rng() % 3;
      const std::size_t vlen = 1 + rng() % 3;
      for (std::size_t k = 0; k < ulen; ++k)
        u += (rng() % 2) ? '1' : '0';
      for (std::size_t k = 0; k < vlen; ++k)
        v += (rng() % 2) ? '1' : '0';
      return UPWord(u, v);
    };
    const UPWord a = draw(), b = draw();
    const std::size_t bound = a.prefix().size() + b.prefix().size() +
                              2 * std::lcm(a.period().size(), b.period().size());
    CHECK((a == b) == (a.unfold(bound) == b.unfold(bound)));

    std::size_t pos = 0;
    if (first_difference(a, b, pos))
      CHECK(a.bit(pos) != b.bit(pos));
    else
      CHECK(a == b);
  }
}

TEST_CASE("word_bit") {
  const UPWord w10("", "10");
  CHECK(w10.bit(0) == '1');
  CHECK(w10.bit(3) == '0');
  CHECK(UPWord("110", "0").bit(2) == '0');
  CHECK(UPWord("110", "0").bit(7) == '0');
}

TEST_CASE("prepend") {
  CHECK(prepend("1", UPWord("", "1")) == UPWord("", "1"));
  CHECK(prepend("0", UPWord("", "1")) == UPWord("0", "1"));
  CHECK(prepend("1", UPWord("", "01")) == UPWord("", "10"));
  CHECK(prepend("", UPWord("0", "1")) == UPWord("0", "1"));
}

TEST_CASE("text syntax") {
  CHECK(to_string(UPWord("110", "0")) == "11(0)^w"); // trailing 0 absorbed
  CHECK(to_string(UPWord("10", "1")) == "10(1)^w");
  CHECK(to_string(UPWord("", "10")) == "(10)^w");
  CHECK(parse_upword("110(0)^w") == UPWord("110", "0"));
  CHECK(parse_upword("(10)^w") == UPWord("", "10"));
  CHECK(parse_upword("(11)^w") == UPWord("", "1"));

  CHECK_THROWS_AS(parse_upword("()^w"), ParseError);
  CHECK_THROWS_AS(parse_upword("101"), ParseError);
  CHECK_THROWS_AS(parse_upword("(01)^w1"), ParseError);
  CHECK_THROWS_AS(parse_upword("(02)^w"), ParseError);
}
