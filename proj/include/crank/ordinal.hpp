#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace crank {

/// Ordinal below epsilon_0 in Cantor normal form:
///   w^e1 * c1 + w^e2 * c2 + ... + w^ek * ck
/// with e1 > e2 > ... > ek (each exponent again in CNF) and all ci >= 1.
/// The empty sum is 0. Equal ordinals have identical representations.
class Ordinal {
public:
  Ordinal() = default;

  // Natural number n as w^0 * n.
  static Ordinal nat(std::uint64_t n);
  // w^exp * coeff (zero coeff gives 0).
  static Ordinal omega_pow(const Ordinal& exp, std::uint64_t coeff = 1);
  // Build from parallel (exponent, coefficient) term lists; exponents
  // must strictly decrease and coefficients be positive
  // (PreconditionError otherwise).
  static Ordinal from_terms(std::vector<Ordinal> exponents, std::vector<std::uint64_t> coeffs);

  std::size_t term_count() const { return coeffs_.size(); }
  const Ordinal& exponent(std::size_t i) const { return exponents_[i]; }
  std::uint64_t coeff(std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const { return coeffs_.empty(); }
  // True iff the ordinal is a natural number; value() is then valid.
  bool is_finite() const;
  std::uint64_t value() const;

  bool operator==(const Ordinal&) const = default;

private:
  friend int ord_compare_raw(const Ordinal& a, const Ordinal& b);
  friend Ordinal ord_succ(const Ordinal& a);
  friend Ordinal ord_pred(const Ordinal& a);
  friend Ordinal fund_seq(const Ordinal& limit, std::uint64_t n);
  friend bool is_limit(const Ordinal& a);
  friend Ordinal parse_ordinal(const std::string& text);

  void push_term(Ordinal exp, std::uint64_t coeff);

  // terms as parallel lists, decreasing exponents
  std::vector<Ordinal> exponents_;
  std::vector<std::uint64_t> coeffs_;
};

enum class Order { Less, Equal, Greater };

// Total order on CNF ordinals (lexicographic on the term lists).
Order ord_compare(const Ordinal& a, const Ordinal& b);
bool operator<(const Ordinal& a, const Ordinal& b);
bool operator<=(const Ordinal& a, const Ordinal& b);

// a + 1.
Ordinal ord_succ(const Ordinal& a);

// a - 1 for a successor ordinal; throws PreconditionError on 0 or limits.
Ordinal ord_pred(const Ordinal& a);

// True iff a is nonzero with no trailing finite part.
bool is_limit(const Ordinal& a);

// The n-th element of the fundamental sequence of a limit ordinal,
// with the standard assignment: writing limit = g + w^e * c,
//   e = d+1   ->  g + w^e * (c-1) + w^d * (n+1)
//   e a limit ->  g + w^e * (c-1) + w^(e[n])
// The result is < limit, strictly increasing in n, with supremum limit.
// Throws PreconditionError on non-limit input.
Ordinal fund_seq(const Ordinal& limit, std::uint64_t n);

// ASCII syntax: `0`, `5`, `w`, `w*3`, `w^2`, `w^2+w*3+2`; exponents are
// again ordinals (`w^w`, `w^(w+1)`). Terms must appear in decreasing
// exponent order. Throws ParseError.
Ordinal parse_ordinal(const std::string& text);
std::string to_string(const Ordinal& a);

/// Rank of a family: -1 for the empty family, an ordinal, or infinity.
/// Totally ordered: MinusOne < Ord(0) < Ord(1) < ... < Infinity.
class RankValue {
public:
  enum class Kind { MinusOne, Ord, Infinity };

  static RankValue minus_one() { return RankValue(Kind::MinusOne); }
  static RankValue infinity() { return RankValue(Kind::Infinity); }
  static RankValue of(Ordinal a) {
    RankValue r(Kind::Ord);
    r.ord_ = std::move(a);
    return r;
  }
  static RankValue of(std::uint64_t n) { return of(Ordinal::nat(n)); }

  Kind kind() const { return kind_; }
  bool is_minus_one() const { return kind_ == Kind::MinusOne; }
  bool is_infinity() const { return kind_ == Kind::Infinity; }
  bool is_ordinal() const { return kind_ == Kind::Ord; }
  const Ordinal& ordinal() const;

  bool operator==(const RankValue&) const = default;

private:
  explicit RankValue(Kind k) : kind_(k) {}

  Kind kind_;
  Ordinal ord_;
};

Order rank_compare(const RankValue& a, const RankValue& b);
bool operator<(const RankValue& a, const RankValue& b);
bool operator<=(const RankValue& a, const RankValue& b);

// `-1`, `infty`, or the ordinal syntax.
std::string to_string(const RankValue& r);

} // namespace crank
