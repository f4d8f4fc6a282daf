#pragma once

#include <string>

namespace crank {

/// Ultimately periodic infinite bit word u v v v..., stored canonically:
/// the period v is primitive and no trailing bit of u can be absorbed
/// into the cycle. Two UPWords are equal iff they denote the same
/// infinite word, which by canonicity is plain structural equality.
///
/// Bit words are strings over '0'/'1'. Text syntax: `110(0)^w`, `(10)^w`.
class UPWord {
public:
  // Canonicalizes; the period must be nonempty.
  UPWord(std::string prefix, std::string period);

  const std::string& prefix() const { return prefix_; }
  const std::string& period() const { return period_; }

  // The i-th symbol of the denoted infinite word, as '0' or '1'.
  char bit(std::size_t i) const;

  // The first n symbols as a bit string.
  std::string unfold(std::size_t n) const;

  bool operator==(const UPWord&) const = default;
  bool operator<(const UPWord& other) const; // arbitrary total order, for sorting

private:
  std::string prefix_;
  std::string period_;
};

// w with a finite bit word prepended (re-canonicalized).
UPWord prepend(const std::string& bits, const UPWord& w);

// Position of the first symbol where a and b differ; a==b iff none exists
// within the decision bound |u_a|+|u_b|+2*lcm(|v_a|,|v_b|).
// Returns true and sets pos iff the words differ.
bool first_difference(const UPWord& a, const UPWord& b, std::size_t& pos);

UPWord parse_upword(const std::string& text);
std::string to_string(const UPWord& w);

} // namespace crank
