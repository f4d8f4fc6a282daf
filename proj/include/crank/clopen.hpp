#pragma once

#include "crank/word.hpp"

#include <set>
#include <string>
#include <vector>

namespace crank {

/// Finite-depth cylinder set: a union of depth-k cells of Cantor space,
/// stored as the set of allowed length-k bit strings. Canonical form has
/// minimal depth; the whole space is depth 0 / {""} and the empty set is
/// depth 0 / {}.
///
/// Text syntax: a bracketed list of cylinder prefixes, `[0*, 10*]`;
/// `[*]` is the whole space and `[]` the empty set.
class Clopen {
public:
  // The empty set.
  Clopen() = default;

  static Clopen empty_set() { return Clopen(); }
  static Clopen whole_space();
  // All words extending the given finite prefix.
  static Clopen cylinder(const std::string& prefix);
  // Union of cells at the given depth (each cell a length-`depth` string).
  static Clopen from_cells(std::size_t depth, std::set<std::string> cells);

  std::size_t depth() const { return depth_; }
  const std::set<std::string>& cells() const { return cells_; }

  bool is_empty() const { return cells_.empty(); }
  bool is_whole_space() const { return depth_ == 0 && !cells_.empty(); }

  bool contains(const UPWord& w) const;

  bool operator==(const Clopen&) const = default;

private:
  std::size_t depth_ = 0;
  std::set<std::string> cells_;
};

Clopen complement(const Clopen& c);
Clopen set_union(const Clopen& a, const Clopen& b);
Clopen set_intersection(const Clopen& a, const Clopen& b);
bool is_subset(const Clopen& a, const Clopen& b);

Clopen parse_clopen(const std::string& text);
std::string to_string(const Clopen& c);

} // namespace crank
