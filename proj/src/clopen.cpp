#include "crank/clopen.hpp"

#include "crank/errors.hpp"

#include <cctype>

namespace crank {

namespace {

// Raise to a larger depth by splitting every cell.
std::set<std::string> pad_cells(const std::set<std::string>& cells, std::size_t from,
                                std::size_t to) {
  std::set<std::string> out = cells;
  for (std::size_t d = from; d < to; ++d) {
    std::set<std::string> next;
    for (const auto& c : out) {
      next.insert(c + '0');
      next.insert(c + '1');
    }
    out = std::move(next);
  }
  return out;
}

} // namespace

Clopen Clopen::whole_space() { return from_cells(0, {""}); }

Clopen Clopen::cylinder(const std::string& prefix) {
  return from_cells(prefix.size(), {prefix});
}

Clopen Clopen::from_cells(std::size_t depth, std::set<std::string> cells) {
  for (const auto& c : cells) {
    if (c.size() != depth)
      throw PreconditionError("clopen cell has wrong depth");
    for (char b : c)
      if (b != '0' && b != '1')
        throw PreconditionError("clopen cell has a non-bit character");
  }
  Clopen r;
  r.depth_ = depth;
  r.cells_ = std::move(cells);
  // Reduce to minimal depth: drop the last coordinate while every cell's
  // sibling is present too.
  while (r.depth_ > 0) {
    std::set<std::string> shorter;
    bool reducible = true;
    for (const auto& c : r.cells_) {
      std::string stem = c.substr(0, r.depth_ - 1);
      std::string sibling = stem + (c.back() == '0' ? '1' : '0');
      if (!r.cells_.contains(sibling)) {
        reducible = false;
        break;
      }
      shorter.insert(std::move(stem));
    }
    if (!reducible)
      break;
    r.cells_ = std::move(shorter);
    r.depth_ -= 1;
  }
  if (r.cells_.empty())
    r.depth_ = 0;
  return r;
}

bool Clopen::contains(const UPWord& w) const {
  return cells_.contains(w.unfold(depth_));
}

Clopen complement(const Clopen& c) {
  std::set<std::string> all = pad_cells({""}, 0, c.depth());
  std::set<std::string> out;
  for (const auto& cell : all)
    if (!c.cells().contains(cell))
      out.insert(cell);
  return Clopen::from_cells(c.depth(), std::move(out));
}

Clopen set_union(const Clopen& a, const Clopen& b) {
  const std::size_t d = std::max(a.depth(), b.depth());
  std::set<std::string> cells = pad_cells(a.cells(), a.depth(), d);
  for (auto& c : pad_cells(b.cells(), b.depth(), d))
    cells.insert(c);
  return Clopen::from_cells(d, std::move(cells));
}

Clopen set_intersection(const Clopen& a, const Clopen& b) {
  const std::size_t d = std::max(a.depth(), b.depth());
  const std::set<std::string> ca = pad_cells(a.cells(), a.depth(), d);
  const std::set<std::string> cb = pad_cells(b.cells(), b.depth(), d);
  std::set<std::string> cells;
  for (const auto& c : ca)
    if (cb.contains(c))
      cells.insert(c);
  return Clopen::from_cells(d, std::move(cells));
}

bool is_subset(const Clopen& a, const Clopen& b) {
  return set_intersection(a, b) == a;
}

Clopen parse_clopen(const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[')
    throw ParseError("clopen: expected '['", i);
  ++i;
  Clopen acc;
  skip_ws();
  if (i < text.size() && text[i] == ']')
    return acc; // []
  for (;;) {
    skip_ws();
    std::string prefix;
    while (i < text.size() && (text[i] == '0' || text[i] == '1'))
      prefix += text[i++];
    if (i >= text.size() || text[i] != '*')
      throw ParseError("clopen: expected '*'", i);
    ++i;
    acc = set_union(acc, Clopen::cylinder(prefix));
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  if (i >= text.size() || text[i] != ']')
    throw ParseError("clopen: expected ']'", i);
  ++i;
  skip_ws();
  if (i != text.size())
    throw ParseError("clopen: unexpected trailing input", i);
  return acc;
}

namespace {

// Emit a minimal list of disjoint cylinders covering the clopen.
void collect_prefixes(const Clopen& c, const std::string& prefix, std::vector<std::string>& out) {
  if (is_subset(Clopen::cylinder(prefix), c)) {
    out.push_back(prefix);
    return;
  }
  if (prefix.size() >= c.depth())
    return; // disjoint from c
  if (set_intersection(Clopen::cylinder(prefix), c).is_empty())
    return;
  collect_prefixes(c, prefix + '0', out);
  collect_prefixes(c, prefix + '1', out);
}

} // namespace

std::string to_string(const Clopen& c) {
  std::vector<std::string> prefixes;
  collect_prefixes(c, "", prefixes);
  std::string out = "[";
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    if (i > 0)
      out += ", ";
    out += prefixes[i];
    out += '*';
  }
  out += ']';
  return out;
}

} // namespace crank
