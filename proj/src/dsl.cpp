#include "crank/dsl.hpp"

#include "crank/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace crank {

FamilyExpr FamilyExpr::empty() { return FamilyExpr{}; }

FamilyExpr FamilyExpr::singleton(UPWord w) {
  FamilyExpr e;
  e.kind = Kind::Singleton;
  e.word = std::move(w);
  return e;
}

FamilyExpr FamilyExpr::disjoint_union(std::vector<std::string> prefixes,
                                      std::vector<FamilyExpr> branches) {
  if (prefixes.empty() || prefixes.size() != branches.size())
    throw PreconditionError("disjoint_union: need matching nonempty prefix/branch lists");
  for (std::size_t i = 0; i < prefixes.size(); ++i)
    for (std::size_t j = i + 1; j < prefixes.size(); ++j) {
      const auto& p = prefixes[i];
      const auto& q = prefixes[j];
      const std::size_t k = std::min(p.size(), q.size());
      if (p.compare(0, k, q, 0, k) == 0)
        throw PreconditionError("disjoint_union: comparable prefixes '" + p + "' and '" + q + "'");
    }
  FamilyExpr e;
  e.kind = Kind::DisjointUnion;
  e.prefixes = std::move(prefixes);
  e.sub = std::move(branches);
  return e;
}

FamilyExpr FamilyExpr::omega_sum(FamilyExpr child) {
  FamilyExpr e;
  e.kind = Kind::OmegaSum;
  e.sub.push_back(std::move(child));
  return e;
}

FamilyExpr FamilyExpr::diag_sum(Ordinal limit) {
  if (!is_limit(limit))
    throw PreconditionError("diag_sum: " + to_string(limit) + " is not a limit ordinal");
  FamilyExpr e;
  e.kind = Kind::DiagSum;
  e.ordinal = std::move(limit);
  return e;
}

FamilyExpr FamilyExpr::full_space() {
  FamilyExpr e;
  e.kind = Kind::FullSpace;
  return e;
}

FamilyExpr FamilyExpr::canon(Ordinal alpha, int n) {
  if (n < 1)
    throw PreconditionError("canon: degree must be positive");
  FamilyExpr e;
  e.kind = Kind::Canon;
  e.ordinal = std::move(alpha);
  e.copies = n;
  return e;
}

namespace {

class FamilyParser {
public:
  explicit FamilyParser(const std::string& text) : text_(text) {}

  FamilyExpr parse() {
    FamilyExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
    return e;
  }

private:
  FamilyExpr parse_expr() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string head = parse_word_token();
    if (head == "empty")
      return FamilyExpr::empty();
    if (head == "full")
      return FamilyExpr::full_space();
    if (head == "point") {
      expect('(');
      FamilyExpr e = FamilyExpr::singleton(parse_upword_token());
      expect(')');
      return e;
    }
    if (head == "omega") {
      expect('(');
      FamilyExpr e = FamilyExpr::omega_sum(parse_expr());
      expect(')');
      return e;
    }
    if (head == "diag") {
      expect('(');
      Ordinal l = parse_ordinal_token();
      expect(')');
      if (!is_limit(l))
        fail("diag requires a limit ordinal, got " + to_string(l), at);
      return FamilyExpr::diag_sum(std::move(l));
    }
    if (head == "canon") {
      expect('(');
      Ordinal a = parse_ordinal_token();
      expect(',');
      const int n = parse_int();
      expect(')');
      if (n < 1)
        fail("canon degree must be positive", at);
      return FamilyExpr::canon(std::move(a), n);
    }
    if (head == "union") {
      expect('(');
      std::vector<std::string> prefixes;
      std::vector<FamilyExpr> branches;
      for (;;) {
        skip_ws();
        std::string prefix;
        while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1'))
          prefix += text_[pos_++];
        expect(':');
        prefixes.push_back(std::move(prefix));
        branches.push_back(parse_expr());
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        break;
      }
      expect(')');
      try {
        return FamilyExpr::disjoint_union(std::move(prefixes), std::move(branches));
      } catch (const PreconditionError& err) {
        fail(err.what(), at);
      }
    }
    fail("expected a family expression", at);
  }

  UPWord parse_upword_token() {
    skip_ws();
    const std::size_t start = pos_;
    const std::size_t close = text_.find(")^w", start);
    if (close == std::string::npos)
      fail("expected a word of the form u(v)^w");
    pos_ = close + 3;
    try {
      return parse_upword(text_.substr(start, pos_ - start));
    } catch (const ParseError& err) {
      fail(err.what(), start + err.position);
    }
  }

  Ordinal parse_ordinal_token() {
    skip_ws();
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(')
        ++depth;
      else if (c == ')') {
        if (depth == 0)
          break;
        --depth;
      } else if ((c == ',' && depth == 0) || c == ':')
        break;
      ++pos_;
    }
    try {
      return parse_ordinal(text_.substr(start, pos_ - start));
    } catch (const ParseError& err) {
      fail(err.what(), start + err.position);
    }
  }

  int parse_int() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a number");
    int n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      n = n * 10 + (text_[pos_++] - '0');
    return n;
  }

  std::string parse_word_token() {
    skip_ws();
    std::string w;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      w += text_[pos_++];
    if (w.empty())
      fail("expected a keyword");
    return w;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError("family: " + msg, at);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

} // namespace

FamilyExpr parse_family(const std::string& text) { return FamilyParser(text).parse(); }

std::string to_string(const FamilyExpr& e) {
  switch (e.kind) {
  case FamilyExpr::Kind::Empty: return "empty";
  case FamilyExpr::Kind::FullSpace: return "full";
  case FamilyExpr::Kind::Singleton: return "point(" + to_string(*e.word) + ")";
  case FamilyExpr::Kind::OmegaSum: return "omega(" + to_string(e.child()) + ")";
  case FamilyExpr::Kind::DiagSum: return "diag(" + to_string(e.ordinal) + ")";
  case FamilyExpr::Kind::Canon:
    return "canon(" + to_string(e.ordinal) + ", " + std::to_string(e.copies) + ")";
  case FamilyExpr::Kind::DisjointUnion: {
    std::string out = "union(";
    for (std::size_t i = 0; i < e.sub.size(); ++i) {
      if (i > 0)
        out += ", ";
      out += e.prefixes[i] + ":" + to_string(e.sub[i]);
    }
    return out + ")";
  }
  }
  return "?";
}

FamilyExpr canon_expand(const Ordinal& alpha, int n) {
  if (n < 1)
    throw PreconditionError("canon_expand: degree must be positive");
  if (n == 1) {
    if (alpha.is_zero())
      return FamilyExpr::singleton(UPWord("", "0"));
    if (is_limit(alpha))
      return FamilyExpr::diag_sum(alpha);
    return FamilyExpr::omega_sum(canon_expand(ord_pred(alpha), 1));
  }
  // Comb of n pairwise incomparable prefixes: 0, 10, ..., 1^{n-2}0, 1^{n-1}.
  std::vector<std::string> prefixes;
  std::vector<FamilyExpr> branches;
  for (int i = 0; i < n; ++i) {
    std::string p(static_cast<std::size_t>(i), '1');
    if (i < n - 1)
      p += '0';
    prefixes.push_back(std::move(p));
    branches.push_back(canon_expand(alpha, 1));
  }
  return FamilyExpr::disjoint_union(std::move(prefixes), std::move(branches));
}

namespace {

CardinalityClass espec_sum(const CardinalityClass& a, const CardinalityClass& b) {
  if (a.kind == CardinalityKind::Continuum || b.kind == CardinalityKind::Continuum)
    return {CardinalityKind::Continuum, 0};
  if (a.kind == CardinalityKind::Aleph0 || b.kind == CardinalityKind::Aleph0)
    return {CardinalityKind::Aleph0, 0};
  return {CardinalityKind::Finite, a.count + b.count};
}

} // namespace

Profile evaluate(const FamilyExpr& e) {
  Profile p;
  switch (e.kind) {
  case FamilyExpr::Kind::Empty:
    return p;
  case FamilyExpr::Kind::Singleton:
    p.rank = RankValue::of(Ordinal());
    p.degree = 1;
    p.top_points = std::vector<UPWord>{*e.word};
    return p;
  case FamilyExpr::Kind::FullSpace:
    p.rank = RankValue::infinity();
    p.espec = {CardinalityKind::Continuum, 0};
    return p;
  case FamilyExpr::Kind::OmegaSum: {
    const Profile s = evaluate(e.child());
    if (s.rank.is_minus_one())
      return p; // empty
    if (s.rank.is_infinity()) {
      p.rank = RankValue::infinity();
      p.espec = {CardinalityKind::Continuum, 0};
      return p;
    }
    p.rank = RankValue::of(ord_succ(s.rank.ordinal()));
    p.degree = 1;
    p.top_points = std::vector<UPWord>{UPWord("", "1")};
    p.espec = s.rank.ordinal().is_zero() ? CardinalityClass{CardinalityKind::Finite, 1}
                                         : CardinalityClass{CardinalityKind::Aleph0, 0};
    return p;
  }
  case FamilyExpr::Kind::DiagSum:
    p.rank = RankValue::of(e.ordinal);
    p.degree = 1;
    p.top_points = std::vector<UPWord>{UPWord("", "1")};
    p.espec = {CardinalityKind::Aleph0, 0};
    return p;
  case FamilyExpr::Kind::Canon:
    return evaluate(canon_expand(e.ordinal, e.copies));
  case FamilyExpr::Kind::DisjointUnion: {
    std::vector<Profile> branch(e.sub.size());
    RankValue best = RankValue::minus_one();
    for (std::size_t i = 0; i < e.sub.size(); ++i) {
      branch[i] = evaluate(e.sub[i]);
      if (best < branch[i].rank)
        best = branch[i].rank;
      p.espec = espec_sum(p.espec, branch[i].espec);
    }
    p.rank = best;
    if (best.is_ordinal()) {
      p.degree = 0;
      p.top_points = std::vector<UPWord>{};
      for (std::size_t i = 0; i < e.sub.size(); ++i) {
        if (branch[i].rank != best)
          continue;
        *p.degree += *branch[i].degree;
        for (const UPWord& w : *branch[i].top_points)
          p.top_points->push_back(prepend(e.prefixes[i], w));
      }
      std::sort(p.top_points->begin(), p.top_points->end());
    }
    return p;
  }
  }
  return p;
}

bool is_compilable(const FamilyExpr& e) {
  switch (e.kind) {
  case FamilyExpr::Kind::DiagSum:
    return false;
  case FamilyExpr::Kind::Canon:
    return e.ordinal.is_finite();
  case FamilyExpr::Kind::DisjointUnion:
  case FamilyExpr::Kind::OmegaSum:
    return std::all_of(e.sub.begin(), e.sub.end(),
                       [](const FamilyExpr& s) { return is_compilable(s); });
  default:
    return true;
  }
}

namespace {

// Copy all states of `sub` into `out`; returns old-index -> new-index.
std::vector<int> import_states(PathAutomaton& out, const PathAutomaton& sub) {
  std::vector<int> map(static_cast<std::size_t>(sub.num_states()));
  for (int q = 0; q < sub.num_states(); ++q)
    map[static_cast<std::size_t>(q)] = out.add_state();
  for (int q = 0; q < sub.num_states(); ++q)
    for (int b = 0; b < 2; ++b)
      if (sub.step(q, b) != PathAutomaton::kNone)
        out.add_edge(map[static_cast<std::size_t>(q)], b,
                     map[static_cast<std::size_t>(sub.step(q, b))]);
  return map;
}

} // namespace

PathAutomaton compile(const FamilyExpr& e) {
  switch (e.kind) {
  case FamilyExpr::Kind::Empty:
    return PathAutomaton::empty();
  case FamilyExpr::Kind::Singleton:
    return PathAutomaton::singleton(*e.word);
  case FamilyExpr::Kind::FullSpace:
    return PathAutomaton::full_space();
  case FamilyExpr::Kind::DiagSum:
    throw PreconditionError("compile: " + to_string(e) +
                            " denotes an infinite-state closure (transfinite rank)");
  case FamilyExpr::Kind::Canon:
    if (!e.ordinal.is_finite())
      throw PreconditionError("compile: " + to_string(e) +
                              " denotes an infinite-state closure (transfinite rank)");
    return compile(canon_expand(e.ordinal, e.copies));
  case FamilyExpr::Kind::OmegaSum: {
    const PathAutomaton sub = compile(e.child());
    if (sub.is_empty())
      return sub;
    PathAutomaton out;
    const int root = out.add_state();
    out.set_root(root);
    out.add_edge(root, 1, root);
    const std::vector<int> map = import_states(out, sub);
    out.add_edge(root, 0, map[static_cast<std::size_t>(sub.root())]);
    return prune(out);
  }
  case FamilyExpr::Kind::DisjointUnion: {
    PathAutomaton out;
    const int root = out.add_state();
    out.set_root(root);
    // Shared prefix-tree nodes, then per-branch grafts.
    std::map<std::string, int> tree{{"", root}};
    for (std::size_t i = 0; i < e.prefixes.size(); ++i) {
      const PathAutomaton sub = compile(e.sub[i]);
      if (sub.is_empty())
        continue;
      const std::vector<int> map = import_states(out, sub);
      const std::string& prefix = e.prefixes[i];
      int at = root;
      for (std::size_t k = 0; k < prefix.size(); ++k) {
        const int bit = prefix[k] - '0';
        if (k + 1 == prefix.size()) {
          out.add_edge(at, bit, map[static_cast<std::size_t>(sub.root())]);
        } else {
          const std::string node = prefix.substr(0, k + 1);
          auto [it, fresh] = tree.try_emplace(node, PathAutomaton::kNone);
          if (fresh) {
            it->second = out.add_state();
            out.add_edge(at, bit, it->second);
          }
          at = it->second;
        }
      }
    }
    return prune(out);
  }
  }
  return PathAutomaton::empty();
}

std::vector<UPWord> enumerate_generators(const FamilyExpr& e, std::size_t limit) {
  std::vector<UPWord> out;
  if (limit == 0)
    return out;
  switch (e.kind) {
  case FamilyExpr::Kind::Empty:
    return out;
  case FamilyExpr::Kind::Singleton:
    out.push_back(*e.word);
    return out;
  case FamilyExpr::Kind::FullSpace: {
    // All ultimately periodic words by description length, then lex.
    for (std::size_t len = 1; out.size() < limit; ++len) {
      for (std::size_t plen = 0; plen < len && out.size() < limit; ++plen) {
        const std::size_t vlen = len - plen;
        for (std::uint64_t pu = 0; pu < (1ull << plen) && out.size() < limit; ++pu) {
          for (std::uint64_t pv = 0; pv < (1ull << vlen) && out.size() < limit; ++pv) {
            std::string u, v;
            for (std::size_t i = 0; i < plen; ++i)
              u += ((pu >> (plen - 1 - i)) & 1) ? '1' : '0';
            for (std::size_t i = 0; i < vlen; ++i)
              v += ((pv >> (vlen - 1 - i)) & 1) ? '1' : '0';
            const UPWord w(u, v);
            if (w.prefix() == u && w.period() == v)
              out.push_back(w); // already canonical: first sighting
          }
        }
      }
    }
    return out;
  }
  case FamilyExpr::Kind::Canon:
    return enumerate_generators(canon_expand(e.ordinal, e.copies), limit);
  case FamilyExpr::Kind::DisjointUnion: {
    // Round-robin across branches.
    std::vector<std::vector<UPWord>> streams;
    for (const FamilyExpr& s : e.sub)
      streams.push_back(enumerate_generators(s, limit));
    for (std::size_t round = 0; out.size() < limit; ++round) {
      bool any = false;
      for (std::size_t i = 0; i < streams.size() && out.size() < limit; ++i) {
        if (round < streams[i].size()) {
          out.push_back(prepend(e.prefixes[i], streams[i][round]));
          any = true;
        }
      }
      if (!any)
        break;
    }
    return out;
  }
  case FamilyExpr::Kind::OmegaSum:
  case FamilyExpr::Kind::DiagSum: {
    // Diagonal over (copy index, generator index).
    std::map<std::size_t, std::vector<UPWord>> streams;
    auto copy_stream = [&](std::size_t n) -> const std::vector<UPWord>& {
      auto [it, fresh] = streams.try_emplace(n);
      if (fresh) {
        if (e.kind == FamilyExpr::Kind::OmegaSum)
          it->second = enumerate_generators(e.child(), limit);
        else
          it->second = enumerate_generators(
              canon_expand(fund_seq(e.ordinal, static_cast<std::uint64_t>(n)), 1), limit);
      }
      return it->second;
    };
    for (std::size_t diag = 0; out.size() < limit && diag < 2 * limit + 2; ++diag) {
      for (std::size_t n = 0; n <= diag && out.size() < limit; ++n) {
        const std::size_t j = diag - n;
        const std::vector<UPWord>& stream = copy_stream(n);
        if (j < stream.size())
          out.push_back(prepend(std::string(n, '1') + "0", stream[j]));
      }
    }
    return out;
  }
  }
  return out;
}

} // namespace crank
