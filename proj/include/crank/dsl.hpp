#pragma once

#include "crank/automaton.hpp"
#include "crank/ordinal.hpp"
#include "crank/word.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace crank {

/// Combinator term denoting a countable family of points (the generator
/// family F(e)), with possibly transfinite rank structure:
///   Empty                     F = {}
///   Singleton(w)              F = {w}
///   DisjointUnion(p_i : e_i)  F = union of p_i . F(e_i), prefixes pairwise
///                             incomparable
///   OmegaSum(e)               F = union over n of 1^n 0 . F(e)
///   DiagSum(lambda)           F = union over n of 1^n 0 . F(Canon(lambda[n], 1))
///   FullSpace                 F = all ultimately periodic words
///   Canon(alpha, n)           the canonical family of rank alpha, degree n
struct FamilyExpr {
  enum class Kind { Empty, Singleton, DisjointUnion, OmegaSum, DiagSum, FullSpace, Canon };

  Kind kind = Kind::Empty;
  std::optional<UPWord> word;        // Singleton
  std::vector<std::string> prefixes; // DisjointUnion: prefixes[i] pairs with sub[i]
  std::vector<FamilyExpr> sub;       // DisjointUnion branches / OmegaSum child
  Ordinal ordinal;                   // DiagSum, Canon
  int copies = 0;                    // Canon

  static FamilyExpr empty();
  static FamilyExpr singleton(UPWord w);
  static FamilyExpr disjoint_union(std::vector<std::string> prefixes,
                                   std::vector<FamilyExpr> branches);
  static FamilyExpr omega_sum(FamilyExpr child);
  static FamilyExpr diag_sum(Ordinal limit);
  static FamilyExpr full_space();
  static FamilyExpr canon(Ordinal alpha, int n);

  const FamilyExpr& child() const { return sub.front(); } // OmegaSum
};

/// Evaluation result: rank, degree and top-rank points (absent when the
/// rank is -1 or infinity), and the e-spectrum cardinal.
struct Profile {
  RankValue rank = RankValue::minus_one();
  std::optional<int> degree;
  std::optional<std::vector<UPWord>> top_points;
  CardinalityClass espec{CardinalityKind::Finite, 0};
};

// Grammar:
//   expr := `empty` | `point(` upword `)` | `full`
//         | `union(` prefix `:` expr {`,` prefix `:` expr} `)`
//         | `omega(` expr `)` | `diag(` ordinal `)`
//         | `canon(` ordinal `,` int `)`
// Whitespace is insignificant. Throws ParseError with a position;
// rejects a non-limit ordinal in `diag` and comparable prefixes in
// `union`.
FamilyExpr parse_family(const std::string& text);
std::string to_string(const FamilyExpr& e);

// The canonical family of rank alpha and degree n as a combinator term:
// successor steps become omega sums, limit steps diagonal sums, and
// degree n > 1 a comb of n incomparable prefixes.
FamilyExpr canon_expand(const Ordinal& alpha, int n);

// Structural rank/degree/spectrum computation; exact on the whole DSL,
// including transfinite ranks.
Profile evaluate(const FamilyExpr& e);

// Automaton of the topological closure of F(e). Only the finite-rank
// fragment is compilable: DiagSum and Canon with a transfinite ordinal
// are rejected (PreconditionError naming the subterm).
PathAutomaton compile(const FamilyExpr& e);
bool is_compilable(const FamilyExpr& e);

// First `limit` generator points in a fixed fair order (diagonal over
// combinator indices).
std::vector<UPWord> enumerate_generators(const FamilyExpr& e, std::size_t limit);

} // namespace crank
