#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powcom/group.hpp"

namespace powcom {

struct Factor;

/// A product of factors read left to right. The empty word is the identity
/// and prints as "1".
struct Word {
  std::vector<Factor> factors;

  bool is_identity() const noexcept { return factors.empty(); }
  friend bool operator==(const Word& a, const Word& b);
};

/// variable^e, [u,v]^e or (u)^e. The commutator [u,v] denotes u^-1 v^-1 u v.
struct Factor {
  enum class Kind { Variable, Commutator, Group };

  Kind kind = Kind::Variable;
  std::string name;            // Variable only
  std::vector<Word> operands;  // two for Commutator, one for Group
  std::int64_t exponent = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// lhs = rhs; `variables` lists each name once, in order of first appearance.
struct Law {
  Word lhs;
  Word rhs;
  std::vector<std::string> variables;

  friend bool operator==(const Law&, const Law&) = default;
};

// Grammar (whitespace insignificant):
//   law    := word "=" word
//   word   := factor+ | "1"
//   factor := atom ["^" integer]
//   atom   := name | "[" word "," word "]" | "(" word ")"
//   name   := letter alnum*
// Throws SyntaxError (with byte offset) or Error(EmptyInput).
Law parse_law(std::string_view text);
Word parse_word(std::string_view text);

/// Canonical text; parse_law(to_string(law)) == law.
std::string to_string(const Word& w);
std::string to_string(const Law& law);

using Assignment = std::map<std::string, Element, std::less<>>;

/// Throws UnboundVariable when `assignment` misses a variable of `w`.
Element eval_word(const FiniteGroup& g, const Word& w, const Assignment& assignment);

struct LawCheck {
  bool holds = true;
  /// Lexicographically first violating assignment, one value per entry of
  /// Law::variables.
  std::optional<std::vector<Element>> witness;
};

/// Checks the law under all |G|^k assignments. Throws BudgetExceeded when
/// that exceeds `limits.law_budget`.
LawCheck holds(const FiniteGroup& g, const Law& law, const Limits& limits = {});

/// Evaluates both sides under one assignment given in Law::variables order.
bool law_holds_at(const FiniteGroup& g, const Law& law, const std::vector<Element>& values);

/// "[x^m,y^m]=1"
Law power_commutator_law(std::int64_t m);

}  // namespace powcom
