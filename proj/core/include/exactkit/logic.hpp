#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace exactkit::logic {

enum class Connective { Atom, Not, And, Or, Xor, Implies, Iff };

/// Immutable propositional formula. Subtrees are shared between copies.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula binary(Connective op, Formula lhs, Formula rhs);

  Connective kind() const noexcept;
  /// Atom name; empty for compound formulas.
  const std::string& name() const noexcept;
  /// Operand of Not, or left operand of a binary connective.
  const Formula& lhs() const;
  const Formula& rhs() const;

  /// Distinct atoms in order of first appearance, left to right.
  std::vector<std::string> atoms() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Connective kind = Connective::Atom;
  std::string name;
  std::vector<Formula> children;
};

inline Connective Formula::kind() const noexcept { return node_->kind; }
inline const std::string& Formula::name() const noexcept { return node_->name; }

// Convenience builders.
inline Formula operator!(Formula f) { return Formula::negation(std::move(f)); }
inline Formula operator&&(Formula a, Formula b) {
  return Formula::binary(Connective::And, std::move(a), std::move(b));
}
inline Formula operator||(Formula a, Formula b) {
  return Formula::binary(Connective::Or, std::move(a), std::move(b));
}
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula exclusive_or(Formula a, Formula b);

/// Grammar, loosest binding first:
///   formula := iff
///   iff     := imp ("<->" imp)*
///   imp     := xor ("->" imp)?
///   xor     := or ("^" or)*
///   or      := and ("|" and)*
///   and     := unary ("&" unary)*
///   unary   := ("!" | "~") unary | atom | "(" formula ")"
/// Atoms match [a-z][a-z0-9]*. Throws ParseError with the failing offset.
Formula parse_formula(std::string_view text);

/// Inverse of parse_formula using the fewest parentheses the grammar needs.
std::string to_string(const Formula& f);

using Assignment = std::map<std::string, bool, std::less<>>;

/// Throws UnboundAtom when an atom is missing from the assignment.
bool evaluate(const Formula& f, const Assignment& assignment);

struct TruthRow {
  std::vector<bool> values;  // one per atom, same order as TruthTable::atoms
  bool result = false;
};

/// All 2^n assignments, first atom varying slowest and true before false.
struct TruthTable {
  std::vector<std::string> atoms;
  std::vector<TruthRow> rows;
};

inline constexpr std::size_t kMaxAtoms = 20;

/// Throws TooManyAtoms above kMaxAtoms.
TruthTable truth_table(const Formula& f);

enum class Classification { Tautology, Contradiction, Contingent };

std::string_view to_string(Classification c);

Classification classify(const Formula& f);

/// True iff f <-> g is a tautology.
bool equivalent(const Formula& f, const Formula& g);

}  // namespace exactkit::logic
