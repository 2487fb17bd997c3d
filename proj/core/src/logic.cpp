#include "exactkit/logic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "exactkit/error.hpp"

namespace exactkit::logic {

Formula Formula::atom(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Connective::Atom;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::negation(Formula operand) {
  auto node = std::make_shared<Node>();
  node->kind = Connective::Not;
  node->children.push_back(std::move(operand));
  return Formula(std::move(node));
}

Formula Formula::binary(Connective op, Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = op;
  node->children.push_back(std::move(lhs));
  node->children.push_back(std::move(rhs));
  return Formula(std::move(node));
}

const Formula& Formula::lhs() const { return node_->children.at(0); }
const Formula& Formula::rhs() const { return node_->children.at(1); }

std::vector<std::string> Formula::atoms() const {
  std::vector<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (f.kind() == Connective::Atom) {
      if (std::find(out.begin(), out.end(), f.name()) == out.end()) out.push_back(f.name());
      return;
    }
    for (const Formula& child : f.node_->children) walk(child);
  };
  walk(*this);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name()) return false;
  return a.node_->children == b.node_->children;
}

Formula implies(Formula a, Formula b) {
  return Formula::binary(Connective::Implies, std::move(a), std::move(b));
}
Formula iff(Formula a, Formula b) {
  return Formula::binary(Connective::Iff, std::move(a), std::move(b));
}
Formula exclusive_or(Formula a, Formula b) {
  return Formula::binary(Connective::Xor, std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty formula", 0);
    Formula f = parse_iff();
    skip_space();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_), pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Formula parse_iff() {
    Formula lhs = parse_imp();
    while (accept("<->")) lhs = iff(std::move(lhs), parse_imp());
    return lhs;
  }

  Formula parse_imp() {
    Formula lhs = parse_xor();
    if (accept("->")) return implies(std::move(lhs), parse_imp());
    return lhs;
  }

  Formula parse_xor() {
    Formula lhs = parse_or();
    while (accept("^")) lhs = exclusive_or(std::move(lhs), parse_or());
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (accept("|")) lhs = std::move(lhs) || parse_and();
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (accept("&")) lhs = std::move(lhs) && parse_unary();
    return lhs;
  }

  Formula parse_unary() {
    if (accept("!") || accept("~")) return !parse_unary();
    if (accept("(")) {
      Formula inner = parse_iff();
      if (!accept(")")) error("expected ')'");
      return inner;
    }
    skip_space();
    if (pos_ == text_.size()) error("unexpected end of formula");
    const char c = text_[pos_];
    if (c < 'a' || c > 'z') error("expected atom, got '" + std::string(1, c) + "'");
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           ((text_[pos_] >= 'a' && text_[pos_] <= 'z') || (text_[pos_] >= '0' && text_[pos_] <= '9'))) {
      ++pos_;
    }
    return Formula::atom(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(Connective c) {
  switch (c) {
    case Connective::Iff: return 1;
    case Connective::Implies: return 2;
    case Connective::Xor: return 3;
    case Connective::Or: return 4;
    case Connective::And: return 5;
    case Connective::Not: return 6;
    case Connective::Atom: return 7;
  }
  return 0;
}

std::string_view symbol(Connective c) {
  switch (c) {
    case Connective::Iff: return " <-> ";
    case Connective::Implies: return " -> ";
    case Connective::Xor: return " ^ ";
    case Connective::Or: return " | ";
    case Connective::And: return " & ";
    default: return "";
  }
}

std::string wrap_if(bool wrap, std::string s) { return wrap ? "(" + s + ")" : s; }

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Formula& f) {
  const Connective k = f.kind();
  if (k == Connective::Atom) return f.name();
  const int p = precedence(k);
  if (k == Connective::Not) {
    return "!" + wrap_if(precedence(f.lhs().kind()) < p, to_string(f.lhs()));
  }
  const int pl = precedence(f.lhs().kind());
  const int pr = precedence(f.rhs().kind());
  // Implication groups to the right, every other binary connective to the left.
  const bool right_assoc = k == Connective::Implies;
  const bool wrap_left = right_assoc ? pl <= p : pl < p;
  const bool wrap_right = right_assoc ? pr < p : pr <= p;
  return wrap_if(wrap_left, to_string(f.lhs())) + std::string(symbol(k)) +
         wrap_if(wrap_right, to_string(f.rhs()));
}

bool evaluate(const Formula& f, const Assignment& assignment) {
  switch (f.kind()) {
    case Connective::Atom: {
      auto it = assignment.find(f.name());
      if (it == assignment.end()) fail(ErrorCode::UnboundAtom, "atom '" + f.name() + "' is unbound");
      return it->second;
    }
    case Connective::Not: return !evaluate(f.lhs(), assignment);
    case Connective::And: return evaluate(f.lhs(), assignment) && evaluate(f.rhs(), assignment);
    case Connective::Or: return evaluate(f.lhs(), assignment) || evaluate(f.rhs(), assignment);
    case Connective::Xor: return evaluate(f.lhs(), assignment) != evaluate(f.rhs(), assignment);
    case Connective::Implies: return !evaluate(f.lhs(), assignment) || evaluate(f.rhs(), assignment);
    case Connective::Iff: return evaluate(f.lhs(), assignment) == evaluate(f.rhs(), assignment);
  }
  return false;
}

TruthTable truth_table(const Formula& f) {
  TruthTable table;
  table.atoms = f.atoms();
  const std::size_t n = table.atoms.size();
  if (n > kMaxAtoms) {
    fail(ErrorCode::TooManyAtoms, std::to_string(n) + " atoms exceeds the limit of " +
                                      std::to_string(kMaxAtoms));
  }
  const std::size_t count = std::size_t{1} << n;
  table.rows.reserve(count);
  Assignment assignment;
  for (std::size_t row = 0; row < count; ++row) {
    TruthRow r;
    r.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      // Bit set means false, so row 0 is all true and atom 0 flips slowest.
      r.values[j] = ((row >> (n - 1 - j)) & 1U) == 0;
      assignment[table.atoms[j]] = r.values[j];
    }
    r.result = evaluate(f, assignment);
    table.rows.push_back(std::move(r));
  }
  return table;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Tautology: return "tautology";
    case Classification::Contradiction: return "contradiction";
    case Classification::Contingent: return "contingent";
  }
  return "unknown";
}

Classification classify(const Formula& f) {
  const TruthTable t = truth_table(f);
  const bool any_true = std::any_of(t.rows.begin(), t.rows.end(), [](const TruthRow& r) { return r.result; });
  const bool any_false = std::any_of(t.rows.begin(), t.rows.end(), [](const TruthRow& r) { return !r.result; });
  if (!any_false) return Classification::Tautology;
  if (!any_true) return Classification::Contradiction;
  return Classification::Contingent;
}

bool equivalent(const Formula& f, const Formula& g) {
  return classify(iff(f, g)) == Classification::Tautology;
}

}  // namespace exactkit::logic
