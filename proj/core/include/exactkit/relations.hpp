#pragma once

#include <vector>

#include "exactkit/sets.hpp"

namespace exactkit {

/// Binary relation between two finite sets, stored as an explicit sorted pair
/// list. Every pair's components belong to the declared source and target.
class Relation {
 public:
  /// Throws DomainMismatch if a pair leaves source x target.
  Relation(FinSet source, FinSet target, std::vector<ElementPair> pairs);
  /// Endorelation on one set.
  Relation(FinSet carrier, std::vector<ElementPair> pairs);

  const FinSet& source() const noexcept { return source_; }
  const FinSet& target() const noexcept { return target_; }
  const std::vector<ElementPair>& pairs() const noexcept { return pairs_; }
  bool related(const Element& a, const Element& b) const;
  bool is_endorelation() const { return source_ == target_; }

  /// Domain D(rho) and range R(rho).
  FinSet domain() const;
  FinSet range() const;

  /// "{(1, 2), (2, 3)}"
  std::string str() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  FinSet source_;
  FinSet target_;
  std::vector<ElementPair> pairs_;
};

/// Builds the relation {(a, b) : pred(a, b)} over source x target.
template <class Pred>
Relation relation_from_predicate(const FinSet& source, const FinSet& target, Pred pred) {
  std::vector<ElementPair> pairs;
  for (const Element& a : source) {
    for (const Element& b : target) {
      if (pred(a, b)) pairs.emplace_back(a, b);
    }
  }
  return Relation(source, target, std::move(pairs));
}

Relation rel_inverse(const Relation& rho);

/// The product r rho = {(a, c) : exists x with a rho x and x r c}.
/// Requires rho.target() == r.source(), otherwise DomainMismatch.
Relation rel_compose(const Relation& rho, const Relation& r);

/// Section rho_a = {b : (a, b) in rho}.
FinSet rel_section(const Relation& rho, const Element& a);

/// The distinct sections rho_a over every a in the source, in source order.
std::vector<FinSet> factor_set(const Relation& rho);

struct RelationProperties {
  bool reflexive = false;
  bool antireflexive = false;
  bool symmetric = false;
  bool antisymmetric = false;
  bool transitive = false;

  friend bool operator==(const RelationProperties&, const RelationProperties&) = default;
};

/// Throws NotEndorelation unless source == target.
RelationProperties rel_properties(const Relation& rho);

struct EquivalenceReport {
  bool is_equivalence = false;
  /// Class C_a for each a, deduplicated, ordered by smallest member. Empty
  /// unless is_equivalence.
  std::vector<FinSet> classes;
};

EquivalenceReport equivalence_analysis(const Relation& rho);

bool is_partial_order(const Relation& rho);

struct FunctionReport {
  bool is_function = false;
  bool injective = false;
  bool surjective = false;
  bool bijective = false;
};

/// Injectivity and surjectivity are reported only for genuine functions.
FunctionReport fn_analysis(const Relation& f);

/// h = g o f, h(x) = g(f(x)). Requires f.target() == g.source().
Relation fn_compose(const Relation& f, const Relation& g);

/// Throws NotBijective unless f is a bijection.
Relation fn_inverse(const Relation& f);

/// Image f(x) of a function. Throws DomainMismatch if x has no unique image.
Element fn_apply(const Relation& f, const Element& x);

}  // namespace exactkit
