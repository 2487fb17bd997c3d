#pragma once

#include <optional>
#include <vector>

#include "exactkit/rational.hpp"

namespace exactkit {

/// coef * x + constant
struct Affine {
  Rational coef;
  Rational constant;

  static Affine unknown() { return {1, 0}; }
  static Affine value(Rational c) { return {0, std::move(c)}; }
};

/// Solves (lhs1) : lhs2 = (rhs1) : rhs2 for x. Throws Degenerate when every x
/// works (or a second term is zero) and NoSolution when none does.
Rational solve_proportion(const Affine& lhs1, const Rational& lhs2, const Affine& rhs1,
                          const Rational& rhs2);

/// Parts of total proportional to the weights. Throws BadWeights or NonPositive.
std::vector<Rational> extended_split(const Rational& total, const std::vector<Rational>& weights);

/// G : 100 = I : p. Exactly one argument must be missing; returns it.
/// Throws WrongArity or NonPositive.
Rational percent_solve(const std::optional<Rational>& base, const std::optional<Rational>& part,
                       const std::optional<Rational>& percent);

/// final = start * prod(1 + delta/100). Exactly one endpoint must be given;
/// returns the other. Throws WrongArity or AnnihilatingDelta.
Rational percent_chain(const std::optional<Rational>& start, const std::optional<Rational>& final_value,
                       const std::vector<Rational>& deltas);

struct MixtureSplit {
  Rational x1;
  Rational x2;
  /// Set when s1 = s2 = s and any split would do.
  bool degenerate = false;
};

/// Amounts x1 at s1 and x2 at s2 giving total x at intensity s.
/// Throws Unsolvable when s lies outside [min(s1, s2), max(s1, s2)].
MixtureSplit simple_mixture(const Rational& s1, const Rational& s2, const Rational& s, const Rational& total);

/// Intensity s2 such that x1 at s1 plus x2 at s2 has intensity s.
Rational mixture_missing_intensity(const Rational& x1, const Rational& s1, const Rational& x2,
                                   const Rational& s);

/// Star-scheme alligation. Values above the target are paired, largest first,
/// with values below it, smallest first; each value receives the distance of
/// its partner from the target. Amounts are scaled to total and returned in
/// input order. Throws UnbalancedSides, TargetCollision or NonPositive.
std::vector<Rational> star_scheme(const std::vector<Rational>& values, const Rational& target,
                                  const Rational& total);

}  // namespace exactkit
