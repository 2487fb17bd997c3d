#include "exactkit/ratio.hpp"

#include <algorithm>
#include <numeric>

#include "exactkit/error.hpp"

namespace exactkit {

Rational solve_proportion(const Affine& lhs1, const Rational& lhs2, const Affine& rhs1,
                          const Rational& rhs2) {
  if (lhs2.is_zero() || rhs2.is_zero()) fail(ErrorCode::Degenerate, "a ratio with zero consequent");
  // lhs1 * rhs2 = rhs1 * lhs2
  const Rational slope = lhs1.coef * rhs2 - rhs1.coef * lhs2;
  const Rational rest = rhs1.constant * lhs2 - lhs1.constant * rhs2;
  if (slope.is_zero()) {
    if (rest.is_zero()) fail(ErrorCode::Degenerate, "every value satisfies the proportion");
    fail(ErrorCode::NoSolution, "the proportion has no solution");
  }
  return rest / slope;
}

std::vector<Rational> extended_split(const Rational& total, const std::vector<Rational>& weights) {
  if (weights.empty()) fail(ErrorCode::BadWeights, "at least one weight is needed");
  for (const auto& w : weights) {
    if (w.sign() <= 0) fail(ErrorCode::BadWeights, "weights must be positive");
  }
  if (total.sign() <= 0) fail(ErrorCode::NonPositive, "total must be positive");
  const Rational k = total / std::accumulate(weights.begin(), weights.end(), Rational{});
  std::vector<Rational> parts;
  parts.reserve(weights.size());
  for (const auto& w : weights) parts.push_back(k * w);
  return parts;
}

Rational percent_solve(const std::optional<Rational>& base, const std::optional<Rational>& part,
                       const std::optional<Rational>& percent) {
  const int missing = !base + !part + !percent;
  if (missing != 1) fail(ErrorCode::WrongArity, "exactly one of G, I, p must be missing");
  if (base && base->sign() <= 0) fail(ErrorCode::NonPositive, "the base G must be positive");
  if (!base) {
    if (percent->sign() <= 0 || part->sign() <= 0) {
      fail(ErrorCode::NonPositive, "I and p must be positive to recover G");
    }
    return Rational(100) * *part / *percent;
  }
  if (!part) return *base * *percent / 100;
  return Rational(100) * *part / *base;
}

Rational percent_chain(const std::optional<Rational>& start, const std::optional<Rational>& final_value,
                       const std::vector<Rational>& deltas) {
  if (start.has_value() == final_value.has_value()) {
    fail(ErrorCode::WrongArity, "give exactly one of start and final");
  }
  Rational factor = 1;
  for (const auto& d : deltas) {
    const Rational f = 1 + d / 100;
    if (f.sign() <= 0) fail(ErrorCode::AnnihilatingDelta, "a change of " + d.str() + "% leaves nothing to continue from");
    factor *= f;
  }
  return start ? *start * factor : *final_value / factor;
}

MixtureSplit simple_mixture(const Rational& s1, const Rational& s2, const Rational& s, const Rational& total) {
  if (total.sign() <= 0) fail(ErrorCode::NonPositive, "total amount must be positive");
  if (s1 == s2) {
    if (s != s1) fail(ErrorCode::Unsolvable, "both components have the same intensity");
    return {total, 0, true};
  }
  if (s < std::min(s1, s2) || s > std::max(s1, s2)) {
    fail(ErrorCode::Unsolvable, "target intensity lies outside the components' range");
  }
  const Rational x1 = total * (s - s2) / (s1 - s2);
  return {x1, total - x1, false};
}

Rational mixture_missing_intensity(const Rational& x1, const Rational& s1, const Rational& x2,
                                   const Rational& s) {
  if (x1.sign() <= 0 || x2.sign() <= 0) fail(ErrorCode::NonPositive, "amounts must be positive");
  return ((x1 + x2) * s - x1 * s1) / x2;
}

std::vector<Rational> star_scheme(const std::vector<Rational>& values, const Rational& target,
                                  const Rational& total) {
  if (total.sign() <= 0) fail(ErrorCode::NonPositive, "total amount must be positive");
  std::vector<std::size_t> above;
  std::vector<std::size_t> below;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == target) fail(ErrorCode::TargetCollision, "a component equals the target intensity");
    (values[i] > target ? above : below).push_back(i);
  }
  if (above.empty() || above.size() != below.size()) {
    fail(ErrorCode::UnbalancedSides, "need as many components above the target as below");
  }
  auto by_value = [&values](std::size_t a, std::size_t b) { return values[a] < values[b]; };
  std::stable_sort(above.begin(), above.end(), [&](std::size_t a, std::size_t b) { return by_value(b, a); });
  std::stable_sort(below.begin(), below.end(), by_value);

  std::vector<Rational> amounts(values.size());
  for (std::size_t k = 0; k < above.size(); ++k) {
    amounts[above[k]] = target - values[below[k]];
    amounts[below[k]] = values[above[k]] - target;
  }
  const Rational scale = total / std::accumulate(amounts.begin(), amounts.end(), Rational{});
  for (auto& a : amounts) a *= scale;
  return amounts;
}

}  // namespace exactkit
