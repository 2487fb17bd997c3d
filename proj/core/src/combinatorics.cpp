#include "exactkit/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include "exactkit/error.hpp"

namespace exactkit {

Int factorial(std::int64_t n) {
  if (n < 0) fail(ErrorCode::OutOfDomain, "factorial requires n >= 0");
  Int result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

Int binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) fail(ErrorCode::OutOfDomain, "binom requires 0 <= k <= n");
  k = std::min(k, n - k);
  Int result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // result * (n-k+i) is divisible by i: it equals i * binom(n-k+i, i).
    result = result * (n - k + i) / i;
  }
  return result;
}

Monomial binom_term(std::int64_t n, std::int64_t k, const Rational& c1, const Rational& e1,
                    const Rational& c2, const Rational& e2) {
  if (n < 0 || k < 0 || k > n) fail(ErrorCode::OutOfDomain, "term index outside 0..n");
  Rational coeff = Rational(binom(n, k)) * c1.pow(n - k) * c2.pow(k);
  Rational exponent = e1 * Rational(n - k) + e2 * Rational(k);
  return {std::move(coeff), std::move(exponent)};
}

std::vector<Monomial> binom_expand(std::int64_t n, const Rational& c1, const Rational& e1,
                                   const Rational& c2, const Rational& e2) {
  if (n < 1) fail(ErrorCode::OutOfDomain, "expansion requires n >= 1");
  if (c1.is_zero() || c2.is_zero()) fail(ErrorCode::OutOfDomain, "coefficients must be nonzero");
  std::map<Rational, Rational> merged;
  for (std::int64_t k = 0; k <= n; ++k) {
    Monomial t = binom_term(n, k, c1, e1, c2, e2);
    merged[t.exponent] += t.coeff;
  }
  std::vector<Monomial> out;
  for (auto& [exponent, coeff] : merged) {
    if (!coeff.is_zero()) out.push_back({coeff, exponent});
  }
  return out;
}

std::string format_polynomial(const std::vector<Monomial>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Monomial& t : terms) {
    Rational c = t.coeff;
    if (!first) {
      out += c.sign() < 0 ? " - " : " + ";
      c = c.abs();
    }
    const bool constant = t.exponent.is_zero();
    const bool unit = c == Rational(1) || c == Rational(-1);
    if (constant || !unit) {
      out += c.str();
    } else if (c.sign() < 0) {
      out += "-";
    }
    if (!constant) {
      out += "x";
      if (t.exponent != Rational(1)) {
        const std::string e = t.exponent.str();
        out += t.exponent.is_integer() && t.exponent.sign() > 0 ? "^" + e : "^(" + e + ")";
      }
    }
    first = false;
  }
  return out;
}

namespace {

constexpr std::array<std::pair<SumKind, std::string_view>, 7> kSumNames{{
    {SumKind::FirstN, "first_n"},
    {SumKind::Odd, "odd"},
    {SumKind::Triangular, "triangular"},
    {SumKind::Squares, "squares"},
    {SumKind::RecipConsecutive, "recip_consecutive"},
    {SumKind::RecipOdd, "recip_odd"},
    {SumKind::ProductConsecutive, "product_consecutive"},
}};

}  // namespace

SumKind parse_sum_kind(std::string_view name) {
  for (const auto& [kind, text] : kSumNames) {
    if (text == name) return kind;
  }
  fail(ErrorCode::UnknownKind, "unknown sum kind '" + std::string(name) + "'");
}

std::string_view to_string(SumKind kind) {
  for (const auto& [k, text] : kSumNames) {
    if (k == kind) return text;
  }
  return "unknown";
}

Rational closed_form_sum(SumKind kind, std::int64_t n) {
  if (n < 1) fail(ErrorCode::OutOfDomain, "closed_form_sum requires n >= 1");
  const Int m = n;
  switch (kind) {
    case SumKind::FirstN: return Rational(m * (m + 1), 2);
    case SumKind::Odd: return Rational(m * m);
    case SumKind::Triangular: return Rational(m * (m + 1) * (m + 2), 6);
    case SumKind::Squares: return Rational(m * (m + 1) * (2 * m + 1), 6);
    case SumKind::RecipConsecutive: return Rational(m, m + 1);
    case SumKind::RecipOdd: return Rational(m, 2 * m + 1);
    case SumKind::ProductConsecutive: return Rational(m * (m + 1) * (m + 2), 3);
  }
  fail(ErrorCode::UnknownKind, "unknown sum kind");
}

}  // namespace exactkit
