#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "exactkit/rational.hpp"

namespace exactkit {

Int factorial(std::int64_t n);

/// n choose k by the multiplicative formula; every partial product divides
/// exactly, so no fractions appear.
Int binom(std::int64_t n, std::int64_t k);

/// coeff * x^exponent
struct Monomial {
  Rational coeff;
  Rational exponent;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Term T_{k+1} of (c1*x^e1 + c2*x^e2)^n with 0-based k:
/// binom(n,k) * c1^(n-k) * c2^k * x^(e1(n-k) + e2 k).
Monomial binom_term(std::int64_t n, std::int64_t k, const Rational& c1, const Rational& e1,
                    const Rational& c2, const Rational& e2);

/// Full expansion of (c1*x^e1 + c2*x^e2)^n, like exponents merged, zero
/// coefficients dropped, sorted by ascending exponent.
std::vector<Monomial> binom_expand(std::int64_t n, const Rational& c1, const Rational& e1,
                                   const Rational& c2, const Rational& e2);

/// Human form such as "81 + 216x + 216x^2".
std::string format_polynomial(const std::vector<Monomial>& terms);

enum class SumKind {
  FirstN,              // 1 + 2 + ... + n
  Odd,                 // 1 + 3 + ... + (2n-1)
  Triangular,          // 1 + 3 + 6 + ... + n(n+1)/2
  Squares,             // 1^2 + ... + n^2
  RecipConsecutive,    // 1/(1*2) + ... + 1/(n(n+1))
  RecipOdd,            // 1/(1*3) + ... + 1/((2n-1)(2n+1))
  ProductConsecutive,  // 1*2 + ... + n(n+1)
};

/// Throws UnknownKind for names outside the list above
/// (first_n, odd, triangular, squares, recip_consecutive, recip_odd,
/// product_consecutive).
SumKind parse_sum_kind(std::string_view name);
std::string_view to_string(SumKind kind);

/// Closed-form value of the n-term sum. Requires n >= 1.
Rational closed_form_sum(SumKind kind, std::int64_t n);

}  // namespace exactkit
