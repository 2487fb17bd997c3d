#include <gtest/gtest.h>

#include "exactkit/combinatorics.hpp"
#include "expect_code.hpp"
#include "oracles.hpp"

using namespace exactkit;

TEST(Combinatorics, Factorial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(20), Int(2432902008176640000ULL));
  EXPECT_CODE(factorial(-1), ErrorCode::OutOfDomain);
}

TEST(Combinatorics, BinomMatchesFactorialFormula) {
  EXPECT_EQ(binom(7, 2), 21);
  for (int n = 0; n <= 30; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(binom(n, k), factorial(n) / (factorial(k) * factorial(n - k)));
    }
  }
  EXPECT_CODE(binom(3, 4), ErrorCode::OutOfDomain);
  EXPECT_CODE(binom(3, -1), ErrorCode::OutOfDomain);
}

TEST(Combinatorics, PascalIdentities) {
  for (int n = 1; n <= 40; ++n) {
    Int row_sum = 0;
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(binom(n, k), binom(n, n - k));
      if (k >= 1) {
        EXPECT_EQ(binom(n, k), binom(n - 1, k - 1) + (k <= n - 1 ? binom(n - 1, k) : Int(0)));
      }
      row_sum += binom(n, k);
    }
    EXPECT_EQ(row_sum, Int(1) << n);
  }
}

TEST(Combinatorics, ExpansionOfThreePlusTwoX) {
  const auto terms = binom_expand(4, 3, 0, 2, 1);
  EXPECT_EQ(format_polynomial(terms), "81 + 216x + 216x^2 + 96x^3 + 16x^4");
}

TEST(Combinatorics, TermOfFractionalExponents) {
  const Monomial t = binom_term(12, 4, 1, Rational(Int(1), Int(2)), 1, Rational(Int(2), Int(3)));
  EXPECT_EQ(t.coeff, 495);
  EXPECT_EQ(t.exponent, Rational(Int(20), Int(3)));
  EXPECT_CODE(binom_term(3, 4, 1, 1, 1, 1), ErrorCode::OutOfDomain);
}

TEST(Combinatorics, ConstantTermOfXPlusInverseSquare) {
  // T_{k+1} has exponent 12 - 3k, so k = 4.
  const Monomial t = binom_term(12, 4, 1, 1, 1, -2);
  EXPECT_TRUE(t.exponent.is_zero());
  EXPECT_EQ(t.coeff, 495);
}

TEST(Combinatorics, ExpansionMergesLikeExponents) {
  // (x + x)^3 = 8x^3
  const auto terms = binom_expand(3, 1, 1, 1, 1);
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0].coeff, 8);
  EXPECT_EQ(terms[0].exponent, 3);
  // Setting x = 1 gives (c1 + c2)^n.
  for (int n = 1; n <= 12; ++n) {
    Rational sum = 0;
    for (const auto& m : binom_expand(n, 2, 0, Rational(Int(-1), Int(3)), 1)) sum += m.coeff;
    EXPECT_EQ(sum, Rational(Int(5), Int(3)).pow(n));
  }
  EXPECT_CODE(binom_expand(0, 1, 0, 1, 1), ErrorCode::OutOfDomain);
}

TEST(Combinatorics, SumKindNames) {
  for (auto kind : {SumKind::FirstN, SumKind::Odd, SumKind::Triangular, SumKind::Squares,
                    SumKind::RecipConsecutive, SumKind::RecipOdd, SumKind::ProductConsecutive}) {
    EXPECT_EQ(parse_sum_kind(to_string(kind)), kind);
  }
  EXPECT_CODE(parse_sum_kind("cubes"), ErrorCode::UnknownKind);
  EXPECT_CODE(closed_form_sum(SumKind::Odd, 0), ErrorCode::OutOfDomain);
}

TEST(Combinatorics, ClosedFormsAtSmallN) {
  EXPECT_EQ(closed_form_sum(SumKind::FirstN, 100), 5050);
  EXPECT_EQ(closed_form_sum(SumKind::Odd, 7), 49);
  EXPECT_EQ(closed_form_sum(SumKind::Squares, 3), 14);
  EXPECT_EQ(closed_form_sum(SumKind::RecipConsecutive, 9), Rational(Int(9), Int(10)));
  EXPECT_EQ(closed_form_sum(SumKind::RecipOdd, 3), Rational(Int(3), Int(7)));
  EXPECT_EQ(closed_form_sum(SumKind::Triangular, 3), 10);
  EXPECT_EQ(closed_form_sum(SumKind::ProductConsecutive, 3), 20);
}

TEST(Combinatorics, ClosedFormsAgreeWithLoops) {
  for (std::int64_t n = 1; n <= 200; ++n) {
    EXPECT_TRUE(oracle::same(closed_form_sum(SumKind::Squares, n),
                             oracle::loop_sum(n, [](std::int64_t k) { return oracle::Q(k * k); })));
    EXPECT_TRUE(oracle::same(closed_form_sum(SumKind::RecipOdd, n), oracle::loop_sum(n, [](std::int64_t k) {
                               return oracle::Q(1) / oracle::Q((2 * k - 1) * (2 * k + 1));
                             })));
  }
}
