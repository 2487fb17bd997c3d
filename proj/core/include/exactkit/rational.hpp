#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace exactkit {

/// Arbitrary-precision signed integer. Arithmetic never overflows.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

/// Parses an optionally signed decimal integer, ignoring whitespace.
Int parse_int(std::string_view text);

/// Exact fraction num/den kept in lowest terms with den >= 1. Zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  template <std::integral T>
  Rational(T value) : num_(value), den_(1) {}  // NOLINT: implicit by design of the scalar
  Rational(Int value) : num_(std::move(value)), den_(1) {}  // NOLINT
  Rational(Int num, Int den);

  /// Accepts an integer, "p/q", or a finite decimal such as "-2.45".
  /// Whitespace anywhere in the literal is ignored.
  static Rational parse(std::string_view text);

  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  Rational abs() const { return Rational(Int(boost::multiprecision::abs(num_)), den_, Normalized{}); }
  Rational reciprocal() const;
  Rational pow(std::int64_t exponent) const;

  double to_double() const;
  /// "p" for integers, "p/q" otherwise.
  std::string str() const;
  /// Fixed-point rendering rounded half away from zero.
  std::string decimal(int places) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& value) {
    return Rational(Int(-value.num_), value.den_, Normalized{});
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Normalized {};
  Rational(Int num, Int den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Int num_;
  Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

enum class RatOp { Add, Sub, Mul, Div };

/// Applies one of the four field operations. Division by zero throws
/// DivisionByZero.
Rational rat_arith(const Rational& a, const Rational& b, RatOp op);

/// Total order on rationals.
std::strong_ordering rat_compare(const Rational& a, const Rational& b);

}  // namespace exactkit
