#include "exactkit/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include <boost/multiprecision/cpp_int.hpp>

#include "exactkit/error.hpp"

namespace exactkit {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

Int pow10(std::size_t n) {
  Int result = 1;
  for (std::size_t i = 0; i < n; ++i) result *= 10;
  return result;
}

// Digits only, at least one.
bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

}  // namespace

Int parse_int(std::string_view text) {
  std::string s = strip_spaces(text);
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string_view digits(s.data() + pos, s.size() - pos);
  if (!all_digits(digits)) {
    throw ParseError("invalid integer literal '" + std::string(text) + "'", pos);
  }
  Int value{std::string(digits)};
  return negative ? Int(-value) : value;
}

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  Int g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty rational literal", 0);

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    if (s.find('/', slash + 1) != std::string::npos) {
      throw ParseError("more than one '/' in '" + s + "'", slash);
    }
    Int num = parse_int(std::string_view(s).substr(0, slash));
    Int den = parse_int(std::string_view(s).substr(slash + 1));
    if (den.is_zero()) throw ParseError("zero denominator in '" + s + "'", slash + 1);
    return Rational(std::move(num), std::move(den));
  }

  if (s.find_first_of("()[]") != std::string::npos) {
    throw ParseError("repeating decimals are not accepted: '" + s + "'",
                     s.find_first_of("()[]"));
  }

  if (const auto dot = s.find('.'); dot != std::string::npos) {
    std::size_t start = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
      negative = s[0] == '-';
      start = 1;
    }
    std::string_view whole(s.data() + start, dot - start);
    std::string_view frac(s.data() + dot + 1, s.size() - dot - 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw ParseError("invalid decimal literal '" + s + "'", dot);
    }
    Int value = whole.empty() ? Int(0) : Int(std::string(whole));
    value = value * pow10(frac.size()) + Int(std::string(frac));
    if (negative) value = -value;
    return Rational(std::move(value), pow10(frac.size()));
  }

  return Rational(parse_int(s));
}

Rational Rational::reciprocal() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "reciprocal of zero");
  return Rational(den_, num_);
}

Rational Rational::pow(std::int64_t exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  Rational base = *this;
  Rational result(1);
  auto e = static_cast<std::uint64_t>(exponent);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

double Rational::to_double() const {
  boost::multiprecision::cpp_rational q{boost::multiprecision::cpp_int(num_),
                                       boost::multiprecision::cpp_int(den_)};
  return q.convert_to<double>();
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::string Rational::decimal(int places) const {
  const Int scale = pow10(static_cast<std::size_t>(std::max(places, 0)));
  Int scaled_abs = boost::multiprecision::abs(num_) * scale;
  Int q = scaled_abs / den_;
  Int r = scaled_abs % den_;
  if (r * 2 >= den_) q += 1;
  std::string digits = q.str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (num_.sign() < 0 && !q.is_zero()) digits.insert(0, "-");
  return digits;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
  // Copies guard against self-division.
  Int n = rhs.num_;
  Int d = rhs.den_;
  num_ *= d;
  den_ *= n;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Int lhs = a.num_ * b.den_;
  const Int rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

Rational rat_arith(const Rational& a, const Rational& b, RatOp op) {
  switch (op) {
    case RatOp::Add: return a + b;
    case RatOp::Sub: return a - b;
    case RatOp::Mul: return a * b;
    case RatOp::Div: return a / b;
  }
  fail(ErrorCode::UnknownKind, "unknown rational operation");
}

std::strong_ordering rat_compare(const Rational& a, const Rational& b) { return a <=> b; }

}  // namespace exactkit
