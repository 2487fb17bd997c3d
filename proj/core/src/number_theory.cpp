#include "exactkit/number_theory.hpp"

#include <algorithm>
#include <cctype>

#include "exactkit/error.hpp"

namespace exactkit {

namespace {

Int abs_int(const Int& v) { return v.sign() < 0 ? Int(-v) : v; }

void check_base(int base) {
  if (base < 2 || base > 16) {
    fail(ErrorCode::BadBase, "base must lie in 2..16, got " + std::to_string(base));
  }
}

}  // namespace

DivMod divmod_euclid(const Int& a, const Int& b) {
  if (b.sign() <= 0) fail(ErrorCode::NonPositiveDivisor, "divisor must be positive");
  // cpp_int division truncates toward zero; shift into 0 <= r < b.
  Int q = a / b;
  Int r = a % b;
  if (r.sign() < 0) {
    r += b;
    q -= 1;
  }
  return {std::move(q), std::move(r)};
}

bool divides(const Int& a, const Int& b) {
  if (a.is_zero()) fail(ErrorCode::ZeroDivisorQuery, "0 | b is undefined");
  return (b % a).is_zero();
}

GcdResult gcd(const Int& a, const Int& b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  GcdResult result;
  Int x = abs_int(a);
  Int y = abs_int(b);
  while (!y.is_zero()) {
    DivMod dm = divmod_euclid(x, y);
    result.trace.push_back({x, y, dm.quotient, dm.remainder});
    x = std::move(y);
    y = std::move(dm.remainder);
  }
  result.gcd = std::move(x);
  return result;
}

Int lcm(const Int& a, const Int& b) {
  if (a.is_zero() || b.is_zero()) fail(ErrorCode::ZeroArgument, "lcm needs nonzero arguments");
  const Int g = gcd(a, b).gcd;
  return abs_int(a) / g * abs_int(b);
}

std::vector<PrimePower> factorize(const Int& n) {
  if (n < 2) fail(ErrorCode::OutOfDomain, "factorize requires n >= 2");
  std::vector<PrimePower> factors;
  Int rest = n;
  for (Int p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned m = 0;
    while ((rest % p).is_zero()) {
      rest /= p;
      ++m;
    }
    if (m > 0) factors.push_back({p, m});
  }
  if (rest > 1) factors.push_back({rest, 1});
  return factors;
}

bool is_prime(const Int& n) {
  if (n < 1) fail(ErrorCode::OutOfDomain, "is_prime requires n >= 1");
  if (n < 2) return false;
  if (n < 4) return true;
  if ((n % 2).is_zero()) return false;
  for (Int d = 3; d * d <= n; d += 2) {
    if ((n % d).is_zero()) return false;
  }
  return true;
}

bool is_even(const Int& n) { return (n % 2).is_zero(); }

std::string Digits::str() const {
  static constexpr char kSymbols[] = "0123456789abcdef";
  std::string out;
  out.reserve(coeffs.size());
  for (int c : coeffs) out.push_back(kSymbols[c]);
  return out;
}

Digits to_base(const Int& n, int base) {
  check_base(base);
  if (n.sign() < 0) fail(ErrorCode::NegativeValue, "to_base requires n >= 0");
  Digits d{base, {}};
  if (n.is_zero()) {
    d.coeffs.push_back(0);
    return d;
  }
  Int rest = n;
  while (!rest.is_zero()) {
    d.coeffs.push_back(static_cast<int>(rest % base));
    rest /= base;
  }
  std::reverse(d.coeffs.begin(), d.coeffs.end());
  return d;
}

Int from_base(const Digits& digits) {
  check_base(digits.base);
  if (digits.coeffs.empty()) fail(ErrorCode::OutOfDomain, "empty digit list");
  Int value = 0;
  for (int c : digits.coeffs) {
    if (c < 0 || c >= digits.base) {
      fail(ErrorCode::OutOfDomain, "digit " + std::to_string(c) + " outside base " +
                                       std::to_string(digits.base));
    }
    value = value * digits.base + c;  // Horner form of sum a_j b^j
  }
  return value;
}

Digits parse_digits(const std::string& text, int base) {
  check_base(base);
  Digits d{base, {}};
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
    int v = -1;
    if (c >= '0' && c <= '9') v = c - '0';
    if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    if (v < 0 || v >= base) {
      throw ParseError("invalid digit '" + std::string(1, text[i]) + "' for base " +
                           std::to_string(base),
                       i);
    }
    d.coeffs.push_back(v);
  }
  if (d.coeffs.empty()) throw ParseError("empty digit string", 0);
  // Canonical form drops leading zeros but keeps a lone 0.
  auto first = std::find_if(d.coeffs.begin(), d.coeffs.end(), [](int v) { return v != 0; });
  if (first == d.coeffs.end()) {
    d.coeffs = {0};
  } else {
    d.coeffs.erase(d.coeffs.begin(), first);
  }
  return d;
}

}  // namespace exactkit
