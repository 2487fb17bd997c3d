#pragma once

#include <string>
#include <vector>

#include "exactkit/rational.hpp"

namespace exactkit {

struct DivMod {
  Int quotient;
  Int remainder;
};

/// a = b*q + r with 0 <= r < b. Requires b > 0; negative a is allowed.
DivMod divmod_euclid(const Int& a, const Int& b);

/// True iff a | b. Throws ZeroDivisorQuery for a = 0.
bool divides(const Int& a, const Int& b);

/// One line of the Euclidean remainder chain: dividend = divisor*q + r.
struct EuclidStep {
  Int dividend;
  Int divisor;
  Int quotient;
  Int remainder;
};

struct GcdResult {
  Int gcd;
  std::vector<EuclidStep> trace;
};

/// Greatest common divisor of |a| and |b| together with the remainder chain
/// that produced it. gcd(0, b) = |b|. Throws BothZero.
GcdResult gcd(const Int& a, const Int& b);

/// Least positive common multiple. Throws ZeroArgument if either is 0.
Int lcm(const Int& a, const Int& b);

struct PrimePower {
  Int prime;
  unsigned multiplicity;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization by trial division, primes ascending. Requires n >= 2.
std::vector<PrimePower> factorize(const Int& n);

/// Requires n >= 1. 1 is not prime.
bool is_prime(const Int& n);

/// Parity for any integer; negative values follow the usual n mod 2 rule.
bool is_even(const Int& n);

/// Positional representation a_k..a_0 in a base between 2 and 16.
struct Digits {
  int base = 10;
  std::vector<int> coeffs;  // most significant first

  /// Digit string using 0-9a-f, e.g. "236".
  std::string str() const;
  friend bool operator==(const Digits&, const Digits&) = default;
};

Digits to_base(const Int& n, int base);
Int from_base(const Digits& digits);
/// Parses a digit string such as "10010011" or "ff" in the given base.
Digits parse_digits(const std::string& text, int base);

}  // namespace exactkit
