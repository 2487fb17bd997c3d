#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exactkit/rational.hpp"

namespace exactkit {

/// z = re + im*i with exact rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  /// "a+bi", "a-bi", "bi", "a"; fractions rendered as p/q.
  std::string str() const;
  static GaussianRational parse(std::string_view text);

  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& z) { return {-z.re, -z.im}; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

enum class ComplexOp { Add, Sub, Mul, Div };

GaussianRational c_arith(const GaussianRational& a, const GaussianRational& b, ComplexOp op);
GaussianRational conj(const GaussianRational& z);
Rational modulus_sq(const GaussianRational& z);
double modulus(const GaussianRational& z);

/// Exact integer power by squaring; negative n requires z != 0.
GaussianRational pow(const GaussianRational& z, std::int64_t n);

/// i^n for any integer n.
GaussianRational i_pow(std::int64_t n);

/// Argument in (-pi, pi], computed piecewise from atan(y/x).
double arg_principal(double re, double im);
double arg_principal(const GaussianRational& z);
/// Argument in [0, 2pi).
double arg_canonical(double re, double im);
double arg_canonical(const GaussianRational& z);

/// Reduces an angle into [0, 2pi).
double canonical_angle(double theta);

struct Polar {
  double r = 0;
  double theta = 0;
};

Polar to_polar(double re, double im);
Polar to_polar(const GaussianRational& z);

struct Cartesian {
  double re = 0;
  double im = 0;
};

Cartesian from_polar(const Polar& p);

Polar polar_mul(const Polar& a, const Polar& b);
Polar polar_div(const Polar& a, const Polar& b);
/// De Moivre. n = 0 gives (1, 0); negative n requires r != 0.
Polar pow_int(const Polar& p, std::int64_t n);

/// The n distinct n-th roots, k = 0..n-1, with angle (arg_canonical + 2k pi)/n.
std::vector<Polar> roots_n(const GaussianRational& z, std::int64_t n);
std::vector<Polar> roots_n(const Polar& z, std::int64_t n);

double degrees(double radians);
double radians(double degrees);

}  // namespace exactkit
