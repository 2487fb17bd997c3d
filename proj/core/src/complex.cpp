#include "exactkit/complex.hpp"

#include <cmath>
#include <numbers>

#include "exactkit/error.hpp"

namespace exactkit {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;
}  // namespace

std::string GaussianRational::str() const {
  if (im.is_zero()) return re.str();
  std::string imag;
  const Rational mag = im.abs();
  if (mag != Rational(1)) imag = mag.str();
  imag += "i";
  if (re.is_zero()) return (im.sign() < 0 ? "-" : "") + imag;
  return re.str() + (im.sign() < 0 ? "-" : "+") + imag;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  Rational r = re * rhs.re - im * rhs.im;
  Rational i = re * rhs.im + im * rhs.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  const Rational d = modulus_sq(rhs);
  if (d.is_zero()) fail(ErrorCode::DivisionByZero, "division by the complex zero");
  *this *= conj(rhs);
  re /= d;
  im /= d;
  return *this;
}

GaussianRational c_arith(const GaussianRational& a, const GaussianRational& b, ComplexOp op) {
  switch (op) {
    case ComplexOp::Add: return a + b;
    case ComplexOp::Sub: return a - b;
    case ComplexOp::Mul: return a * b;
    case ComplexOp::Div: return a / b;
  }
  return a;
}

GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

Rational modulus_sq(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }

double modulus(const GaussianRational& z) { return std::sqrt(modulus_sq(z).to_double()); }

GaussianRational pow(const GaussianRational& z, std::int64_t n) {
  GaussianRational base = z;
  if (n < 0) {
    base = GaussianRational{1, 0} / z;
    n = -n;
  }
  GaussianRational acc{1, 0};
  while (n > 0) {
    if (n & 1) acc *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return acc;
}

GaussianRational i_pow(std::int64_t n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

double arg_principal(double re, double im) {
  if (re == 0 && im == 0) fail(ErrorCode::ZeroArgument, "the argument of 0 is undefined");
  if (re > 0) return std::atan(im / re);
  if (re < 0) return im >= 0 ? kPi + std::atan(im / re) : -kPi + std::atan(im / re);
  return im > 0 ? kPi / 2 : -kPi / 2;
}

double arg_principal(const GaussianRational& z) {
  if (z.is_zero()) fail(ErrorCode::ZeroArgument, "the argument of 0 is undefined");
  // The quotient is formed exactly so tiny components do not underflow.
  const int sx = z.re.sign();
  const int sy = z.im.sign();
  if (sx == 0) return sy > 0 ? kPi / 2 : -kPi / 2;
  const double t = std::atan((z.im / z.re).to_double());
  if (sx > 0) return t;
  return sy >= 0 ? kPi + t : -kPi + t;
}

double canonical_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t = 0;
  return t;
}

double arg_canonical(double re, double im) { return canonical_angle(arg_principal(re, im)); }
double arg_canonical(const GaussianRational& z) { return canonical_angle(arg_principal(z)); }

Polar to_polar(double re, double im) { return {std::hypot(re, im), arg_canonical(re, im)}; }
Polar to_polar(const GaussianRational& z) { return {modulus(z), arg_canonical(z)}; }

Cartesian from_polar(const Polar& p) { return {p.r * std::cos(p.theta), p.r * std::sin(p.theta)}; }

Polar polar_mul(const Polar& a, const Polar& b) {
  return {a.r * b.r, canonical_angle(a.theta + b.theta)};
}

Polar polar_div(const Polar& a, const Polar& b) {
  if (b.r == 0) fail(ErrorCode::DivisionByZero, "division by a zero-radius number");
  return {a.r / b.r, canonical_angle(a.theta - b.theta)};
}

Polar pow_int(const Polar& p, std::int64_t n) {
  if (n == 0) return {1, 0};
  if (n < 0 && p.r == 0) fail(ErrorCode::DivisionByZero, "negative power of zero");
  const double nd = static_cast<double>(n);
  return {std::pow(p.r, nd), canonical_angle(nd * p.theta)};
}

std::vector<Polar> roots_n(const Polar& z, std::int64_t n) {
  if (n < 2) fail(ErrorCode::BadDegree, "root degree must be at least 2");
  if (z.r == 0) fail(ErrorCode::ZeroArgument, "roots of 0 have no argument");
  const double radius = std::pow(z.r, 1.0 / static_cast<double>(n));
  const double base = canonical_angle(z.theta);
  std::vector<Polar> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    out.push_back({radius, (base + kTwoPi * static_cast<double>(k)) / static_cast<double>(n)});
  }
  return out;
}

std::vector<Polar> roots_n(const GaussianRational& z, std::int64_t n) {
  if (n < 2) fail(ErrorCode::BadDegree, "root degree must be at least 2");
  if (z.is_zero()) fail(ErrorCode::ZeroArgument, "roots of 0 have no argument");
  return roots_n(to_polar(z), n);
}

double degrees(double rad) { return rad * 180.0 / kPi; }
double radians(double deg) { return deg * kPi / 180.0; }

}  // namespace exactkit
