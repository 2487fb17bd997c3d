#include "properties.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <variant>

#include "exactkit/combinatorics.hpp"
#include "exactkit/complex.hpp"
#include "exactkit/geometry.hpp"
#include "exactkit/linear_system.hpp"
#include "exactkit/matrix.hpp"
#include "exactkit/number_theory.hpp"
#include "oracles.hpp"

namespace props {

using namespace exactkit;
using oracle::Q;

namespace {

std::string show(const Matrix& m) { return "\n" + m.str(); }

}  // namespace

Outcome det_methods_agree(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, 6);
  for (int s = 0; s < samples; ++s) {
    const auto n = static_cast<std::size_t>(size(rng));
    // Sprinkle zeros so the Laplace line choice gets exercised.
    Matrix a = oracle::random_matrix(rng, n, n);
    for (std::size_t k = 0; k < n; ++k) {
      if (rng() % 4 == 0) a(rng() % n, rng() % n) = 0;
    }
    const Q expected = oracle::leibniz_det(oracle::to_q(a));
    const Rational lap = det(a, DetMethod::Laplace);
    const Rational eli = det(a, DetMethod::Elimination);
    if (!oracle::same(lap, expected) || !oracle::same(eli, expected)) {
      return "determinants disagree (laplace " + lap.str() + ", elimination " + eli.str() + ") for" + show(a);
    }
    if (n == 3 && !oracle::same(det(a, DetMethod::Sarrus3), expected)) {
      return "sarrus3 disagrees for" + show(a);
    }
  }
  return std::nullopt;
}

Outcome adjugate_identities(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(2, 5);
  for (int s = 0; s < samples; ++s) {
    const auto n = static_cast<std::size_t>(size(rng));
    const Matrix a = oracle::random_regular(rng, n);
    const Matrix adj = adjugate(a);
    const Rational d = det(a);
    const Matrix scaled = scale(d, Matrix::identity(n));
    if (a * adj != scaled || adj * a != scaled) return "A adj A != det(A) I for" + show(a);
    if (det(adj) != d.pow(static_cast<std::int64_t>(n) - 1)) return "det(adj A) != det(A)^(n-1) for" + show(a);
  }
  return std::nullopt;
}

Outcome solvers_agree(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, 6);
  for (int s = 0; s < samples; ++s) {
    const auto n = static_cast<std::size_t>(size(rng));
    const Matrix a = oracle::random_regular(rng, n);
    std::vector<Rational> b;
    for (std::size_t k = 0; k < n; ++k) b.push_back(oracle::random_rational(rng));
    const LinearSystem sys(a, b);
    const SolutionSet g = solve_gauss(sys);
    const auto* u = std::get_if<solution::Unique>(&g);
    if (!u) return "gauss did not return a unique solution for" + show(a);
    if (g != solve_cramer(sys) || g != solve_inverse_method(sys)) return "methods disagree for" + show(a);
    // Substitute with the oracle arithmetic.
    const auto qa = oracle::to_q(a);
    for (std::size_t i = 0; i < n; ++i) {
      Q lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += qa[i][j] * oracle::to_q(u->x[j]);
      if (lhs != oracle::to_q(b[i])) return "solution fails equation " + std::to_string(i + 1) + " for" + show(a);
    }
  }
  return std::nullopt;
}

Outcome mixed_product_is_det(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Vec3 a = oracle::random_vec(rng), b = oracle::random_vec(rng), c = oracle::random_vec(rng);
    oracle::QMatrix rows;
    for (const Vec3* v : {&a, &b, &c}) rows.push_back({oracle::to_q(v->x), oracle::to_q(v->y), oracle::to_q(v->z)});
    if (!oracle::same(mixed(a, b, c), oracle::leibniz_det(rows))) {
      return "mixed product differs from determinant for " + a.str() + ", " + b.str() + ", " + c.str();
    }
    if (coplanar(a, b, c) != mixed(a, b, c).is_zero()) return "coplanar flag inconsistent";
  }
  return std::nullopt;
}

Outcome cross_product_laws(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Vec3 a = oracle::random_vec(rng), b = oracle::random_vec(rng);
    const Vec3 c = cross(a, b);
    if (!dot(c, a).is_zero() || !dot(c, b).is_zero()) return "cross product not orthogonal for " + a.str() + ", " + b.str();
    if (c != -cross(b, a)) return "cross product not anticommutative for " + a.str() + ", " + b.str();
    if (!cross(a, a).is_zero()) return "a x a != 0 for " + a.str();
    // Component formula written out independently.
    const Q ax = oracle::to_q(a.x), ay = oracle::to_q(a.y), az = oracle::to_q(a.z);
    const Q bx = oracle::to_q(b.x), by = oracle::to_q(b.y), bz = oracle::to_q(b.z);
    if (!oracle::same(c.x, ay * bz - az * by) || !oracle::same(c.y, az * bx - ax * bz) ||
        !oracle::same(c.z, ax * by - ay * bx)) {
      return "cross product components wrong for " + a.str() + ", " + b.str();
    }
    // Lagrange identity |a x b|^2 = |a|^2 |b|^2 - (a.b)^2.
    if (norm_sq(c) != norm_sq(a) * norm_sq(b) - dot(a, b) * dot(a, b)) return "Lagrange identity fails";
  }
  return std::nullopt;
}

Outcome divisibility_families(int max_n) {
  using oracle::Z;
  for (int n = 1; n <= max_n; ++n) {
    const Int N = n;
    const Int p5 = boost::multiprecision::pow(Int(5), static_cast<unsigned>(n));
    const Int p2 = boost::multiprecision::pow(Int(2), static_cast<unsigned>(n + 1));
    const Int p7 = boost::multiprecision::pow(Int(7), static_cast<unsigned>(n));
    const Int p5b = boost::multiprecision::pow(Int(5), static_cast<unsigned>(2 * n - 1));
    const Int p2b = boost::multiprecision::pow(Int(2), static_cast<unsigned>(3 * n + 1));
    const std::pair<int, Int> cases[] = {
        {3, p5 + p2},           {6, N * N * N + 11 * N},   {6, p7 - 1},
        {3, N * N * N - N},     {6, N * N * N + 5 * N},    {17, 7 * p5b + p2b},
    };
    for (std::size_t k = 0; k < std::size(cases); ++k) {
      const auto& [d, value] = cases[k];
      if (!divides(Int(d), value)) return "family " + std::to_string(k + 1) + " fails at n = " + std::to_string(n);
      // Independent check through the oracle integer type.
      if (Z(value) % d != 0) return "oracle disagrees on family " + std::to_string(k + 1);
    }
  }
  return std::nullopt;
}

Outcome bernoulli_inequality(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> exp(2, 20);
  std::uniform_int_distribution<int> num(-99, 300);
  std::uniform_int_distribution<int> den(1, 100);
  int done = 0;
  while (done < samples) {
    const Rational h(Int(num(rng)), Int(den(rng)));
    if (h <= Rational(-1) || h.is_zero()) continue;
    const int n = exp(rng);
    const Rational lhs = (Rational(1) + h).pow(n);
    const Rational rhs = Rational(1) + Rational(n) * h;
    if (!(lhs > rhs)) return "(1+h)^n <= 1+nh for h = " + h.str() + ", n = " + std::to_string(n);
    ++done;
  }
  return std::nullopt;
}

Outcome base_round_trip(int max_n) {
  for (int base = 2; base <= 16; ++base) {
    for (int n = 0; n <= max_n; ++n) {
      const Digits d = to_base(Int(n), base);
      if (from_base(d) != n) return "round trip fails for n = " + std::to_string(n) + " base " + std::to_string(base);
      std::string expected = oracle::chars_in_base(static_cast<unsigned>(n), base);
      std::string got;
      for (const auto& c : d.coeffs) got += "0123456789abcdef"[static_cast<int>(c)];
      if (got != expected) return "digits of " + std::to_string(n) + " in base " + std::to_string(base) + ": " + got;
    }
  }
  return std::nullopt;
}

Outcome closed_form_sums(int max_n) {
  struct Case {
    SumKind kind;
    Q (*term)(std::int64_t);
  };
  const Case cases[] = {
      {SumKind::FirstN, [](std::int64_t k) { return Q(k); }},
      {SumKind::Odd, [](std::int64_t k) { return Q(2 * k - 1); }},
      {SumKind::Triangular, [](std::int64_t k) { return Q(k * (k + 1) / 2); }},
      {SumKind::Squares, [](std::int64_t k) { return Q(k * k); }},
      {SumKind::RecipConsecutive, [](std::int64_t k) { return Q(1) / Q(k * (k + 1)); }},
      {SumKind::RecipOdd, [](std::int64_t k) { return Q(1) / Q((2 * k - 1) * (2 * k + 1)); }},
      {SumKind::ProductConsecutive, [](std::int64_t k) { return Q(k * (k + 1)); }},
  };
  for (const auto& c : cases) {
    Q running = 0;
    for (std::int64_t n = 1; n <= max_n; ++n) {
      running += c.term(n);
      if (!oracle::same(closed_form_sum(c.kind, n), running)) {
        return std::string(to_string(c.kind)) + " disagrees with the loop at n = " + std::to_string(n);
      }
    }
  }
  return std::nullopt;
}

Outcome roots_reconstruct(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree(2, 8);
  int done = 0;
  while (done < samples) {
    const GaussianRational z{oracle::random_rational(rng), oracle::random_rational(rng)};
    if (z.is_zero()) continue;
    const int n = degree(rng);
    const auto roots = roots_n(z, n);
    if (roots.size() != static_cast<std::size_t>(n)) return "wrong number of roots";
    const std::complex<double> target(z.re.to_double(), z.im.to_double());
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const Cartesian back = from_polar(pow_int(roots[k], n));
      if (std::abs(std::complex<double>(back.re, back.im) - target) > 1e-9) {
        return "root " + std::to_string(k) + " of " + z.str() + " (n = " + std::to_string(n) + ") misses";
      }
      if (k > 0) {
        const double gap = roots[k].theta - roots[k - 1].theta;
        if (std::abs(gap - 2 * std::numbers::pi / n) > 1e-9) return "root angles not spaced by 2pi/n";
      }
    }
    ++done;
  }
  return std::nullopt;
}

}  // namespace props
