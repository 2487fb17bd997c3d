#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "exactkit/matrix.hpp"

namespace exactkit {

/// A x = b with A of type m x n.
struct LinearSystem {
  Matrix a;
  std::vector<Rational> b;

  /// Throws ShapeMismatch unless b has one entry per row of A.
  LinearSystem(Matrix coefficients, std::vector<Rational> rhs);
  /// Splits an augmented matrix (A | b); needs at least two columns.
  static LinearSystem from_augmented(const Matrix& augmented);

  std::size_t equations() const { return a.rows(); }
  std::size_t unknowns() const { return a.cols(); }
  Matrix augmented() const;
};

namespace solution {

struct Inconsistent {
  friend bool operator==(const Inconsistent&, const Inconsistent&) = default;
};

struct Unique {
  std::vector<Rational> x;
  friend bool operator==(const Unique&, const Unique&) = default;
};

/// x = particular + sum_k t_k * directions[k]; parameter t_k stands for the
/// unknown at free_cols[k].
struct Parametric {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> directions;
  std::vector<std::size_t> free_cols;

  std::vector<Rational> at(const std::vector<Rational>& params) const;
  friend bool operator==(const Parametric&, const Parametric&) = default;
};

}  // namespace solution

using SolutionSet = std::variant<solution::Inconsistent, solution::Unique, solution::Parametric>;

enum class Verdict { Inconsistent, Unique, Infinite };
std::string_view to_string(Verdict v);

struct ConsistencyReport {
  std::size_t rank_a = 0;
  std::size_t rank_ab = 0;
  std::size_t unknowns = 0;
  Verdict verdict = Verdict::Inconsistent;
};

ConsistencyReport classify(const LinearSystem& sys);

SolutionSet solve_gauss(const LinearSystem& sys);

/// x_k = det(A_k) / det(A). Throws NotSquare or SingularSystem.
SolutionSet solve_cramer(const LinearSystem& sys);

/// x = A^-1 b. Throws NotSquare or Singular.
SolutionSet solve_inverse_method(const LinearSystem& sys);

/// Square system over the pivot unknowns of a consistent system, taken from
/// the nonzero rows of its echelon form with the free unknowns moved to the
/// right-hand side at the given values. Returns the subsystem together with
/// the pivot columns it solves for.
struct ReducedSystem {
  LinearSystem system;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> free_cols;
};
ReducedSystem reduced_subsystem(const LinearSystem& sys, const std::vector<Rational>& free_values);

struct HomogeneousReport {
  bool trivial_only = false;
  SolutionSet solutions;
};

HomogeneousReport homogeneous_analysis(const Matrix& a);

/// True when A x = b holds exactly.
bool satisfies(const LinearSystem& sys, const std::vector<Rational>& x);

}  // namespace exactkit
