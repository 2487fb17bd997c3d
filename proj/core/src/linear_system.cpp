#include "exactkit/linear_system.hpp"

#include "exactkit/error.hpp"

namespace exactkit {

LinearSystem::LinearSystem(Matrix coefficients, std::vector<Rational> rhs)
    : a(std::move(coefficients)), b(std::move(rhs)) {
  if (b.size() != a.rows()) fail(ErrorCode::ShapeMismatch, "right-hand side needs one entry per equation");
}

LinearSystem LinearSystem::from_augmented(const Matrix& augmented) {
  if (augmented.cols() < 2) fail(ErrorCode::ShapeMismatch, "augmented matrix needs at least two columns");
  Matrix coeffs(augmented.rows(), augmented.cols() - 1);
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < augmented.rows(); ++i) {
    for (std::size_t j = 0; j + 1 < augmented.cols(); ++j) coeffs(i, j) = augmented(i, j);
    rhs.push_back(augmented(i, augmented.cols() - 1));
  }
  return LinearSystem(std::move(coeffs), std::move(rhs));
}

Matrix LinearSystem::augmented() const {
  Matrix m(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    m(i, a.cols()) = b[i];
  }
  return m;
}

std::vector<Rational> solution::Parametric::at(const std::vector<Rational>& params) const {
  if (params.size() != directions.size()) fail(ErrorCode::ShapeMismatch, "wrong number of parameters");
  std::vector<Rational> x = particular;
  for (std::size_t k = 0; k < params.size(); ++k) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += params[k] * directions[k][i];
  }
  return x;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Inconsistent: return "inconsistent";
    case Verdict::Unique: return "unique";
    case Verdict::Infinite: return "infinite";
  }
  return "unknown";
}

ConsistencyReport classify(const LinearSystem& sys) {
  ConsistencyReport r;
  r.rank_a = echelon_form(sys.a).rank;
  r.rank_ab = echelon_form(sys.augmented()).rank;
  r.unknowns = sys.unknowns();
  if (r.rank_a != r.rank_ab) {
    r.verdict = Verdict::Inconsistent;
  } else {
    r.verdict = r.rank_a == r.unknowns ? Verdict::Unique : Verdict::Infinite;
  }
  return r;
}

namespace {

/// Reduced row-echelon form of (A | b) with unit pivots.
struct Reduced {
  Matrix rref;
  std::vector<std::size_t> pivot_cols;
  bool consistent = true;
};

Reduced reduce(const LinearSystem& sys) {
  Matrix m = sys.augmented();
  const std::size_t rows = m.rows();
  const std::size_t n = sys.unknowns();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t k = 0; k <= n; ++k) std::swap(m(p, k), m(r, k));
    }
    const Rational pivot = m(r, c);
    for (std::size_t k = 0; k <= n; ++k) m(r, k) /= pivot;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || m(q, c).is_zero()) continue;
      const Rational f = m(q, c);
      for (std::size_t k = 0; k <= n; ++k) m(q, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  bool consistent = true;
  for (std::size_t q = r; q < rows; ++q) {
    if (!m(q, n).is_zero()) consistent = false;
  }
  return {std::move(m), std::move(pivots), consistent};
}

std::vector<std::size_t> complement_cols(const std::vector<std::size_t>& pivots, std::size_t n) {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (k < pivots.size() && pivots[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

void require_square(const LinearSystem& sys) {
  if (!sys.a.is_square()) fail(ErrorCode::NotSquare, "method needs as many equations as unknowns");
}

}  // namespace

SolutionSet solve_gauss(const LinearSystem& sys) {
  const Reduced red = reduce(sys);
  if (!red.consistent) return solution::Inconsistent{};
  const std::size_t n = sys.unknowns();
  std::vector<Rational> particular(n);
  for (std::size_t k = 0; k < red.pivot_cols.size(); ++k) particular[red.pivot_cols[k]] = red.rref(k, n);
  if (red.pivot_cols.size() == n) return solution::Unique{std::move(particular)};

  solution::Parametric fam;
  fam.free_cols = complement_cols(red.pivot_cols, n);
  for (std::size_t f : fam.free_cols) {
    std::vector<Rational> dir(n);
    dir[f] = 1;
    for (std::size_t k = 0; k < red.pivot_cols.size(); ++k) dir[red.pivot_cols[k]] = -red.rref(k, f);
    fam.directions.push_back(std::move(dir));
  }
  fam.particular = std::move(particular);
  return fam;
}

SolutionSet solve_cramer(const LinearSystem& sys) {
  require_square(sys);
  const Rational d = det(sys.a);
  if (d.is_zero()) fail(ErrorCode::SingularSystem, "system determinant is zero");
  const std::size_t n = sys.unknowns();
  std::vector<Rational> x;
  x.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Matrix ak = sys.a;
    for (std::size_t i = 0; i < n; ++i) ak(i, k) = sys.b[i];
    x.push_back(det(ak) / d);
  }
  return solution::Unique{std::move(x)};
}

SolutionSet solve_inverse_method(const LinearSystem& sys) {
  require_square(sys);
  const Matrix inv = inverse(sys.a);
  Matrix rhs(sys.b.size(), 1, sys.b);
  return solution::Unique{(inv * rhs).col(0)};
}

ReducedSystem reduced_subsystem(const LinearSystem& sys, const std::vector<Rational>& free_values) {
  const EchelonReport ech = echelon_form(sys.augmented());
  const std::size_t n = sys.unknowns();
  std::vector<std::size_t> pivots;
  for (std::size_t c : ech.pivot_cols) {
    if (c == n) fail(ErrorCode::Singular, "inconsistent system has no reduced subsystem");
    pivots.push_back(c);
  }
  const std::vector<std::size_t> free = complement_cols(pivots, n);
  if (free_values.size() != free.size()) fail(ErrorCode::ShapeMismatch, "one value per free unknown expected");

  const std::size_t r = pivots.size();
  if (r == 0) fail(ErrorCode::Singular, "no pivot unknowns to solve for");
  Matrix coeffs(r, r);
  std::vector<Rational> rhs(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) coeffs(i, j) = ech.echelon(i, pivots[j]);
    rhs[i] = ech.echelon(i, n);
    for (std::size_t k = 0; k < free.size(); ++k) rhs[i] -= ech.echelon(i, free[k]) * free_values[k];
  }
  return {LinearSystem(std::move(coeffs), std::move(rhs)), pivots, free};
}

HomogeneousReport homogeneous_analysis(const Matrix& a) {
  LinearSystem sys(a, std::vector<Rational>(a.rows()));
  HomogeneousReport r;
  r.solutions = solve_gauss(sys);
  r.trivial_only = std::holds_alternative<solution::Unique>(r.solutions);
  return r;
}

bool satisfies(const LinearSystem& sys, const std::vector<Rational>& x) {
  if (x.size() != sys.unknowns()) return false;
  for (std::size_t i = 0; i < sys.equations(); ++i) {
    Rational s;
    for (std::size_t j = 0; j < sys.unknowns(); ++j) s += sys.a(i, j) * x[j];
    if (s != sys.b[i]) return false;
  }
  return true;
}

}  // namespace exactkit
