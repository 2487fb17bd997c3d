#include <gtest/gtest.h>

#include <random>

#include "exactkit/matrix.hpp"
#include "expect_code.hpp"
#include "oracles.hpp"

using namespace exactkit;

namespace {

Matrix mat(const char* s) { return Matrix::parse(s); }

Matrix swap_rows(Matrix a, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
  return a;
}

}  // namespace

TEST(Matrix, ParseShapes) {
  const Matrix a = mat("1 2 3; 4 5 6");
  EXPECT_EQ(a.rows(), 2u);
  EXPECT_EQ(a.cols(), 3u);
  EXPECT_EQ(a(1, 2), 6);
  EXPECT_EQ(mat("1/2 -3\n0.5 2"), mat("1/2 -3; 1/2 2"));
  EXPECT_THROW(mat("1 2; 3"), ParseError);
  EXPECT_CODE(Matrix::from_rows({{1, 2}, {3}}), ErrorCode::ShapeMismatch);
  EXPECT_CODE(Matrix(0, 2), ErrorCode::ShapeMismatch);
  EXPECT_THROW(mat("1 x"), ParseError);
}

TEST(Matrix, PaperArithmetic) {
  EXPECT_EQ(mat("3 1 -2; 0 2 0") * mat("2 1; 0 4; -1 0"), mat("8 7; 0 8"));
  const Matrix a = mat("2 1 2 0; 3 1 2 1"), b = mat("3 -1 -5 0; 0 -1 2 1"), c = mat("-2 0 2 0; 3 1 2 1");
  EXPECT_EQ(scale(2, a) - scale(3, b) + scale(4, c), mat("-13 5 27 0; 18 9 6 3"));
  EXPECT_EQ(transpose(mat("1 2 3; 4 5 6")), mat("1 4; 2 5; 3 6"));
  EXPECT_CODE(a * b, ErrorCode::ShapeMismatch);
  EXPECT_CODE(a + mat("1 2; 3 4"), ErrorCode::ShapeMismatch);
}

TEST(Matrix, ProductAgreesWithOracle) {
  std::mt19937_64 rng(31);
  for (int s = 0; s < 100; ++s) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4, p = 1 + rng() % 4;
    const Matrix a = oracle::random_matrix(rng, m, n), b = oracle::random_matrix(rng, n, p);
    EXPECT_EQ(oracle::to_q(a * b), oracle::q_mul(oracle::to_q(a), oracle::to_q(b)));
    EXPECT_EQ(transpose(a * b), transpose(b) * transpose(a));
    const Matrix c = oracle::random_matrix(rng, p, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Determinant, PaperValues) {
  EXPECT_EQ(det(mat("7 -4; 3 4")), 40);
  for (auto m : {DetMethod::Laplace, DetMethod::Elimination, DetMethod::Sarrus3}) {
    EXPECT_EQ(det(mat("3 2 -1; 1 2 4; 0 6 -2"), m), -86);
  }
  EXPECT_EQ(det(mat("2 1 2 1; 2 -3 1 -3; 4 2 2 2; -2 4 -1 5"), DetMethod::Laplace), 16);
  EXPECT_EQ(det(mat("5")), 5);
  EXPECT_CODE(det(mat("1 2")), ErrorCode::NotSquare);
  EXPECT_CODE(det(mat("1 2; 3 4"), DetMethod::Sarrus3), ErrorCode::BadMethod);
  EXPECT_EQ(parse_det_method("laplace"), DetMethod::Laplace);
  EXPECT_CODE(parse_det_method("magic"), ErrorCode::BadMethod);
}

// The eight determinant properties, on random matrices.
TEST(Determinant, Properties) {
  std::mt19937_64 rng(41);
  for (int s = 0; s < 150; ++s) {
    const std::size_t n = 2 + rng() % 4;
    const Matrix a = oracle::random_matrix(rng, n, n);
    const Rational d = det(a);
    const std::size_t i = rng() % n, j = (i + 1 + rng() % (n - 1)) % n;
    const Rational k = oracle::random_rational(rng);

    // 1. Transposition keeps the value.
    EXPECT_EQ(det(transpose(a)), d);
    // 2. Swapping two rows flips the sign.
    EXPECT_EQ(det(swap_rows(a, i, j)), -d);
    // 3. Two equal rows give zero.
    Matrix equal = a;
    for (std::size_t c = 0; c < n; ++c) equal(j, c) = a(i, c);
    EXPECT_TRUE(det(equal).is_zero());
    // 4. A common factor of a row comes out.
    Matrix scaled = a;
    for (std::size_t c = 0; c < n; ++c) scaled(i, c) *= k;
    EXPECT_EQ(det(scaled), k * d);
    // 5. A zero row gives zero.
    Matrix zero = a;
    for (std::size_t c = 0; c < n; ++c) zero(i, c) = 0;
    EXPECT_TRUE(det(zero).is_zero());
    // 6. Additivity in a row.
    const Matrix extra = oracle::random_matrix(rng, 1, n);
    Matrix sum = a, other = a;
    for (std::size_t c = 0; c < n; ++c) {
      sum(i, c) += extra(0, c);
      other(i, c) = extra(0, c);
    }
    EXPECT_EQ(det(sum), d + det(other));
    // 7. Adding a multiple of another row keeps the value.
    Matrix combined = a;
    for (std::size_t c = 0; c < n; ++c) combined(j, c) += k * a(i, c);
    EXPECT_EQ(det(combined), d);
    // 8. det(AB) = det(A) det(B).
    const Matrix b = oracle::random_matrix(rng, n, n);
    EXPECT_EQ(det(a * b), d * det(b));
  }
}

TEST(Determinant, TriangularIsDiagonalProduct) {
  std::mt19937_64 rng(43);
  for (int s = 0; s < 50; ++s) {
    const std::size_t n = 1 + rng() % 6;
    Matrix a = oracle::random_matrix(rng, n, n);
    Rational diag = 1;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < r; ++c) a(r, c) = 0;
      diag *= a(r, r);
    }
    EXPECT_EQ(det(a, DetMethod::Laplace), diag);
    EXPECT_EQ(det(a, DetMethod::Elimination), diag);
  }
}

TEST(Adjugate, PaperValues) {
  EXPECT_EQ(adjugate(mat("3 -5; 4 6")), mat("6 5; -4 3"));
  EXPECT_EQ(adjugate(mat("1 2 -5; 0 2 1; 1 1 3")), mat("5 -11 12; 1 8 -1; -2 1 2"));
  EXPECT_EQ(minor(mat("1 2 -5; 0 2 1; 1 1 3"), 0, 1), -1);
  EXPECT_EQ(cofactor(mat("1 2 -5; 0 2 1; 1 1 3"), 0, 1), 1);
  EXPECT_EQ(minor(mat("7"), 0, 0), 1);
  EXPECT_EQ(submatrix(mat("1 2 3; 4 5 6; 7 8 9"), 1, 1), mat("1 3; 7 9"));
  EXPECT_CODE(minor(mat("1 2; 3 4"), 2, 0), ErrorCode::IndexOutOfRange);
  EXPECT_CODE(cofactor_matrix(mat("1 2")), ErrorCode::NotSquare);
}

TEST(Adjugate, LaplaceAlongAnyLine) {
  std::mt19937_64 rng(45);
  for (int s = 0; s < 50; ++s) {
    const std::size_t n = 2 + rng() % 4;
    const Matrix a = oracle::random_matrix(rng, n, n);
    const Rational d = det(a);
    for (std::size_t line = 0; line < n; ++line) {
      Rational by_row = 0, by_col = 0;
      for (std::size_t k = 0; k < n; ++k) {
        by_row += a(line, k) * cofactor(a, line, k);
        by_col += a(k, line) * cofactor(a, k, line);
      }
      EXPECT_EQ(by_row, d);
      EXPECT_EQ(by_col, d);
    }
  }
}

TEST(Inverse, PaperValues) {
  EXPECT_EQ(inverse(mat("2 -3; 0 1")), mat("1/2 3/2; 0 1"));
  EXPECT_EQ(inverse(mat("-1 0 -2; 0 2 1; 1 -1 2")), mat("-5 -2 -4; -1 0 -1; 2 1 2"));
  EXPECT_CODE(inverse(mat("2 -3; -4 6")), ErrorCode::Singular);
  EXPECT_CODE(inverse(mat("1 2 3; 4 5 6")), ErrorCode::NotSquare);
}

TEST(Inverse, Properties) {
  std::mt19937_64 rng(47);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = 1 + rng() % 5;
    const Matrix a = oracle::random_regular(rng, n), b = oracle::random_regular(rng, n);
    const Matrix ai = inverse(a);
    const Matrix id = Matrix::identity(n);
    EXPECT_EQ(a * ai, id);
    EXPECT_EQ(ai * a, id);
    EXPECT_EQ(inverse(ai), a);
    EXPECT_EQ(inverse(a * b), inverse(b) * ai);
    EXPECT_EQ(inverse(transpose(a)), transpose(ai));
    EXPECT_EQ(det(ai), det(a).reciprocal());
    EXPECT_EQ(ai, scale(det(a).reciprocal(), adjugate(a)));
  }
}

TEST(Rank, PaperValuesAndLog) {
  const EchelonReport r1 = rank(mat("4 1 1; 1 2 1; 1 1 2"));
  EXPECT_EQ(r1.rank, 3u);
  EXPECT_EQ(r1.op_log, (std::vector<std::string>{"4IIv-Iv", "4IIIv-Iv", "7IIIv-3IIv", "IIIv:40"}));
  const EchelonReport r2 = rank(mat("2 3 -1 4; 5 -3 8 19; 1 -2 3 5"));
  EXPECT_EQ(r2.rank, 2u);
  EXPECT_EQ(r2.op_log, (std::vector<std::string>{"2IIv-5Iv", "IIv:3", "2IIIv-Iv", "IIIv-IIv"}));
  EXPECT_EQ(r2.pivot_cols, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(rank(mat("1 1 1 3; 2 3 -1 4; 1 2 -2 1; 3 5 -3 5")).rank, 2u);
  EXPECT_EQ(rank(mat("0 0; 0 0")).rank, 0u);
  const EchelonReport swap = rank(mat("0 1; 1 0"));
  ASSERT_FALSE(swap.op_log.empty());
  EXPECT_EQ(swap.op_log.front(), "Iv<->IIv");
}

TEST(Rank, RowLabels) {
  EXPECT_EQ(row_label(1), "Iv");
  EXPECT_EQ(row_label(4), "IVv");
  EXPECT_EQ(row_label(9), "IXv");
  EXPECT_EQ(row_label(14), "XIVv");
}

TEST(Rank, InvariantsOnRandomMatrices) {
  std::mt19937_64 rng(49);
  for (int s = 0; s < 150; ++s) {
    const std::size_t m = 1 + rng() % 5, n = 1 + rng() % 5;
    Matrix a = oracle::random_matrix(rng, m, n, 3, 2);
    // Force some dependence.
    if (m >= 2 && rng() % 2) {
      for (std::size_t c = 0; c < n; ++c) a(m - 1, c) = a(0, c) * 2 - a(m - 2, c);
    }
    const EchelonReport r = rank(a);
    EXPECT_EQ(r.rank, rank(transpose(a)).rank);
    EXPECT_LE(r.rank, std::min(m, n));
    EXPECT_EQ(r.rank, r.pivot_cols.size());
    // Echelon shape: each pivot strictly right of the previous one, zeros below.
    for (std::size_t row = 0; row < r.rank; ++row) {
      const std::size_t p = r.pivot_cols[row];
      EXPECT_FALSE(r.echelon(row, p).is_zero());
      if (row > 0) {
        EXPECT_GT(p, r.pivot_cols[row - 1]);
      }
      for (std::size_t below = row + 1; below < m; ++below) EXPECT_TRUE(r.echelon(below, p).is_zero());
    }
    for (std::size_t row = r.rank; row < m; ++row) {
      for (std::size_t c = 0; c < n; ++c) EXPECT_TRUE(r.echelon(row, c).is_zero());
    }
    if (m == n) {
      EXPECT_EQ(r.rank == n, !det(a).is_zero());
    }
  }
}

TEST(MatrixEquation, PaperFixtures) {
  const Matrix x1 = solve_matrix_equation(EquationSide::Left, mat("-1 -3; -4 3"), mat("2 0; -2 -2"));
  EXPECT_EQ(x1, mat("0 2/5; -2/3 -2/15"));
  const Matrix a = mat("-2 1 2; 2 1 4; 1 0 -1");
  const Matrix b = mat("1 1 2; 2 4 4; 1 0 2");
  const Matrix x2 = solve_matrix_equation(EquationSide::Right, a, b);
  EXPECT_EQ(x2, mat("1/2 1/2 1; 3 1 6; -1/2 1/2 -1"));
  EXPECT_EQ(x2 * a, b);
  EXPECT_CODE(solve_matrix_equation(EquationSide::Left, mat("1 2; 2 4"), mat("1; 1")), ErrorCode::Singular);
  EXPECT_CODE(solve_matrix_equation(EquationSide::Left, mat("1 0; 0 1"), mat("1 2 3")), ErrorCode::ShapeMismatch);
}

// The symbolic rearrangements used to set up matrix equations, checked by
// substituting the solution back.
TEST(MatrixEquation, RandomSubstitution) {
  std::mt19937_64 rng(51);
  for (int s = 0; s < 60; ++s) {
    const std::size_t n = 1 + rng() % 4;
    const Matrix a = oracle::random_regular(rng, n);
    const Matrix b = oracle::random_matrix(rng, n, n);
    const Matrix left = solve_matrix_equation(EquationSide::Left, a, b);
    const Matrix right = solve_matrix_equation(EquationSide::Right, a, b);
    EXPECT_EQ(a * left, b);
    EXPECT_EQ(right * a, b);
    const Matrix rect = oracle::random_matrix(rng, n, 2);
    EXPECT_EQ(a * solve_matrix_equation(EquationSide::Left, a, rect), rect);
  }
}
