#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "exactkit/rational.hpp"

namespace exactkit {

/// Dense m x n matrix of rationals, row-major, m, n >= 1.
class Matrix {
 public:
  /// Throws ShapeMismatch for an empty shape or a wrong entry count.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Zero matrix.
  Matrix(std::size_t rows, std::size_t cols);
  /// Throws ShapeMismatch on ragged rows.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix identity(std::size_t n);
  /// "2 -3; 0 1", rows split on ';' or newlines.
  static Matrix parse(std::string_view text);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Rational>& entries() const noexcept { return data_; }
  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> col(std::size_t j) const;

  /// Right-aligned columns, one row per line.
  std::string str() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

enum class MatOp { Add, Sub };

Matrix mat_arith(const Matrix& a, const Matrix& b, MatOp op);
Matrix scale(const Rational& alpha, const Matrix& a);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& alpha, const Matrix& a);

enum class DetMethod { Laplace, Elimination, Sarrus3 };

/// Throws NotSquare; Sarrus3 on anything but 3x3 throws BadMethod.
Rational det(const Matrix& a, DetMethod method = DetMethod::Elimination);
DetMethod parse_det_method(std::string_view name);

/// Indices are 0-based. A 1x1 matrix has minor 1 (empty determinant).
Rational minor(const Matrix& a, std::size_t i, std::size_t j);
Rational cofactor(const Matrix& a, std::size_t i, std::size_t j);
Matrix cofactor_matrix(const Matrix& a);
Matrix adjugate(const Matrix& a);
/// Throws Singular when det = 0.
Matrix inverse(const Matrix& a);

/// Matrix with row i and column j removed.
Matrix submatrix(const Matrix& a, std::size_t i, std::size_t j);

struct EchelonReport {
  Matrix echelon;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  /// Elementary operations in Roman-numeral row notation, e.g. "IIv-2Iv",
  /// "2IIv-5Iv" (integer rows are cross-multiplied), "Iv<->IIIv", "IIIv:11".
  std::vector<std::string> op_log;
};

/// Row-echelon form by the three elementary row operations.
EchelonReport echelon_form(const Matrix& a);
inline EchelonReport rank(const Matrix& a) { return echelon_form(a); }

/// Roman numeral of a 1-based row index followed by "v" ("IIv").
std::string row_label(std::size_t index);

enum class EquationSide { Left, Right };

/// Left: A X = B, X = A^-1 B. Right: X A = B, X = B A^-1.
Matrix solve_matrix_equation(EquationSide side, const Matrix& a, const Matrix& b);

}  // namespace exactkit
