#include "exactkit/matrix.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "exactkit/error.hpp"

namespace exactkit {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) fail(ErrorCode::ShapeMismatch, "a matrix needs at least one row and column");
  if (data_.size() != rows_ * cols_) fail(ErrorCode::ShapeMismatch, "entry count does not match the shape");
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : Matrix(rows, cols, std::vector<Rational>(rows * cols)) {}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty() || rows.front().empty()) fail(ErrorCode::ShapeMismatch, "empty matrix");
  const std::size_t n = rows.front().size();
  std::vector<Rational> data;
  data.reserve(rows.size() * n);
  for (const auto& r : rows) {
    if (r.size() != n) fail(ErrorCode::ShapeMismatch, "rows have different lengths");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(rows.size(), n, std::move(data));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Rational> Matrix::col(std::size_t j) const {
  std::vector<Rational> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

std::string Matrix::str() const {
  std::vector<std::string> cells;
  cells.reserve(data_.size());
  std::vector<std::size_t> width(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      cells.push_back((*this)(i, j).str());
      width[j] = std::max(width[j], cells.back().size());
    }
  }
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::string& c = cells[i * cols_ + j];
      if (j > 0) out += "  ";
      out += std::string(width[j] - c.size(), ' ') + c;
    }
    out += '\n';
  }
  return out;
}

Matrix mat_arith(const Matrix& a, const Matrix& b, MatOp op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorCode::ShapeMismatch, "addition needs matrices of the same type");
  }
  std::vector<Rational> out;
  out.reserve(a.entries().size());
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    out.push_back(op == MatOp::Add ? a.entries()[k] + b.entries()[k] : a.entries()[k] - b.entries()[k]);
  }
  return Matrix(a.rows(), a.cols(), std::move(out));
}

Matrix scale(const Rational& alpha, const Matrix& a) {
  std::vector<Rational> out;
  out.reserve(a.entries().size());
  for (const auto& x : a.entries()) out.push_back(alpha * x);
  return Matrix(a.rows(), a.cols(), std::move(out));
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::ShapeMismatch, "product needs cols(A) = rows(B)");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < b.cols(); ++k) {
      Rational s;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!a(i, j).is_zero() && !b(j, k).is_zero()) s += a(i, j) * b(j, k);
      }
      c(i, k) = std::move(s);
    }
  }
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) { return mat_arith(a, b, MatOp::Add); }
Matrix operator-(const Matrix& a, const Matrix& b) { return mat_arith(a, b, MatOp::Sub); }
Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }
Matrix operator*(const Rational& alpha, const Matrix& a) { return scale(alpha, a); }

Matrix submatrix(const Matrix& a, std::size_t i, std::size_t j) {
  if (i >= a.rows() || j >= a.cols()) fail(ErrorCode::IndexOutOfRange, "row or column index out of range");
  if (a.rows() < 2 || a.cols() < 2) fail(ErrorCode::ShapeMismatch, "nothing left after deletion");
  std::vector<Rational> out;
  out.reserve((a.rows() - 1) * (a.cols() - 1));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (r == i) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c != j) out.push_back(a(r, c));
    }
  }
  return Matrix(a.rows() - 1, a.cols() - 1, std::move(out));
}

namespace {

void require_square(const Matrix& a) {
  if (!a.is_square()) fail(ErrorCode::NotSquare, "determinant needs a square matrix");
}

Rational det_laplace(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);

  // Expand along the line with the most zeros; row 1 wins ties.
  std::size_t best = 0;
  bool by_col = false;
  std::size_t best_zeros = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t zr = 0;
    std::size_t zc = 0;
    for (std::size_t k = 0; k < n; ++k) {
      zr += a(i, k).is_zero();
      zc += a(k, i).is_zero();
    }
    if (zr > best_zeros) {
      best_zeros = zr;
      best = i;
      by_col = false;
    }
    if (zc > best_zeros) {
      best_zeros = zc;
      best = i;
      by_col = true;
    }
  }

  Rational sum;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = by_col ? k : best;
    const std::size_t j = by_col ? best : k;
    if (a(i, j).is_zero()) continue;
    Rational term = a(i, j) * det_laplace(submatrix(a, i, j));
    if ((i + j) % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

Rational det_elimination(Matrix a) {
  const std::size_t n = a.rows();
  Rational result = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = c; k < n; ++k) std::swap(a(p, k), a(c, k));
      result = -result;
    }
    const Rational pivot = a(c, c);
    result *= pivot;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Rational f = a(r, c) / pivot;
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return result;
}

Rational det_sarrus(const Matrix& a) {
  return a(0, 0) * a(1, 1) * a(2, 2) + a(0, 1) * a(1, 2) * a(2, 0) + a(0, 2) * a(1, 0) * a(2, 1) -
         a(0, 2) * a(1, 1) * a(2, 0) - a(0, 0) * a(1, 2) * a(2, 1) - a(0, 1) * a(1, 0) * a(2, 2);
}

}  // namespace

Rational det(const Matrix& a, DetMethod method) {
  require_square(a);
  switch (method) {
    case DetMethod::Laplace: return det_laplace(a);
    case DetMethod::Elimination: return det_elimination(a);
    case DetMethod::Sarrus3:
      if (a.rows() != 3) fail(ErrorCode::BadMethod, "Sarrus' rule applies only to 3x3 matrices");
      return det_sarrus(a);
  }
  fail(ErrorCode::BadMethod, "unknown determinant method");
}

DetMethod parse_det_method(std::string_view name) {
  if (name == "laplace") return DetMethod::Laplace;
  if (name == "elimination") return DetMethod::Elimination;
  if (name == "sarrus3" || name == "sarrus") return DetMethod::Sarrus3;
  fail(ErrorCode::BadMethod, "unknown determinant method '" + std::string(name) + "'");
}

Rational minor(const Matrix& a, std::size_t i, std::size_t j) {
  if (!a.is_square()) fail(ErrorCode::NotSquare, "minors need a square matrix");
  if (i >= a.rows() || j >= a.cols()) fail(ErrorCode::IndexOutOfRange, "row or column index out of range");
  if (a.rows() == 1) return 1;  // empty determinant
  return det(submatrix(a, i, j));
}

Rational cofactor(const Matrix& a, std::size_t i, std::size_t j) {
  Rational m = minor(a, i, j);
  return (i + j) % 2 == 0 ? m : -m;
}

Matrix cofactor_matrix(const Matrix& a) {
  if (!a.is_square()) fail(ErrorCode::NotSquare, "cofactors need a square matrix");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = cofactor(a, i, j);
  }
  return c;
}

Matrix adjugate(const Matrix& a) { return transpose(cofactor_matrix(a)); }

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) fail(ErrorCode::NotSquare, "only square matrices can be inverted");
  const std::size_t n = a.rows();
  // Gauss-Jordan on (A | I).
  Matrix m = a;
  Matrix inv = Matrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) fail(ErrorCode::Singular, "singular matrix");
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(m(p, k), m(c, k));
        std::swap(inv(p, k), inv(c, k));
      }
    }
    const Rational pivot = m(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      m(c, k) /= pivot;
      inv(c, k) /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      const Rational f = m(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        m(r, k) -= f * m(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

std::string row_label(std::size_t index) {
  static constexpr std::array<std::pair<std::size_t, const char*>, 13> kNumerals{{
      {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"}, {90, "XC"}, {50, "L"},
      {40, "XL"}, {10, "X"}, {9, "IX"}, {5, "V"}, {4, "IV"}, {1, "I"}}};
  std::string out;
  for (const auto& [value, numeral] : kNumerals) {
    while (index >= value) {
      out += numeral;
      index -= value;
    }
  }
  return out + "v";
}

EchelonReport echelon_form(const Matrix& a) {
  Matrix m = a;
  EchelonReport rep{m, 0, {}, {}};
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(r, k));
      rep.op_log.push_back(row_label(r + 1) + "<->" + row_label(p + 1));
    }
    for (std::size_t q = r + 1; q < rows; ++q) {
      if (m(q, c).is_zero()) continue;
      const Rational f = m(q, c) / m(r, c);
      bool integral_pair = true;
      for (std::size_t k = c; k < cols && integral_pair; ++k) {
        integral_pair = m(q, k).is_integer() && m(r, k).is_integer();
      }
      std::string scale;
      if (integral_pair && !f.is_integer()) {
        // Cross-multiply so integer rows stay integer: den*q - num*r.
        const Rational d(f.den());
        for (std::size_t k = c; k < cols; ++k) m(q, k) = d * m(q, k) - Rational(f.num()) * m(r, k);
        scale = f.den().str();
      } else {
        for (std::size_t k = c; k < cols; ++k) m(q, k) -= f * m(r, k);
      }
      const Rational mag = integral_pair && !f.is_integer() ? Rational(f.num()).abs() : f.abs();
      rep.op_log.push_back(scale + row_label(q + 1) + (f.sign() > 0 ? "-" : "+") +
                           (mag == Rational(1) ? "" : mag.str()) + row_label(r + 1));

      // Keep integer rows small: divide out a common factor.
      bool integral = true;
      for (std::size_t k = 0; k < cols && integral; ++k) integral = m(q, k).is_integer();
      if (!integral) continue;
      Int g = 0;
      for (std::size_t k = 0; k < cols; ++k) g = boost::multiprecision::gcd(g, m(q, k).num());
      if (g > 1) {
        for (std::size_t k = 0; k < cols; ++k) m(q, k) /= Rational(g);
        rep.op_log.push_back(row_label(q + 1) + ":" + g.str());
      }
    }
    rep.pivot_cols.push_back(c);
    ++r;
  }
  rep.rank = r;
  rep.echelon = std::move(m);
  return rep;
}

Matrix solve_matrix_equation(EquationSide side, const Matrix& a, const Matrix& b) {
  if (!a.is_square()) fail(ErrorCode::NotSquare, "the coefficient matrix must be square");
  if (side == EquationSide::Left) {
    if (a.rows() != b.rows()) fail(ErrorCode::ShapeMismatch, "AX = B needs rows(A) = rows(B)");
    return inverse(a) * b;
  }
  if (a.cols() != b.cols()) fail(ErrorCode::ShapeMismatch, "XA = B needs cols(A) = cols(B)");
  return b * inverse(a);
}

}  // namespace exactkit
