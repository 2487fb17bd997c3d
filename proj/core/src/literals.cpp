#include "exactkit/literals.hpp"

#include <array>
#include <cctype>
#include <string>

#include "exactkit/complex.hpp"
#include "exactkit/error.hpp"
#include "exactkit/geometry.hpp"
#include "exactkit/matrix.hpp"

namespace exactkit {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string remove_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!is_space(c)) out += c;
  }
  return out;
}

/// Removes one pair of enclosing delimiters if present.
std::string_view unwrap(std::string_view s, char open, char close) {
  s = trim(s);
  if (!s.empty() && s.front() == open) {
    if (s.back() != close) throw ParseError(std::string("missing '") + close + "'", s.size());
    s = trim(s.substr(1, s.size() - 2));
  }
  return s;
}

/// Splits on commas and whitespace, dropping empty pieces.
std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (is_space(s[i]) || s[i] == ',')) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i]) && s[i] != ',') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

/// Splits on a separator, keeping empty pieces.
std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

Element parse_element(std::string_view token) {
  token = trim(token);
  if (token.empty()) throw ParseError("empty set element", 0);
  std::size_t i = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  bool numeric = i < token.size();
  for (std::size_t k = i; k < token.size(); ++k) numeric = numeric && std::isdigit(static_cast<unsigned char>(token[k]));
  if (numeric) {
    try {
      return static_cast<std::int64_t>(std::stoll(std::string(token)));
    } catch (const std::out_of_range&) {
      throw ParseError("integer element out of range: '" + std::string(token) + "'", 0);
    }
  }
  for (std::size_t k = 0; k < token.size(); ++k) {
    const char c = token[k];
    if (is_space(c) || c == ',' || c == '{' || c == '}' || c == '(' || c == ')') {
      throw ParseError("invalid set element '" + std::string(token) + "'", k);
    }
  }
  return std::string(token);
}

FinSet parse_set(std::string_view text) {
  const std::string_view body = unwrap(text, '{', '}');
  std::vector<Element> elems;
  for (std::string_view t : tokens(body)) elems.push_back(parse_element(t));
  return FinSet(std::move(elems));
}

std::vector<ElementPair> parse_pairs(std::string_view text) {
  const std::string_view body = unwrap(text, '{', '}');
  std::vector<ElementPair> out;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && (is_space(body[i]) || body[i] == ',')) ++i;
    if (i == body.size()) break;
    if (body[i] != '(') throw ParseError("expected '(' to open a pair", i);
    const std::size_t close = body.find(')', i);
    if (close == std::string_view::npos) throw ParseError("unterminated pair", i);
    const auto parts = tokens(body.substr(i + 1, close - i - 1));
    if (parts.size() != 2) throw ParseError("a pair needs exactly two components", i);
    out.emplace_back(parse_element(parts[0]), parse_element(parts[1]));
    i = close + 1;
  }
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') body = unwrap(body, '[', ']');
  else body = unwrap(body, '(', ')');
  std::vector<Rational> out;
  for (std::string_view t : tokens(body)) out.push_back(Rational::parse(t));
  return out;
}

Matrix Matrix::parse(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') body = unwrap(body, '[', ']');
  std::vector<std::vector<Rational>> rows;
  std::string normalized(body);
  for (char& c : normalized) {
    if (c == '\n') c = ';';
  }
  for (std::string_view line : split(normalized, ';')) {
    if (trim(line).empty()) continue;
    std::vector<Rational> row;
    for (std::string_view t : tokens(line)) row.push_back(Rational::parse(t));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix literal", 0);
  const std::size_t n = rows.front().size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) {
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(n),
                       0);
    }
  }
  return from_rows(rows);
}

GaussianRational GaussianRational::parse(std::string_view text) {
  const std::string s = remove_spaces(text);
  if (s.empty()) throw ParseError("empty complex literal", 0);
  if (s.back() != 'i') return {Rational::parse(s), 0};

  // Split before the last sign that is not the leading one.
  std::size_t split_at = 0;
  for (std::size_t k = s.size() - 1; k > 0; --k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
      split_at = k;
      break;
    }
  }
  const std::string real = s.substr(0, split_at);
  std::string imag = s.substr(split_at, s.size() - split_at - 1);
  if (imag.empty() || imag == "+") imag = "1";
  else if (imag == "-") imag = "-1";
  try {
    return {real.empty() ? Rational(0) : Rational::parse(real), Rational::parse(imag)};
  } catch (const ParseError&) {
    throw ParseError("invalid complex literal '" + s + "'", 0);
  }
}

Vec3 Vec3::parse(std::string_view text) {
  const std::vector<Rational> v = parse_rational_list(text);
  if (v.size() != 3) throw ParseError("a vector needs exactly three components", 0);
  return {v[0], v[1], v[2]};
}

Plane Plane::parse(std::string_view text) {
  const std::vector<Rational> v = parse_rational_list(text);
  if (v.size() != 4) throw ParseError("a plane needs four coefficients A B C D", 0);
  return Plane(v[0], v[1], v[2], v[3]);
}

namespace {

/// One member "(x - x0)/l" of a canonical line equation.
void parse_canonical_part(std::string_view part, Vec3& point, Vec3& dir, std::array<bool, 3>& seen) {
  const std::string s = remove_spaces(part);
  const std::size_t slash = s.rfind('/');
  const std::size_t close = s.rfind(')');
  if (slash == std::string::npos || (close != std::string::npos && slash < close)) {
    throw ParseError("expected '(x - x0)/l' in '" + s + "'", 0);
  }
  std::string_view num = std::string_view(s).substr(0, slash);
  if (!num.empty() && num.front() == '(') num = unwrap(num, '(', ')');
  if (num.empty() || (num[0] != 'x' && num[0] != 'y' && num[0] != 'z')) {
    throw ParseError("expected a coordinate name in '" + s + "'", 0);
  }
  const std::size_t axis = static_cast<std::size_t>(num[0] - 'x');
  if (seen[axis]) throw ParseError("coordinate repeated in line equation", 0);
  seen[axis] = true;
  const std::string_view offset = num.substr(1);
  Rational x0;
  if (!offset.empty()) {
    if (offset[0] != '-' && offset[0] != '+') throw ParseError("expected '-' or '+' after the coordinate", 1);
    x0 = Rational::parse(offset.substr(1));
    if (offset[0] == '+') x0 = -x0;
  }
  const Rational l = Rational::parse(std::string_view(s).substr(slash + 1));
  if (l.is_zero()) {
    throw ParseError("zero denominator in canonical form; give the line as point=(..) dir=(..)", slash + 1);
  }
  point[axis] = x0;
  dir[axis] = l;
}

/// A coordinate held fixed, "y = 2", for a zero direction component.
void parse_fixed_part(std::string_view part, Vec3& point, std::array<bool, 3>& seen) {
  const std::string s = remove_spaces(part);
  if (s.size() < 3 || s[1] != '=' || (s[0] != 'x' && s[0] != 'y' && s[0] != 'z')) {
    throw ParseError("expected 'x = x0' in '" + s + "'", 0);
  }
  const std::size_t axis = static_cast<std::size_t>(s[0] - 'x');
  if (seen[axis]) throw ParseError("coordinate repeated in line equation", 0);
  seen[axis] = true;
  point[axis] = Rational::parse(std::string_view(s).substr(2));
}

}  // namespace

Line Line::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const std::size_t p = s.find("point=");
  const std::size_t d = s.find("dir=");
  if (p != std::string_view::npos && d != std::string_view::npos) {
    const std::size_t p_end = p < d ? d : s.size();
    const std::size_t d_end = d < p ? p : s.size();
    const Vec3 point = Vec3::parse(s.substr(p + 6, p_end - p - 6));
    const Vec3 dir = Vec3::parse(s.substr(d + 4, d_end - d - 4));
    if (dir.is_zero()) throw ParseError("line direction must be nonzero", d + 4);
    return Line(point, dir);
  }
  // Canonical ratios first, then any fixed coordinates: "(x-1)/2 = z/3, y = 2".
  const auto chunks = split(s, ',');
  Vec3 point;
  Vec3 dir;
  std::array<bool, 3> seen{};
  for (std::string_view part : split(chunks[0], '=')) parse_canonical_part(part, point, dir, seen);
  for (std::size_t k = 1; k < chunks.size(); ++k) parse_fixed_part(chunks[k], point, seen);
  if (!(seen[0] && seen[1] && seen[2])) {
    throw ParseError("expected point=(..) dir=(..) or (x-x0)/l=(y-y0)/m=(z-z0)/n", 0);
  }
  return Line(point, dir);
}

}  // namespace exactkit
