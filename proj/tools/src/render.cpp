#include "exactkit/render.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace exactkit::render {

Json int_json(const Int& v) {
  static const Int kMin = std::numeric_limits<std::int64_t>::min();
  static const Int kMax = std::numeric_limits<std::int64_t>::max();
  if (v >= kMin && v <= kMax) return v.convert_to<std::int64_t>();
  return v.str();
}

Json rat_json(const Rational& r) { return Json{{"num", int_json(r.num())}, {"den", int_json(r.den())}}; }

Json rats_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(rat_json(r));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(rats_json(m.row(i)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Json vec_json(const Vec3& v) { return rats_json({v.x, v.y, v.z}); }

Json complex_json(const GaussianRational& z) { return Json{{"re", rat_json(z.re)}, {"im", rat_json(z.im)}}; }

Json polar_json(const Polar& p) {
  return Json{{"r", p.r}, {"theta", p.theta}, {"degrees", degrees(p.theta)}};
}

Json element_json(const Element& e) {
  if (const auto* i = std::get_if<std::int64_t>(&e)) return *i;
  return std::get<std::string>(e);
}

Json set_json(const FinSet& s) {
  Json out = Json::array();
  for (const auto& e : s) out.push_back(element_json(e));
  return out;
}

Json pairs_json(const std::vector<ElementPair>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back(Json::array({element_json(a), element_json(b)}));
  return out;
}

Json solution_json(const SolutionSet& s) {
  if (std::holds_alternative<solution::Inconsistent>(s)) return Json{{"kind", "inconsistent"}};
  if (const auto* u = std::get_if<solution::Unique>(&s)) return Json{{"kind", "unique"}, {"x", rats_json(u->x)}};
  const auto& p = std::get<solution::Parametric>(s);
  Json dirs = Json::array();
  for (const auto& d : p.directions) dirs.push_back(rats_json(d));
  Json free = Json::array();
  for (std::size_t c : p.free_cols) free.push_back(c + 1);
  return Json{{"kind", "parametric"}, {"particular", rats_json(p.particular)}, {"directions", dirs}, {"free_unknowns", free}};
}

std::string num(double v) {
  if (std::abs(v) < 1e-13) v = 0;  // no "-0" or 1e-17 noise in displays
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string polar_text(const Polar& p) {
  return "r = " + num(p.r) + ", theta = " + num(p.theta) + " rad (" + num(degrees(p.theta)) + " deg)";
}

std::string affine_text(const std::vector<Rational>& coeffs, const std::vector<std::string>& names,
                        const Rational& constant) {
  std::string out;
  auto append = [&out](const Rational& c, const std::string& name) {
    if (c.is_zero()) return;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (name.empty()) {
      out += mag.str();
    } else {
      if (mag != Rational(1)) out += mag.str() + "·";
      out += name;
    }
  };
  for (std::size_t k = 0; k < coeffs.size(); ++k) append(coeffs[k], names[k]);
  append(constant, "");
  return out.empty() ? "0" : out;
}

std::string solution_text(const SolutionSet& s) {
  if (std::holds_alternative<solution::Inconsistent>(s)) return "inconsistent: no solution\n";
  if (const auto* u = std::get_if<solution::Unique>(&s)) {
    std::string out;
    for (std::size_t i = 0; i < u->x.size(); ++i) {
      out += (i ? ", x" : "x") + std::to_string(i + 1) + " = " + u->x[i].str();
    }
    return out + "\n";
  }
  const auto& p = std::get<solution::Parametric>(s);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < p.directions.size(); ++k) names.push_back("t" + std::to_string(k + 1));
  std::string out;
  for (std::size_t i = 0; i < p.particular.size(); ++i) {
    std::vector<Rational> coeffs;
    for (const auto& d : p.directions) coeffs.push_back(d[i]);
    out += "x" + std::to_string(i + 1) + " = " + affine_text(coeffs, names, p.particular[i]) + "\n";
  }
  return out;
}

std::string pairs_text(const std::vector<ElementPair>& pairs) {
  std::string out = "{";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ", ";
    out += "(" + to_string(pairs[i].first) + ", " + to_string(pairs[i].second) + ")";
  }
  return out + "}";
}

std::string list_text(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out;
}

}  // namespace exactkit::render
