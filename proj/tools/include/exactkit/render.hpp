#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "exactkit/complex.hpp"
#include "exactkit/geometry.hpp"
#include "exactkit/linear_system.hpp"
#include "exactkit/matrix.hpp"
#include "exactkit/rational.hpp"
#include "exactkit/sets.hpp"

namespace exactkit::render {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json int_json(const Int& v);
/// {"num": n, "den": d}
Json rat_json(const Rational& r);
Json rats_json(const std::vector<Rational>& v);
Json matrix_json(const Matrix& m);
Json vec_json(const Vec3& v);
Json complex_json(const GaussianRational& z);
Json polar_json(const Polar& p);
Json element_json(const Element& e);
Json set_json(const FinSet& s);
Json pairs_json(const std::vector<ElementPair>& pairs);
Json solution_json(const SolutionSet& s);

/// Shortest decimal that reads back as the same double, at most 12
/// significant digits for display.
std::string num(double v);
/// "r = 8, theta = 0.523598775598 rad (30 deg)"
std::string polar_text(const Polar& p);
/// "x1 = 1, x2 = 1" or one "x1 = -4·t1 + 5" line per unknown.
std::string solution_text(const SolutionSet& s);
/// "3·t1 - 2" style affine expression.
std::string affine_text(const std::vector<Rational>& coeffs, const std::vector<std::string>& names,
                        const Rational& constant);
std::string pairs_text(const std::vector<ElementPair>& pairs);
std::string list_text(const std::vector<Rational>& v);

}  // namespace exactkit::render
