// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any
// criterion fails.

#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "exactkit/combinatorics.hpp"
#include "exactkit/complex.hpp"
#include "exactkit/error.hpp"
#include "exactkit/geometry.hpp"
#include "exactkit/linear_system.hpp"
#include "exactkit/literals.hpp"
#include "exactkit/logic.hpp"
#include "exactkit/magma.hpp"
#include "exactkit/matrix.hpp"
#include "exactkit/number_theory.hpp"
#include "exactkit/ratio.hpp"
#include "exactkit/relations.hpp"
#include "exactkit/sets.hpp"
#include "properties.hpp"

using namespace exactkit;
using std::numbers::pi;

namespace {

struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void near(double got, double want, const std::string& what, double tol = 1e-9) {
    expect(std::abs(got - want) <= tol, what + " (got " + std::to_string(got) + ")");
  }
  template <class F>
  void raises(ErrorCode code, F f, const std::string& what) {
    try {
      f();
      failures.push_back(what + " did not raise");
    } catch (const Error& e) {
      expect(e.code() == code, what + " raised the wrong error");
    }
  }
  // Any escaping exception counts as a failure of the criterion.
  void guard(const std::function<void(Check&)>& body) {
    try {
      body(*this);
    } catch (const std::exception& e) {
      failures.push_back(std::string("unexpected exception: ") + e.what());
    }
  }
};

Rational q(const char* s) { return Rational::parse(s); }
Matrix mat(const char* s) { return Matrix::parse(s); }
std::vector<Rational> qs(std::initializer_list<const char*> l) {
  std::vector<Rational> out;
  for (const char* s : l) out.push_back(q(s));
  return out;
}

void golden_values(Check& c) {
  c.expect(gcd(252, 198).gcd == 18, "gcd(252,198) = 18");
  c.expect(gcd(222, 102).gcd == 6, "gcd(222,102) = 6");
  c.expect(lcm(90, 24) == 360, "lcm(90,24) = 360");
  c.expect(to_base(125, 7).coeffs == std::vector<int>{2, 3, 6}, "125 = (236)_7");
  c.expect(to_base(147, 2).coeffs == std::vector<int>{1, 0, 0, 1, 0, 0, 1, 1}, "147 = (10010011)_2");
  c.expect(factorial(5) == 120, "5! = 120");
  c.expect(binom(7, 2) == 21, "C(7,2) = 21");

  const auto expansion = binom_expand(4, 3, 0, 2, 1);
  std::vector<Monomial> want;
  const int coeffs[] = {81, 216, 216, 96, 16};
  for (int k = 0; k < 5; ++k) want.push_back({coeffs[k], k});
  c.expect(expansion == want, "(3+2x)^4 = 81 + 216x + 216x^2 + 96x^3 + 16x^4");

  const Monomial t5 = binom_term(12, 4, 1, q("1/2"), 1, q("2/3"));
  c.expect(t5.coeff == 495 && t5.exponent == q("20/3"), "T5 of (x^(1/2)+x^(2/3))^12 = 495 x^(20/3)");

  bool found = false;
  for (const auto& m : binom_expand(12, 1, 1, 1, -2)) {
    if (m.exponent.is_zero()) found = m.coeff == 495;
  }
  c.expect(found, "constant term of (x + x^-2)^12 = 495");
}

void logic_classes(Check& c) {
  using logic::Classification;
  auto cls = [](const char* f) { return logic::classify(logic::parse_formula(f)); };
  c.expect(cls("(p & !p) -> q") == Classification::Tautology, "(p and not p) => q is a tautology");
  c.expect(cls("p -> (q | r)") == Classification::Contingent, "p => (q or r) is contingent");
  c.expect(cls("!(p & q) <-> (!p | !q)") == Classification::Tautology, "De Morgan (and)");
  c.expect(cls("!(p | q) <-> (!p & !q)") == Classification::Tautology, "De Morgan (or)");
  c.expect(cls("p | !p") == Classification::Tautology, "excluded middle");
  c.expect(cls("(p -> q) <-> (!q -> !p)") == Classification::Tautology, "contraposition");
}

void sets_relations(Check& c) {
  c.expect(powerset(parse_set("{a, b, c}")).size() == 8, "|P({a,b,c})| = 8");
  c.expect(set_op(parse_set("{a,b,c,d,e,f}"), parse_set("{d,e,f,g,h}"), SetOp::SymDiff) == parse_set("{a,b,c,g,h}"),
           "A symdiff B = {a,b,c,g,h}");

  const Relation rho(parse_set("{1,2,3,4,5,6}"),
                     parse_pairs("{(1,1),(2,2),(3,3),(4,4),(5,5),(6,6),(1,2),(2,1),(1,3),(3,1),(2,3),(3,2),(5,4),(4,5)}"));
  const EquivalenceReport eq = equivalence_analysis(rho);
  c.expect(eq.is_equivalence, "14-pair relation is an equivalence");
  c.expect(eq.classes == std::vector<FinSet>{parse_set("{1,2,3}"), parse_set("{4,5}"), parse_set("{6}")},
           "classes {1,2,3}, {4,5}, {6}");

  const FinSet d = parse_set("{2,4,8,16}");
  const Relation divisibility = relation_from_predicate(d, d, [](const Element& a, const Element& b) {
    return std::get<std::int64_t>(b) % std::get<std::int64_t>(a) == 0;
  });
  c.expect(is_partial_order(divisibility), "divisibility on {2,4,8,16} is a partial order");

  c.expect(three_set_counts(35, 18, 22, 6, 11, 4, 1).c == 15, "language course: 15 learn German");
}

void finite_algebra(Check& c) {
  c.expect(classify_structure(modular_addition(6)).structure == StructureClass::AbelianGroup,
           "(Z6, +6) is an abelian group");

  const std::vector<GaussianRational> s{{-1, 0}, {1, 0}, {0, 1}, {0, -1}};
  const Magma m = cayley_table(s, [](const GaussianRational& a, const GaussianRational& b) { return a * b; },
                               [](const GaussianRational& z) { return z.str(); });
  // The printed table, rows and columns in the order -1, 1, i, -i.
  const Magma printed = magma_from_labels({"-1", "1", "i", "-i"}, {{"1", "-1", "-i", "i"},
                                                                   {"-1", "1", "i", "-i"},
                                                                   {"-i", "i", "-1", "1"},
                                                                   {"i", "-i", "1", "-1"}});
  c.expect(m == printed, "({-1,1,i,-i}, *) matches the printed Cayley table");
  c.expect(classify_structure(m).structure == StructureClass::AbelianGroup, "({-1,1,i,-i}, *) is an abelian group");
}

void complex_numbers(Check& c) {
  const GaussianRational z1{3, 4}, z2{2, -5};
  c.expect(c_arith(z1, z2, ComplexOp::Mul) == GaussianRational{26, -7}, "(3+4i)(2-5i) = 26-7i");

  const GaussianRational big = pow(GaussianRational{-1, -1}, 80) / GaussianRational{Rational(Int(1) << 40), 0};
  const GaussianRational sum = i_pow(81) + i_pow(43) + big + i_pow(19);
  c.expect(sum == GaussianRational{1, -1}, "i^81 + i^43 + (-1-i)^80/2^40 + i^19 = 1-i");

  const Polar p = to_polar(4 * std::sqrt(3.0), 4);
  c.near(p.r, 8, "|4 sqrt3 + 4i| = 8");
  c.near(p.theta, pi / 6, "arg(4 sqrt3 + 4i) = pi/6");

  const auto roots = roots_n(GaussianRational{1, -1}, 3);
  const double want[] = {7 * pi / 12, 15 * pi / 12, 23 * pi / 12};
  c.expect(roots.size() == 3, "three cube roots");
  for (std::size_t k = 0; k < roots.size() && k < 3; ++k) {
    c.near(roots[k].theta, want[k], "cube root angle " + std::to_string(k));
    c.near(roots[k].r, std::pow(2.0, 1.0 / 6), "cube root radius " + std::to_string(k));
  }
}

void matrices(Check& c) {
  c.expect(det(mat("7 -4; 3 4")) == 40, "det = 40");
  c.expect(det(mat("3 2 -1; 1 2 4; 0 6 -2")) == -86, "det = -86");
  c.expect(det(mat("2 1 2 1; 2 -3 1 -3; 4 2 2 2; -2 4 -1 5")) == 16, "det = 16");

  c.expect(inverse(mat("2 -3; 0 1")) == mat("1/2 3/2; 0 1"), "inverse of (2 -3; 0 1)");
  c.expect(inverse(mat("-1 0 -2; 0 2 1; 1 -1 2")) == mat("-5 -2 -4; -1 0 -1; 2 1 2"), "inverse of C");
  c.raises(ErrorCode::Singular, [] { inverse(mat("2 -3; -4 6")); }, "inverse of (2 -3; -4 6)");

  c.expect(rank(mat("4 1 1; 1 2 1; 1 1 2")).rank == 3, "rank 3");
  c.expect(rank(mat("2 3 -1 4; 5 -3 8 19; 1 -2 3 5")).rank == 2, "rank 2 (3x4)");
  c.expect(rank(mat("1 1 1 3; 2 3 -1 4; 1 2 -2 1; 3 5 -3 5")).rank == 2, "rank 2 (augmented 4x4)");

  // AX + B = 3X + I  =>  (A - 3I) X = I - B.
  const Matrix a1 = mat("2 -3; -4 6"), b1 = mat("-1 0; 2 3");
  const Matrix x1 = solve_matrix_equation(EquationSide::Left, a1 - scale(3, Matrix::identity(2)),
                                          Matrix::identity(2) - b1);
  c.expect(x1 == mat("0 2/5; -2/3 -2/15"), "AX + B = 3X + I");
  c.expect(a1 * x1 + b1 == scale(3, x1) + Matrix::identity(2), "AX + B = 3X + I by substitution");

  // XA - A = 2X + I  =>  X (A - 2I) = I + A.
  const Matrix a2 = mat("0 1 2; 2 3 4; 1 0 1");
  const Matrix x2 = solve_matrix_equation(EquationSide::Right, a2 - scale(2, Matrix::identity(3)),
                                          Matrix::identity(3) + a2);
  c.expect(x2 == scale(q("1/6"), mat("3 3 6; 18 6 36; -3 3 -6")), "XA - A = 2X + I");
  c.expect(x2 * a2 - a2 == scale(2, x2) + Matrix::identity(3), "XA - A = 2X + I by substitution");
}

void systems(Check& c) {
  auto sys = [](const char* a, std::initializer_list<const char*> b) { return LinearSystem(mat(a), qs(b)); };
  c.expect(classify(sys("1 1; 1 -1", {"2", "0"})).verdict == Verdict::Unique, "toy system 1 unique");
  c.expect(classify(sys("1 1; 2 2", {"2", "4"})).verdict == Verdict::Infinite, "toy system 2 infinite");
  c.expect(classify(sys("1 1; 1 1", {"2", "3"})).verdict == Verdict::Inconsistent, "toy system 3 inconsistent");

  // Four equations, three unknowns, rank 3.
  const LinearSystem four = sys("1 1 1; 2 3 -1; -1 2 1; 3 1 -3", {"3", "4", "2", "1"});
  const SolutionSet ones = solution::Unique{qs({"1", "1", "1"})};
  c.expect(solve_gauss(four) == ones, "4x3 system by Gauss");
  // Cramer and the inverse method need a square system: use the pivot rows.
  const ReducedSystem square = reduced_subsystem(four, {});
  c.expect(solve_cramer(square.system) == ones, "4x3 system by Cramer on its square subsystem");
  c.expect(solve_inverse_method(square.system) == ones, "4x3 system by the inverse method");

  // x = -4t + 5, y = 3t - 2, z = t.
  const LinearSystem one_param = sys("1 1 1; 2 3 -1; 1 2 -2; 3 5 -3", {"3", "4", "1", "5"});
  const SolutionSet fam = solve_gauss(one_param);
  const auto* p1 = std::get_if<solution::Parametric>(&fam);
  c.expect(p1 && p1->directions.size() == 1, "one-parameter family");
  for (int t = -5; p1 && t <= 5; ++t) {
    const std::vector<Rational> paper{Rational(-4 * t + 5), Rational(3 * t - 2), Rational(t)};
    c.expect(satisfies(one_param, paper), "paper family point satisfies the system");
    c.expect(p1->at({Rational(t)}) == paper, "family matches x=-4t+5, y=3t-2, z=t at t=" + std::to_string(t));
  }

  // x = -2a - 5b + 9, y = a + 4b - 5, z = a, w = b.
  const LinearSystem two_param = sys("1 1 1 1; 2 3 1 -2; 3 4 2 -1", {"4", "3", "7"});
  const SolutionSet fam2 = solve_gauss(two_param);
  const auto* p2 = std::get_if<solution::Parametric>(&fam2);
  c.expect(p2 && p2->directions.size() == 2, "two-parameter family");
  for (int a = -3; p2 && a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      const std::vector<Rational> paper{-2 * a - 5 * b + 9, a + 4 * b - 5, a, b};
      c.expect(satisfies(two_param, paper), "paper two-parameter point satisfies the system");
      c.expect(satisfies(two_param, p2->at({a, b})), "kernel two-parameter point satisfies the system");
      c.expect(p2->at({a, b}) == paper, "two-parameter family matches the paper");
    }
  }

  c.expect(homogeneous_analysis(mat("1 2 -3; 2 5 2; 3 -1 -4")).trivial_only, "det-61 homogeneous system trivial only");
  const HomogeneousReport h = homogeneous_analysis(mat("1 2 1; 2 3 1; 3 5 2; 2 4 2"));
  const auto* hp = std::get_if<solution::Parametric>(&h.solutions);
  c.expect(!h.trivial_only && hp && hp->directions.size() == 1, "4x3 homogeneous system has a one-parameter family");
  for (int a = -3; hp && a <= 3; ++a) {
    c.expect(hp->at({a}) == std::vector<Rational>{a, -a, a}, "homogeneous family is (a, -a, a)");
  }
}

void geometry(Check& c) {
  const Plane p = plane_three_points({1, 1, 0}, {-2, 0, 4}, {2, 3, -1});
  c.expect(p == Plane(7, -1, 5, -6), "plane through three points is 7x - y + 5z - 6 = 0");

  const Distance h = point_plane_distance({0, 6, 4}, Plane(2, -1, -2, 5));
  c.expect(h.d_sq == 9, "pyramid height squared = 9");
  c.near(h.d, 3, "pyramid height = 3");

  const Plane p1(2, -1, -1, -4), p2(2, -3, -2, 7);
  const Line l = line_from_planes(p1, p2);
  c.expect(collinear(l.dir, Vec3{-1, 2, -4}), "plane-pair line direction is (-1, 2, -4)");
  c.expect(p1.contains(l.point) && p2.contains(l.point), "plane-pair line point lies on both planes");
  c.expect(l.contains({0, 15, -19}), "plane-pair line passes through (0, 15, -19)");

  const auto lp = [](const char* line, const Plane& plane) { return line_plane_relation(Line::parse(line), plane); };
  c.expect(lp("(x-1)/2=y/3=(z+1)/-1", Plane(1, 1, 5, -7)).kind == LinePlaneKind::ParallelDisjoint, "line parallel to plane");
  c.expect(lp("(x-2)/3=(y-1)/-2=(z-3)/2", Plane(2, 2, -1, -3)).kind == LinePlaneKind::Contained, "line in plane");
  const LinePlaneRelation pierce = lp("(x-1)/3=(y-2)/-2=(z-3)/1", Plane(6, -4, 2, 7));
  c.expect(pierce.kind == LinePlaneKind::Intersecting, "line pierces plane");
  c.expect(pierce.parameter == q("-11/28"), "piercing parameter t = -11/28");
  c.expect(pierce.point == Vec3{q("-5/28"), q("78/28"), q("73/28")}, "piercing point (-5/28, 78/28, 73/28)");
  c.near(pierce.sin_angle, 1, "sin of the line-plane angle = 1");

  const TetraMeasures t = tetra_measures({3, 1, -2}, {-4, 2, 3}, {1, 5, -1}, {-5, -1, 2});
  c.expect(t.volume == 9, "tetrahedron volume = 9");

  const TriangleMeasures tri = triangle_measures({1, 2, 3}, {-2, 5, 4}, {2, 5, 8});
  c.expect(tri.area_sq == 136, "triangle area squared = 136");
  c.near(tri.area, 2 * std::sqrt(34.0), "triangle area = 2 sqrt(34)");
}

void mixtures(Check& c) {
  const MixtureSplit m = simple_mixture(48, 78, 60, 10);
  c.expect(m.x1 == 6 && m.x2 == 4, "48% and 78% to 10 L at 60% gives 6 L and 4 L");
  c.expect(star_scheme(qs({"160", "140", "110", "50"}), 120, 560) == qs({"280", "40", "80", "160"}),
           "star scheme gives 280, 40, 80, 160");
  c.expect(percent_solve(Rational(32), Rational(30), std::nullopt) == q("93.75"), "30 of 32 is 93.75%");
  c.expect(percent_chain(std::nullopt, Rational(60), qs({"-10", "15"})) == q("4000/69"), "start = 4000/69");
}

void property_suites(Check& c) {
  auto run = [&c](const char* name, const props::Outcome& o) {
    if (o) c.failures.push_back(std::string(name) + ": " + *o);
  };
  run("determinant methods", props::det_methods_agree(200));
  run("adjugate identities", props::adjugate_identities(100));
  run("solver agreement", props::solvers_agree(200));
  run("mixed product", props::mixed_product_is_det(200));
  run("cross product", props::cross_product_laws(200));
  run("divisibility families", props::divisibility_families(300));
  run("Bernoulli", props::bernoulli_inequality(200));
  run("base round trip", props::base_round_trip(10000));
  run("closed-form sums", props::closed_form_sums(500));
  run("roots", props::roots_reconstruct(200));
}

}  // namespace

int main() {
  const std::pair<const char*, void (*)(Check&)> criteria[] = {
      {"exact golden values", golden_values},
      {"logic classification", logic_classes},
      {"sets and relations", sets_relations},
      {"finite algebra", finite_algebra},
      {"complex numbers", complex_numbers},
      {"matrices", matrices},
      {"linear systems", systems},
      {"geometry", geometry},
      {"mixtures", mixtures},
      {"property suites", property_suites},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, body] : criteria) {
    ++index;
    Check c;
    c.guard(body);
    if (c.failures.empty()) {
      std::cout << "PASS " << index << " " << name << "\n";
    } else {
      ++failed;
      std::cout << "FAIL " << index << " " << name;
      for (const auto& f : c.failures) std::cout << "\n    " << f;
      std::cout << "\n";
    }
  }
  return failed == 0 ? 0 : 1;
}
